/** Fetch client for the scoring service. All data on screen comes through
 * here; the UI performs no scoring arithmetic of its own. */

import type {
  ContentResponse,
  HealthResponse,
  NeighborsResponse,
  ReportResponse,
  SettingChange,
  SummaryResponse,
  WhatIfResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly detail: string;

  constructor(status: number, detail: string) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
    this.status = status;
    this.detail = detail;
  }
}

async function request<T>(
  path: string,
  init: RequestInit = {},
  signal?: AbortSignal,
): Promise<T> {
  const response = await fetch(path, { ...init, signal });
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    body = null;
  }
  if (!response.ok) {
    const detail =
      body !== null && typeof body === "object" && "detail" in body
        ? String((body as { detail: unknown }).detail)
        : response.statusText || "request failed";
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export function fetchHealth(signal?: AbortSignal): Promise<HealthResponse> {
  return request("/api/health", {}, signal);
}

export function fetchSummary(signal?: AbortSignal): Promise<SummaryResponse> {
  return request("/api/summary", {}, signal);
}

export function fetchReport(
  user: number,
  signal?: AbortSignal,
): Promise<ReportResponse> {
  return request(`/api/users/${user}/report`, {}, signal);
}

export function fetchNeighbors(
  user: number,
  depth: number,
  signal?: AbortSignal,
): Promise<NeighborsResponse> {
  return request(`/api/users/${user}/neighbors?depth=${depth}`, {}, signal);
}

export function fetchContent(
  user: number,
  signal?: AbortSignal,
): Promise<ContentResponse> {
  return request(`/api/users/${user}/content`, {}, signal);
}

export function postWhatIf(
  user: number,
  changes: SettingChange[],
  signal?: AbortSignal,
): Promise<WhatIfResponse> {
  return request(
    `/api/users/${user}/whatif`,
    {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ changes }),
    },
    signal,
  );
}
