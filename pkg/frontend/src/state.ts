/** Client-side state container with pure transition functions.
 *
 * Transitions return fresh state objects and never mutate their input, so a
 * what-if preview can be applied and reverted without touching the cached
 * service responses. Per-user payloads carry the user they belong to and are
 * dropped when they arrive after the selection moved on.
 */

import {
  ContentResponse,
  NeighborsResponse,
  ReportResponse,
  SettingChange,
  SummaryResponse,
  WhatIfResponse,
} from "./types.js";

export type ViewName = "overview" | "attributes" | "graph" | "content";

export const VIEW_NAMES: ViewName[] = [
  "overview",
  "attributes",
  "graph",
  "content",
];

export interface ViewState {
  user: number | null;
  view: ViewName;
  summary: SummaryResponse | null;
  report: ReportResponse | null;
  neighbors: NeighborsResponse | null;
  content: ContentResponse | null;
  pending: SettingChange[];
  whatif: WhatIfResponse | null;
  error: string | null;
}

export function initialState(): ViewState {
  return {
    user: null,
    view: "overview",
    summary: null,
    report: null,
    neighbors: null,
    content: null,
    pending: [],
    whatif: null,
    error: null,
  };
}

export function selectUser(state: ViewState, user: number): ViewState {
  if (state.user === user) return state;
  return {
    ...state,
    user,
    report: null,
    neighbors: null,
    content: null,
    pending: [],
    whatif: null,
    error: null,
  };
}

export function setView(state: ViewState, view: ViewName): ViewState {
  return { ...state, view };
}

export function receiveSummary(
  state: ViewState,
  summary: SummaryResponse,
): ViewState {
  return { ...state, summary };
}

export function receiveReport(
  state: ViewState,
  report: ReportResponse,
): ViewState {
  if (report.user !== state.user) return state;
  return { ...state, report, error: null };
}

export function receiveNeighbors(
  state: ViewState,
  neighbors: NeighborsResponse,
): ViewState {
  if (neighbors.center !== state.user) return state;
  return { ...state, neighbors };
}

export function receiveContent(
  state: ViewState,
  content: ContentResponse,
): ViewState {
  if (content.user !== state.user) return state;
  return { ...state, content };
}

/** Stage a hypothetical setting change, replacing any staged change for the
 * same item: the preview endpoint applies changes against the published
 * snapshot, so only the latest choice per item may be sent. */
export function stageChange(
  state: ViewState,
  change: SettingChange,
): ViewState {
  const pending = state.pending.filter(
    (c) => !(c.kind === change.kind && c.item === change.item),
  );
  pending.push(change);
  return { ...state, pending, whatif: null };
}

export function unstageChange(
  state: ViewState,
  kind: SettingChange["kind"],
  item: string,
): ViewState {
  const pending = state.pending.filter(
    (c) => !(c.kind === kind && c.item === item),
  );
  return { ...state, pending, whatif: null };
}

export function applyWhatIf(
  state: ViewState,
  response: WhatIfResponse,
): ViewState {
  if (response.user !== state.user) return state;
  return { ...state, whatif: response };
}

export function revertWhatIf(state: ViewState): ViewState {
  return { ...state, pending: [], whatif: null };
}

export function setError(state: ViewState, message: string): ViewState {
  return { ...state, error: message };
}

export function clearError(state: ViewState): ViewState {
  return { ...state, error: null };
}
