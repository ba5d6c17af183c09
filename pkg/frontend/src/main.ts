/** Entry point: URL-driven wiring between the API client, the state
 * container, and the DOM painters. The location hash (#/u/{id}/{view}) is
 * the source of truth for which user and screen are shown, so selections
 * survive reloads and can be shared as links.
 */

import * as api from "./api.js";
import * as dom from "./dom.js";
import {
  applyWhatIf,
  clearError,
  initialState,
  receiveContent,
  receiveNeighbors,
  receiveReport,
  receiveSummary,
  revertWhatIf,
  selectUser,
  setError,
  setView,
  stageChange,
  unstageChange,
  VIEW_NAMES,
  ViewName,
  ViewState,
} from "./state.js";
import {
  buildAttributeView,
  buildContentView,
  buildGraphView,
  buildOverview,
  buildWhatIfView,
} from "./views.js";
import { ApiError } from "./api.js";
import { SettingChange } from "./types.js";

const GRAPH_WIDTH = 760;
const GRAPH_HEIGHT = 480;
const GRAPH_DEPTH = 2;

let state: ViewState = initialState();
let controller: AbortController | null = null;

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function update(next: ViewState): void {
  state = next;
  render();
}

// -- routing ----------------------------------------------------------------

function parseHash(hash: string): { user: number | null; view: ViewName } {
  const match = /^#\/u\/(\d+)(?:\/(\w+))?$/.exec(hash);
  if (!match) return { user: null, view: "overview" };
  const view = VIEW_NAMES.includes(match[2] as ViewName)
    ? (match[2] as ViewName)
    : "overview";
  return { user: Number(match[1]), view };
}

function navigate(user: number, view: ViewName): void {
  const next = `#/u/${user}/${view}`;
  if (location.hash === next) {
    onHashChange();
  } else {
    location.hash = next;
  }
}

function onHashChange(): void {
  const { user, view } = parseHash(location.hash);
  let next = setView(state, view);
  if (user !== null && user !== next.user) {
    next = selectUser(next, user);
    update(next);
    void loadUser(user);
    return;
  }
  update(next);
  void loadForView(view);
}

// -- data loading -----------------------------------------------------------

function reportFailure(err: unknown): void {
  if (err instanceof DOMException && err.name === "AbortError") return;
  const message =
    err instanceof ApiError ? err.detail : "scoring service unreachable";
  update(setError(state, message));
}

async function loadUser(user: number): Promise<void> {
  controller?.abort();
  controller = new AbortController();
  const signal = controller.signal;
  try {
    const report = await api.fetchReport(user, signal);
    update(receiveReport(state, report));
    await loadForView(state.view, signal);
  } catch (err) {
    reportFailure(err);
  }
}

async function loadForView(view: ViewName, signal?: AbortSignal): Promise<void> {
  const user = state.user;
  if (user === null) return;
  const active = signal ?? controller?.signal;
  try {
    if (view === "graph" && state.neighbors === null) {
      const neighbors = await api.fetchNeighbors(user, GRAPH_DEPTH, active);
      update(receiveNeighbors(state, neighbors));
    }
    if (view === "content" && state.content === null) {
      const content = await api.fetchContent(user, active);
      update(receiveContent(state, content));
    }
  } catch (err) {
    reportFailure(err);
  }
}

async function previewPending(): Promise<void> {
  const user = state.user;
  if (user === null || state.pending.length === 0) return;
  try {
    const response = await api.postWhatIf(user, state.pending);
    update(applyWhatIf(clearError(state), response));
  } catch (err) {
    reportFailure(err);
  }
}

// -- handlers ---------------------------------------------------------------

function onStage(change: SettingChange): void {
  update(stageChange(state, change));
}

function onUnstage(kind: SettingChange["kind"], item: string): void {
  update(unstageChange(state, kind, item));
}

function onSelectNode(id: number): void {
  if (id !== state.user) navigate(id, "overview");
}

// -- rendering --------------------------------------------------------------

function render(): void {
  const root = byId("view-root");
  dom.renderError(byId("error-banner"), state.error);
  dom.renderWhatIfPanel(
    byId("whatif-panel"),
    state.pending,
    state.whatif === null ? null : buildWhatIfView(state.whatif),
    () => void previewPending(),
    () => update(revertWhatIf(state)),
    onUnstage,
  );

  const input = byId("user-input") as HTMLInputElement;
  if (state.user !== null && input.value !== String(state.user)) {
    input.value = String(state.user);
  }
  for (const button of document.querySelectorAll<HTMLButtonElement>("#tabs button")) {
    button.classList.toggle("active", button.dataset.view === state.view);
  }

  if (state.user === null) {
    dom.clear(root);
    const note = document.createElement("p");
    note.className = "empty-note";
    note.textContent = "Pick a user id above to inspect their exposure.";
    root.appendChild(note);
    return;
  }
  if (state.report === null || state.summary === null) {
    dom.clear(root);
    const note = document.createElement("p");
    note.className = "loading-note";
    note.textContent = `Loading user ${state.user}...`;
    root.appendChild(note);
    return;
  }
  switch (state.view) {
    case "overview":
      dom.renderOverview(root, buildOverview(state.report, state.summary));
      break;
    case "attributes":
      dom.renderAttributes(
        root,
        buildAttributeView(state.report),
        state.pending,
        onStage,
      );
      break;
    case "graph":
      if (state.neighbors === null) {
        dom.clear(root);
      } else {
        dom.renderGraph(
          root,
          buildGraphView(state.neighbors, GRAPH_WIDTH, GRAPH_HEIGHT),
          GRAPH_WIDTH,
          GRAPH_HEIGHT,
          onSelectNode,
        );
      }
      break;
    case "content":
      if (state.content === null) {
        dom.clear(root);
      } else {
        dom.renderContent(
          root,
          buildContentView(state.content, state.report),
          state.pending,
          onStage,
        );
      }
      break;
  }
}

// -- boot -------------------------------------------------------------------

async function boot(): Promise<void> {
  byId("user-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const raw = (byId("user-input") as HTMLInputElement).value.trim();
    if (/^\d+$/.test(raw)) navigate(Number(raw), state.view);
  });
  for (const button of document.querySelectorAll<HTMLButtonElement>("#tabs button")) {
    button.addEventListener("click", () => {
      const view = button.dataset.view as ViewName;
      if (state.user !== null) {
        navigate(state.user, view);
      } else {
        update(setView(state, view));
      }
    });
  }
  window.addEventListener("hashchange", onHashChange);

  try {
    const [health, summary] = await Promise.all([
      api.fetchHealth(),
      api.fetchSummary(),
    ]);
    update(receiveSummary(state, summary));
    byId("health-line").textContent =
      `${health.population} users scored, config ${health.config_fingerprint ?? "unpublished"}`;
  } catch (err) {
    reportFailure(err);
  }
  onHashChange();
}

void boot();
