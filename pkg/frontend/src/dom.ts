/** DOM painters: view models in, elements out.
 *
 * Painters build plain elements from already-computed view models and attach
 * the handlers they are given. No fetching, no state, no formatting logic
 * beyond delegation to format helpers, so they run under any DOM
 * implementation.
 */

import * as fmt from "./format.js";
import { Segment } from "./spans.js";
import { SettingChange } from "./types.js";
import {
  AttributeView,
  ContentView,
  GraphView,
  OverviewView,
  PostView,
  WhatIfView,
} from "./views.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function renderSegments(parent: HTMLElement, segments: Segment[]): void {
  for (const segment of segments) {
    if (segment.entity === null) {
      parent.appendChild(document.createTextNode(segment.text));
    } else {
      const span = el("span", "entity", segment.text);
      span.setAttribute("data-type", segment.entity.entity_type);
      span.title = `${segment.entity.entity_type} (sensitivity ${fmt.score(
        segment.entity.sensitivity,
      )})`;
      parent.appendChild(span);
    }
  }
}

export function renderError(root: HTMLElement, message: string | null): void {
  clear(root);
  root.hidden = message === null;
  if (message !== null) {
    root.appendChild(el("span", "error-text", message));
  }
}

// -- overview ---------------------------------------------------------------

export function renderOverview(root: HTMLElement, view: OverviewView): void {
  clear(root);
  const gauges = el("div", "gauge-row");
  for (const gauge of view.gauges) {
    const card = el("div", "gauge-card");
    card.appendChild(el("h3", "gauge-title", gauge.scenario));
    card.appendChild(el("div", "gauge-value", fmt.score(gauge.value)));
    card.appendChild(
      el("div", "gauge-mean", `population mean ${fmt.score(gauge.populationMean)}`),
    );
    card.appendChild(
      el(
        "div",
        "gauge-weights",
        `weights A ${gauge.weights.aprs} / G ${gauge.weights.sgprs} / C ${gauge.weights.cbprs}`,
      ),
    );
    gauges.appendChild(card);
  }
  root.appendChild(gauges);

  const table = el("table", "component-table");
  const head = el("tr");
  for (const title of [
    "Component",
    "Raw",
    "Normalized",
    "Range position",
    "Population min / mean / max",
  ]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  for (const row of view.components) {
    const tr = el("tr", `component component-${row.name}`);
    tr.appendChild(el("td", "component-label", row.label));
    tr.appendChild(el("td", "num", fmt.score(row.raw)));
    tr.appendChild(el("td", "num", fmt.score(row.normalized)));
    const bar = el("td", "range-cell");
    const track = el("div", "range-track");
    const fill = el("div", "range-fill");
    fill.style.width = `${row.rangePercent}%`;
    track.appendChild(fill);
    bar.appendChild(track);
    bar.appendChild(
      el("span", "range-label", `${row.rangePercent.toFixed(0)}%`),
    );
    tr.appendChild(bar);
    tr.appendChild(
      el(
        "td",
        "num",
        `${fmt.score(row.popMin)} / ${fmt.score(row.popMean)} / ${fmt.score(row.popMax)}`,
      ),
    );
    table.appendChild(tr);
  }
  root.appendChild(table);
}

// -- attributes -------------------------------------------------------------

function settingButtons(
  parent: HTMLElement,
  kind: SettingChange["kind"],
  item: string,
  current: string,
  options: { setting: string; delta: number }[],
  staged: SettingChange | undefined,
  onStage: (change: SettingChange) => void,
): void {
  for (const option of options) {
    const button = el(
      "button",
      "option-button",
      `${fmt.settingLabel(option.setting)} (${fmt.delta(option.delta)})`,
    ) as HTMLButtonElement;
    button.type = "button";
    if (staged && staged.setting === option.setting) {
      button.classList.add("staged");
    }
    button.addEventListener("click", () =>
      onStage({ kind, item, setting: option.setting }),
    );
    parent.appendChild(button);
  }
  if (options.length === 0) {
    parent.appendChild(el("span", "no-options", "already strictest"));
  }
  parent.appendChild(el("span", "current-setting", fmt.settingLabel(current)));
}

export function renderAttributes(
  root: HTMLElement,
  view: AttributeView,
  pending: SettingChange[],
  onStage: (change: SettingChange) => void,
): void {
  clear(root);
  if (view.empty) {
    root.appendChild(el("p", "empty-note", "No profile attributes recorded."));
    return;
  }
  const table = el("table", "attribute-table");
  const head = el("tr");
  for (const title of ["Attribute", "Risk term", "Setting", "Try a stricter setting"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  for (const row of view.rows) {
    const tr = el("tr", "attribute-row");
    tr.setAttribute("data-attribute", row.name);
    tr.appendChild(el("td", "attribute-name", row.name));
    tr.appendChild(el("td", "num risk-term", fmt.score(row.riskTerm)));
    tr.appendChild(
      el(
        "td",
        "setting",
        row.currentSetting === null ? "" : fmt.settingLabel(row.currentSetting),
      ),
    );
    const controls = el("td", "controls");
    if (row.currentSetting !== null) {
      const staged = pending.find(
        (c) => c.kind === "attribute" && c.item === row.name,
      );
      settingButtons(
        controls,
        "attribute",
        row.name,
        row.currentSetting,
        row.options,
        staged,
        onStage,
      );
    }
    tr.appendChild(controls);
    table.appendChild(tr);
  }
  root.appendChild(table);
}

// -- graph ------------------------------------------------------------------

export function renderGraph(
  root: HTMLElement,
  view: GraphView,
  width: number,
  height: number,
  onSelect: (id: number) => void,
): void {
  clear(root);
  if (view.truncated) {
    root.appendChild(
      el("p", "truncation-note", "Neighborhood truncated; showing direct ties only."),
    );
  }
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "neighborhood");
  for (const edge of view.edges) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(edge.x1));
    line.setAttribute("y1", String(edge.y1));
    line.setAttribute("x2", String(edge.x2));
    line.setAttribute("y2", String(edge.y2));
    line.setAttribute("class", "graph-edge");
    svg.appendChild(line);
  }
  for (const node of view.nodes) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(node.x));
    circle.setAttribute("cy", String(node.y));
    circle.setAttribute("r", node.isCenter ? "10" : "6");
    circle.setAttribute("fill", node.color);
    circle.setAttribute(
      "class",
      node.isCenter ? "graph-node center" : "graph-node",
    );
    circle.setAttribute("data-id", String(node.id));
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent =
      `user ${node.id}: graph risk ${fmt.score(node.sgprs)}, ` +
      `structural ${fmt.score(node.rStruct)}, importance ${fmt.score(node.rImp)}, ` +
      `attribute risk ${fmt.score(node.neighborRisk)}`;
    circle.appendChild(title);
    circle.addEventListener("click", () => onSelect(node.id));
    svg.appendChild(circle);
  }
  root.appendChild(svg);
  root.appendChild(
    el(
      "p",
      "graph-caption",
      `${view.nodes.length} users within distance ${view.depth} of user ${view.center}; ` +
        "color tracks graph risk, click a node to inspect that user.",
    ),
  );
}

// -- content ----------------------------------------------------------------

function renderPost(
  post: PostView,
  pending: SettingChange[],
  onStage: (change: SettingChange) => void,
): HTMLElement {
  const card = el("article", "post-card");
  card.setAttribute("data-post", post.postId);
  const header = el("header", "post-header");
  header.appendChild(el("span", "post-date", fmt.timestampLabel(post.timestamp)));
  header.appendChild(
    el("span", "post-visibility", fmt.settingLabel(post.visibilitySetting)),
  );
  header.appendChild(el("span", "post-risk num", fmt.score(post.totalRisk)));
  card.appendChild(header);

  const body = el("p", "post-text");
  renderSegments(body, post.segments);
  card.appendChild(body);
  if (post.skippedSpans > 0) {
    card.appendChild(
      el("p", "span-warning", `${post.skippedSpans} highlight(s) could not be placed`),
    );
  }

  const breakdown = el("p", "post-breakdown");
  breakdown.textContent =
    `sensitivity ${fmt.score(post.sensitivity)} x visibility ${fmt.score(post.visibility)}` +
    ` = post risk ${fmt.score(post.postRisk)}; comments add ${fmt.score(post.commentRisk)}`;
  card.appendChild(breakdown);

  if (post.currentSetting !== null) {
    const controls = el("div", "post-controls");
    const staged = pending.find(
      (c) => c.kind === "post" && c.item === post.postId,
    );
    settingButtons(
      controls,
      "post",
      post.postId,
      post.currentSetting,
      post.options,
      staged,
      onStage,
    );
    card.appendChild(controls);
  }

  for (const comment of post.comments) {
    const row = el("div", "comment-row");
    row.setAttribute("data-comment", comment.commentId);
    row.appendChild(el("span", "comment-author", `user ${comment.author}`));
    const text = el("span", "comment-text");
    renderSegments(text, comment.segments);
    row.appendChild(text);
    row.appendChild(el("span", "comment-risk num", fmt.score(comment.risk)));
    card.appendChild(row);
  }
  return card;
}

export function renderContent(
  root: HTMLElement,
  view: ContentView,
  pending: SettingChange[],
  onStage: (change: SettingChange) => void,
): void {
  clear(root);
  if (view.empty) {
    root.appendChild(el("p", "empty-note", "No posts recorded for this user."));
    return;
  }
  root.appendChild(
    el(
      "p",
      "content-total",
      `${view.posts.length} post(s), accumulated content risk ${fmt.score(view.totalRisk)}`,
    ),
  );
  for (const post of view.posts) {
    root.appendChild(renderPost(post, pending, onStage));
  }
}

// -- what-if panel ----------------------------------------------------------

export function renderWhatIfPanel(
  root: HTMLElement,
  pending: SettingChange[],
  view: WhatIfView | null,
  onPreview: () => void,
  onRevert: () => void,
  onUnstage: (kind: SettingChange["kind"], item: string) => void,
): void {
  clear(root);
  root.hidden = pending.length === 0 && view === null;
  if (root.hidden) return;

  root.appendChild(el("h3", "panel-title", "Setting changes to preview"));
  const list = el("ul", "pending-list");
  for (const change of pending) {
    const item = el("li", "pending-item");
    item.appendChild(
      el(
        "span",
        "pending-label",
        `${change.kind} ${change.item} to ${fmt.settingLabel(change.setting)}`,
      ),
    );
    const remove = el("button", "remove-button", "remove") as HTMLButtonElement;
    remove.type = "button";
    remove.addEventListener("click", () => onUnstage(change.kind, change.item));
    item.appendChild(remove);
    list.appendChild(item);
  }
  root.appendChild(list);

  const actions = el("div", "panel-actions");
  const preview = el("button", "preview-button", "Preview") as HTMLButtonElement;
  preview.type = "button";
  preview.disabled = pending.length === 0;
  preview.addEventListener("click", onPreview);
  actions.appendChild(preview);
  const revert = el("button", "revert-button", "Revert") as HTMLButtonElement;
  revert.type = "button";
  revert.addEventListener("click", onRevert);
  actions.appendChild(revert);
  root.appendChild(actions);

  if (view === null) return;
  const table = el("table", "whatif-table");
  const head = el("tr");
  for (const title of ["", "Before", "After", "Change"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  for (const row of [...view.components, ...view.scenarios]) {
    const tr = el("tr", `whatif-row whatif-${row.name}`);
    tr.appendChild(el("td", "whatif-label", row.label));
    tr.appendChild(el("td", "num", fmt.score(row.before)));
    tr.appendChild(el("td", "num", fmt.score(row.after)));
    const deltaCell = el("td", "num delta", fmt.delta(row.delta));
    if (row.delta < 0) deltaCell.classList.add("improved");
    if (row.delta > 0) deltaCell.classList.add("worsened");
    tr.appendChild(deltaCell);
    table.appendChild(tr);
  }
  root.appendChild(table);
  if (view.approximate) {
    root.appendChild(
      el(
        "p",
        "approx-note",
        "Graph risk here keeps tie strengths frozen; publish the change and rescore for the exact value.",
      ),
    );
  }
}
