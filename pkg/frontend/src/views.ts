/** Pure view-model builders: service responses in, render-ready records out.
 *
 * Every number shown in the UI is either copied from one response field or
 * is a stated composition of response fields. Builders never fetch and
 * never touch the DOM, so each screen is testable as a plain function.
 */

import {
  ContentResponse,
  NeighborsResponse,
  PostRecord,
  Recommendation,
  RecommendationOption,
  ReportResponse,
  SummaryResponse,
  WhatIfResponse,
} from "./types.js";
import { layoutGraph } from "./graph.js";
import { quantileBucket, riskColor } from "./colors.js";
import { segmentText, type Segment } from "./spans.js";

export const COMPONENT_LABELS: Record<string, string> = {
  aprs: "Attribute risk",
  sgprs: "Social graph risk",
  cbprs: "Content risk",
};

export function componentLabel(name: string): string {
  return COMPONENT_LABELS[name] ?? name;
}

// -- overview ---------------------------------------------------------------

export interface ScenarioGauge {
  scenario: string;
  value: number;
  populationMean: number;
  weights: { aprs: number; sgprs: number; cbprs: number };
}

export interface ComponentRow {
  name: string;
  label: string;
  raw: number;
  normalized: number;
  /** position within the population range, as normalized score x 100 */
  rangePercent: number;
  popMin: number;
  popMean: number;
  popMax: number;
}

export interface OverviewView {
  user: number;
  gauges: ScenarioGauge[];
  components: ComponentRow[];
}

export function buildOverview(
  report: ReportResponse,
  summary: SummaryResponse,
): OverviewView {
  const gauges: ScenarioGauge[] = Object.keys(report.cprs).map((scenario) => {
    const row = summary.scenarios[scenario];
    return {
      scenario,
      value: report.cprs[scenario],
      populationMean: row.mean_cprs,
      weights: { aprs: row.w_aprs, sgprs: row.w_sgprs, cbprs: row.w_cbprs },
    };
  });
  const components: ComponentRow[] = Object.keys(report.components).map(
    (name) => {
      const pair = report.components[name];
      const range = summary.components[name];
      return {
        name,
        label: componentLabel(name),
        raw: pair.raw,
        normalized: pair.normalized,
        rangePercent: pair.normalized * 100,
        popMin: range.min,
        popMean: range.mean,
        popMax: range.max,
      };
    },
  );
  return { user: report.user, gauges, components };
}

// -- attributes -------------------------------------------------------------

export interface AttributeRow {
  name: string;
  riskTerm: number;
  currentSetting: string | null;
  options: RecommendationOption[];
}

export interface AttributeView {
  user: number;
  rows: AttributeRow[];
  empty: boolean;
}

function recommendationFor(
  report: ReportResponse,
  kind: "attribute" | "post",
  item: string,
): Recommendation | null {
  for (const rec of report.recommendations) {
    if (rec.kind === kind && rec.item === item) return rec;
  }
  return null;
}

export function buildAttributeView(report: ReportResponse): AttributeView {
  const rows: AttributeRow[] = Object.entries(report.attribute_breakdown).map(
    ([name, riskTerm]) => {
      const rec = recommendationFor(report, "attribute", name);
      return {
        name,
        riskTerm,
        currentSetting: rec ? rec.current_setting : null,
        options: rec ? rec.options : [],
      };
    },
  );
  rows.sort((a, b) => b.riskTerm - a.riskTerm || a.name.localeCompare(b.name));
  return { user: report.user, rows, empty: rows.length === 0 };
}

// -- neighborhood graph -----------------------------------------------------

export interface GraphNodeView {
  id: number;
  x: number;
  y: number;
  color: string;
  isCenter: boolean;
  sgprs: number;
  rStruct: number;
  rImp: number;
  neighborRisk: number;
}

export interface GraphEdgeView {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface GraphView {
  center: number;
  depth: number;
  nodes: GraphNodeView[];
  edges: GraphEdgeView[];
  truncated: boolean;
}

export function buildGraphView(
  neighbors: NeighborsResponse,
  width: number,
  height: number,
): GraphView {
  const ids = neighbors.nodes.map((n) => n.id);
  const points = layoutGraph(neighbors.center, ids, neighbors.edges, {
    width,
    height,
  });
  const at = new Map(points.map((p) => [p.id, p]));
  const risks = neighbors.nodes.map((n) => n.sgprs);
  const nodes: GraphNodeView[] = neighbors.nodes.map((n) => {
    const p = at.get(n.id) as { x: number; y: number };
    return {
      id: n.id,
      x: p.x,
      y: p.y,
      color: riskColor(risks, n.sgprs),
      isCenter: n.id === neighbors.center,
      sgprs: n.sgprs,
      rStruct: n.r_struct,
      rImp: n.r_imp,
      neighborRisk: n.neighbor_risk,
    };
  });
  const edges: GraphEdgeView[] = [];
  for (const [u, v] of neighbors.edges) {
    const a = at.get(u);
    const b = at.get(v);
    if (a && b) edges.push({ x1: a.x, y1: a.y, x2: b.x, y2: b.y });
  }
  return {
    center: neighbors.center,
    depth: neighbors.depth,
    nodes,
    edges,
    truncated: neighbors.truncated,
  };
}

export function riskBucketOf(view: GraphView, id: number): number {
  const risks = view.nodes.map((n) => n.sgprs);
  const node = view.nodes.find((n) => n.id === id);
  return node ? quantileBucket(risks, node.sgprs) : 0;
}

// -- content ----------------------------------------------------------------

export interface CommentView {
  commentId: string;
  author: number;
  timestamp: number;
  segments: Segment[];
  skippedSpans: number;
  sensitivity: number;
  risk: number;
}

export interface PostView {
  postId: string;
  timestamp: number;
  visibilitySetting: string;
  visibility: number;
  segments: Segment[];
  skippedSpans: number;
  sensitivity: number;
  postRisk: number;
  commentRisk: number;
  totalRisk: number;
  comments: CommentView[];
  currentSetting: string | null;
  options: RecommendationOption[];
}

export interface ContentView {
  user: number;
  posts: PostView[];
  /** sum of per-post total_risk fields, in response order */
  totalRisk: number;
  empty: boolean;
}

function buildPostView(post: PostRecord, report: ReportResponse): PostView {
  const seg = segmentText(post.text, post.entities);
  const rec = recommendationFor(report, "post", post.post_id);
  return {
    postId: post.post_id,
    timestamp: post.timestamp,
    visibilitySetting: post.visibility_setting,
    visibility: post.visibility,
    segments: seg.segments,
    skippedSpans: seg.skipped,
    sensitivity: post.sensitivity,
    postRisk: post.post_risk,
    commentRisk: post.comment_risk,
    totalRisk: post.total_risk,
    comments: post.comments.map((c) => {
      const cseg = segmentText(c.text, c.entities);
      return {
        commentId: c.comment_id,
        author: c.author,
        timestamp: c.timestamp,
        segments: cseg.segments,
        skippedSpans: cseg.skipped,
        sensitivity: c.sensitivity,
        risk: c.risk,
      };
    }),
    currentSetting: rec ? rec.current_setting : null,
    options: rec ? rec.options : [],
  };
}

export function buildContentView(
  content: ContentResponse,
  report: ReportResponse,
): ContentView {
  const posts = content.posts.map((post) => buildPostView(post, report));
  let totalRisk = 0;
  for (const post of content.posts) totalRisk += post.total_risk;
  return {
    user: content.user,
    posts,
    totalRisk,
    empty: posts.length === 0,
  };
}

// -- what-if ----------------------------------------------------------------

export interface WhatIfRow {
  name: string;
  label: string;
  before: number;
  after: number;
  delta: number;
}

export interface WhatIfView {
  user: number;
  components: WhatIfRow[];
  scenarios: WhatIfRow[];
  approximate: boolean;
}

const NORMALIZED_COMPONENTS = ["aprs", "sgprs", "cbprs"];

export function buildWhatIfView(response: WhatIfResponse): WhatIfView {
  const components: WhatIfRow[] = NORMALIZED_COMPONENTS.filter(
    (name) => name in response.old,
  ).map((name) => ({
    name,
    label: componentLabel(name),
    before: response.old[name],
    after: response.new[name],
    delta: response.deltas[name],
  }));
  const scenarios: WhatIfRow[] = Object.keys(response.old_cprs).map((name) => ({
    name,
    label: name,
    before: response.old_cprs[name],
    after: response.new_cprs[name],
    delta: response.cprs_deltas[name],
  }));
  return {
    user: response.user,
    components,
    scenarios,
    approximate: response.sgprs_approximate,
  };
}
