/** Wire types mirroring the scoring service responses, field for field. */

export interface HealthResponse {
  status: string;
  snapshot_published: boolean;
  population: number;
  config_fingerprint: string | null;
}

export interface ComponentRange {
  min: number;
  mean: number;
  max: number;
}

export interface ScenarioRow {
  w_aprs: number;
  w_sgprs: number;
  w_cbprs: number;
  mean_cprs: number;
}

export interface SummaryResponse {
  population: number;
  components: Record<string, ComponentRange>;
  scenarios: Record<string, ScenarioRow>;
  config_fingerprint: string;
}

export interface ComponentPair {
  raw: number;
  normalized: number;
}

export interface RecommendationOption {
  setting: string;
  delta: number;
}

export interface Recommendation {
  kind: "attribute" | "post";
  item: string;
  current_setting: string;
  risk_term: number;
  options: RecommendationOption[];
}

export interface ReportResponse {
  user: number;
  components: Record<string, ComponentPair>;
  cprs: Record<string, number>;
  attribute_breakdown: Record<string, number>;
  post_breakdown: Record<string, number>;
  recommendations: Recommendation[];
}

export interface NeighborNode {
  id: number;
  sgprs: number;
  r_struct: number;
  r_imp: number;
  neighbor_risk: number;
}

export interface NeighborsResponse {
  center: number;
  depth: number;
  nodes: NeighborNode[];
  edges: [number, number][];
  truncated: boolean;
}

export interface EntityRecord {
  entity_type: string;
  start: number;
  end: number;
  surface: string;
  sensitivity: number;
}

export interface CommentRecord {
  comment_id: string;
  author: number;
  text: string;
  timestamp: number;
  sensitivity: number;
  risk: number;
  entities: EntityRecord[];
}

export interface PostRecord {
  post_id: string;
  author: number;
  text: string;
  timestamp: number;
  visibility_setting: string;
  visibility: number;
  sensitivity: number;
  entities: EntityRecord[];
  post_risk: number;
  comment_risk: number;
  total_risk: number;
  comments: CommentRecord[];
}

export interface ContentResponse {
  user: number;
  posts: PostRecord[];
}

export interface SettingChange {
  kind: "attribute" | "post";
  item: string;
  setting: string;
}

export interface WhatIfResponse {
  user: number;
  old: Record<string, number>;
  new: Record<string, number>;
  old_cprs: Record<string, number>;
  new_cprs: Record<string, number>;
  deltas: Record<string, number>;
  cprs_deltas: Record<string, number>;
  sgprs_approximate: boolean;
}
