/** Risk color scale for graph nodes: quantile buckets over the SGPRS values
 * present in the rendered subgraph, low risk green through high risk red. */

export const RISK_RAMP = [
  "#2e7d32",
  "#9e9d24",
  "#f9a825",
  "#ef6c00",
  "#c62828",
] as const;

/** Quantile bucket of `value` among `values`: 0..RISK_RAMP.length-1.
 *
 * Buckets are rank-based so the color ordering always matches the value
 * ordering; a constant population collapses into the lowest bucket.
 */
export function quantileBucket(values: number[], value: number): number {
  if (values.length <= 1) return 0;
  const sorted = [...values].sort((a, b) => a - b);
  const lo = sorted[0];
  const hi = sorted[sorted.length - 1];
  if (hi === lo) return 0;
  let below = 0;
  for (const v of sorted) {
    if (v < value) below += 1;
  }
  const rank = below / (sorted.length - 1);
  return Math.min(RISK_RAMP.length - 1, Math.floor(rank * RISK_RAMP.length));
}

export function riskColor(values: number[], value: number): string {
  return RISK_RAMP[quantileBucket(values, value)];
}
