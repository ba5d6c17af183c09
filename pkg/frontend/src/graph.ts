/** Deterministic force layout for the neighbor subgraph.
 *
 * Spring embedder with pairwise repulsion, edge attraction, and a weak pull
 * toward the center node; initial positions sit on a circle in node order,
 * so identical input always lays out identically (no randomness).
 */

export interface LayoutPoint {
  id: number;
  x: number;
  y: number;
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations?: number;
  margin?: number;
}

export function layoutGraph(
  center: number,
  ids: number[],
  edges: [number, number][],
  options: LayoutOptions,
): LayoutPoint[] {
  const { width, height } = options;
  const iterations = options.iterations ?? 150;
  const margin = options.margin ?? 24;
  const n = ids.length;
  if (n === 0) return [];
  if (n === 1) return [{ id: ids[0], x: width / 2, y: height / 2 }];

  const index = new Map<number, number>();
  ids.forEach((id, i) => index.set(id, i));
  const xs = new Array<number>(n);
  const ys = new Array<number>(n);
  const others = ids.filter((id) => id !== center);
  others.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / others.length;
    const at = index.get(id) as number;
    xs[at] = Math.cos(angle);
    ys[at] = Math.sin(angle);
  });
  if (index.has(center)) {
    const at = index.get(center) as number;
    xs[at] = 0;
    ys[at] = 0;
  }

  const area = 4.0;
  const k = Math.sqrt(area / n);
  const pairs: [number, number][] = [];
  for (const [u, v] of edges) {
    const a = index.get(u);
    const b = index.get(v);
    if (a !== undefined && b !== undefined && a !== b) pairs.push([a, b]);
  }

  for (let step = 0; step < iterations; step++) {
    const temperature = 0.1 * (1 - step / iterations) + 0.005;
    const dx = new Array<number>(n).fill(0);
    const dy = new Array<number>(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let ex = xs[i] - xs[j];
        let ey = ys[i] - ys[j];
        let dist = Math.hypot(ex, ey);
        if (dist < 1e-9) {
          // tie-break superposed nodes deterministically by index
          ex = 1e-3 * (i + 1);
          ey = 1e-3 * (j + 1);
          dist = Math.hypot(ex, ey);
        }
        const repulse = (k * k) / dist;
        dx[i] += (ex / dist) * repulse;
        dy[i] += (ey / dist) * repulse;
        dx[j] -= (ex / dist) * repulse;
        dy[j] -= (ey / dist) * repulse;
      }
    }
    for (const [a, b] of pairs) {
      const ex = xs[a] - xs[b];
      const ey = ys[a] - ys[b];
      const dist = Math.hypot(ex, ey);
      if (dist < 1e-9) continue;
      const attract = (dist * dist) / k;
      dx[a] -= (ex / dist) * attract;
      dy[a] -= (ey / dist) * attract;
      dx[b] += (ex / dist) * attract;
      dy[b] += (ey / dist) * attract;
    }
    for (let i = 0; i < n; i++) {
      const moved = Math.hypot(dx[i], dy[i]);
      if (moved < 1e-12) continue;
      const cap = Math.min(moved, temperature);
      xs[i] += (dx[i] / moved) * cap;
      ys[i] += (dy[i] / moved) * cap;
    }
  }

  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (let i = 0; i < n; i++) {
    minX = Math.min(minX, xs[i]);
    maxX = Math.max(maxX, xs[i]);
    minY = Math.min(minY, ys[i]);
    maxY = Math.max(maxY, ys[i]);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  return ids.map((id, i) => ({
    id,
    x: margin + ((xs[i] - minX) / spanX) * (width - 2 * margin),
    y: margin + ((ys[i] - minY) / spanY) * (height - 2 * margin),
  }));
}
