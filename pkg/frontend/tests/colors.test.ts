import { describe, expect, it } from "vitest";
import { quantileBucket, riskColor, RISK_RAMP } from "../src/colors.js";
import { NeighborsResponse } from "../src/types.js";
import { loadFixture } from "./helpers/load.js";

describe("quantileBucket", () => {
  it("keeps bucket order aligned with value order", () => {
    const values = [0.1, 0.9, 0.4, 0.7, 0.2, 0.5];
    const sorted = [...values].sort((a, b) => a - b);
    for (let i = 1; i < sorted.length; i++) {
      expect(quantileBucket(values, sorted[i - 1])).toBeLessThanOrEqual(
        quantileBucket(values, sorted[i]),
      );
    }
  });

  it("pins the extremes to the first and last bucket", () => {
    const values = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6];
    expect(quantileBucket(values, 0.1)).toBe(0);
    expect(quantileBucket(values, 0.6)).toBe(RISK_RAMP.length - 1);
  });

  it("collapses a constant population into the lowest bucket", () => {
    const values = [0.5, 0.5, 0.5];
    for (const v of values) expect(quantileBucket(values, v)).toBe(0);
  });

  it("gives equal values equal buckets", () => {
    const values = [0.2, 0.4, 0.4, 0.8];
    expect(quantileBucket(values, 0.4)).toBe(quantileBucket(values, 0.4));
    expect(quantileBucket(values, values[1])).toBe(
      quantileBucket(values, values[2]),
    );
  });

  it("stays within the ramp for every fixture node", () => {
    const neighbors = loadFixture<NeighborsResponse>("neighbors_0_d2.json");
    const risks = neighbors.nodes.map((n) => n.sgprs);
    for (const risk of risks) {
      const bucket = quantileBucket(risks, risk);
      expect(bucket).toBeGreaterThanOrEqual(0);
      expect(bucket).toBeLessThan(RISK_RAMP.length);
      expect(RISK_RAMP).toContain(riskColor(risks, risk));
    }
  });
});
