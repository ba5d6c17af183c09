// Fixture loader: the JSON files under tests/fixtures are verbatim captures
// of scoring-service responses (see scripts/make_dashboard_fixtures.py in
// the repository root). Tests treat them as the wire-format ground truth.
import { readFileSync } from "node:fs";

export function loadFixture<T>(name: string): T {
  const url = new URL(`../fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf8")) as T;
}
