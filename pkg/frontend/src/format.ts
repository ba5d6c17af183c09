/** Display formatting. Values pass through unchanged apart from rounding for
 * presentation; every number rendered traces back to an API field. */

export function score(value: number): string {
  return value.toFixed(3);
}

export function delta(value: number): string {
  const fixed = value.toFixed(3);
  return value > 0 ? `+${fixed}` : fixed;
}

export function percent(fraction: number): string {
  return `${(fraction * 100).toFixed(0)}%`;
}

export function settingLabel(setting: string): string {
  switch (setting) {
    case "public":
      return "Public";
    case "friends":
      return "Friends only";
    case "only_me":
      return "Only me";
    default:
      return setting;
  }
}

export function timestampLabel(epochSeconds: number): string {
  return new Date(epochSeconds * 1000).toISOString().slice(0, 10);
}
