/** Byte-span handling. The service reports entity offsets as byte positions
 * into the UTF-8 encoding of the text; the browser works in UTF-16 string
 * indices, so spans are converted here, client-side, before highlighting. */

import type { EntityRecord } from "./types.js";

function utf8Width(codePoint: number): number {
  if (codePoint < 0x80) return 1;
  if (codePoint < 0x800) return 2;
  if (codePoint < 0x10000) return 3;
  return 4;
}

/** Map a [startByte, endByte) span onto UTF-16 string indices.
 *
 * Returns null when either offset does not land on a code point boundary or
 * runs past the end of the encoded text; callers skip such spans.
 */
export function byteSpanToCharSpan(
  text: string,
  startByte: number,
  endByte: number,
): { start: number; end: number } | null {
  if (startByte < 0 || endByte <= startByte) return null;
  let byte = 0;
  let unit = 0;
  let start = -1;
  let end = -1;
  if (startByte === 0) start = 0;
  for (const ch of text) {
    const cp = ch.codePointAt(0) as number;
    byte += utf8Width(cp);
    unit += cp > 0xffff ? 2 : 1;
    if (start < 0 && byte === startByte) start = unit;
    if (byte === endByte) {
      end = unit;
      break;
    }
    if (byte > endByte) return null;
  }
  if (start < 0 || end < 0) return null;
  return { start, end };
}

export interface Segment {
  text: string;
  entity: EntityRecord | null;
}

/** Split text into plain and highlighted segments from entity byte spans.
 *
 * Entities are taken in order of start offset; spans that fail conversion or
 * overlap a previously placed span are dropped and counted in `skipped`.
 */
export function segmentText(
  text: string,
  entities: EntityRecord[],
): { segments: Segment[]; skipped: number } {
  const ordered = [...entities].sort((a, b) => a.start - b.start);
  const segments: Segment[] = [];
  let cursor = 0;
  let skipped = 0;
  for (const entity of ordered) {
    const span = byteSpanToCharSpan(text, entity.start, entity.end);
    if (span === null || span.start < cursor) {
      skipped += 1;
      continue;
    }
    if (span.start > cursor) {
      segments.push({ text: text.slice(cursor, span.start), entity: null });
    }
    segments.push({ text: text.slice(span.start, span.end), entity });
    cursor = span.end;
  }
  if (cursor < text.length) {
    segments.push({ text: text.slice(cursor), entity: null });
  }
  return { segments, skipped };
}
