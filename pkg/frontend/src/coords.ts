import type { Triple } from "./types.js";

// Screen-to-chart plumbing.  The scene's source of truth is the exact
// decimal string a drag produced, quantized to 6 places: the badge, the
// overlays and the exported file all see the same coordinates, and mouse
// jitter below the quantum cannot straddle a wall invisibly.

export const DECIMAL_PLACES = 6;

export interface Viewport {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
  width: number; // pixels
  height: number;
}

export function chartToScreen(
  vp: Viewport,
  x: number,
  y: number,
): { x: number; y: number } {
  return {
    x: ((x - vp.xMin) / (vp.xMax - vp.xMin)) * vp.width,
    // screen y grows downward
    y: ((vp.yMax - y) / (vp.yMax - vp.yMin)) * vp.height,
  };
}

export function screenToChart(
  vp: Viewport,
  sx: number,
  sy: number,
): { x: number; y: number } {
  return {
    x: vp.xMin + (sx / vp.width) * (vp.xMax - vp.xMin),
    y: vp.yMax - (sy / vp.height) * (vp.yMax - vp.yMin),
  };
}

/** Fixed-precision decimal string: "1.2500001" -> "1.25", "-0.0" -> "0". */
export function quantize(value: number): string {
  if (!Number.isFinite(value)) throw new RangeError(`not finite: ${value}`);
  let s = value.toFixed(DECIMAL_PLACES);
  if (s.includes(".")) s = s.replace(/0+$/, "").replace(/\.$/, "");
  return s === "-0" ? "0" : s;
}

export function tripleFor(x: number, y: number): Triple {
  return [quantize(x), quantize(y), "1"];
}

// Exact strings can outgrow doubles (canonical integer representatives
// after a few moves, Cremona images), so coordinates are parsed as
// BigInt rationals and only the final ratio becomes a float.  A common
// power of ten is dropped first; relative error stays far below a pixel.

interface Rat {
  n: bigint;
  d: bigint; // positive
}

function parseRat(s: string): Rat {
  const text = s.trim();
  const slash = text.indexOf("/");
  if (slash >= 0) {
    const n = BigInt(text.slice(0, slash));
    const d = BigInt(text.slice(slash + 1));
    return d < 0n ? { n: -n, d: -d } : { n, d };
  }
  const dot = text.indexOf(".");
  if (dot >= 0) {
    const digits = text.slice(0, dot) + text.slice(dot + 1);
    const places = text.length - dot - 1;
    return { n: BigInt(digits), d: 10n ** BigInt(places) };
  }
  return { n: BigInt(text), d: 1n };
}

function ratio(n: bigint, d: bigint): number {
  if (d < 0n) {
    n = -n;
    d = -d;
  }
  const direct = Number(n) / Number(d);
  if (Number.isFinite(direct) && Number.isFinite(Number(n))) return direct;
  const width = (v: bigint) => (v < 0n ? -v : v).toString().length;
  const drop = Math.max(width(n), width(d)) - 15;
  const div = 10n ** BigInt(drop);
  // a zero here means the true ratio over/underflows doubles anyway
  return Number(n / div) / Number(d / div);
}

/** Parse one exact coordinate string: integer, "num/den", or decimal. */
export function ratToNumber(s: string): number {
  const r = parseRat(s);
  return ratio(r.n, r.d);
}

/** Homogeneous triple -> chart position, for display only. */
export function affineOf(t: Triple): { x: number; y: number } {
  const [x, y, z] = [parseRat(t[0]), parseRat(t[1]), parseRat(t[2])];
  return {
    x: ratio(x.n * z.d, x.d * z.n),
    y: ratio(y.n * z.d, y.d * z.n),
  };
}

/** Viewport that fits every point with a margin, keeping aspect square. */
export function fitViewport(
  positions: { x: number; y: number }[],
  width: number,
  height: number,
): Viewport {
  let xMin = -10, xMax = 10, yMin = -10, yMax = 10;
  if (positions.length > 0) {
    xMin = Math.min(...positions.map((p) => p.x));
    xMax = Math.max(...positions.map((p) => p.x));
    yMin = Math.min(...positions.map((p) => p.y));
    yMax = Math.max(...positions.map((p) => p.y));
  }
  const margin = Math.max(xMax - xMin, yMax - yMin, 1) * 0.25;
  xMin -= margin; xMax += margin; yMin -= margin; yMax += margin;
  // match the pixel aspect so circles stay round
  const spanX = xMax - xMin;
  const spanY = yMax - yMin;
  const want = (width / height) * spanY;
  if (want > spanX) {
    const pad = (want - spanX) / 2;
    xMin -= pad; xMax += pad;
  } else {
    const pad = ((height / width) * spanX - spanY) / 2;
    yMin -= pad; yMax += pad;
  }
  return { xMin, xMax, yMin, yMax, width, height };
}
