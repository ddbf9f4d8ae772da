// Conic overlays.  The service hands back exact integer coefficients
// (a, b, c, d, e, f) for q = ax^2 + bxy + cy^2 + dxz + eyz + fz^2; this
// module rasterizes {q = 0} in the z = 1 chart with marching squares.
// The floats here drive pixels only, never a displayed invariant.

import { chartToScreen, type Viewport } from "./coords.js";

export type Segment = [number, number, number, number]; // x1, y1, x2, y2

/**
 * Coefficient strings -> floats, uniformly rescaled when the integers
 * exceed double range (the zero set is scale-invariant).
 */
export function parseConic(coefficients: string[]): number[] {
  if (coefficients.length !== 6) {
    throw new RangeError(`expected 6 coefficients, got ${coefficients.length}`);
  }
  const direct = coefficients.map(Number);
  if (direct.every(Number.isFinite)) return direct;
  const big = coefficients.map(BigInt);
  const width = Math.max(
    ...big.map((v) => (v < 0n ? -v : v).toString().length),
  );
  const div = 10n ** BigInt(width - 15);
  return big.map((v) => Number(v / div));
}

export function evalConic(q: number[], x: number, y: number): number {
  const [a, b, c, d, e, f] = q;
  return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
}

// Interpolate the zero crossing between two grid corners.
function cut(v0: number, v1: number): number {
  const t = v0 / (v0 - v1);
  return Math.min(1, Math.max(0, t));
}

/**
 * March a (cells x cells) grid over the viewport rectangle and collect
 * the line segments approximating {q = 0}, in chart coordinates.
 */
export function conicSegments(
  q: number[],
  vp: Pick<Viewport, "xMin" | "xMax" | "yMin" | "yMax">,
  cells = 160,
): Segment[] {
  const xs: number[] = [];
  const ys: number[] = [];
  for (let i = 0; i <= cells; i++) {
    xs.push(vp.xMin + ((vp.xMax - vp.xMin) * i) / cells);
    ys.push(vp.yMin + ((vp.yMax - vp.yMin) * i) / cells);
  }
  const values: number[][] = ys.map((y) => xs.map((x) => evalConic(q, x, y)));
  const segments: Segment[] = [];
  for (let r = 0; r < cells; r++) {
    for (let c = 0; c < cells; c++) {
      const v00 = values[r][c]; // (xs[c], ys[r])
      const v10 = values[r][c + 1];
      const v01 = values[r + 1][c];
      const v11 = values[r + 1][c + 1];
      // sign code, treating exact zero as positive (floats: measure zero)
      let code = 0;
      if (v00 < 0) code |= 1;
      if (v10 < 0) code |= 2;
      if (v11 < 0) code |= 4;
      if (v01 < 0) code |= 8;
      if (code === 0 || code === 15) continue;
      const x0 = xs[c], x1 = xs[c + 1];
      const y0 = ys[r], y1 = ys[r + 1];
      // crossing points on the four cell edges
      const bottom = (): [number, number] => [x0 + cut(v00, v10) * (x1 - x0), y0];
      const top = (): [number, number] => [x0 + cut(v01, v11) * (x1 - x0), y1];
      const left = (): [number, number] => [x0, y0 + cut(v00, v01) * (y1 - y0)];
      const right = (): [number, number] => [x1, y0 + cut(v10, v11) * (y1 - y0)];
      const join = (p: [number, number], s: [number, number]) =>
        segments.push([p[0], p[1], s[0], s[1]]);
      switch (code) {
        case 1: case 14: join(left(), bottom()); break;
        case 2: case 13: join(bottom(), right()); break;
        case 3: case 12: join(left(), right()); break;
        case 4: case 11: join(right(), top()); break;
        case 6: case 9: join(bottom(), top()); break;
        case 7: case 8: join(left(), top()); break;
        case 5: // saddle: resolve by the cell-center sign
        case 10: {
          const center = evalConic(q, (x0 + x1) / 2, (y0 + y1) / 2);
          const flip = (center < 0) === (code === 5);
          if (flip) {
            join(left(), top());
            join(bottom(), right());
          } else {
            join(left(), bottom());
            join(right(), top());
          }
          break;
        }
      }
    }
  }
  return segments;
}

/** Segments -> a single SVG path string in screen coordinates. */
export function segmentsToPath(segments: Segment[], vp: Viewport): string {
  const parts: string[] = [];
  for (const [x1, y1, x2, y2] of segments) {
    const p = chartToScreen(vp, x1, y1);
    const s = chartToScreen(vp, x2, y2);
    parts.push(
      `M ${p.x.toFixed(2)} ${p.y.toFixed(2)} L ${s.x.toFixed(2)} ${s.y.toFixed(2)}`,
    );
  }
  return parts.join(" ");
}
