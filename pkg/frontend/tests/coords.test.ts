import { describe, expect, it } from "vitest";

import {
  affineOf,
  chartToScreen,
  fitViewport,
  quantize,
  ratToNumber,
  screenToChart,
  tripleFor,
  type Viewport,
} from "../src/coords.js";

const VP: Viewport = {
  xMin: -10, xMax: 10, yMin: -10, yMax: 10, width: 640, height: 640,
};

describe("quantize", () => {
  it("keeps at most six decimal places", () => {
    expect(quantize(1.23456789)).toBe("1.234568");
    expect(quantize(-0.5)).toBe("-0.5");
    expect(quantize(3)).toBe("3");
  });

  it("trims trailing zeros and the lone dot", () => {
    expect(quantize(1.25)).toBe("1.25");
    expect(quantize(2.0)).toBe("2");
    expect(quantize(0.1)).toBe("0.1");
  });

  it("never emits negative zero", () => {
    expect(quantize(-0)).toBe("0");
    expect(quantize(-1e-9)).toBe("0");
  });

  it("rejects non-finite input", () => {
    expect(() => quantize(Infinity)).toThrow(RangeError);
    expect(() => quantize(NaN)).toThrow(RangeError);
  });

  it("is idempotent through a round trip", () => {
    for (const v of [0.123456, -7.25, 42, 1e-6, -1e-6, 123.000001]) {
      const s = quantize(v);
      expect(quantize(Number(s))).toBe(s);
    }
  });
});

describe("rational parsing", () => {
  it("reads integers, decimals and fractions", () => {
    expect(ratToNumber("7")).toBe(7);
    expect(ratToNumber("-2.5")).toBe(-2.5);
    expect(ratToNumber("1/4")).toBe(0.25);
    expect(ratToNumber("-3/6")).toBe(-0.5);
  });

  it("survives integers beyond double range", () => {
    const huge = "9".repeat(400);
    const v = ratToNumber(`${huge}/${huge}`);
    expect(v).toBeCloseTo(1, 10);
    const ratio = ratToNumber(`-${"1" + "0".repeat(350)}/${"5" + "0".repeat(349)}`);
    expect(ratio).toBeCloseTo(-2, 10);
  });

  it("projects homogeneous triples to the chart", () => {
    expect(affineOf(["6", "-3", "3"])).toEqual({ x: 2, y: -1 });
    expect(affineOf(["1/2", "1/3", "1"])).toEqual({ x: 0.5, y: 1 / 3 });
  });
});

describe("screen mapping", () => {
  it("round-trips chart -> screen -> chart", () => {
    for (const [x, y] of [[0, 0], [-10, 10], [3.25, -7.5]]) {
      const s = chartToScreen(VP, x, y);
      const back = screenToChart(VP, s.x, s.y);
      expect(back.x).toBeCloseTo(x, 9);
      expect(back.y).toBeCloseTo(y, 9);
    }
  });

  it("puts chart y up, screen y down", () => {
    const low = chartToScreen(VP, 0, -10);
    const high = chartToScreen(VP, 0, 10);
    expect(high.y).toBeLessThan(low.y);
  });

  it("builds triples with z = 1", () => {
    expect(tripleFor(1.5, -2.000000049)).toEqual(["1.5", "-2", "1"]);
  });
});

describe("fitViewport", () => {
  it("contains every point with a margin", () => {
    const pts = [{ x: -8, y: 5 }, { x: 12, y: -8 }, { x: 3, y: -9 }];
    const vp = fitViewport(pts, 640, 640);
    for (const p of pts) {
      expect(p.x).toBeGreaterThan(vp.xMin);
      expect(p.x).toBeLessThan(vp.xMax);
      expect(p.y).toBeGreaterThan(vp.yMin);
      expect(p.y).toBeLessThan(vp.yMax);
    }
  });

  it("matches the pixel aspect ratio", () => {
    const vp = fitViewport([{ x: 0, y: 0 }, { x: 1, y: 1 }], 800, 400);
    const unitX = vp.width / (vp.xMax - vp.xMin);
    const unitY = vp.height / (vp.yMax - vp.yMin);
    expect(unitX).toBeCloseTo(unitY, 6);
  });
});
