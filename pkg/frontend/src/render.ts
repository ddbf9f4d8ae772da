// SVG painting.  Pure DOM output: reads the scene, writes elements.
// All geometry displayed here is float-for-pixels; the exact answers
// stay in the report.

import { conicSegments, parseConic, segmentsToPath } from "./conic.js";
import { affineOf, chartToScreen, type Viewport } from "./coords.js";
import { conicKey, Scene } from "./scene.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const POINT_RADIUS = 9;

// one fill per dominance index 0..6
const DOMINANCE_COLORS = [
  "#2f6fdb",
  "#3b8fd4",
  "#46adc0",
  "#52c6a0",
  "#7fcf6e",
  "#bccf4e",
  "#e8c23b",
];

const CONIC_COLORS = [
  "#e06c75", "#61afef", "#98c379", "#c678dd", "#d19a66", "#56b6c2",
];

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function drawGrid(svg: SVGSVGElement, vp: Viewport): void {
  const step = gridStep(vp);
  const g = el("g", { stroke: "#2a2f3a", "stroke-width": "1" });
  for (let x = Math.ceil(vp.xMin / step) * step; x <= vp.xMax; x += step) {
    const a = chartToScreen(vp, x, vp.yMin);
    const b = chartToScreen(vp, x, vp.yMax);
    const heavy = Math.abs(x) < step / 2;
    g.appendChild(el("line", {
      x1: String(a.x), y1: String(a.y), x2: String(b.x), y2: String(b.y),
      ...(heavy ? { stroke: "#3d4454", "stroke-width": "1.5" } : {}),
    }));
  }
  for (let y = Math.ceil(vp.yMin / step) * step; y <= vp.yMax; y += step) {
    const a = chartToScreen(vp, vp.xMin, y);
    const b = chartToScreen(vp, vp.xMax, y);
    const heavy = Math.abs(y) < step / 2;
    g.appendChild(el("line", {
      x1: String(a.x), y1: String(a.y), x2: String(b.x), y2: String(b.y),
      ...(heavy ? { stroke: "#3d4454", "stroke-width": "1.5" } : {}),
    }));
  }
  svg.appendChild(g);
}

function gridStep(vp: Viewport): number {
  const span = Math.max(vp.xMax - vp.xMin, vp.yMax - vp.yMin);
  const raw = span / 12;
  const mag = 10 ** Math.floor(Math.log10(raw));
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= raw) return m * mag;
  }
  return 10 * mag;
}

function drawConics(svg: SVGSVGElement, scene: Scene, vp: Viewport): void {
  const report = scene.report;
  if (!report) return;
  const entries = report.conics ?? [];
  let colorIndex = 0;
  for (const entry of entries) {
    const key = conicKey(entry.omitted[0], entry.omitted[1]);
    if (!scene.toggles.conics.has(key)) continue;
    const q = parseConic(entry.coefficients);
    const path = segmentsToPath(conicSegments(q, vp), vp);
    if (!path) continue;
    const color = CONIC_COLORS[colorIndex++ % CONIC_COLORS.length];
    const node = el("path", {
      d: path, fill: "none", stroke: color, "stroke-width": "1.6",
      opacity: "0.9",
    });
    node.appendChild(Object.assign(
      document.createElementNS(SVG_NS, "title"),
      { textContent: `conic omitting (${key})` },
    ));
    svg.appendChild(node);
  }
  // a 5-point scene carries exactly one conic, always shown
  if (report.conic) {
    const q = parseConic(report.conic);
    const path = segmentsToPath(conicSegments(q, vp), vp);
    if (path) {
      svg.appendChild(el("path", {
        d: path, fill: "none", stroke: CONIC_COLORS[0], "stroke-width": "1.6",
      }));
    }
  }
}

function drawEdges(svg: SVGSVGElement, scene: Scene, vp: Viewport): void {
  const report = scene.report;
  if (!report || !scene.toggles.edges) return;
  const edges = report.adjacency_edges ?? [];
  if (edges.length === 0) return;
  const spots = scene.points.map((p) => chartToScreen(vp, affineOf(p).x, affineOf(p).y));
  const decoration = new Map<string, { kind: string; direction: number[] | null }>();
  if (scene.toggles.decorations) {
    for (const d of report.edge_decorations ?? []) {
      decoration.set(`${d.edge[0]},${d.edge[1]}`, d);
    }
  }
  for (const [i, j] of edges) {
    const deco = decoration.get(`${i},${j}`);
    const attrs: Record<string, string> = {
      x1: String(spots[i].x), y1: String(spots[i].y),
      x2: String(spots[j].x), y2: String(spots[j].y),
      stroke: "#8a93a6", "stroke-width": "2",
    };
    if (deco?.kind === "external") attrs["stroke-dasharray"] = "7 4";
    if (deco?.kind === "special") {
      attrs.stroke = "#ff9f43";
      attrs["stroke-width"] = "3.5";
    }
    const line = el("line", attrs);
    if (deco) {
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = deco.direction
        ? `${deco.kind} (${deco.direction[0]} inside, ${deco.direction[1]} outside)`
        : deco.kind;
      line.appendChild(title);
    }
    svg.appendChild(line);
  }
}

function drawPoints(svg: SVGSVGElement, scene: Scene, vp: Viewport): void {
  const report = scene.report;
  const indices = scene.toggles.dominance ? report?.dominance_indices : null;
  scene.points.forEach((p, label) => {
    const { x, y } = affineOf(p);
    const s = chartToScreen(vp, x, y);
    const fill =
      indices && indices[label] !== undefined
        ? DOMINANCE_COLORS[Math.min(indices[label], 6)]
        : "#61afef";
    const g = el("g", { class: "point", "data-label": String(label) });
    if (report?.marked_point === label) {
      g.appendChild(el("circle", {
        cx: String(s.x), cy: String(s.y), r: String(POINT_RADIUS + 4),
        fill: "none", stroke: "#e5c07b", "stroke-width": "2",
      }));
    }
    g.appendChild(el("circle", {
      cx: String(s.x), cy: String(s.y), r: String(POINT_RADIUS),
      fill, stroke: "#11141a", "stroke-width": "1.5", cursor: "grab",
    }));
    const text = el("text", {
      x: String(s.x), y: String(s.y + 4), "text-anchor": "middle",
      "font-size": "11", fill: "#11141a", "pointer-events": "none",
      "font-weight": "bold",
    });
    text.textContent = String(label);
    g.appendChild(text);
    svg.appendChild(g);
  });
}

export function renderScene(svg: SVGSVGElement, scene: Scene, vp: Viewport): void {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
  drawGrid(svg, vp);
  drawConics(svg, scene, vp);
  drawEdges(svg, scene, vp);
  drawPoints(svg, scene, vp);
}
