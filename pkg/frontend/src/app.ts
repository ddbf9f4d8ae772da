// Bootstrap: wires the DOM shell in index.html to a Scene and keeps the
// display in sync.  The service URL defaults to the local port and can
// be overridden with ?service=http://host:port.

import { DEFAULT_BASE_URL, ServiceClient } from "./client.js";
import { affineOf, fitViewport, screenToChart, type Viewport } from "./coords.js";
import { renderScene } from "./render.js";
import { badgeText, conicKey, Scene } from "./scene.js";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const svg = byId<HTMLElement>("chart") as unknown as SVGSVGElement;
const badgeNode = byId<HTMLDivElement>("badge");
const bannerNode = byId<HTMLDivElement>("banner");
const detailNode = byId<HTMLDivElement>("detail");
const alertsNode = byId<HTMLUListElement>("alerts");
const seedSelect = byId<HTMLSelectElement>("seed-select");
const conicList = byId<HTMLDivElement>("conic-list");
const exportBox = byId<HTMLTextAreaElement>("export-box");

const params = new URLSearchParams(window.location.search);
const client = new ServiceClient(params.get("service") ?? DEFAULT_BASE_URL);
const scene = new Scene(client);

let viewport: Viewport = fitViewport([], svg.clientWidth || 640, svg.clientHeight || 640);
let conicListSize = -1;

function refit(): void {
  viewport = fitViewport(
    scene.points.map(affineOf),
    svg.clientWidth || 640,
    svg.clientHeight || 640,
  );
}

function detailLines(): string[] {
  const r = scene.report;
  if (!r || scene.degenerate !== null) return [];
  const lines: string[] = [];
  if (r.sigma) lines.push(`σ = (${r.sigma.join(",")})`);
  if (r.spectrum) lines.push(`spectrum = (${r.spectrum.join(",")})`);
  if (r.convexity) lines.push(`convexity: ${r.convexity}`);
  if (r.marked_point !== undefined && r.marked_point !== null) {
    lines.push(`marked point: ${r.marked_point}`);
  }
  if (r.canonical_numeration) {
    lines.push(`numeration: (${r.canonical_numeration.join(",")})`);
  }
  if (r.fingerprint) lines.push(`fingerprint: ${r.fingerprint}`);
  return lines;
}

function rebuildConicList(): void {
  const entries = scene.report?.conics ?? [];
  if (entries.length === conicListSize) return;
  conicListSize = entries.length;
  conicList.textContent = "";
  for (const entry of entries) {
    const key = conicKey(entry.omitted[0], entry.omitted[1]);
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = scene.toggles.conics.has(key);
    box.addEventListener("change", () => {
      if (box.checked) scene.toggles.conics.add(key);
      else scene.toggles.conics.delete(key);
      redraw();
    });
    label.appendChild(box);
    label.appendChild(document.createTextNode(` Q(${key})`));
    conicList.appendChild(label);
  }
}

function redraw(): void {
  badgeNode.textContent = scene.badge();
  badgeNode.className = scene.serviceDown || scene.degenerate !== null ? "bad" : "ok";
  if (scene.serviceDown) {
    bannerNode.textContent = "service unreachable; retrying on next move";
    bannerNode.style.display = "block";
  } else if (scene.degenerate !== null) {
    bannerNode.textContent = `not typical: ${scene.degenerate}`;
    bannerNode.style.display = "block";
  } else {
    bannerNode.style.display = "none";
  }
  detailNode.textContent = detailLines().join("\n");
  alertsNode.textContent = "";
  for (const alert of [...scene.alerts].reverse()) {
    const li = document.createElement("li");
    li.textContent = alert.text;
    alertsNode.appendChild(li);
  }
  rebuildConicList();
  renderScene(svg, scene, viewport);
}

scene.onChange = redraw;

// drags: one in-flight classify at a time, the freshest position wins
let dragging: number | null = null;
let inflight = false;
let queued: { label: number; x: number; y: number } | null = null;

function pushDrag(label: number, x: number, y: number): void {
  if (inflight) {
    queued = { label, x, y };
    return;
  }
  inflight = true;
  void scene
    .onDrag(label, x, y)
    .catch((err) => {
      // e.g. a drag landing exactly on another point is a parse error
      bannerNode.textContent = String(err);
      bannerNode.style.display = "block";
    })
    .finally(() => {
      inflight = false;
      if (queued) {
        const next = queued;
        queued = null;
        pushDrag(next.label, next.x, next.y);
      }
    });
}

svg.addEventListener("pointerdown", (event) => {
  const target = (event.target as Element).closest("g.point");
  if (!target) return;
  dragging = Number(target.getAttribute("data-label"));
  svg.setPointerCapture?.(event.pointerId);
});

svg.addEventListener("pointermove", (event) => {
  if (dragging === null) return;
  const rect = svg.getBoundingClientRect();
  const pos = screenToChart(viewport, event.clientX - rect.left, event.clientY - rect.top);
  pushDrag(dragging, pos.x, pos.y);
});

svg.addEventListener("pointerup", (event) => {
  dragging = null;
  svg.releasePointerCapture?.(event.pointerId);
});

byId<HTMLButtonElement>("load-btn").addEventListener("click", () => {
  void scene
    .loadSeed(seedSelect.value)
    .then(() => {
      conicListSize = -1;
      refit();
      redraw();
    })
    .catch((err) => {
      bannerNode.textContent = String(err);
      bannerNode.style.display = "block";
    });
});

byId<HTMLButtonElement>("fit-btn").addEventListener("click", () => {
  refit();
  redraw();
});

byId<HTMLButtonElement>("export-btn").addEventListener("click", () => {
  const text = scene.exportScene();
  exportBox.value = text;
  exportBox.style.display = "block";
  if (typeof URL.createObjectURL === "function") {
    const blob = new Blob([text], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "scene.json";
    link.click();
    URL.revokeObjectURL(link.href);
  }
});

for (const name of ["edges", "dominance", "decorations"] as const) {
  const box = byId<HTMLInputElement>(`toggle-${name}`);
  box.checked = scene.toggles[name];
  box.addEventListener("change", () => {
    scene.toggles[name] = box.checked;
    redraw();
  });
}

async function start(): Promise<void> {
  try {
    const seeds = await client.seeds();
    for (const seed of seeds) {
      const option = document.createElement("option");
      option.value = seed.name;
      option.textContent = `${seed.name} (${seed.class_name})`;
      seedSelect.appendChild(option);
    }
    await scene.loadSeed(seeds.find((s) => s.name === "HEPT7")?.name ?? seeds[0].name);
    refit();
    redraw();
  } catch (err) {
    bannerNode.textContent =
      `cannot reach the service at ${client.baseUrl}; ` +
      `start it with: planeconfig serve (${err})`;
    bannerNode.style.display = "block";
  }
}

void start();
