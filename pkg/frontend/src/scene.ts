import { ServiceError } from "./client.js";
import { tripleFor } from "./coords.js";
import type {
  ClassReport,
  PathEvent,
  PathReply,
  SeedEntry,
  Triple,
} from "./types.js";

/** What the scene needs from the service; ServiceClient satisfies it. */
export interface ClassificationService {
  classify(points: Triple[], labels?: string[]): Promise<ClassReport>;
  path(start: Triple[], end: Triple[]): Promise<PathReply>;
  seeds(): Promise<SeedEntry[]>;
}

/** One recorded class change, enriched with the wall the probe found. */
export interface WallAlert {
  from: string;
  to: string;
  /** which invariant moved: "σ" when the derivative code changed, else "fingerprint" */
  invariant: string;
  /** wall events on the straight segment between the two responses */
  events: PathEvent[] | null;
  text: string;
}

export interface OverlayToggles {
  edges: boolean;
  dominance: boolean;
  decorations: boolean;
  /** conic keys "i,j" currently displayed */
  conics: Set<string>;
}

export function conicKey(i: number, j: number): string {
  return `${i},${j}`;
}

/** Human badge for a typical report: class name at every size. */
export function badgeText(report: ClassReport): string {
  if (report.class_name) return report.class_name;
  if (report.six_class_name) return report.six_class_name;
  if (report.conic) return "typical quintuple";
  return `${report.size} points`;
}

function describeDegeneracy(report: ClassReport): string {
  const t = report.typicality;
  const parts: string[] = [];
  for (const triple of t.collinear_triples) {
    parts.push(`collinear triple (${triple.join(", ")})`);
  }
  for (const six of t.coconic_sextuples) {
    parts.push(`coconic sextuple (${six.join(", ")})`);
  }
  return parts.join("; ") || "degenerate";
}

function alertLine(alert: WallAlert): string {
  let line = `${alert.invariant} wall: ${alert.from} → ${alert.to}`;
  if (alert.events && alert.events.length > 0) {
    const names = alert.events.map(
      (e) => `${e.kind} (${e.labels.join(", ")})`,
    );
    line += ` across ${names.join(", ")}`;
  }
  return line;
}

/**
 * Explorer state.  Coordinates live as exact quantized decimal strings;
 * every displayed invariant is the service's answer for exactly those
 * strings, and export writes the same strings, so the badge at export
 * time is the class the CLI will reproduce.
 */
export class Scene {
  points: Triple[] = [];
  labels: string[] | null = null;
  seedName: string | null = null;

  /** most recent service response for the current coordinates */
  report: ClassReport | null = null;
  /** banner text while the configuration is degenerate, else null */
  degenerate: string | null = null;
  serviceDown = false;
  alerts: WallAlert[] = [];

  toggles: OverlayToggles = {
    edges: true,
    dominance: true,
    decorations: true,
    conics: new Set(),
  };

  /** render hook; fired after every state change */
  onChange: (() => void) | null = null;

  private seq = 0;
  private lastTypical: ClassReport | null = null;
  private lastTypicalPoints: Triple[] | null = null;

  constructor(readonly client: ClassificationService) {}

  badge(): string {
    if (this.serviceDown) return "service unreachable";
    if (this.report === null) return "no classification yet";
    if (this.degenerate !== null) return "degenerate";
    return badgeText(this.report);
  }

  async loadSeed(name: string): Promise<void> {
    const seeds = await this.client.seeds();
    const seed = seeds.find((s: SeedEntry) => s.name === name);
    if (!seed) throw new ServiceError("UnknownSeed", `no seed named ${name}`);
    this.points = seed.points.map((p) => [...p] as Triple);
    this.labels = null;
    this.seedName = name;
    this.alerts = [];
    this.report = null;
    this.degenerate = null;
    this.lastTypical = null;
    this.lastTypicalPoints = null;
    this.toggles.conics.clear();
    await this.reclassify();
  }

  /** Move one point to a chart position (quantized before anything else). */
  async onDrag(label: number, x: number, y: number): Promise<void> {
    const next = tripleFor(x, y);
    const current = this.points[label];
    if (
      current &&
      current[0] === next[0] &&
      current[1] === next[1] &&
      current[2] === next[2]
    ) {
      return; // below the quantum: nothing changed
    }
    this.points[label] = next;
    await this.reclassify();
  }

  /** ConfigFile text, same schema the CLI reads and writes. */
  exportScene(): string {
    const doc: { points: Triple[]; labels?: string[] } = {
      points: this.points.map((p) => [...p] as Triple),
    };
    if (this.labels) doc.labels = [...this.labels];
    return JSON.stringify(doc, null, 2) + "\n";
  }

  private notify(): void {
    this.onChange?.();
  }

  private async reclassify(): Promise<void> {
    const mySeq = ++this.seq;
    const pts = this.points.map((p) => [...p] as Triple);
    let report: ClassReport;
    try {
      report = await this.client.classify(pts, this.labels ?? undefined);
    } catch (err) {
      if (err instanceof ServiceError) throw err; // our request was malformed
      if (mySeq === this.seq) {
        this.serviceDown = true;
        this.notify();
      }
      return;
    }
    if (mySeq !== this.seq) return; // superseded: latest wins
    this.serviceDown = false;
    this.report = report;
    if (!report.typicality.typical) {
      this.degenerate = describeDegeneracy(report);
      this.notify();
      return;
    }
    this.degenerate = null;
    const prev = this.lastTypical;
    const prevPoints = this.lastTypicalPoints;
    this.lastTypical = report;
    this.lastTypicalPoints = pts;
    if (prev !== null && badgeText(prev) !== badgeText(report)) {
      const sigmaMoved =
        prev.sigma !== undefined &&
        report.sigma !== undefined &&
        prev.sigma.join(",") !== report.sigma.join(",");
      const alert: WallAlert = {
        from: badgeText(prev),
        to: badgeText(report),
        invariant: sigmaMoved ? "σ" : "fingerprint",
        events: null,
        text: "",
      };
      alert.text = alertLine(alert);
      this.alerts.push(alert);
      this.notify();
      if (prevPoints !== null && prevPoints.length === pts.length) {
        try {
          const reply = await this.client.path(prevPoints, pts);
          alert.events = reply.events;
          alert.text = alertLine(alert);
        } catch {
          // probe is best-effort; the alert stands without it
        }
      }
    }
    this.notify();
  }
}
