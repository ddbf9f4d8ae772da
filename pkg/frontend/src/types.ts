// Shapes of the documents the classification service emits.  The UI never
// computes an invariant itself; everything displayed comes from one of
// these, so the fields mirror the service exactly.  Exact values
// (coordinates, conic coefficients) travel as strings.

export type Triple = [string, string, string];

export interface TypicalityBlock {
  simple: boolean;
  typical: boolean;
  collinear_triples: number[][];
  coconic_sextuples: number[][];
}

export interface ConicEntry {
  omitted: [number, number];
  coefficients: string[];
}

export interface DecorationEntry {
  edge: [number, number];
  kind: "internal" | "external" | "special";
  direction: [number, number] | null;
}

export interface ClassReport {
  size: number;
  points: Triple[];
  typicality: TypicalityBlock;
  labels?: string[];
  // 5-point reports stop at the conic through the quintuple
  conic?: string[];
  // 6-point reports
  six_class?: number;
  six_class_name?: string;
  // full 7-point reports
  sigma?: number[];
  spectrum?: number[];
  convexity?: string;
  deltas?: number[];
  dominance_matrix?: number[][];
  dominance_indices?: number[];
  canonical_numeration?: number[] | null;
  marked_point?: number | null;
  edge_decorations?: DecorationEntry[];
  adjacency_edges?: [number, number][];
  conics?: ConicEntry[];
  fingerprint?: string;
  class_name?: string;
}

export interface PathEvent {
  kind: "collinear" | "coconic";
  labels: number[];
  interval: [string, string];
  clustered: boolean;
}

export interface PathReply {
  certified: boolean;
  events: PathEvent[];
}

export interface SeedEntry {
  name: string;
  class_name: string;
  fingerprint: string;
  provenance: string;
  points: Triple[];
}

export interface ErrorDoc {
  error: { kind: string; detail: string };
}
