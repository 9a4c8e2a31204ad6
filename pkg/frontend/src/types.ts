/** Wire types for the ballkurve HTTP service. */

export type Pair = [number, number];

export interface KnotDoc {
  point: Pair;
  tangent: Pair;
  kappa?: number;
  signed_radius?: { sign: 1 | -1; radius: number };
}

export interface SpecDoc {
  knots: KnotDoc[];
  root_choice?: Record<string, number>;
}

export interface CandidateDoc {
  alpha: number;
  beta: number;
  residual0: number;
  residual1: number;
  underdetermined: boolean;
  control_points: Pair[];
  bernstein: Pair[];
}

export interface SegmentDoc {
  coefficients: { a: number; b: number; d: number };
  candidates: CandidateDoc[];
  chosen: number;
  params: { alpha: number; beta: number };
  control_points: Pair[];
  bernstein: Pair[];
}

export interface JointDoc {
  position_gap: number;
  tangent_gap: number;
  kappa_gap: number;
}

export interface ReportDoc {
  pass: boolean;
  joints: JointDoc[];
}

export interface SolveResponse {
  segments: SegmentDoc[];
  report: ReportDoc;
}

export interface SampleResponse {
  points: Pair[];
  kappa: number[];
  tangents: Pair[];
  global_t: number[];
}

export interface ServiceError {
  error: { code: string; message: string; segment?: number };
}
