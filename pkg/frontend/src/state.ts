/** Editor state and its pure transitions.
 *
 * The spec document is the single document of record; every mutation bumps
 * `revision`, and solve responses are tagged with the revision they answer so
 * stale responses can be discarded. Undo/redo snapshots the spec document
 * byte-for-byte (JSON text), never derived data.
 */

import type { Pair, SolveResponse, SpecDoc } from "./types.js";

export type Selection =
  | { kind: "none" }
  | { kind: "knot"; index: number }
  | { kind: "segment"; index: number };

export interface ViewTransform {
  /** pixels per model unit */
  scale: number;
  /** screen position of the model origin */
  offsetX: number;
  offsetY: number;
}

export interface EditorState {
  spec: SpecDoc;
  revision: number;
  solve: SolveResponse | null;
  /** revision the current `solve` answers; equal to `revision` when fresh */
  solveRevision: number;
  infeasible: { segment: number | null; message: string } | null;
  selection: Selection;
  view: ViewTransform;
  combEnabled: boolean;
  combScale: number;
  undoStack: string[];
  redoStack: string[];
}

export type KnotMutation =
  | { type: "move-point"; point: Pair }
  | { type: "rotate-tangent"; direction: Pair }
  | { type: "set-kappa"; kappa: number }
  | { type: "set-signed-radius"; sign: 1 | -1; radius: number };

const MAX_UNDO = 200;

export function freshState(spec: SpecDoc, view: ViewTransform): EditorState {
  return {
    spec: normalizeSpec(spec),
    revision: 0,
    solve: null,
    solveRevision: -1,
    infeasible: null,
    selection: { kind: "none" },
    view,
    combEnabled: true,
    combScale: 0.6,
    undoStack: [],
    redoStack: [],
  };
}

export function specText(spec: SpecDoc): string {
  return JSON.stringify(spec);
}

/** Schema guard mirrored from the service: every mutation must keep it true. */
export function isSpecValid(spec: SpecDoc): boolean {
  if (!Array.isArray(spec.knots) || spec.knots.length < 2) return false;
  for (const knot of spec.knots) {
    if (!isFinitePair(knot.point) || !isFinitePair(knot.tangent)) return false;
    if (Math.hypot(knot.tangent[0], knot.tangent[1]) <= 1e-12) return false;
    const hasKappa = typeof knot.kappa === "number" && Number.isFinite(knot.kappa);
    const sr = knot.signed_radius;
    const hasRadius =
      sr !== undefined && (sr.sign === 1 || sr.sign === -1) && Number.isFinite(sr.radius) && sr.radius > 0;
    if (hasKappa === hasRadius) return false;
  }
  for (let i = 0; i + 1 < spec.knots.length; i += 1) {
    const a = spec.knots[i]!.point;
    const b = spec.knots[i + 1]!.point;
    if (Math.hypot(b[0] - a[0], b[1] - a[1]) <= 1e-12) return false;
  }
  if (spec.root_choice !== undefined) {
    for (const [key, value] of Object.entries(spec.root_choice)) {
      const seg = Number(key);
      if (!Number.isInteger(seg) || seg < 0 || seg >= spec.knots.length - 1) return false;
      if (!Number.isInteger(value) || value < 0) return false;
    }
  }
  return true;
}

function isFinitePair(p: Pair | undefined): p is Pair {
  return Array.isArray(p) && p.length === 2 && Number.isFinite(p[0]) && Number.isFinite(p[1]);
}

function normalizeSpec(spec: SpecDoc): SpecDoc {
  const out: SpecDoc = {
    knots: spec.knots.map((k) => {
      const knot: typeof k = { point: [...k.point], tangent: unit(k.tangent) };
      if (k.signed_radius !== undefined) {
        knot.signed_radius = { ...k.signed_radius };
      } else {
        knot.kappa = k.kappa;
      }
      return knot;
    }),
  };
  if (spec.root_choice && Object.keys(spec.root_choice).length > 0) {
    out.root_choice = { ...spec.root_choice };
  }
  return out;
}

function unit(v: Pair): Pair {
  const n = Math.hypot(v[0], v[1]);
  if (n <= 1e-12) throw new Error("tangent must be a nonzero vector");
  return [v[0] / n, v[1] / n];
}

function pushUndo(state: EditorState, nextSpec: SpecDoc): EditorState {
  if (!isSpecValid(nextSpec)) return state; // never let an invalid document in
  const undoStack = [...state.undoStack, specText(state.spec)].slice(-MAX_UNDO);
  return {
    ...state,
    spec: nextSpec,
    revision: state.revision + 1,
    undoStack,
    redoStack: [],
  };
}

/** Drop candidate pins whose segment's solution set may change with knot `index`. */
function dropAdjacentChoices(spec: SpecDoc, index: number): SpecDoc {
  if (!spec.root_choice) return spec;
  const kept: Record<string, number> = {};
  for (const [key, value] of Object.entries(spec.root_choice)) {
    const seg = Number(key);
    if (seg !== index && seg !== index - 1) kept[key] = value;
  }
  const out: SpecDoc = { knots: spec.knots };
  if (Object.keys(kept).length > 0) out.root_choice = kept;
  return out;
}

export function editKnot(state: EditorState, index: number, mutation: KnotMutation): EditorState {
  const current = state.spec.knots[index];
  if (current === undefined) throw new Error(`knot ${index} does not exist`);
  const knot = { ...current };
  switch (mutation.type) {
    case "move-point":
      knot.point = [...mutation.point];
      break;
    case "rotate-tangent":
      knot.tangent = unit(mutation.direction);
      break;
    case "set-kappa":
      if (!Number.isFinite(mutation.kappa)) return state;
      delete knot.signed_radius;
      knot.kappa = mutation.kappa;
      break;
    case "set-signed-radius":
      if (!(mutation.radius > 0) || !Number.isFinite(mutation.radius)) return state;
      delete knot.kappa;
      knot.signed_radius = { sign: mutation.sign, radius: mutation.radius };
      break;
  }
  const knots = state.spec.knots.map((k, i) => (i === index ? knot : k));
  const next = dropAdjacentChoices({ ...state.spec, knots }, index);
  return pushUndo(state, next);
}

/**
 * Pin a candidate for a segment. Requires a fresh solve response; a stale one
 * (spec changed since) is rejected so the caller must re-solve first.
 */
export function chooseCandidate(
  state: EditorState,
  segmentIndex: number,
  candidateIndex: number,
): { state: EditorState; staleRejected: boolean } {
  if (state.solve === null || state.solveRevision !== state.revision) {
    return { state, staleRejected: true };
  }
  const segment = state.solve.segments[segmentIndex];
  if (segment === undefined || candidateIndex < 0 || candidateIndex >= segment.candidates.length) {
    return { state, staleRejected: true };
  }
  const root_choice = { ...(state.spec.root_choice ?? {}) };
  root_choice[String(segmentIndex)] = candidateIndex;
  const next: SpecDoc = { ...state.spec, root_choice };
  // geometry for the pick is already in the response; rendering needs no new solve
  const pinned = pushUndo(state, next);
  return { state: { ...pinned, solve: state.solve, solveRevision: pinned.revision }, staleRejected: false };
}

export function acceptSolve(state: EditorState, revision: number, solve: SolveResponse): EditorState {
  if (revision < state.solveRevision || revision > state.revision) return state;
  return { ...state, solve, solveRevision: revision, infeasible: null };
}

export function acceptInfeasible(
  state: EditorState,
  revision: number,
  segment: number | null,
  message: string,
): EditorState {
  if (revision < state.solveRevision || revision > state.revision) return state;
  // keep the previous geometry (grayed out by the renderer) and flag the failure
  return { ...state, infeasible: { segment, message } };
}

export function undo(state: EditorState): EditorState {
  const prev = state.undoStack[state.undoStack.length - 1];
  if (prev === undefined) return state;
  return {
    ...state,
    spec: JSON.parse(prev) as SpecDoc,
    revision: state.revision + 1,
    undoStack: state.undoStack.slice(0, -1),
    redoStack: [...state.redoStack, specText(state.spec)],
  };
}

export function redo(state: EditorState): EditorState {
  const next = state.redoStack[state.redoStack.length - 1];
  if (next === undefined) return state;
  return {
    ...state,
    spec: JSON.parse(next) as SpecDoc,
    revision: state.revision + 1,
    undoStack: [...state.undoStack, specText(state.spec)],
    redoStack: state.redoStack.slice(0, -1),
  };
}

export function select(state: EditorState, selection: Selection): EditorState {
  return { ...state, selection };
}

export function setComb(state: EditorState, enabled: boolean, scale: number): EditorState {
  return { ...state, combEnabled: enabled, combScale: scale };
}
