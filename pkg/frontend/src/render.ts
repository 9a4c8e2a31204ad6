/** Canvas drawing. Every curve point comes from the service response; this
 * module only maps model coordinates to the screen. */

import type { Pair, SampleResponse, SolveResponse, SpecDoc } from "./types.js";
import type { EditorState } from "./state.js";
import { knotHandle, toScreen } from "./view.js";

const CURVE = "#1d1d1f";
const CURVE_STALE = "#b5b5b8";
const HANDLE = "#2563eb";
const COMB = "#cc3333";
const SELECTED = "#d97706";

export function draw(
  ctx: CanvasRenderingContext2D,
  state: EditorState,
  sampleData: SampleResponse | null,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  drawGrid(ctx, state);

  const solve = state.solve;
  if (solve !== null) {
    const stale = state.solveRevision !== state.revision || state.infeasible !== null;
    if (state.combEnabled && sampleData !== null && !stale) {
      drawComb(ctx, state, sampleData);
    }
    drawCurve(ctx, state, solve, stale);
  }
  drawKnots(ctx, state);
}

function drawGrid(ctx: CanvasRenderingContext2D, state: EditorState): void {
  const { width, height } = ctx.canvas;
  const step = niceStep(state.view.scale);
  ctx.save();
  ctx.strokeStyle = "#eceff3";
  ctx.lineWidth = 1;
  const [minX, maxY] = modelCorner(state, 0, 0);
  const [maxX, minY] = modelCorner(state, width, height);
  for (let x = Math.floor(minX / step) * step; x <= maxX; x += step) {
    const [sx] = toScreen(state.view, [x, 0]);
    line(ctx, sx, 0, sx, height);
  }
  for (let y = Math.floor(minY / step) * step; y <= maxY; y += step) {
    const [, sy] = toScreen(state.view, [0, y]);
    line(ctx, 0, sy, width, sy);
  }
  ctx.strokeStyle = "#d4d9e0";
  const [ox, oy] = toScreen(state.view, [0, 0]);
  line(ctx, ox, 0, ox, height);
  line(ctx, 0, oy, width, oy);
  ctx.restore();
}

function modelCorner(state: EditorState, sx: number, sy: number): Pair {
  return [
    (sx - state.view.offsetX) / state.view.scale,
    (state.view.offsetY - sy) / state.view.scale,
  ];
}

function niceStep(scale: number): number {
  const raw = 80 / scale;
  const mag = 10 ** Math.floor(Math.log10(raw));
  for (const mult of [1, 2, 5, 10]) {
    if (mag * mult >= raw) return mag * mult;
  }
  return mag * 10;
}

function drawCurve(
  ctx: CanvasRenderingContext2D,
  state: EditorState,
  solve: SolveResponse,
  stale: boolean,
): void {
  ctx.save();
  ctx.lineWidth = 2.25;
  ctx.strokeStyle = stale ? CURVE_STALE : CURVE;
  ctx.beginPath();
  for (const segment of solve.segments) {
    const bz = segment.bernstein;
    if (bz.length !== 4) continue;
    const [b0, b1, b2, b3] = bz as [Pair, Pair, Pair, Pair];
    const s0 = toScreen(state.view, b0);
    const s1 = toScreen(state.view, b1);
    const s2 = toScreen(state.view, b2);
    const s3 = toScreen(state.view, b3);
    ctx.moveTo(s0[0], s0[1]);
    ctx.bezierCurveTo(s1[0], s1[1], s2[0], s2[1], s3[0], s3[1]);
  }
  ctx.stroke();

  if (state.selection.kind === "segment") {
    const segment = solve.segments[state.selection.index];
    if (segment !== undefined) {
      ctx.strokeStyle = SELECTED;
      ctx.lineWidth = 3;
      ctx.beginPath();
      const [b0, b1, b2, b3] = segment.bernstein as [Pair, Pair, Pair, Pair];
      const s0 = toScreen(state.view, b0);
      const s1 = toScreen(state.view, b1);
      const s2 = toScreen(state.view, b2);
      const s3 = toScreen(state.view, b3);
      ctx.moveTo(s0[0], s0[1]);
      ctx.bezierCurveTo(s1[0], s1[1], s2[0], s2[1], s3[0], s3[1]);
      ctx.stroke();
    }
  }
  ctx.restore();
}

function drawComb(ctx: CanvasRenderingContext2D, state: EditorState, data: SampleResponse): void {
  ctx.save();
  ctx.strokeStyle = COMB;
  ctx.lineWidth = 1;
  ctx.globalAlpha = 0.85;
  const tipTrail: Pair[] = [];
  for (let i = 0; i < data.points.length; i += 1) {
    const p = data.points[i]!;
    const t = data.tangents[i]!;
    const k = data.kappa[i]!;
    const tip: Pair = [
      p[0] + state.combScale * k * -t[1],
      p[1] + state.combScale * k * t[0],
    ];
    const sp = toScreen(state.view, p);
    const st = toScreen(state.view, tip);
    line(ctx, sp[0], sp[1], st[0], st[1]);
    tipTrail.push(st);
  }
  ctx.beginPath();
  tipTrail.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
  ctx.stroke();
  ctx.restore();
}

function drawKnots(ctx: CanvasRenderingContext2D, state: EditorState): void {
  ctx.save();
  state.spec.knots.forEach((knot, index) => {
    const handle = knotHandle(state.view, knot.point, knot.tangent);
    const selected = state.selection.kind === "knot" && state.selection.index === index;
    ctx.strokeStyle = selected ? SELECTED : HANDLE;
    ctx.fillStyle = selected ? SELECTED : HANDLE;
    ctx.lineWidth = 1.5;
    line(ctx, handle.point[0], handle.point[1], handle.tangentTip[0], handle.tangentTip[1]);
    circle(ctx, handle.tangentTip, handle.tipRadius - 2, false);
    circle(ctx, handle.point, selected ? handle.pointRadius : handle.pointRadius - 2, true);
  });
  ctx.restore();
}

function line(ctx: CanvasRenderingContext2D, x1: number, y1: number, x2: number, y2: number): void {
  ctx.beginPath();
  ctx.moveTo(x1, y1);
  ctx.lineTo(x2, y2);
  ctx.stroke();
}

function circle(ctx: CanvasRenderingContext2D, center: Pair, radius: number, fill: boolean): void {
  ctx.beginPath();
  ctx.arc(center[0], center[1], radius, 0, 2 * Math.PI);
  if (fill) ctx.fill();
  else {
    ctx.save();
    ctx.fillStyle = "#ffffff";
    ctx.fill();
    ctx.restore();
    ctx.stroke();
  }
}

export function specPoints(spec: SpecDoc): Pair[] {
  return spec.knots.map((k) => k.point);
}
