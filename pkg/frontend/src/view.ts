/** Model <-> screen mapping; the only geometry the client computes itself. */

import type { Pair } from "./types.js";
import type { ViewTransform } from "./state.js";

export function toScreen(view: ViewTransform, p: Pair): Pair {
  return [view.offsetX + p[0] * view.scale, view.offsetY - p[1] * view.scale];
}

export function toModel(view: ViewTransform, p: Pair): Pair {
  return [(p[0] - view.offsetX) / view.scale, (view.offsetY - p[1]) / view.scale];
}

export function zoomAt(view: ViewTransform, screen: Pair, factor: number): ViewTransform {
  const scale = Math.min(Math.max(view.scale * factor, 1e-3), 1e6);
  const anchor = toModel(view, screen);
  return {
    scale,
    offsetX: screen[0] - anchor[0] * scale,
    offsetY: screen[1] + anchor[1] * scale,
  };
}

export function pan(view: ViewTransform, dxScreen: number, dyScreen: number): ViewTransform {
  return { ...view, offsetX: view.offsetX + dxScreen, offsetY: view.offsetY + dyScreen };
}

/** Fit the given model points into a width x height viewport with a margin. */
export function fitView(points: Pair[], width: number, height: number, marginPx = 48): ViewTransform {
  if (points.length === 0) return { scale: 50, offsetX: width / 2, offsetY: height / 2 };
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const [x, y] of points) {
    minX = Math.min(minX, x);
    maxX = Math.max(maxX, x);
    minY = Math.min(minY, y);
    maxY = Math.max(maxY, y);
  }
  const spanX = Math.max(maxX - minX, 1e-6);
  const spanY = Math.max(maxY - minY, 1e-6);
  const scale = Math.min((width - 2 * marginPx) / spanX, (height - 2 * marginPx) / spanY);
  const cx = (minX + maxX) / 2;
  const cy = (minY + maxY) / 2;
  return { scale, offsetX: width / 2 - cx * scale, offsetY: height / 2 + cy * scale };
}

export interface KnotHandle {
  /** screen position of the interpolation point */
  point: Pair;
  /** screen position of the tangent arrow tip (unit length in model space) */
  tangentTip: Pair;
  pointRadius: number;
  tipRadius: number;
}

export function knotHandle(view: ViewTransform, point: Pair, tangent: Pair): KnotHandle {
  const tip: Pair = [point[0] + tangent[0], point[1] + tangent[1]];
  return {
    point: toScreen(view, point),
    tangentTip: toScreen(view, tip),
    pointRadius: 7,
    tipRadius: 6,
  };
}

export function hitTest(handle: KnotHandle, screen: Pair): "point" | "tangent" | null {
  if (Math.hypot(screen[0] - handle.tangentTip[0], screen[1] - handle.tangentTip[1]) <= handle.tipRadius + 2) {
    return "tangent";
  }
  if (Math.hypot(screen[0] - handle.point[0], screen[1] - handle.point[1]) <= handle.pointRadius + 2) {
    return "point";
  }
  return null;
}
