// Freehand stroke capture from pointer events.
//
// Points are appended in event order. Two gates bound the payload for long
// strokes: a move is kept only when at least MIN_SAMPLE_MS elapsed and the
// pointer traveled at least MIN_MOVE_PX display pixels since the last kept
// point. The lift-off point is always kept so the stored stroke ends where
// the pointer did.

import type { CanvasSize } from "./api.js";

export const MIN_SAMPLE_MS = 4;
export const MIN_MOVE_PX = 2;

export interface CapturePoint {
  x: number; // display pixels within the draw surface
  y: number;
  t: number; // milliseconds, monotonic
}

export interface StrokeCapture {
  width: number; // draw surface size in display pixels
  height: number;
  points: CapturePoint[];
}

export function beginCapture(
  width: number,
  height: number,
  x: number,
  y: number,
  t: number,
): StrokeCapture {
  return { width, height, points: [{ x, y, t }] };
}

/** Append a move sample if it passes both gates; report whether it did. */
export function addSample(
  capture: StrokeCapture,
  x: number,
  y: number,
  t: number,
): boolean {
  const last = capture.points[capture.points.length - 1]!;
  if (t - last.t < MIN_SAMPLE_MS) return false;
  const dx = x - last.x;
  const dy = y - last.y;
  if (dx * dx + dy * dy < MIN_MOVE_PX * MIN_MOVE_PX) return false;
  capture.points.push({ x, y, t });
  return true;
}

export function endCapture(
  capture: StrokeCapture,
  x: number,
  y: number,
  t: number,
): void {
  const last = capture.points[capture.points.length - 1]!;
  if (x === last.x && y === last.y) return;
  // the gates are for the firehose in between, not for the endpoint
  capture.points.push({ x, y, t });
}

/**
 * Normalize a finished capture to the unit canvas for submission.
 * Display y grows downward, canvas y grows upward, so y is flipped; the
 * service's renders then come back the same way up as they were drawn.
 */
export function toDrawing(capture: StrokeCapture): {
  canvas: CanvasSize;
  points: number[][];
} {
  return {
    canvas: { w: 1, h: 1 },
    points: capture.points.map((p) => [
      p.x / capture.width,
      1 - p.y / capture.height,
    ]),
  };
}

/** Inverse of the normalization for one point (display pixels out). */
export function toDisplay(
  point: number[],
  width: number,
  height: number,
): [number, number] {
  return [point[0]! * width, (1 - point[1]!) * height];
}
