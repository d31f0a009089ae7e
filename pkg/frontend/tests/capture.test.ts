import { describe, expect, it } from "vitest";

import {
  MIN_MOVE_PX,
  MIN_SAMPLE_MS,
  addSample,
  beginCapture,
  endCapture,
  toDisplay,
  toDrawing,
} from "../src/capture.js";

describe("stroke thinning", () => {
  it("keeps at most one sample per 4 ms", () => {
    const cap = beginCapture(480, 480, 0, 240, 1000);
    for (let i = 1; i <= 10; i++) addSample(cap, i * 20, 240, 1000 + i);
    expect(cap.points.length).toBe(3); // t = 1000, 1004, 1008
    for (let i = 1; i < cap.points.length; i++) {
      expect(cap.points[i]!.t - cap.points[i - 1]!.t).toBeGreaterThanOrEqual(
        MIN_SAMPLE_MS,
      );
    }
  });

  it("drops jitter below 2 display pixels", () => {
    const cap = beginCapture(480, 480, 100, 100, 0);
    expect(addSample(cap, 101, 100, 50)).toBe(false);
    expect(addSample(cap, 101, 101, 100)).toBe(false);
    expect(cap.points).toHaveLength(1);
    expect(addSample(cap, 102, 100, 150)).toBe(true); // exactly MIN_MOVE_PX
    expect(cap.points).toHaveLength(2);
    expect(MIN_MOVE_PX).toBe(2);
  });

  it("appends in event order and always keeps the lift-off point", () => {
    const cap = beginCapture(480, 480, 0, 0, 0);
    addSample(cap, 50, 0, 10);
    addSample(cap, 100, 0, 20);
    endCapture(cap, 100.5, 0, 21); // fails both gates, kept anyway
    expect(cap.points.map((p) => p.x)).toEqual([0, 50, 100, 100.5]);
    const ts = cap.points.map((p) => p.t);
    expect([...ts].sort((a, b) => a - b)).toEqual(ts);
  });

  it("does not duplicate a lift-off at the last kept point", () => {
    const cap = beginCapture(480, 480, 7, 9, 0);
    endCapture(cap, 7, 9, 99);
    expect(cap.points).toHaveLength(1);
  });
});

describe("unit-canvas normalization", () => {
  it("maps display corners to unit corners with y flipped", () => {
    const cap = beginCapture(480, 360, 0, 360, 0);
    addSample(cap, 480, 0, 100);
    expect(toDrawing(cap)).toEqual({
      canvas: { w: 1, h: 1 },
      points: [
        [0, 0],
        [1, 1],
      ],
    });
  });

  it("round-trips within one display pixel", () => {
    const w = 480;
    const h = 480;
    const cap = beginCapture(w, h, 3.7, 451.2, 0);
    let t = 0;
    for (let i = 0; i < 50; i++) {
      addSample(cap, Math.random() * w, Math.random() * h, (t += 10));
    }
    const drawing = toDrawing(cap);
    expect(drawing.points.length).toBe(cap.points.length);
    drawing.points.forEach((p, i) => {
      const [x, y] = toDisplay(p, w, h);
      expect(Math.abs(x - cap.points[i]!.x)).toBeLessThan(1);
      expect(Math.abs(y - cap.points[i]!.y)).toBeLessThan(1);
    });
  });
});
