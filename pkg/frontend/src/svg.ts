// SVG assembly for service payloads: colored faces as filled regions with
// the stroke drawn on top. Every ring, fill and winding shown comes
// straight out of a response; the only thing added here is the flip from
// canvas coordinates (y up) to SVG coordinates (y down), the same
// transform the service uses for its own renders.

import type { CanvasSize, ColoredDrawing } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const STROKE_COLOR = "#111111";
const STROKE_WIDTH_FRACTION = 0.004; // of the larger canvas side

function pathData(rings: number[][][]): string {
  const parts: string[] = [];
  for (let ring of rings) {
    if (ring.length > 1) {
      const first = ring[0]!;
      const last = ring[ring.length - 1]!;
      if (first[0] === last[0] && first[1] === last[1]) ring = ring.slice(0, -1);
    }
    parts.push("M " + ring.map((p) => `${p[0]},${p[1]}`).join(" L ") + " Z");
  }
  return parts.join(" ");
}

export function coloredSvg(
  colored: ColoredDrawing,
  strokePoints: number[][],
  canvas: CanvasSize,
  size: number,
): SVGSVGElement {
  const { w, h } = canvas;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${w} ${h}`);
  svg.setAttribute("width", String(size));
  svg.setAttribute("height", String(Math.max(1, Math.round((size * h) / w))));

  const flip = document.createElementNS(SVG_NS, "g");
  flip.setAttribute("transform", `matrix(1 0 0 -1 0 ${h})`);
  svg.append(flip);

  const backdrop = document.createElementNS(SVG_NS, "rect");
  backdrop.setAttribute("width", String(w));
  backdrop.setAttribute("height", String(h));
  backdrop.setAttribute("fill", colored.background);
  flip.append(backdrop);

  for (const face of colored.faces) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("class", "face");
    path.setAttribute("data-winding", String(face.winding));
    path.setAttribute("fill", face.color);
    path.setAttribute("fill-rule", "evenodd");
    path.setAttribute("d", pathData(face.rings));
    flip.append(path);
  }

  const stroke = document.createElementNS(SVG_NS, "path");
  stroke.setAttribute("class", "stroke");
  stroke.setAttribute("fill", "none");
  stroke.setAttribute("stroke", STROKE_COLOR);
  stroke.setAttribute("stroke-width", String(STROKE_WIDTH_FRACTION * Math.max(w, h)));
  stroke.setAttribute("stroke-linecap", "round");
  stroke.setAttribute("stroke-linejoin", "round");
  stroke.setAttribute("d", "M " + strokePoints.map((p) => `${p[0]},${p[1]}`).join(" L "));
  flip.append(stroke);

  return svg;
}
