// The exhibit loop: draw a stroke, watch it come back colored, rotate the
// palette, browse the gallery, pick a neighbor, scrub the morph between
// the two. All geometry on screen is replayed from service responses; the
// page itself never computes a winding, a color, a distance or a frame.

import {
  ApiError,
  getDrawing,
  getMorph,
  getNearest,
  getStats,
  listDrawings,
  setApiBase,
  submitDrawing,
  thumbnailUrl,
} from "./api.js";
import type { ColoredDrawing, DrawingRecord, Neighbor } from "./api.js";
import { addSample, beginCapture, endCapture, toDrawing } from "./capture.js";
import type { StrokeCapture } from "./capture.js";
import { coloredSvg } from "./svg.js";

const RESULT_SIZE = 360;
const MORPH_SIZE = 320;
const THUMB_SIZE = 160;
const NEIGHBOR_THUMB = 96;
const PAGE_SIZE = 24;
const MORPH_FRAMES = 24;
const NEIGHBOR_K = 6;
const STROKE_ECHO = "#111111";

interface PreparedFrame {
  t: number;
  svg: SVGSVGElement | null; // null for a frame the service failed to color
  error: string | null;
}

export function initApp(root: HTMLElement): void {
  const apiParam = new URLSearchParams(location.search).get("api");
  if (apiParam) setApiBase(apiParam);

  // App layout
  root.innerHTML = `
    <h1>strokelab</h1>
    <main>
      <section id="draw-section">
        <h2>Draw</h2>
        <p class="hint">One line, left to right.</p>
        <canvas id="pad" width="480" height="480"></canvas>
        <p id="draw-status"></p>
        <p id="draw-error" hidden></p>
      </section>
      <section id="result-section">
        <h2>Colored</h2>
        <div id="result"></div>
        <p id="result-meta"></p>
        <button id="rotate" disabled>Rotate palette</button>
      </section>
      <section id="explore-section">
        <h2>Morph</h2>
        <div id="morph-view"></div>
        <label>t
          <input id="morph-slider" type="range" min="0" max="1" step="0.001" value="0" disabled>
        </label>
        <p id="morph-meta"></p>
        <h2>Neighbors</h2>
        <ol id="neighbors"></ol>
        <p id="neighbor-note"></p>
      </section>
    </main>
    <section id="gallery-section">
      <h2>Gallery</h2>
      <div id="gallery"></div>
      <p id="gallery-note"></p>
      <p id="stats"></p>
    </section>
  `;

  const pad = root.querySelector<HTMLCanvasElement>("#pad")!;
  const status = root.querySelector<HTMLParagraphElement>("#draw-status")!;
  const errorBox = root.querySelector<HTMLParagraphElement>("#draw-error")!;
  const resultView = root.querySelector<HTMLDivElement>("#result")!;
  const resultMeta = root.querySelector<HTMLParagraphElement>("#result-meta")!;
  const rotateButton = root.querySelector<HTMLButtonElement>("#rotate")!;
  const morphView = root.querySelector<HTMLDivElement>("#morph-view")!;
  const slider = root.querySelector<HTMLInputElement>("#morph-slider")!;
  const morphMeta = root.querySelector<HTMLParagraphElement>("#morph-meta")!;
  const neighborList = root.querySelector<HTMLOListElement>("#neighbors")!;
  const neighborNote = root.querySelector<HTMLParagraphElement>("#neighbor-note")!;
  const grid = root.querySelector<HTMLDivElement>("#gallery")!;
  const galleryNote = root.querySelector<HTMLParagraphElement>("#gallery-note")!;
  const statsBox = root.querySelector<HTMLParagraphElement>("#stats")!;

  const ctx = pad.getContext("2d"); // test DOMs have no 2d context

  let capture: StrokeCapture | null = null;
  let submitting = false; // at most one in-flight submission
  let focus: DrawingRecord | null = null;
  let paletteOffset = 0;
  let morphFrames: PreparedFrame[] = [];
  let morphDistance = 0;
  let galleryOffset = 0;
  let galleryTotal = Infinity;
  let galleryLoading = false;
  const shownThumbs = new Set<string>();

  // Draw pad ---------------------------------------------------------------

  const padPoint = (e: MouseEvent): [number, number] => {
    const rect = pad.getBoundingClientRect();
    return [e.clientX - rect.left, e.clientY - rect.top];
  };

  function echo(): void {
    if (!ctx) return;
    ctx.clearRect(0, 0, pad.width, pad.height);
    if (!capture || capture.points.length === 0) return;
    ctx.strokeStyle = STROKE_ECHO;
    ctx.lineWidth = 2;
    ctx.lineCap = "round";
    ctx.lineJoin = "round";
    ctx.beginPath();
    const first = capture.points[0]!;
    ctx.moveTo(first.x, first.y);
    for (let i = 1; i < capture.points.length; i++) {
      const p = capture.points[i]!;
      ctx.lineTo(p.x, p.y);
    }
    ctx.stroke();
  }

  pad.addEventListener("pointerdown", (e) => {
    if (submitting) return; // the pad is busy until the last stroke lands
    e.preventDefault();
    try {
      pad.setPointerCapture(e.pointerId);
    } catch {
      // pointer capture is a nicety; test DOMs lack it
    }
    const [x, y] = padPoint(e);
    capture = beginCapture(pad.width, pad.height, x, y, performance.now());
    echo();
  });

  pad.addEventListener("pointermove", (e) => {
    if (!capture) return;
    const [x, y] = padPoint(e);
    if (addSample(capture, x, y, performance.now())) echo();
  });

  pad.addEventListener("pointerup", (e) => {
    if (!capture) return;
    const [x, y] = padPoint(e);
    endCapture(capture, x, y, performance.now());
    const done = capture;
    capture = null;
    void submit(done);
  });

  pad.addEventListener("pointercancel", () => {
    capture = null;
    echo();
  });

  async function submit(done: StrokeCapture): Promise<void> {
    submitting = true;
    status.textContent = "coloring…";
    errorBox.hidden = true;
    try {
      const res = await submitDrawing(toDrawing(done));
      focus = res.record;
      paletteOffset = 0;
      showColored(res.record, res.colored);
      status.textContent = res.record.id ? `stored as ${res.record.id}` : "";
      if (ctx) ctx.clearRect(0, 0, pad.width, pad.height);
      prependThumb(res.record);
      refreshStats();
      if (res.record.id) void loadNeighbors(res.record.id);
    } catch (err) {
      showError(err);
    } finally {
      submitting = false;
    }
  }

  function showError(err: unknown): void {
    status.textContent = "";
    errorBox.hidden = false;
    if (err instanceof ApiError) {
      // service error codes verbatim, plus a hint for the common slip
      const hint =
        err.code === "NotLeftToRight"
          ? " — start at the left edge and draw to the right →"
          : "";
      errorBox.textContent = `${err.code}: ${err.detail}${hint}`;
    } else {
      errorBox.textContent = String(err);
    }
  }

  // Colored result ----------------------------------------------------------

  function showColored(record: DrawingRecord, colored: ColoredDrawing): void {
    resultView.replaceChildren(
      coloredSvg(colored, record.points, record.canvas, RESULT_SIZE),
    );
    const zones = colored.faces.length;
    resultMeta.textContent = `${zones} zone${zones === 1 ? "" : "s"} · palette offset ${paletteOffset}`;
    rotateButton.disabled = !record.id;
  }

  rotateButton.addEventListener("click", () => {
    if (!focus?.id) return;
    paletteOffset += 1;
    const id = focus.id;
    getDrawing(id, paletteOffset).then(
      (res) => showColored(res.record, res.colored),
      (err) => showError(err),
    );
  });

  // Gallery -----------------------------------------------------------------

  function thumbButton(rec: DrawingRecord): HTMLButtonElement | null {
    const id = rec.id;
    if (!id || shownThumbs.has(id)) return null;
    shownThumbs.add(id);
    const btn = document.createElement("button");
    btn.className = "thumb";
    btn.title = id;
    const img = document.createElement("img");
    img.src = thumbnailUrl(id, THUMB_SIZE);
    img.alt = id;
    img.loading = "lazy";
    btn.append(img);
    btn.addEventListener("click", () => void openDrawing(id));
    return btn;
  }

  function prependThumb(rec: DrawingRecord): void {
    const btn = thumbButton(rec);
    if (btn) {
      grid.prepend(btn);
      if (galleryTotal !== Infinity) galleryTotal += 1;
    }
  }

  async function loadMoreThumbs(): Promise<void> {
    if (galleryLoading || galleryOffset >= galleryTotal) return;
    galleryLoading = true;
    try {
      const page = await listDrawings(galleryOffset, PAGE_SIZE);
      galleryTotal = page.total;
      galleryOffset = page.offset + page.records.length;
      for (const rec of page.records) {
        const btn = thumbButton(rec);
        if (btn) grid.append(btn);
      }
      galleryNote.textContent = grid.childElementCount === 0 ? "nothing here yet — draw something" : "";
    } catch (err) {
      galleryNote.textContent = err instanceof ApiError ? `${err.code}: ${err.detail}` : String(err);
    } finally {
      galleryLoading = false;
    }
  }

  grid.addEventListener("scroll", () => {
    if (grid.scrollTop + grid.clientHeight >= grid.scrollHeight - THUMB_SIZE) {
      void loadMoreThumbs();
    }
  });

  async function openDrawing(id: string): Promise<void> {
    paletteOffset = 0;
    try {
      const res = await getDrawing(id, paletteOffset);
      focus = res.record;
      showColored(res.record, res.colored);
      status.textContent = "";
      errorBox.hidden = true;
      void loadNeighbors(id);
    } catch (err) {
      showError(err);
    }
  }

  function refreshStats(): void {
    getStats().then(
      (s) => {
        statsBox.textContent = `${s.count} drawing${s.count === 1 ? "" : "s"} · mean length ${s.mean_length.toFixed(3)}`;
      },
      () => {
        statsBox.textContent = "";
      },
    );
  }

  // Neighbors & morph ---------------------------------------------------------

  async function loadNeighbors(ownId: string): Promise<void> {
    neighborList.replaceChildren();
    neighborNote.textContent = "";
    let neighbors: Neighbor[];
    try {
      neighbors = (await getNearest(ownId, NEIGHBOR_K)).neighbors;
    } catch (err) {
      neighborNote.textContent =
        err instanceof ApiError ? `${err.code}: ${err.detail}` : String(err);
      return;
    }
    for (const n of neighbors) {
      const id = n.record.id;
      if (!id || id === ownId) continue; // every drawing is its own nearest
      const li = document.createElement("li");
      const btn = document.createElement("button");
      btn.className = "neighbor";
      const img = document.createElement("img");
      img.src = thumbnailUrl(id, NEIGHBOR_THUMB);
      img.alt = id;
      const label = document.createElement("span");
      label.textContent = `d = ${n.distance.toFixed(4)}`;
      btn.append(img, label);
      btn.addEventListener("click", () => void startMorph(ownId, id));
      li.append(btn);
      neighborList.append(li);
    }
    if (neighborList.childElementCount === 0) {
      neighborNote.textContent = "no neighbors yet";
    }
  }

  async function startMorph(aId: string, bId: string): Promise<void> {
    morphView.replaceChildren();
    morphMeta.textContent = "loading morph…";
    slider.disabled = true;
    morphFrames = [];
    try {
      const exported = await getMorph(aId, bId, MORPH_FRAMES);
      const canvas = focus?.canvas ?? { w: 1, h: 1 };
      // frames prepared one by one, in order, before the slider goes live
      morphFrames = exported.frames.map((f) => ({
        t: f.t,
        error: f.error ?? null,
        svg: f.colored ? coloredSvg(f.colored, f.curve, canvas, MORPH_SIZE) : null,
      }));
      morphDistance = exported.distance;
      slider.disabled = false;
      slider.value = "0";
      showFrame(0);
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        morphMeta.textContent = "drawing no longer available";
      } else if (err instanceof ApiError) {
        morphMeta.textContent = `${err.code}: ${err.detail}`;
      } else {
        morphMeta.textContent = String(err);
      }
    }
  }

  function showFrame(index: number): void {
    const frame = morphFrames[index];
    if (!frame) return;
    if (frame.svg) {
      morphView.replaceChildren(frame.svg);
    } else {
      const note = document.createElement("p");
      note.className = "frame-error";
      note.textContent = frame.error ?? "frame unavailable";
      morphView.replaceChildren(note);
    }
    morphMeta.textContent = `t = ${frame.t.toFixed(3)} · δ = ${morphDistance.toFixed(4)}`;
  }

  slider.addEventListener("input", () => {
    if (morphFrames.length === 0) return;
    const t = Number(slider.value); // the slider hands back t in [0, 1]
    showFrame(Math.round(t * (morphFrames.length - 1)));
  });

  // Boot ----------------------------------------------------------------------

  void loadMoreThumbs();
  refreshStats();
}
