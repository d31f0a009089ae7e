// Typed client for the drawing service. Everything the page shows —
// windings, colors, distances, morph frames — originates here as a
// service response; the client adds nothing but URLs and JSON parsing.

export interface CanvasSize {
  w: number;
  h: number;
}

export interface DrawingSummary {
  endpoints: number[][];
  bbox: number[];
  winding_hist: Record<string, number>;
  length: number;
}

export interface DrawingRecord {
  id?: string;
  canvas: CanvasSize;
  points: number[][];
  created_at?: string;
  summary?: DrawingSummary;
}

export interface ColoredFace {
  winding: number;
  color: string;
  rings: number[][][];
}

export interface ColoredDrawing {
  background: string;
  faces: ColoredFace[];
}

export interface DrawingResponse {
  record: DrawingRecord;
  colored: ColoredDrawing;
}

export interface DrawingPage {
  total: number;
  offset: number;
  records: DrawingRecord[];
}

export interface MorphFrame {
  t: number;
  curve: number[][];
  colored?: ColoredDrawing;
  error?: string;
}

export interface MorphExport {
  distance: number;
  frames: MorphFrame[];
}

export interface Neighbor {
  record: DrawingRecord;
  distance: number;
}

export interface Stats {
  count: number;
  max_winding_hist: Record<string, number>;
  mean_length: number;
}

/** A non-2xx response, carrying the service's error code verbatim. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ApiError";
  }
}

let base = "http://127.0.0.1:8000";

export function setApiBase(url: string): void {
  base = url.replace(/\/+$/, "");
}

export function apiBase(): string {
  return base;
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(base + path, init);
  if (!res.ok) {
    let code = `HTTP${res.status}`;
    let detail = res.statusText;
    try {
      const body: unknown = await res.json();
      if (body && typeof body === "object") {
        const obj = body as { error?: unknown; detail?: unknown };
        if (typeof obj.error === "string") code = obj.error;
        if (obj.detail !== undefined) detail = String(obj.detail);
      }
    } catch {
      // non-JSON error body; the status code is all we have
    }
    throw new ApiError(res.status, code, detail);
  }
  return res.json() as Promise<T>;
}

export function submitDrawing(drawing: {
  canvas: CanvasSize;
  points: number[][];
}): Promise<DrawingResponse> {
  return request("/drawings", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(drawing),
  });
}

export function getDrawing(id: string, offset = 0): Promise<DrawingResponse> {
  return request(`/drawings/${encodeURIComponent(id)}?offset=${offset}`);
}

export function listDrawings(offset = 0, limit = 50): Promise<DrawingPage> {
  return request(`/drawings?offset=${offset}&limit=${limit}`);
}

/** URL of the pre-rendered vector thumbnail for a stored drawing. */
export function thumbnailUrl(id: string, size = 160, offset = 0): string {
  return `${base}/drawings/${encodeURIComponent(id)}/svg?offset=${offset}&size=${size}`;
}

export function getMorph(a: string, b: string, frames = 24): Promise<MorphExport> {
  return request(
    `/morph?a=${encodeURIComponent(a)}&b=${encodeURIComponent(b)}&frames=${frames}`,
  );
}

export function getNearest(id: string, k = 6): Promise<{ neighbors: Neighbor[] }> {
  return request(`/nearest?id=${encodeURIComponent(id)}&k=${k}`);
}

export function getStats(): Promise<Stats> {
  return request("/stats");
}
