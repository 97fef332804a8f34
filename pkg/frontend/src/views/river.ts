// Theme river: stacked bands around the server-provided baseline, with a
// horizontal brush that commits a time range on release.

import type { RiverData } from "../types.js";
import type { TimeRange } from "../state.js";
import { bucketSpanToRange } from "../state.js";
import { colorAt } from "./palette.js";

export interface RiverLayer {
  field: string;
  color: string;
  // SVG polygon points: upper edge left-to-right, lower edge right-to-left
  points: string;
}

export interface RiverGeometry {
  layers: RiverLayer[];
  xOf: (bucketIndex: number) => number;
  bucketAt: (x: number) => number;
  width: number;
  height: number;
}

// Pure pixel-space geometry derived from server bands; the client adds no
// smoothing and no re-stacking, only scaling.
export function riverGeometry(data: RiverData, width: number, height: number, pad = 12): RiverGeometry {
  const n = data.buckets.length;
  const xOf = (i: number) => (n <= 1 ? width / 2 : pad + (i * (width - 2 * pad)) / (n - 1));
  const bucketAt = (x: number) => {
    if (n <= 1) return 0;
    const t = (x - pad) / ((width - 2 * pad) / (n - 1));
    return Math.max(0, Math.min(n - 1, Math.round(t)));
  };

  let lo = 0;
  let hi = 0;
  for (const spans of Object.values(data.bands)) {
    for (const [lower, upper] of spans) {
      lo = Math.min(lo, lower);
      hi = Math.max(hi, upper);
    }
  }
  const span = hi - lo || 1;
  const yOf = (v: number) => pad + ((hi - v) * (height - 2 * pad)) / span;

  const layers = data.order.map((field, idx) => {
    const spans = data.bands[field];
    const upper = spans.map(([, u], i) => `${xOf(i)},${yOf(u)}`);
    const lower = spans.map(([l], i) => `${xOf(i)},${yOf(l)}`).reverse();
    return { field, color: colorAt(idx), points: [...upper, ...lower].join(" ") };
  });
  return { layers, xOf, bucketAt, width, height };
}

export interface RiverCallbacks {
  onBrush: (selected: TimeRange) => void;
}

export function renderRiver(
  host: HTMLElement,
  data: RiverData,
  callbacks: RiverCallbacks,
): void {
  host.innerHTML = "";
  const width = host.clientWidth || 560;
  const height = host.clientHeight || 260;
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.classList.add("river-svg");

  if (data.buckets.length === 0) {
    host.append(emptyNote("no papers in corpus"));
    return;
  }

  const geom = riverGeometry(data, width, height);
  for (const layer of geom.layers) {
    const poly = document.createElementNS("http://www.w3.org/2000/svg", "polygon");
    poly.setAttribute("points", layer.points);
    poly.setAttribute("fill", layer.color);
    poly.setAttribute("opacity", "0.85");
    const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
    title.textContent = layer.field;
    poly.append(title);
    svg.append(poly);
  }

  for (let i = 0; i < data.buckets.length; i++) {
    const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
    label.setAttribute("x", String(geom.xOf(i)));
    label.setAttribute("y", String(height - 2));
    label.setAttribute("class", "axis-label");
    label.setAttribute("text-anchor", "middle");
    label.textContent = data.buckets[i];
    svg.append(label);
  }

  // brush overlay: drag horizontally, commit on release
  const selection = document.createElementNS("http://www.w3.org/2000/svg", "rect");
  selection.setAttribute("class", "brush-selection");
  selection.setAttribute("y", "0");
  selection.setAttribute("height", String(height));
  selection.setAttribute("display", "none");
  svg.append(selection);

  const overlay = document.createElementNS("http://www.w3.org/2000/svg", "rect");
  overlay.setAttribute("class", "brush-overlay");
  overlay.setAttribute("x", "0");
  overlay.setAttribute("y", "0");
  overlay.setAttribute("width", String(width));
  overlay.setAttribute("height", String(height));
  overlay.setAttribute("fill", "transparent");
  svg.append(overlay);

  let anchor: number | null = null;
  const toLocalX = (event: PointerEvent) => {
    const rect = svg.getBoundingClientRect();
    return ((event.clientX - rect.left) / rect.width) * width;
  };
  overlay.addEventListener("pointerdown", (event) => {
    anchor = toLocalX(event);
    overlay.setPointerCapture(event.pointerId);
    selection.setAttribute("display", "");
  });
  overlay.addEventListener("pointermove", (event) => {
    if (anchor === null) return;
    const x = toLocalX(event);
    selection.setAttribute("x", String(Math.min(anchor, x)));
    selection.setAttribute("width", String(Math.abs(x - anchor)));
  });
  overlay.addEventListener("pointerup", (event) => {
    if (anchor === null) return;
    const x = toLocalX(event);
    const a = geom.bucketAt(anchor);
    const b = geom.bucketAt(x);
    anchor = null;
    selection.setAttribute("display", "none");
    callbacks.onBrush(bucketSpanToRange(data.buckets, a, b));
  });

  host.append(svg);
}

export function emptyNote(text: string): HTMLElement {
  const note = document.createElement("p");
  note.className = "empty-note";
  note.textContent = text;
  return note;
}
