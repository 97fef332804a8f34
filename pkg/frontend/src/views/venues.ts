// Venue citation stacks: one column per visible venue, boxes stacked with
// the most-cited paper on top. Hiding a venue via the legend never rescales
// the other bars; zooming magnifies the dense low-citation region.

import type { PaperBox, VenuesData } from "../types.js";
import { colorAt } from "./palette.js";
import { emptyNote } from "./river.js";

export interface BarModel {
  venue: string;
  total: number;
  boxes: PaperBox[];
  colorIndex: number; // index in the fetched venue order, stable under hiding
}

export function visibleBars(data: VenuesData, hiddenVenues: string[]): BarModel[] {
  const hidden = new Set(hiddenVenues);
  return data.venues
    .map((stack, i) => ({
      venue: stack.venue,
      total: stack.total_citations,
      boxes: stack.boxes,
      colorIndex: i,
    }))
    .filter((bar) => !hidden.has(bar.venue));
}

export interface WindowLike {
  open(url: string, target: string): unknown;
}

// Server-built link only; the client never reconstructs the URL. Boxes
// without a link get no click affordance.
export function openPaper(box: PaperBox, win: WindowLike = window): boolean {
  if (!box.link) {
    return false;
  }
  win.open(box.link, "_blank");
  return true;
}

export interface VenueCallbacks {
  onToggleVenue: (venue: string) => void;
}

interface ZoomState {
  max: number | null; // citation-axis upper bound; null = full scale
}

export function renderVenues(host: HTMLElement, data: VenuesData, hiddenVenues: string[], callbacks: VenueCallbacks): void {
  host.innerHTML = "";
  if (data.venues.length === 0) {
    host.append(emptyNote("no venues in range"));
    return;
  }

  const legend = document.createElement("div");
  legend.className = "legend";
  data.venues.forEach((stack, i) => {
    const item = document.createElement("button");
    item.type = "button";
    item.className = "legend-item" + (hiddenVenues.includes(stack.venue) ? " hidden-venue" : "");
    item.style.setProperty("--swatch", colorAt(i));
    item.textContent = `${stack.venue} (${stack.total_citations})`;
    item.addEventListener("click", () => callbacks.onToggleVenue(stack.venue));
    legend.append(item);
  });
  host.append(legend);

  const zoom: ZoomState = { max: null };
  const chart = document.createElement("div");
  chart.className = "venue-chart";
  host.append(chart);

  const draw = () => {
    chart.innerHTML = "";
    const bars = visibleBars(data, hiddenVenues);
    if (bars.length === 0) {
      chart.append(emptyNote("all venues hidden"));
      return;
    }
    const width = host.clientWidth || 560;
    const height = (host.clientHeight || 300) - legend.offsetHeight - 8;
    const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
    svg.setAttribute("viewBox", `0 0 ${width} ${Math.max(height, 120)}`);

    const fullMax = Math.max(1, ...data.venues.map((v) => v.total_citations));
    const scaleMax = zoom.max ?? fullMax;
    const pad = 20;
    const plotH = Math.max(height, 120) - 2 * pad;
    const slot = width / bars.length;
    const barW = Math.min(80, slot * 0.6);
    const yOf = (citations: number) => pad + plotH * (1 - Math.min(citations, scaleMax) / scaleMax);

    bars.forEach((bar, idx) => {
      const x = slot * idx + (slot - barW) / 2;
      // most-cited box on top: walk boxes in server order, stacking downward
      let cumulative = bar.total;
      for (const box of bar.boxes) {
        const topY = yOf(Math.min(cumulative, scaleMax));
        const bottomY = yOf(Math.min(cumulative - box.citations, scaleMax));
        const boxH = Math.max(bottomY - topY, 2); // zero-citation papers stay visible
        const rect = document.createElementNS("http://www.w3.org/2000/svg", "rect");
        rect.setAttribute("x", String(x));
        rect.setAttribute("y", String(topY));
        rect.setAttribute("width", String(barW));
        rect.setAttribute("height", String(boxH));
        rect.setAttribute("fill", colorAt(bar.colorIndex));
        rect.setAttribute("class", "paper-box" + (box.link ? "" : " no-link"));
        const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
        title.textContent = `${box.title}\nvenue: ${bar.venue}\nyear: ${box.year}\ncitations: ${box.citations}`;
        rect.append(title);
        if (box.link) {
          rect.addEventListener("click", (event) => {
            event.stopPropagation();
            openPaper(box);
          });
        }
        svg.append(rect);
        cumulative -= box.citations;
      }
      const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
      label.setAttribute("x", String(x + barW / 2));
      label.setAttribute("y", String(pad + plotH + 14));
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("class", "axis-label");
      label.textContent = bar.venue;
      svg.append(label);
    });

    // rectangular drag selects a citation sub-range to magnify
    let anchorY: number | null = null;
    const marquee = document.createElementNS("http://www.w3.org/2000/svg", "rect");
    marquee.setAttribute("class", "brush-selection");
    marquee.setAttribute("x", "0");
    marquee.setAttribute("width", String(width));
    marquee.setAttribute("display", "none");
    svg.append(marquee);
    const localY = (event: PointerEvent) => {
      const rect = svg.getBoundingClientRect();
      return ((event.clientY - rect.top) / rect.height) * Math.max(height, 120);
    };
    svg.addEventListener("pointerdown", (event) => {
      anchorY = localY(event);
      marquee.setAttribute("display", "");
    });
    svg.addEventListener("pointermove", (event) => {
      if (anchorY === null) return;
      const y = localY(event);
      marquee.setAttribute("y", String(Math.min(anchorY, y)));
      marquee.setAttribute("height", String(Math.abs(y - anchorY)));
    });
    svg.addEventListener("pointerup", (event) => {
      if (anchorY === null) return;
      const y = localY(event);
      const top = Math.min(anchorY, y);
      const span = Math.abs(y - anchorY);
      anchorY = null;
      marquee.setAttribute("display", "none");
      if (span < 8) return; // click, not a zoom gesture
      const clampedTop = Math.max(pad, Math.min(top, pad + plotH));
      zoom.max = Math.max(1, scaleMax * (1 - (clampedTop - pad) / plotH));
      draw();
    });
    svg.addEventListener("dblclick", () => {
      zoom.max = null;
      draw();
    });

    chart.append(svg);
  };
  draw();
}
