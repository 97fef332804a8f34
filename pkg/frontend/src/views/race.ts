// Word frequency race: animated horizontal bars, one frame per time
// bucket, bar length proportional to the server-reported count.

import type { RaceFrame, WordsData } from "../types.js";
import { colorAt } from "./palette.js";
import { nameHash } from "./network.js";
import { emptyNote } from "./river.js";

export interface RaceBar {
  word: string;
  count: number;
  frac: number; // count / frame max, for bar width
}

export function frameBars(frame: RaceFrame): RaceBar[] {
  const max = Math.max(1, ...frame.entries.map((e) => e.count));
  return frame.entries.map((e) => ({ word: e.word, count: e.count, frac: e.count / max }));
}

export const DEFAULT_FRAME_MS = 800;

type TimerHandle = ReturnType<typeof setInterval>;

export class RacePlayer {
  private frames: RaceFrame[];
  private index = 0;
  private timer: TimerHandle | null = null;
  private readonly onFrame: (frame: RaceFrame, index: number) => void;
  frameMs: number;

  constructor(frames: RaceFrame[], onFrame: (frame: RaceFrame, index: number) => void, frameMs = DEFAULT_FRAME_MS) {
    this.frames = frames;
    this.onFrame = onFrame;
    this.frameMs = frameMs;
  }

  get playing(): boolean {
    return this.timer !== null;
  }

  get frameIndex(): number {
    return this.index;
  }

  showCurrent(): void {
    if (this.frames.length > 0) {
      this.onFrame(this.frames[this.index], this.index);
    }
  }

  play(): void {
    if (this.timer !== null || this.frames.length === 0) return;
    this.timer = setInterval(() => {
      this.index = (this.index + 1) % this.frames.length;
      this.showCurrent();
    }, this.frameMs);
  }

  pause(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  seek(index: number): void {
    if (this.frames.length === 0) return;
    this.index = Math.max(0, Math.min(this.frames.length - 1, index));
    this.showCurrent();
  }
}

export function renderRaceFrame(host: HTMLElement, frame: RaceFrame): void {
  host.innerHTML = "";
  const heading = document.createElement("div");
  heading.className = "race-bucket";
  heading.textContent = frame.bucket;
  host.append(heading);
  if (frame.entries.length === 0) {
    host.append(emptyNote("no words in this bucket"));
    return;
  }
  for (const bar of frameBars(frame)) {
    const row = document.createElement("div");
    row.className = "race-row";
    const label = document.createElement("span");
    label.className = "race-word";
    label.textContent = bar.word;
    const track = document.createElement("div");
    track.className = "race-track";
    const fill = document.createElement("div");
    fill.className = "race-fill";
    fill.style.width = `${(bar.frac * 100).toFixed(1)}%`;
    fill.style.background = colorAt(nameHash(bar.word) % 10);
    fill.textContent = String(bar.count);
    track.append(fill);
    row.append(label, track);
    host.append(row);
  }
}

export function emptyRace(data: WordsData): boolean {
  return data.frames.length === 0;
}
