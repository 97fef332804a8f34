// Dashboard state and the brush interaction loop. All functions here are
// pure so the coordination contract is unit-testable without a DOM.

export interface TimeRange {
  from: string; // inclusive ISO date YYYY-MM-DD
  to: string;
}

export type Granularity = "year" | "month";
export type RaceMode = "cumulative" | "per_bucket";

export interface UiState {
  range: TimeRange;
  granularity: Granularity;
  nAuthors: number;
  nVenues: number;
  kWords: number;
  raceMode: RaceMode;
  hiddenVenues: string[]; // kept sorted; subset of currently displayed venues
  racePlaying: boolean;
}

export const DEFAULT_N_AUTHORS = 20;
export const DEFAULT_N_VENUES = 5;
export const DEFAULT_K_WORDS = 10;

export function defaultState(bounds: TimeRange): UiState {
  return {
    range: { ...bounds },
    granularity: "year",
    nAuthors: DEFAULT_N_AUTHORS,
    nVenues: DEFAULT_N_VENUES,
    kWords: DEFAULT_K_WORDS,
    raceMode: "cumulative",
    hiddenVenues: [],
    racePlaying: false,
  };
}

// ISO date strings compare correctly as strings.
export function intersectRange(a: TimeRange, b: TimeRange): TimeRange | null {
  const from = a.from > b.from ? a.from : b.from;
  const to = a.to < b.to ? a.to : b.to;
  return from <= to ? { from, to } : null;
}

export function sameRange(a: TimeRange, b: TimeRange): boolean {
  return a.from === b.from && a.to === b.to;
}

export type RefetchView = "coauthors" | "venues" | "words";

export interface Refetch {
  view: RefetchView;
  url: string;
}

// Fixed parameter order so identical gestures yield byte-identical URLs.
export function buildViewUrl(view: RefetchView | "themeriver", state: UiState): string {
  const { from, to } = state.range;
  switch (view) {
    case "themeriver":
      return `/api/themeriver?from=${from}&to=${to}&granularity=${state.granularity}`;
    case "coauthors":
      return `/api/coauthors?from=${from}&to=${to}&n=${state.nAuthors}`;
    case "venues":
      return `/api/venues?from=${from}&to=${to}&n=${state.nVenues}`;
    case "words":
      return `/api/words?from=${from}&to=${to}&k=${state.kWords}&granularity=${state.granularity}&mode=${state.raceMode}`;
  }
}

export interface BrushResult {
  state: UiState;
  refetches: Refetch[];
}

// Brushing the theme river drives every other view: the selection is
// clamped to the corpus bounds and exactly three refetches go out. The
// river itself never refetches (its data spans the whole corpus).
export function applyBrush(state: UiState, selected: TimeRange, bounds: TimeRange): BrushResult {
  const clamped = intersectRange(selected, bounds);
  if (clamped === null || sameRange(clamped, state.range)) {
    return { state, refetches: [] };
  }
  const next: UiState = { ...state, range: clamped };
  const refetches: Refetch[] = (["coauthors", "venues", "words"] as RefetchView[]).map((view) => ({
    view,
    url: buildViewUrl(view, next),
  }));
  return { state: next, refetches };
}

// Hiding a venue is display-only: the fetched data and the other bars'
// heights stay untouched. Toggling twice restores the original state.
export function toggleVenue(state: UiState, venue: string, displayed: string[]): UiState {
  if (!displayed.includes(venue)) {
    return state;
  }
  const hidden = new Set(state.hiddenVenues);
  if (hidden.has(venue)) {
    hidden.delete(venue);
  } else {
    hidden.add(venue);
  }
  return { ...state, hiddenVenues: [...hidden].sort() };
}

// Drop hidden venues that are no longer displayed (after a refetch changed
// the venue set), preserving the subset invariant.
export function pruneHidden(state: UiState, displayed: string[]): UiState {
  const kept = state.hiddenVenues.filter((v) => displayed.includes(v));
  return kept.length === state.hiddenVenues.length ? state : { ...state, hiddenVenues: kept };
}

const FRAGMENT_KEYS = ["from", "to", "granularity", "na", "nv", "kw", "mode", "hidden", "playing"] as const;

// URL-fragment round trip: reloading the page reproduces the identical view.
export function serializeState(state: UiState): string {
  const params = new URLSearchParams();
  params.set("from", state.range.from);
  params.set("to", state.range.to);
  params.set("granularity", state.granularity);
  params.set("na", String(state.nAuthors));
  params.set("nv", String(state.nVenues));
  params.set("kw", String(state.kWords));
  params.set("mode", state.raceMode);
  params.set("hidden", state.hiddenVenues.join(","));
  params.set("playing", state.racePlaying ? "1" : "0");
  return params.toString();
}

export function parseState(fragment: string, bounds: TimeRange): UiState {
  const state = defaultState(bounds);
  const params = new URLSearchParams(fragment.replace(/^#/, ""));
  for (const key of FRAGMENT_KEYS) {
    const value = params.get(key);
    if (value === null) continue;
    switch (key) {
      case "from":
        if (isIsoDate(value)) state.range = { ...state.range, from: value };
        break;
      case "to":
        if (isIsoDate(value)) state.range = { ...state.range, to: value };
        break;
      case "granularity":
        if (value === "year" || value === "month") state.granularity = value;
        break;
      case "na":
        state.nAuthors = parseCount(value, DEFAULT_N_AUTHORS);
        break;
      case "nv":
        state.nVenues = parseCount(value, DEFAULT_N_VENUES);
        break;
      case "kw":
        state.kWords = parseCount(value, DEFAULT_K_WORDS);
        break;
      case "mode":
        if (value === "cumulative" || value === "per_bucket") state.raceMode = value;
        break;
      case "hidden":
        state.hiddenVenues = value === "" ? [] : value.split(",").sort();
        break;
      case "playing":
        state.racePlaying = value === "1";
        break;
    }
  }
  const clamped = intersectRange(state.range, bounds);
  state.range = clamped ?? { ...bounds };
  return state;
}

function isIsoDate(value: string): boolean {
  return /^\d{4}-\d{2}-\d{2}$/.test(value);
}

function parseCount(value: string, fallback: number): number {
  const n = Number.parseInt(value, 10);
  return Number.isFinite(n) && n >= 1 ? n : fallback;
}

// Inclusive date range covered by one time bucket ("2019" or "2019-03").
export function bucketDateRange(bucket: string): TimeRange {
  if (bucket.length === 4) {
    return { from: `${bucket}-01-01`, to: `${bucket}-12-31` };
  }
  const year = Number(bucket.slice(0, 4));
  const month = Number(bucket.slice(5, 7));
  const lastDay = new Date(Date.UTC(year, month, 0)).getUTCDate();
  return { from: `${bucket}-01`, to: `${bucket}-${String(lastDay).padStart(2, "0")}` };
}

// Brush selection over bucket indices -> inclusive date range.
export function bucketSpanToRange(buckets: string[], firstIndex: number, lastIndex: number): TimeRange {
  const lo = Math.max(0, Math.min(firstIndex, lastIndex));
  const hi = Math.min(buckets.length - 1, Math.max(firstIndex, lastIndex));
  return { from: bucketDateRange(buckets[lo]).from, to: bucketDateRange(buckets[hi]).to };
}
