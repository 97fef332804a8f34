// Dashboard boot and coordination: the theme river holds the full corpus
// span; brushing it updates the global range and refetches the three
// dependent views. State lives in the URL fragment.

import type { CorpusStats, Envelope, GraphData, RiverData, VenuesData, WordsData } from "./types.js";
import {
  applyBrush,
  buildViewUrl,
  defaultState,
  parseState,
  pruneHidden,
  serializeState,
  toggleVenue,
  type TimeRange,
  type UiState,
} from "./state.js";
import { LatestOnly, fetchLatest, httpJson } from "./fetchguard.js";
import { renderRiver } from "./views/river.js";
import { renderNetwork } from "./views/network.js";
import { renderVenues } from "./views/venues.js";
import { DEFAULT_FRAME_MS, RacePlayer, renderRaceFrame } from "./views/race.js";

const guards = {
  coauthors: new LatestOnly(),
  venues: new LatestOnly(),
  words: new LatestOnly(),
};

let state: UiState;
let bounds: TimeRange;
let racePlayer: RacePlayer | null = null;
let displayedVenues: string[] = [];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function pushStateToUrl(): void {
  history.replaceState(null, "", `#${serializeState(state)}`);
}

async function refetchCoauthors(): Promise<void> {
  const body = await fetchLatest<Envelope<GraphData>>(guards.coauthors, buildViewUrl("coauthors", state));
  if (body !== null) {
    renderNetwork(el("network"), body.data);
    el("network-meta").textContent = `${body.paper_count} papers, top ${state.nAuthors} authors`;
  }
}

async function refetchVenues(): Promise<void> {
  const body = await fetchLatest<Envelope<VenuesData>>(guards.venues, buildViewUrl("venues", state));
  if (body === null) return;
  displayedVenues = body.data.venues.map((v) => v.venue);
  state = pruneHidden(state, displayedVenues);
  const draw = (): void => {
    renderVenues(el("venues"), body.data, state.hiddenVenues, {
      onToggleVenue: (venue) => {
        state = toggleVenue(state, venue, displayedVenues);
        pushStateToUrl();
        draw();
      },
    });
  };
  draw();
  el("venues-meta").textContent = `${body.paper_count} papers, top ${state.nVenues} venues by citations`;
}

async function refetchWords(): Promise<void> {
  const body = await fetchLatest<Envelope<WordsData>>(guards.words, buildViewUrl("words", state));
  if (body === null) return;
  racePlayer?.pause();
  racePlayer = new RacePlayer(
    body.data.frames,
    (frame, index) => {
      renderRaceFrame(el("race"), frame);
      el("race-position").textContent = body.data.frames.length
        ? `${index + 1}/${body.data.frames.length}`
        : "0/0";
    },
    Number((el<HTMLInputElement>("race-speed")).value) || DEFAULT_FRAME_MS,
  );
  racePlayer.seek(0);
  if (state.racePlaying) racePlayer.play();
  el("words-meta").textContent = `${body.paper_count} papers, top ${state.kWords} words (${state.raceMode})`;
}

function refetchAll(): void {
  void refetchCoauthors();
  void refetchVenues();
  void refetchWords();
}

async function drawRiver(): Promise<void> {
  const url = `/api/themeriver?from=${bounds.from}&to=${bounds.to}&granularity=${state.granularity}`;
  const body = (await httpJson(url)) as Envelope<RiverData>;
  renderRiver(el("river"), body.data, {
    onBrush: (selected) => {
      const result = applyBrush(state, selected, bounds);
      if (result.refetches.length === 0) return;
      state = result.state;
      pushStateToUrl();
      syncControls();
      refetchAll();
    },
  });
  el("river-meta").textContent = `${body.paper_count} papers, ${body.data.order.length} fields — drag to select a time slot`;
}

function syncControls(): void {
  el<HTMLInputElement>("n-authors").value = String(state.nAuthors);
  el<HTMLInputElement>("n-venues").value = String(state.nVenues);
  el<HTMLInputElement>("k-words").value = String(state.kWords);
  el<HTMLSelectElement>("granularity").value = state.granularity;
  el<HTMLSelectElement>("race-mode").value = state.raceMode;
  el("range-label").textContent = `${state.range.from} … ${state.range.to}`;
  el("race-toggle").textContent = state.racePlaying ? "pause" : "play";
}

function wireControls(): void {
  el<HTMLInputElement>("n-authors").addEventListener("change", (e) => {
    const n = Math.max(1, Number((e.target as HTMLInputElement).value) || state.nAuthors);
    state = { ...state, nAuthors: n };
    pushStateToUrl();
    void refetchCoauthors();
  });
  el<HTMLInputElement>("n-venues").addEventListener("change", (e) => {
    const n = Math.max(1, Number((e.target as HTMLInputElement).value) || state.nVenues);
    state = { ...state, nVenues: n };
    pushStateToUrl();
    void refetchVenues();
  });
  el<HTMLInputElement>("k-words").addEventListener("change", (e) => {
    const k = Math.max(1, Number((e.target as HTMLInputElement).value) || state.kWords);
    state = { ...state, kWords: k };
    pushStateToUrl();
    void refetchWords();
  });
  el<HTMLSelectElement>("granularity").addEventListener("change", (e) => {
    state = { ...state, granularity: (e.target as HTMLSelectElement).value as UiState["granularity"] };
    pushStateToUrl();
    void drawRiver();
    void refetchWords();
  });
  el<HTMLSelectElement>("race-mode").addEventListener("change", (e) => {
    state = { ...state, raceMode: (e.target as HTMLSelectElement).value as UiState["raceMode"] };
    pushStateToUrl();
    void refetchWords();
  });
  el("race-toggle").addEventListener("click", () => {
    state = { ...state, racePlaying: !state.racePlaying };
    pushStateToUrl();
    syncControls();
    if (racePlayer) {
      state.racePlaying ? racePlayer.play() : racePlayer.pause();
    }
  });
  el<HTMLInputElement>("race-speed").addEventListener("change", (e) => {
    const ms = Math.max(100, Number((e.target as HTMLInputElement).value) || DEFAULT_FRAME_MS);
    if (racePlayer) {
      const wasPlaying = racePlayer.playing;
      racePlayer.pause();
      racePlayer.frameMs = ms;
      if (wasPlaying) racePlayer.play();
    }
  });
  el("reset-range").addEventListener("click", () => {
    const result = applyBrush(state, { ...bounds }, bounds);
    if (result.refetches.length === 0) return;
    state = result.state;
    pushStateToUrl();
    syncControls();
    refetchAll();
  });
}

async function boot(): Promise<void> {
  const stats = (await httpJson("/api/corpus/stats")) as CorpusStats;
  if (stats.date_min === null || stats.date_max === null) {
    bounds = { from: "0001-01-01", to: "9999-12-31" };
    state = defaultState(bounds);
    el("river-meta").textContent = "corpus is empty";
  } else {
    bounds = { from: stats.date_min, to: stats.date_max };
    state = parseState(location.hash, bounds);
  }
  el("corpus-meta").textContent =
    `${stats.paper_count} papers · ${stats.author_count} authors · ` +
    `${stats.venue_count} venues · ${stats.field_count} fields`;
  syncControls();
  wireControls();
  await drawRiver();
  refetchAll();
}

void boot();
