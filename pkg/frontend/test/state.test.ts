import { describe, expect, it } from "vitest";

import {
  applyBrush,
  bucketDateRange,
  bucketSpanToRange,
  buildViewUrl,
  defaultState,
  intersectRange,
  parseState,
  pruneHidden,
  serializeState,
  toggleVenue,
  type TimeRange,
  type UiState,
} from "../src/state.js";

const BOUNDS: TimeRange = { from: "2019-03-01", to: "2021-02-20" };

function fullRangeState(): UiState {
  return defaultState(BOUNDS);
}

describe("applyBrush", () => {
  it("emits exactly three refetches carrying the brushed range", () => {
    const { state, refetches } = applyBrush(fullRangeState(), { from: "2019-03-01", to: "2019-12-31" }, BOUNDS);
    expect(state.range).toEqual({ from: "2019-03-01", to: "2019-12-31" });
    expect(refetches.map((r) => r.view)).toEqual(["coauthors", "venues", "words"]);
    expect(refetches.map((r) => r.url)).toEqual([
      "/api/coauthors?from=2019-03-01&to=2019-12-31&n=20",
      "/api/venues?from=2019-03-01&to=2019-12-31&n=5",
      "/api/words?from=2019-03-01&to=2019-12-31&k=10&granularity=year&mode=cumulative",
    ]);
  });

  it("carries current n/k parameters, not defaults", () => {
    const custom = { ...fullRangeState(), nAuthors: 7, nVenues: 2, kWords: 4, raceMode: "per_bucket" as const };
    const { refetches } = applyBrush(custom, { from: "2020-01-01", to: "2020-12-31" }, BOUNDS);
    expect(refetches[0].url).toContain("n=7");
    expect(refetches[1].url).toContain("n=2");
    expect(refetches[2].url).toContain("k=4");
    expect(refetches[2].url).toContain("mode=per_bucket");
  });

  it("clamps the selection to corpus bounds", () => {
    const { state } = applyBrush(fullRangeState(), { from: "2018-01-01", to: "2019-12-31" }, BOUNDS);
    expect(state.range).toEqual({ from: "2019-03-01", to: "2019-12-31" });
  });

  it("is a no-op when the brush equals the current range", () => {
    const start = fullRangeState();
    const { state, refetches } = applyBrush(start, { ...BOUNDS }, BOUNDS);
    expect(refetches).toEqual([]);
    expect(state).toBe(start);
  });

  it("is a no-op when the brush misses the corpus entirely", () => {
    const start = fullRangeState();
    const { state, refetches } = applyBrush(start, { from: "1980-01-01", to: "1981-01-01" }, BOUNDS);
    expect(refetches).toEqual([]);
    expect(state).toBe(start);
  });

  it("builds byte-identical URLs for the same gesture across sessions", () => {
    const a = applyBrush(fullRangeState(), { from: "2019-03-01", to: "2019-12-31" }, BOUNDS);
    const b = applyBrush(defaultState({ ...BOUNDS }), { from: "2019-03-01", to: "2019-12-31" }, BOUNDS);
    expect(a.refetches).toEqual(b.refetches);
  });
});

describe("toggleVenue", () => {
  const displayed = ["V1", "V2", "V3"];

  it("is an involution", () => {
    const start = fullRangeState();
    const once = toggleVenue(start, "V1", displayed);
    expect(once.hiddenVenues).toEqual(["V1"]);
    const twice = toggleVenue(once, "V1", displayed);
    expect(twice.hiddenVenues).toEqual(start.hiddenVenues);
  });

  it("ignores unknown venues", () => {
    const start = fullRangeState();
    expect(toggleVenue(start, "ZZZ", displayed)).toBe(start);
  });

  it("only touches visibility state, never fetched parameters", () => {
    const start = fullRangeState();
    const hidden = toggleVenue(start, "V2", displayed);
    expect({ ...hidden, hiddenVenues: [] }).toEqual({ ...start, hiddenVenues: [] });
  });

  it("prunes hidden venues no longer displayed", () => {
    const start = toggleVenue(toggleVenue(fullRangeState(), "V1", displayed), "V3", displayed);
    const pruned = pruneHidden(start, ["V1", "V9"]);
    expect(pruned.hiddenVenues).toEqual(["V1"]);
  });
});

describe("URL fragment round trip", () => {
  it("restores the identical state", () => {
    let state = fullRangeState();
    state = { ...state, range: { from: "2019-06-01", to: "2020-06-30" }, granularity: "month" };
    state = { ...state, nAuthors: 12, nVenues: 3, kWords: 7, raceMode: "per_bucket", racePlaying: true };
    state = toggleVenue(state, "V2", ["V1", "V2"]);
    const restored = parseState(`#${serializeState(state)}`, BOUNDS);
    expect(restored).toEqual(state);
  });

  it("falls back to defaults for junk fragments", () => {
    const restored = parseState("#from=banana&na=-5&mode=diagonal", BOUNDS);
    expect(restored).toEqual(fullRangeState());
  });

  it("clamps a persisted range that exceeds new corpus bounds", () => {
    const restored = parseState("#from=2010-01-01&to=2030-01-01", BOUNDS);
    expect(restored.range).toEqual(BOUNDS);
  });
});

describe("range and bucket helpers", () => {
  it("intersects inclusively", () => {
    expect(intersectRange({ from: "2019-01-01", to: "2019-12-31" }, { from: "2019-12-31", to: "2020-06-01" }))
      .toEqual({ from: "2019-12-31", to: "2019-12-31" });
    expect(intersectRange({ from: "2019-01-01", to: "2019-06-01" }, { from: "2019-06-02", to: "2020-01-01" }))
      .toBeNull();
  });

  it("maps year buckets to full-year ranges", () => {
    expect(bucketDateRange("2019")).toEqual({ from: "2019-01-01", to: "2019-12-31" });
  });

  it("maps month buckets to exact month ends", () => {
    expect(bucketDateRange("2020-02")).toEqual({ from: "2020-02-01", to: "2020-02-29" });
    expect(bucketDateRange("2021-02")).toEqual({ from: "2021-02-01", to: "2021-02-28" });
    expect(bucketDateRange("2019-12")).toEqual({ from: "2019-12-01", to: "2019-12-31" });
  });

  it("converts a bucket index span into an inclusive date range", () => {
    const buckets = ["2019", "2020", "2021"];
    expect(bucketSpanToRange(buckets, 0, 0)).toEqual({ from: "2019-01-01", to: "2019-12-31" });
    expect(bucketSpanToRange(buckets, 2, 0)).toEqual({ from: "2019-01-01", to: "2021-12-31" });
  });

  it("themeriver url uses the corpus-wide span set by the caller", () => {
    const state = fullRangeState();
    expect(buildViewUrl("themeriver", state)).toBe(
      "/api/themeriver?from=2019-03-01&to=2021-02-20&granularity=year",
    );
  });
});
