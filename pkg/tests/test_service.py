import json
from datetime import date

import pytest
from fastapi.testclient import TestClient

from rtv.corpus import Corpus
from rtv.service.app import create_app
from rtv.service.views import ViewRequest, canonical_json, compute_view, envelope_bytes
from rtv.words import StopwordSet

from conftest import make_record


@pytest.fixture(scope="module")
def client(fixture_corpus):
    return TestClient(create_app(corpus=fixture_corpus))


class TestViewEndpoints:
    def test_venues_top2(self, client):
        r = client.get("/api/venues", params={"n": 2})
        assert r.status_code == 200
        body = r.json()
        assert body["paper_count"] == 5
        assert [(v["venue"], v["total_citations"]) for v in body["data"]["venues"]] == [("V1", 15), ("V2", 10)]
        v1_boxes = body["data"]["venues"][0]["boxes"]
        assert [(b["title"], b["citations"]) for b in v1_boxes] == [("Alpha", 10), ("Beta", 5)]

    def test_coauthors_2019_slice(self, client):
        r = client.get("/api/coauthors", params={"from": "2019-01-01", "to": "2019-12-31", "n": 10})
        assert r.status_code == 200
        edges = r.json()["data"]["edges"]
        assert [(e["source"], e["target"], e["weight"]) for e in edges] == [("A", "B", 1), ("A", "C", 1)]
        assert r.json()["paper_count"] == 2

    def test_themeriver_fixture(self, client):
        r = client.get("/api/themeriver")
        data = r.json()["data"]
        assert data["buckets"] == ["2019", "2020", "2021"]
        assert data["baseline"] == [-1.5, -1.0, -0.5]
        assert data["counts"] == {"CS": [2, 1, 0], "Med": [1, 1, 0], "Psy": [0, 0, 1]}

    def test_words_k3_final_frame(self, client):
        r = client.get("/api/words", params={"k": 3})
        frames = r.json()["data"]["frames"]
        assert frames[-1]["bucket"] == "2021"
        assert [(e["word"], e["count"]) for e in frames[-1]["entries"]] == [
            ("model", 3),
            ("speech", 3),
            ("deep", 2),
        ]

    def test_defaults_echoed(self, client):
        r = client.get("/api/venues")
        assert r.json()["params_echo"] == {"from": "2019-03-01", "to": "2021-02-20", "n": 5}
        r = client.get("/api/words")
        assert r.json()["params_echo"] == {
            "from": "2019-03-01",
            "to": "2021-02-20",
            "granularity": "year",
            "k": 10,
            "mode": "cumulative",
        }

    def test_corpus_stats(self, client):
        r = client.get("/api/corpus/stats")
        assert r.json() == {
            "paper_count": 5,
            "date_min": "2019-03-01",
            "date_max": "2021-02-20",
            "venue_count": 3,
            "field_count": 3,
            "author_count": 4,
        }

    def test_healthz(self, client):
        assert client.get("/healthz").status_code == 200


class TestValidation:
    @pytest.mark.parametrize(
        "path,params,code",
        [
            ("/api/words", {"k": "0"}, "invalid_k"),
            ("/api/words", {"k": "x"}, "invalid_k"),
            ("/api/coauthors", {"n": "0"}, "invalid_n"),
            ("/api/venues", {"n": "-2"}, "invalid_n"),
            ("/api/venues", {"from": "2019-13-01"}, "invalid_date"),
            ("/api/venues", {"from": "2019"}, "invalid_date"),
            ("/api/venues", {"from": "2020-01-01", "to": "2019-01-01"}, "invalid_range"),
            ("/api/themeriver", {"granularity": "decade"}, "invalid_granularity"),
            ("/api/words", {"mode": "sideways"}, "invalid_mode"),
        ],
    )
    def test_bad_params_return_400_with_code(self, client, path, params, code):
        r = client.get(path, params=params)
        assert r.status_code == 400
        assert r.json()["error"]["code"] == code
        assert r.json()["error"]["message"]

    def test_corpus_not_loaded_returns_503(self):
        bare = TestClient(create_app(corpus=None))
        assert bare.get("/api/venues").status_code == 503
        assert bare.get("/api/venues").json()["error"]["code"] == "corpus_not_loaded"
        assert bare.get("/healthz").status_code == 503


class TestCaching:
    def test_repeat_request_is_byte_identical_hit(self, fixture_corpus):
        client = TestClient(create_app(corpus=fixture_corpus))
        first = client.get("/api/themeriver", params={"granularity": "month"})
        second = client.get("/api/themeriver", params={"granularity": "month"})
        assert first.headers["x-cache"] == "miss"
        assert second.headers["x-cache"] == "hit"
        assert first.content == second.content

    def test_cached_response_equals_direct_compute(self, fixture_corpus):
        client = TestClient(create_app(corpus=fixture_corpus))
        response = client.get("/api/venues", params={"n": 2})
        req = ViewRequest.resolve("venues", fixture_corpus, n="2")
        direct = envelope_bytes(compute_view(fixture_corpus, StopwordSet.default(), req))
        assert response.content == direct
        again = client.get("/api/venues", params={"n": 2})
        assert again.content == direct  # hit path, still the same bytes

    def test_distinct_params_get_distinct_entries(self, fixture_corpus):
        app = create_app(corpus=fixture_corpus)
        client = TestClient(app)
        client.get("/api/venues", params={"n": 1})
        client.get("/api/venues", params={"n": 2})
        assert app.state.cache.stats.misses == 2 and app.state.cache.stats.hits == 0


def degenerate_corpora():
    single = [make_record("Only", ["A"], "deep model", date(2020, 1, 1), 3, "V", ["F"])]
    same_date = [
        make_record(f"P{i}", ["A", "B"], "deep data", date(2020, 5, 5), i, "V", ["F"]) for i in range(3)
    ]
    solo_authors = [
        make_record(f"S{i}", [f"A{i}"], "model", date(2018 + i, 1, 1), 0, f"V{i}", []) for i in range(3)
    ]
    from rtv.corpus.model import assign_ids

    return {
        "empty": Corpus(records=()),
        "single_paper": Corpus(records=tuple(assign_ids(single))),
        "all_same_date": Corpus(records=tuple(assign_ids(same_date))),
        "all_single_author": Corpus(records=tuple(assign_ids(solo_authors))),
    }


class TestDegenerateInputs:
    @pytest.mark.parametrize("label", ["empty", "single_paper", "all_same_date", "all_single_author"])
    def test_all_views_valid(self, label):
        corpus = degenerate_corpora()[label]
        client = TestClient(create_app(corpus=corpus))
        for path in ("/api/themeriver", "/api/coauthors", "/api/venues", "/api/words", "/api/corpus/stats"):
            r = client.get(path)
            assert r.status_code == 200, (label, path, r.text)
            json.loads(r.content)  # well-formed body

    def test_empty_corpus_views_are_empty(self):
        client = TestClient(create_app(corpus=Corpus(records=())))
        assert client.get("/api/themeriver").json()["data"]["buckets"] == []
        assert client.get("/api/coauthors").json()["data"] == {"nodes": [], "edges": []}
        assert client.get("/api/venues").json()["data"]["venues"] == []
        assert client.get("/api/words").json()["data"]["frames"] == []
        stats = client.get("/api/corpus/stats").json()
        assert stats["paper_count"] == 0 and stats["date_min"] is None


class TestGoldenFiles:
    ENDPOINTS = {
        "themeriver": "/api/themeriver?from=2019-01-01&to=2021-12-31&granularity=year",
        "coauthors": "/api/coauthors?from=2019-01-01&to=2021-12-31&n=3",
        "venues": "/api/venues?from=2019-01-01&to=2021-12-31&n=2",
        "words": "/api/words?from=2019-01-01&to=2021-12-31&k=3&granularity=year&mode=cumulative",
        "corpus_stats": "/api/corpus/stats",
    }

    @pytest.mark.parametrize("name", sorted(ENDPOINTS))
    def test_response_matches_golden(self, client, name, request):
        golden_path = request.config.rootpath / "tests" / "golden" / f"{name}.json"
        r = client.get(self.ENDPOINTS[name])
        assert r.status_code == 200
        got = canonical_json(json.loads(r.content))
        expected = canonical_json(json.loads(golden_path.read_bytes()))
        assert got == expected, f"{name} drifted from golden file"
