"""HTTP service: four analytics views over one immutable corpus.

The corpus is loaded once at startup and shared read-only across requests;
identical requests are served byte-identically from an LRU cache keyed on
the canonical request plus the corpus content fingerprint.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..corpus import Corpus, load_corpus
from ..words import StopwordSet
from .cache import ViewCache
from .config import ServiceConfig
from .schemas import CorpusStats, Envelope, ErrorEnvelope
from .views import ParamError, ViewRequest, canonical_json, compute_view, envelope_bytes

STATIC_DIR_ENV_VAR = "RTV_STATIC_DIR"


def create_app(
    config: ServiceConfig | None = None,
    *,
    corpus: Corpus | None = None,
    stopwords: StopwordSet | None = None,
    cache_capacity: int = 256,
    static_dir: str | None = None,
) -> FastAPI:
    """Build the service app from a config file or from in-memory objects."""
    if config is not None:
        corpus = load_corpus(config.corpus_path, config.corpus_format)
        stopwords = (
            StopwordSet.from_file(config.stopwords_path) if config.stopwords_path else StopwordSet.default()
        )
        cache_capacity = config.cache_capacity
    elif stopwords is None:
        stopwords = StopwordSet.default()

    app = FastAPI(title="rtv", version="0.1.0", docs_url="/api/docs", openapi_url="/api/openapi.json")
    app.state.corpus = corpus
    app.state.stopwords = stopwords
    app.state.cache = ViewCache(cache_capacity)
    app.state.fingerprint = corpus.fingerprint() if corpus is not None else ""

    @app.exception_handler(ParamError)
    async def param_error_handler(request: Request, exc: ParamError):
        body = ErrorEnvelope.model_validate({"error": {"code": exc.code, "message": exc.message}})
        return JSONResponse(status_code=400, content=body.model_dump())

    def serve_view(view: str, **raw_params) -> Response:
        if app.state.corpus is None:
            body = ErrorEnvelope.model_validate(
                {"error": {"code": "corpus_not_loaded", "message": "corpus is not loaded yet"}}
            )
            return JSONResponse(status_code=503, content=body.model_dump())
        req = ViewRequest.resolve(view, app.state.corpus, **raw_params)
        key = req.cache_key(app.state.fingerprint)
        before_hits = app.state.cache.stats.hits
        body = app.state.cache.get_or_compute(
            key, lambda: envelope_bytes(compute_view(app.state.corpus, app.state.stopwords, req))
        )
        hit = app.state.cache.stats.hits > before_hits
        return Response(
            content=body,
            media_type="application/json",
            headers={"X-Cache": "hit" if hit else "miss"},
        )

    @app.get("/api/themeriver", response_model=Envelope)
    def themeriver(request: Request):
        p = request.query_params
        return serve_view(
            "themeriver", from_=p.get("from"), to=p.get("to"), granularity=p.get("granularity")
        )

    @app.get("/api/coauthors", response_model=Envelope)
    def coauthors(request: Request):
        p = request.query_params
        return serve_view("coauthors", from_=p.get("from"), to=p.get("to"), n=p.get("n"))

    @app.get("/api/venues", response_model=Envelope)
    def venues(request: Request):
        p = request.query_params
        return serve_view("venues", from_=p.get("from"), to=p.get("to"), n=p.get("n"))

    @app.get("/api/words", response_model=Envelope)
    def words(request: Request):
        p = request.query_params
        return serve_view(
            "words",
            from_=p.get("from"),
            to=p.get("to"),
            n=p.get("k"),
            granularity=p.get("granularity"),
            mode=p.get("mode"),
        )

    @app.get("/api/corpus/stats", response_model=CorpusStats)
    def corpus_stats():
        if app.state.corpus is None:
            body = ErrorEnvelope.model_validate(
                {"error": {"code": "corpus_not_loaded", "message": "corpus is not loaded yet"}}
            )
            return JSONResponse(status_code=503, content=body.model_dump())
        c: Corpus = app.state.corpus
        stats = CorpusStats(
            paper_count=len(c.records),
            date_min=c.date_min,
            date_max=c.date_max,
            venue_count=len({r.venue for r in c.records}),
            field_count=len({f for r in c.records for f in r.fields_of_study}),
            author_count=len({a for r in c.records for a in r.authors}),
        )
        return Response(content=canonical_json(stats.model_dump(mode="json")), media_type="application/json")

    @app.get("/healthz")
    def healthz():
        if app.state.corpus is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        return {"status": "ok"}

    ui_dir = _find_static_dir(static_dir)
    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index():
            return {
                "service": "rtv",
                "views": ["/api/themeriver", "/api/coauthors", "/api/venues", "/api/words"],
                "note": "UI bundle not built; API endpoints are fully functional",
            }

    return app


def _find_static_dir(explicit: str | None) -> Path | None:
    candidates = [explicit, os.environ.get(STATIC_DIR_ENV_VAR), "frontend/dist"]
    for cand in candidates:
        if cand and Path(cand).is_dir():
            return Path(cand)
    return None
