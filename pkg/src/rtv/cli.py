"""Command line entry points: validate a corpus file, serve the HTTP API,
or export one view's data to a file without serving.

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import load_corpus
from .service.config import ConfigError, load_config
from .service.views import ParamError, ViewRequest, canonical_json, compute_view
from .words import StopwordSet

VIEW_CHOICES = ("themeriver", "coauthors", "venues", "words")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtv", description="Research-trend analytics over paper corpora")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="parse a corpus file and print the ingest report")
    p_validate.add_argument("path")
    p_validate.add_argument("--format", choices=("csv", "s2"), required=True)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--config", required=True, help="path to a key = value config file")

    p_export = sub.add_parser("export", help="write one view's data to a file without serving")
    p_export.add_argument("view", choices=VIEW_CHOICES)
    p_export.add_argument("--config", help="service config file naming the corpus")
    p_export.add_argument("--corpus", help="corpus file (alternative to --config)")
    p_export.add_argument("--format", choices=("csv", "s2"), help="corpus format when using --corpus")
    p_export.add_argument("--stopwords", help="stopword file (default: builtin English list)")
    p_export.add_argument("--from", dest="from_", metavar="YYYY-MM-DD")
    p_export.add_argument("--to", metavar="YYYY-MM-DD")
    p_export.add_argument("--granularity", choices=("year", "month"))
    p_export.add_argument("--n", help="top-n (coauthors/venues) or top-k (words)")
    p_export.add_argument("--mode", choices=("cumulative", "per_bucket"))
    p_export.add_argument("--out", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "serve":
            return _cmd_serve(args)
        return _cmd_export(args, parser)
    except (ConfigError, ParamError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _cmd_validate(args) -> int:
    corpus = load_corpus(args.path, args.format)
    print(f"{len(corpus.records)} records, {len(corpus.ingest_report)} issues")
    for issue in corpus.ingest_report:
        print(f"  [{issue.severity}] {issue.row_or_path}: {issue.reason}")
    rejected = sum(1 for i in corpus.ingest_report if i.severity == "rejected")
    return 0 if rejected == 0 else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    config = load_config(args.config)
    app = create_app(config)
    uvicorn.run(app, host="0.0.0.0", port=config.port, log_level="info")
    return 0


def _cmd_export(args, parser: argparse.ArgumentParser) -> int:
    if args.config:
        config = load_config(args.config)
        corpus = load_corpus(config.corpus_path, config.corpus_format)
        stopwords = (
            StopwordSet.from_file(config.stopwords_path) if config.stopwords_path else StopwordSet.default()
        )
    elif args.corpus:
        fmt = args.format or ("csv" if args.corpus.lower().endswith(".csv") else "s2")
        corpus = load_corpus(args.corpus, fmt)
        stopwords = StopwordSet.from_file(args.stopwords) if args.stopwords else StopwordSet.default()
    else:
        parser.error("export requires --config or --corpus")

    req = ViewRequest.resolve(
        args.view,
        corpus,
        from_=args.from_,
        to=args.to,
        granularity=args.granularity,
        n=args.n,
        mode=args.mode,
    )
    envelope = compute_view(corpus, stopwords, req)
    data = envelope.model_dump(mode="json")["data"]
    Path(args.out).write_bytes(canonical_json(data))
    print(f"wrote {args.view} ({envelope.paper_count} papers) to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
