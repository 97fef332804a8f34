"""Service configuration: `key = value` lines, env override for the port."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

PORT_ENV_VAR = "RTV_PORT"
DEFAULT_PORT = 8000
DEFAULT_CACHE_CAPACITY = 256

_FORMAT_BY_SUFFIX = {".csv": "csv", ".json": "s2", ".jsonl": "s2"}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    corpus_path: Path
    corpus_format: str  # "csv" | "s2"
    stopwords_path: Path | None  # None -> packaged default list
    port: int
    cache_capacity: int


def load_config(path) -> ServiceConfig:
    """Parse a config file; '#' starts a comment, blank lines are ignored."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")

    values: dict[str, str] = {}
    for line_num, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{line_num}: expected 'key = value', got {line!r}")
        key, _, value = stripped.partition("=")
        values[key.strip()] = value.strip()

    known = {"corpus_path", "corpus_format", "stopwords_path", "port", "cache_capacity"}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "corpus_path" not in values:
        raise ConfigError("corpus_path is required")

    corpus_path = (path.parent / values["corpus_path"]).resolve()
    fmt = values.get("corpus_format") or _FORMAT_BY_SUFFIX.get(corpus_path.suffix.lower())
    stopwords = values.get("stopwords_path")
    stopwords_path = (path.parent / stopwords).resolve() if stopwords else None

    return build_config(
        corpus_path=corpus_path,
        corpus_format=fmt,
        stopwords_path=stopwords_path,
        port=_parse_int(values.get("port"), "port", DEFAULT_PORT),
        cache_capacity=_parse_int(values.get("cache_capacity"), "cache_capacity", DEFAULT_CACHE_CAPACITY),
    )


def build_config(
    *,
    corpus_path,
    corpus_format: str | None,
    stopwords_path=None,
    port: int = DEFAULT_PORT,
    cache_capacity: int = DEFAULT_CACHE_CAPACITY,
) -> ServiceConfig:
    corpus_path = Path(corpus_path)
    if not corpus_path.is_file():
        raise ConfigError(f"corpus file not found: {corpus_path}")
    if corpus_format not in ("csv", "s2"):
        raise ConfigError(f"corpus_format must be 'csv' or 's2', got {corpus_format!r}")
    if stopwords_path is not None:
        stopwords_path = Path(stopwords_path)
        if not stopwords_path.is_file():
            raise ConfigError(f"stopwords file not found: {stopwords_path}")

    env_port = os.environ.get(PORT_ENV_VAR)
    if env_port is not None:
        port = _parse_int(env_port, PORT_ENV_VAR, DEFAULT_PORT)
    if not 0 < port < 65536:
        raise ConfigError(f"port out of range: {port}")
    if cache_capacity < 1:
        raise ConfigError(f"cache_capacity must be >= 1, got {cache_capacity}")

    return ServiceConfig(
        corpus_path=corpus_path,
        corpus_format=corpus_format,
        stopwords_path=stopwords_path,
        port=port,
        cache_capacity=cache_capacity,
    )


def _parse_int(raw: str | None, name: str, default: int) -> int:
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
