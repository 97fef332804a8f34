"""HTTP service and CLI plumbing around the analytics core."""

from .app import create_app
from .cache import ViewCache
from .config import ConfigError, ServiceConfig, build_config, load_config
from .views import ParamError, ViewRequest, canonical_json, compute_view, envelope_bytes

__all__ = [
    "ConfigError",
    "ParamError",
    "ServiceConfig",
    "ViewCache",
    "ViewRequest",
    "build_config",
    "canonical_json",
    "compute_view",
    "create_app",
    "envelope_bytes",
    "load_config",
]
