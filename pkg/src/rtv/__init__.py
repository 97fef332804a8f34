"""Research-trend analytics over scholarly paper collections."""

__version__ = "0.1.0"
