"""Exact differential invariants of ODEs cubic in y'."""

try:
    from ._odeinv import classify, compare, invariants, pushforward, verify
except ImportError:  # running against a bare build tree on PYTHONPATH
    from _odeinv import classify, compare, invariants, pushforward, verify

__all__ = ["classify", "compare", "invariants", "pushforward", "verify"]
