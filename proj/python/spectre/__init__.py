"""Finite real spectral triples: KO sign tables, products, inner fluctuations."""

try:
    from ._spectre import *  # noqa: F401,F403
except ImportError:  # in-tree build: the module sits next to this package on sys.path
    from _spectre import *  # noqa: F401,F403
