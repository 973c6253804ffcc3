"""Exact decision procedures for planar polynomial submersions and Jacobian pairs.

Thin wrapper over the C++ core: the *_json entry points return canonical JSON
strings, re-exposed here as dict-returning helpers.
"""

import json as _json

try:
    from rjc._core import *  # noqa: F401,F403  (installed layout)
    from rjc import _core as _c
except ImportError:  # in-tree build: _core.so next to the build directory
    from _core import *  # noqa: F401,F403
    import _core as _c

__version__ = _c.__version__


def classify(p):
    """Full verdict for a polynomial given as text, e.g. "y + x*y^2 + y^4"."""
    return _json.loads(_c.classify_json(p))


def critical(p):
    return _json.loads(_c.critical_json(p))


def connected(p, level="0"):
    return _json.loads(_c.connected_json(p, level))


def subres(p, q, var, k):
    return _json.loads(_c.subres_json(p, q, var, k))


def refute(family, q, a02="0"):
    return _json.loads(_c.refute_json(family, q, a02))


def bruna(b):
    return _json.loads(_c.bruna_json([str(x) for x in b]))


def hankel(j, k, minors=False):
    return _json.loads(_c.hankel_json(j, k, minors))
