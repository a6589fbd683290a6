"""Exact residue calculus on unramified character tori.

Thin convenience layer over the compiled module: the JSON-returning entry
points are re-exported both raw (``*_json``) and parsed.
"""

import json as _json

from _rescalc import (  # noqa: F401
    __version__,
    decompose_json,
    mu_json,
    mu_value,
    residual_json,
    root_system_json,
    verify,
    weyl_order,
)


def root_system(type, rank=2):
    """Root system summary as a dict."""
    return _json.loads(root_system_json(type, rank))


def mu(type, rank=2, k_short="1", k_long="", l_short="", l_long=""):
    """The mu function in factored form, as a dict."""
    return _json.loads(mu_json(type, rank, k_short, k_long, l_short, l_long))


def residual(type, rank=2, k_short="1", k_long="", q=2.0, seed=0):
    """Residual classification report as a list of dicts."""
    return _json.loads(residual_json(type, rank, k_short, k_long, q, seed))


def decompose(type, rank=2, k_short="1", k_long="", q=2.0, seed=0):
    """Contour-shift decomposition report as a dict."""
    return _json.loads(decompose_json(type, rank, k_short, k_long, q, seed))
