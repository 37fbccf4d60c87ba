"""Exact Fock-space and wreath-product class-algebra computations.

Thin wrappers over the C++ extension: JSON-string results are decoded into
plain dicts, everything else passes through unchanged.
"""

import json

try:
    from ._wreathfock import *  # noqa: F401,F403
    from . import _wreathfock as _ext
except ImportError:  # running against a build tree
    from _wreathfock import *  # noqa: F401,F403
    import _wreathfock as _ext

__all__ = [name for name in dir(_ext) if not name.startswith("_")] + [
    "char_table",
    "convolve",
    "eigen_series",
    "npoint",
    "tau",
    "toda_residuals",
]


def char_table(r, n, cache_dir=""):
    return json.loads(_ext.char_table_json(r, n, cache_dir))


def convolve(f, g, method="fast"):
    return json.loads(_ext.convolve_json(json.dumps(f), json.dumps(g), method))


def eigen_series(op, k, charge, lam, order=8):
    return json.loads(_ext.eigen_series_json(op, k, charge, lam, order))


def npoint(lam, mu, ks, order=6, method="direct"):
    return json.loads(_ext.npoint_json(lam, mu, ks, order, method))


def tau(r, charge, degree=4, t_max=4, x_modes=()):
    return json.loads(_ext.tau_json(r, charge, degree, t_max, list(x_modes)))


def toda_residuals(r, color, charge_lo=-2, charge_hi=2, degree=4, t_max=4, x_modes=()):
    raw = _ext.toda_residuals_json(r, color, charge_lo, charge_hi, degree, t_max, list(x_modes))
    return {charge: json.loads(series) for charge, series in raw.items()}
