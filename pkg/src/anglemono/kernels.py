"""Kernel dispatch: the compiled extension when it was built, else numpy/Python.

Set ``ANGLEMONO_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("ANGLEMONO_PURE"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not compiled
        _impl = _pykernels


def largest_convex_subset(points):
    return _impl.largest_convex_subset(points)


def min_width_matrix(n, src, dst, ang):
    return _impl.min_width_matrix(n, src, dst, ang)


def width_reach_matrix(n, src, dst, ang, gamma, tol, anchors=None):
    return _impl.width_reach_matrix(n, src, dst, ang, gamma, tol, anchors)
