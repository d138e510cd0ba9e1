"""Kernel backend selection.

Prefers the compiled extension `normord._kernels` when it imported
cleanly; falls back to the pure-Python module otherwise.  Setting the
environment variable NORMORD_PURE_PYTHON=1 forces the fallback (useful
for benchmarking and for debugging kernel-level differences).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("NORMORD_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]

        _impl = _compiled
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

normal_order_word = _impl.normal_order_word
nf_mul = _impl.nf_mul
stirling_row_update = _impl.stirling_row_update
graph_step = _impl.graph_step


def available_backends() -> dict:
    """Name -> kernel module, for every backend importable right now."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as compiled  # type: ignore[attr-defined]

        out["cython"] = compiled
    except ImportError:
        pass
    return out
