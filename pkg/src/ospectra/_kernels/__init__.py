"""Backend selection for the dense eigensolver kernels.

The compiled extension is preferred when importable; set OSPECTRA_PURE=1 to
force the NumPy fallback.  Both backends implement identical contracts and
are compared in benchmarks/bench_kernels.py and in the test suite.
"""

from __future__ import annotations

import os

from .pure import apply_reflectors, tridiag_solve

if os.environ.get("OSPECTRA_PURE"):
    from . import pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _ceigen as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import pure as _impl

        BACKEND = "pure"

tridiagonalize = _impl.tridiagonalize
tridiag_eigenvalues = _impl.tridiag_eigenvalues


def backend() -> str:
    """Name of the active kernel backend ('compiled' or 'pure')."""
    return BACKEND


__all__ = [
    "BACKEND",
    "backend",
    "tridiagonalize",
    "tridiag_eigenvalues",
    "tridiag_solve",
    "apply_reflectors",
]
