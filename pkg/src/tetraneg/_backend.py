"""Eigensolver backend selection.

Two interchangeable backends provide symmetric eigensolves:

* ``compiled`` -- the cyclic-Jacobi Cython extension for the small matrices
  that dominate scans (partial transposes up to 18x18), numpy/LAPACK above
  the crossover size where LAPACK wins anyway.
* ``pure`` -- numpy/LAPACK everywhere; used automatically when the extension
  was not built.

The default is ``compiled`` when available; set ``TETRANEG_BACKEND=pure`` (or
``compiled``) to override.  Within one process the selection is fixed unless
`use_backend` is used, so identical inputs always produce identical floats.
"""

from __future__ import annotations

import contextlib
import os

import numpy as np

try:
    from . import _core
except ImportError:
    _core = None

# LAPACK beats Jacobi above this size; fixed constant, never auto-tuned,
# so results are reproducible across machines with the same build.
JACOBI_MAX_DIM = 20

_env = os.environ.get("TETRANEG_BACKEND", "").strip().lower()
if _env == "pure":
    _active = "pure"
elif _env == "compiled":
    if _core is None:
        raise ImportError(
            "TETRANEG_BACKEND=compiled but the tetraneg._core extension is not built"
        )
    _active = "compiled"
elif _env:
    raise ValueError(f"unknown TETRANEG_BACKEND value: {_env!r}")
else:
    _active = "compiled" if _core is not None else "pure"


def backend_name() -> str:
    return _active


def have_compiled() -> bool:
    return _core is not None


def eigh_sym(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvectors of a symmetric matrix."""
    if _active == "compiled" and a.shape[0] <= JACOBI_MAX_DIM:
        return _core.jacobi_eigh(a)
    return np.linalg.eigh(a)


def eigvalsh_sym(a: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a symmetric matrix."""
    if _active == "compiled" and a.shape[0] <= JACOBI_MAX_DIM:
        return _core.jacobi_eigvalsh(a)
    return np.linalg.eigvalsh(a)


@contextlib.contextmanager
def use_backend(name: str):
    """Temporarily force a backend (tests and benchmarks)."""
    global _active
    if name not in ("pure", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _core is None:
        raise RuntimeError("compiled backend unavailable")
    previous = _active
    _active = name
    try:
        yield
    finally:
        _active = previous
