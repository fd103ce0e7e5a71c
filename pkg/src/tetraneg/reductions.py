"""Partial traces onto labeled reduced density matrices.

Kept sites always appear in canonical layout order with the first kept site
slowest-varying, which makes the trimer matrices land directly in the bases
used by the closed-form reference module: |mu1, mu2, S2> for the 12-dim
trimer and |mu1, S1, S2> for the 18-dim one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import ThermalState
from .spin_algebra import TETRAMER, ClusterLayout, SpinSite

TRIMER_MU1_S1_S2 = ("mu1", "S1", "S2")
TRIMER_MU1_MU2_S2 = ("mu1", "mu2", "S2")


@dataclass(frozen=True)
class ReducedDensity:
    """Reduced density matrix with explicit retained-site basis labels."""

    kept: tuple[SpinSite, ...]
    basis_labels: tuple[tuple[float, ...], ...]
    matrix: np.ndarray

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(site.label for site in self.kept)

    def site_position(self, site: str | int | SpinSite) -> int:
        if isinstance(site, SpinSite):
            site = site.label
        if isinstance(site, int):
            return self.labels.index(TETRAMER.labels[site])
        try:
            return self.labels.index(site)
        except ValueError:
            raise KeyError(f"site {site!r} not among kept sites {self.labels}") from None


def _as_matrix(state: ThermalState | np.ndarray) -> np.ndarray:
    return state.rho if isinstance(state, ThermalState) else np.asarray(state, dtype=float)


def partial_trace(
    state: ThermalState | np.ndarray,
    kept: tuple[str | int, ...],
    layout: ClusterLayout = TETRAMER,
) -> ReducedDensity:
    """Trace out every site not in ``kept`` (kept in layout order)."""
    if not kept:
        raise ValueError("kept site set must be non-empty")
    idx = sorted({layout.index(s) for s in kept})
    if len(idx) != len(kept):
        raise ValueError(f"kept sites contain duplicates: {kept}")
    rho = _as_matrix(state)
    n = len(layout.sites)
    tensor = rho.reshape(layout.dims + layout.dims)
    # contract row/column axes of each traced site
    out_axes = [i for i in idx] + [i + n for i in idx]
    tensor = np.einsum(
        tensor,
        list(range(n)) + [i + n if i in idx else i for i in range(n)],
        out_axes,
    )
    dim = int(np.prod([layout.dims[i] for i in idx]))
    return ReducedDensity(
        kept=tuple(layout.sites[i] for i in idx),
        basis_labels=layout.basis_labels(tuple(idx)),
        matrix=tensor.reshape(dim, dim),
    )


def trimer_rdm(state: ThermalState | np.ndarray, which: str | tuple[str, ...]) -> ReducedDensity:
    """Three-site reduction; ``which`` is 'mu1_S1_S2' (18-dim) or 'mu1_mu2_S2' (12-dim)."""
    if isinstance(which, str):
        try:
            kept = {"mu1_S1_S2": TRIMER_MU1_S1_S2, "mu1_mu2_S2": TRIMER_MU1_MU2_S2}[which]
        except KeyError:
            raise ValueError(f"unknown trimer {which!r}") from None
    else:
        kept = which
    if len(kept) != 3:
        raise ValueError("trimer_rdm keeps exactly three sites")
    return partial_trace(state, tuple(kept))


def pair_rdm(state: ThermalState | np.ndarray, site_a: str | int, site_b: str | int) -> ReducedDensity:
    """Two-site reduction of the full state."""
    ia, ib = TETRAMER.index(site_a), TETRAMER.index(site_b)
    if ia == ib:
        raise ValueError("pair_rdm needs two distinct sites")
    return partial_trace(state, (ia, ib))
