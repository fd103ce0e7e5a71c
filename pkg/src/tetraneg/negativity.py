"""Partial transposition and the negativity measures.

The bipartite negativity of a state rho with respect to a subsystem A is the
sum of |lambda| over the negative eigenvalues lambda of rho^{T_A}
(Peres-Horodecki).  The genuine tripartite negativity of a trimer is the
geometric mean of its three single-spin-vs-dimer negativities and is set to
exactly zero as soon as one factor vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import eigvalsh_sym
from .model import ThermalState
from .reductions import ReducedDensity, pair_rdm, partial_trace
from .spin_algebra import TETRAMER

#: Eigenvalues and negativity factors with magnitude below this count as zero.
ZERO_TOL = 1e-10


@dataclass(frozen=True)
class NegativityReport:
    value: float
    negative_eigenvalues: tuple[float, ...]
    transposed_subsystem: str

    def __post_init__(self):
        assert self.value >= 0
        assert abs(self.value - sum(abs(v) for v in self.negative_eigenvalues)) <= 1e-12


@dataclass(frozen=True)
class TripartiteReport:
    """Genuine tripartite negativity of `triple` with its three factors.

    ``factors[k]`` is the negativity between triple[k] and the other two.
    """

    triple: tuple[str, str, str]
    factors: tuple[float, float, float]
    genuine: float


def partial_transpose(rdm: ReducedDensity, subsystem: str | int) -> np.ndarray:
    """Transpose the indices of one kept site only."""
    pos = rdm.site_position(subsystem)
    dims = tuple(site.dim for site in rdm.kept)
    k = len(dims)
    tensor = rdm.matrix.reshape(dims + dims)
    tensor = np.swapaxes(tensor, pos, pos + k)
    return tensor.reshape(rdm.matrix.shape)


def negativity(rdm: ReducedDensity, subsystem: str | int, zero_tol: float = ZERO_TOL) -> NegativityReport:
    """Sum of |negative eigenvalues| of the partial transpose over `subsystem`."""
    eigenvalues = eigvalsh_sym(partial_transpose(rdm, subsystem))
    negative = tuple(float(v) for v in eigenvalues if v < -zero_tol)
    label = rdm.kept[rdm.site_position(subsystem)].label
    return NegativityReport(
        value=float(sum(-v for v in negative)),
        negative_eigenvalues=negative,
        transposed_subsystem=label,
    )


def one_vs_two_negativity(
    state: ThermalState | np.ndarray,
    single: str | int,
    pair: tuple[str | int, str | int],
    zero_tol: float = ZERO_TOL,
) -> NegativityReport:
    """Negativity between one spin and a spin dimer after tracing out the fourth."""
    trio = (TETRAMER.index(single), TETRAMER.index(pair[0]), TETRAMER.index(pair[1]))
    if len(set(trio)) != 3:
        raise ValueError(f"sites must be distinct, got {single!r} and {pair!r}")
    rdm = partial_trace(state, trio)
    return negativity(rdm, single, zero_tol)


def two_spin_negativity(
    state: ThermalState | np.ndarray,
    site_a: str | int,
    site_b: str | int,
    zero_tol: float = ZERO_TOL,
) -> NegativityReport:
    """Negativity of the two-spin reduced state, transposed over site_a."""
    return negativity(pair_rdm(state, site_a, site_b), site_a, zero_tol)


def genuine_tripartite(
    state: ThermalState | np.ndarray,
    triple: tuple[str | int, str | int, str | int],
    zero_tol: float = ZERO_TOL,
) -> TripartiteReport:
    """Geometric mean of the three one-vs-two negativities of `triple`.

    Computed in log space only when every factor exceeds zero_tol; otherwise
    short-circuits to exactly 0.
    """
    idx = tuple(TETRAMER.index(s) for s in triple)
    if len(set(idx)) != 3:
        raise ValueError(f"triple must name three distinct sites, got {triple}")
    labels = tuple(TETRAMER.labels[i] for i in idx)
    factors = []
    for k in range(3):
        others = (idx[(k + 1) % 3], idx[(k + 2) % 3])
        factors.append(one_vs_two_negativity(state, idx[k], others, zero_tol).value)
    if min(factors) <= zero_tol:
        genuine = 0.0
    else:
        genuine = float(np.exp(np.log(factors).sum() / 3.0))
    return TripartiteReport(triple=labels, factors=tuple(factors), genuine=genuine)
