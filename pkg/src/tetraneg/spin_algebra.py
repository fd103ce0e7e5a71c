"""Spin operators and tensor-product embeddings for the tetramer.

Everything is built in the product S^z basis with ladder operators, so all
matrices are real.  Local basis states are ordered by descending magnetic
quantum number m = s, s-1, ..., -s; the canonical tetramer site order is
(mu1, S1, mu2, S2) with total dimension 2*3*2*3 = 36.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

SYMMETRY_ATOL = 1e-12


def _validate_spin(s: float) -> float:
    s = float(s)
    if s < 0 or abs(2 * s - round(2 * s)) > 1e-12:
        raise ValueError(f"spin quantum number must be a non-negative half-integer, got {s}")
    return s


@dataclass(frozen=True)
class SpinSite:
    """One lattice site: a name and a spin quantum number."""

    label: str
    s: float

    def __post_init__(self):
        object.__setattr__(self, "s", _validate_spin(self.s))

    @property
    def dim(self) -> int:
        return int(round(2 * self.s + 1))

    @property
    def m_values(self) -> tuple[float, ...]:
        return tuple(self.s - k for k in range(self.dim))


@dataclass(frozen=True)
class ClusterLayout:
    """Ordered collection of sites defining the tensor-product structure."""

    sites: tuple[SpinSite, ...]

    def __post_init__(self):
        labels = [site.label for site in self.sites]
        if len(set(labels)) != len(labels):
            raise ValueError("site labels must be unique")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(site.dim for site in self.sites)

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(site.label for site in self.sites)

    def index(self, site: str | int | SpinSite) -> int:
        if isinstance(site, SpinSite):
            site = site.label
        if isinstance(site, str):
            try:
                return self.labels.index(site)
            except ValueError:
                raise KeyError(f"unknown site {site!r}; layout has {self.labels}") from None
        i = int(site)
        if not 0 <= i < len(self.sites):
            raise KeyError(f"site index {i} out of range")
        return i

    def basis_labels(self, kept: tuple[int, ...] | None = None) -> tuple[tuple[float, ...], ...]:
        """Product-basis m-tuples, first listed site slowest-varying."""
        if kept is None:
            kept = tuple(range(len(self.sites)))
        return tuple(product(*(self.sites[i].m_values for i in kept)))


MU1 = SpinSite("mu1", 0.5)
S1 = SpinSite("S1", 1.0)
MU2 = SpinSite("mu2", 0.5)
S2 = SpinSite("S2", 1.0)

#: Canonical tetramer: (mu1, S1, mu2, S2), dimension 36.
TETRAMER = ClusterLayout((MU1, S1, MU2, S2))


def spin_z(s: float) -> np.ndarray:
    """S^z = diag(s, s-1, ..., -s)."""
    s = _validate_spin(s)
    return np.diag(SpinSite("tmp", s).m_values).astype(float)


def spin_ladder(s: float, direction: str) -> np.ndarray:
    """Raising/lowering operator with <m+-1|S+-|m> = sqrt(s(s+1) - m(m+-1))."""
    s = _validate_spin(s)
    if direction not in ("raise", "lower"):
        raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")
    dim = int(round(2 * s + 1))
    m = SpinSite("tmp", s).m_values
    up = np.zeros((dim, dim))
    for col in range(1, dim):
        mm = m[col]
        up[col - 1, col] = np.sqrt(s * (s + 1) - mm * (mm + 1))
    return up if direction == "raise" else up.T


def embed(op: np.ndarray, site: str | int, layout: ClusterLayout = TETRAMER) -> np.ndarray:
    """identity (x) ... (x) op (x) ... (x) identity at the given site."""
    i = layout.index(site)
    op = np.asarray(op, dtype=float)
    if op.shape != (layout.dims[i], layout.dims[i]):
        raise ValueError(
            f"operator shape {op.shape} does not match local dimension {layout.dims[i]} "
            f"of site {layout.labels[i]!r}"
        )
    out = np.eye(1)
    for k, d in enumerate(layout.dims):
        out = np.kron(out, op if k == i else np.eye(d))
    return out


def heisenberg_dot(i: str | int, j: str | int, layout: ClusterLayout = TETRAMER) -> np.ndarray:
    """S_i . S_j = Sz_i Sz_j + (S+_i S-_j + S-_i S+_j) / 2, real symmetric."""
    ia, ja = layout.index(i), layout.index(j)
    if ia == ja:
        raise ValueError("heisenberg_dot needs two distinct sites")
    si, sj = layout.sites[ia].s, layout.sites[ja].s
    out = embed(spin_z(si), ia, layout) @ embed(spin_z(sj), ja, layout)
    out += 0.5 * (
        embed(spin_ladder(si, "raise"), ia, layout) @ embed(spin_ladder(sj, "lower"), ja, layout)
        + embed(spin_ladder(si, "lower"), ia, layout) @ embed(spin_ladder(sj, "raise"), ja, layout)
    )
    assert np.abs(out - out.T).max() <= SYMMETRY_ATOL
    return out


def total_sz(layout: ClusterLayout = TETRAMER) -> np.ndarray:
    """Sum of single-site S^z operators (diagonal)."""
    out = np.zeros((layout.total_dim, layout.total_dim))
    for k, site in enumerate(layout.sites):
        out += embed(spin_z(site.s), k, layout)
    return out
