"""Grid scans, analytic phase boundaries, and threshold-temperature detection.

Scans exploit that the field term commutes with the rest of the Hamiltonian:
for fixed J1/J the zero-field operator is diagonalized once per magnetization
sector and every (h, T) node on that line reuses the same eigenbasis with
shifted energies.  Worker tasks are whole lines, so the emitted values are
bitwise independent of the worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._backend import eigh_sym
from .model import (
    DEGENERACY_TOL,
    ModelParams,
    QuantumLabel,
    all_labels,
    build_hamiltonian,
    classify_ground_state,
)
from .negativity import ZERO_TOL, negativity
from .reductions import partial_trace
from .spin_algebra import total_sz

#: Observable columns of a scan record: the two genuine tripartite
#: negativities, the six single-spin-vs-dimer negativities in table order,
#: then nine two-spin columns (six distinct pairs followed by three
#: transposition-side mirrors that double as a live symmetry check).
OBSERVABLES = (
    "N_mu1_S1S2",
    "N_mu1_mu2S2",
    "N_mu1_vs_S1S2",
    "N_S1_vs_mu1S2",
    "N_S2_vs_mu1S1",
    "N_mu1_vs_mu2S2",
    "N_mu2_vs_mu1S2",
    "N_S2_vs_mu1mu2",
    "N_mu1_vs_S1",
    "N_mu1_vs_S2",
    "N_S1_vs_S2",
    "N_mu1_vs_mu2",
    "N_mu2_vs_S2",
    "N_mu2_vs_S1",
    "N_S2_vs_mu1",
    "N_S2_vs_mu2",
    "N_S1_vs_mu1",
)

_PAIR_SPECS = (
    ("mu1", "S1"), ("mu1", "S2"), ("S1", "S2"), ("mu1", "mu2"),
    ("mu2", "S2"), ("mu2", "S1"), ("S2", "mu1"), ("S2", "mu2"), ("S1", "mu1"),
)


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.count < 2:
            raise ValueError(f"axis {self.name!r} needs at least 2 steps")
        if not self.stop > self.start:
            raise ValueError(f"axis {self.name!r} must be strictly increasing")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class ScanGrid:
    """Two scan axes plus fixed parameters; row-major over (axes[0], axes[1])."""

    axes: tuple[Axis, Axis]
    fixed: tuple[tuple[str, float], ...] = ()

    def fixed_value(self, name: str, default: float) -> float:
        return dict(self.fixed).get(name, default)


@dataclass(frozen=True)
class ScanRecord:
    j1_over_j: float
    h_over_j: float
    kt_over_j: float
    labels: tuple[QuantumLabel, ...]
    degenerate: bool
    values: tuple[float, ...]  # OBSERVABLES order


# --------------------------------------------------------------------------
# spectral line cache


class SpectralTable:
    """Joint eigendata of H(J1, h=0) and Sz, reused along a fixed-J1 line."""

    def __init__(self, j1: float, j: float = 1.0):
        params = ModelParams(j=j, j1=j1, h=0.0)
        h0 = build_hamiltonian(params)
        mdiag = np.diagonal(total_sz()).copy()
        energies, mvals, vecs = [], [], []
        for m in sorted(set(np.round(mdiag * 2).astype(int)), reverse=True):
            idx = np.flatnonzero(np.round(mdiag * 2).astype(int) == m)
            w, v = eigh_sym(h0[np.ix_(idx, idx)])
            for k in range(len(idx)):
                energies.append(w[k])
                mvals.append(m / 2.0)
                col = np.zeros(36)
                col[idx] = v[:, k]
                vecs.append(col)
        self.energies0 = np.array(energies)
        self.mvals = np.array(mvals)
        self.states = np.array(vecs).T  # 36 x 36, columns are eigenvectors
        self.j1 = j1
        self.j = j

    def energies(self, h: float) -> np.ndarray:
        return self.energies0 - h * self.mvals

    def rho(self, h: float, kt: float, degeneracy_tol: float = DEGENERACY_TOL) -> np.ndarray:
        """Density matrix at field h: Gibbs for kt > 0, ground manifold at kt = 0."""
        e = self.energies(h)
        e0 = e.min()
        if kt == 0:
            sel = e - e0 <= degeneracy_tol
            v = self.states[:, sel]
            return (v @ v.T) / int(sel.sum())
        weights = np.exp(-(e - e0) / kt)
        weights /= weights.sum()
        return (self.states * weights) @ self.states.T


# --------------------------------------------------------------------------
# per-node observables


def node_observables(rho: np.ndarray, zero_tol: float = ZERO_TOL) -> tuple[float, ...]:
    """All observable columns for one full-cluster density matrix."""
    rdm18 = partial_trace(rho, ("mu1", "S1", "S2"))
    rdm12 = partial_trace(rho, ("mu1", "mu2", "S2"))
    one_vs_two = (
        negativity(rdm18, "mu1", zero_tol).value,
        negativity(rdm18, "S1", zero_tol).value,
        negativity(rdm18, "S2", zero_tol).value,
        negativity(rdm12, "mu1", zero_tol).value,
        negativity(rdm12, "mu2", zero_tol).value,
        negativity(rdm12, "S2", zero_tol).value,
    )
    genuine = (
        geometric_mean(one_vs_two[0:3], zero_tol),
        geometric_mean(one_vs_two[3:6], zero_tol),
    )
    pair_rdms = {}
    pairs = []
    for a, b in _PAIR_SPECS:
        key = tuple(sorted((a, b)))
        if key not in pair_rdms:
            pair_rdms[key] = partial_trace(rho, key)
        pairs.append(negativity(pair_rdms[key], a, zero_tol).value)
    return genuine + one_vs_two + tuple(pairs)


def geometric_mean(factors, zero_tol: float = ZERO_TOL) -> float:
    """Geometric mean with a hard zero once any factor drops below zero_tol."""
    factors = tuple(factors)
    if min(factors) <= zero_tol:
        return 0.0
    return float(np.exp(np.log(factors).sum() / len(factors)))


def _line_records(j1, kt_values, h_values, zero_tol, degeneracy_tol):
    """All records of one fixed-J1 line, ordered (kt outer, h inner)."""
    table = SpectralTable(j1)
    out = []
    for kt in kt_values:
        for h in h_values:
            params = ModelParams(j=1.0, j1=j1, h=h)
            labels = classify_ground_state(params, degeneracy_tol)
            rho = table.rho(h, kt, degeneracy_tol)
            out.append(
                ScanRecord(
                    j1_over_j=float(j1),
                    h_over_j=float(h),
                    kt_over_j=float(kt),
                    labels=tuple(labels),
                    degenerate=len(labels) > 1,
                    values=node_observables(rho, zero_tol),
                )
            )
    return out


def _field_task(args):
    j1, h_values, kt, zero_tol, degeneracy_tol = args
    return _line_records(j1, [kt], h_values, zero_tol, degeneracy_tol)


def _thermal_task(args):
    kt, h_values, j1, zero_tol, degeneracy_tol = args
    return _line_records(j1, [kt], h_values, zero_tol, degeneracy_tol)


def _run_tasks(task_fn, task_args, workers: int):
    if workers <= 1:
        chunks = [task_fn(a) for a in task_args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(task_fn, task_args, chunksize=1))
    return [rec for chunk in chunks for rec in chunk]


def field_scan(
    grid: ScanGrid,
    workers: int = 1,
    zero_tol: float = ZERO_TOL,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> list[ScanRecord]:
    """Scan over (J1/J, h/J) at the fixed temperature grid.fixed['kt_over_j'] (default 0)."""
    j1_axis, h_axis = grid.axes
    kt = grid.fixed_value("kt_over_j", 0.0)
    if kt < 0:
        raise ValueError("temperature must be non-negative")
    h_values = tuple(h_axis.values())
    args = [(j1, h_values, kt, zero_tol, degeneracy_tol) for j1 in j1_axis.values()]
    return _run_tasks(_field_task, args, workers)


def thermal_scan(
    grid: ScanGrid,
    workers: int = 1,
    zero_tol: float = ZERO_TOL,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> list[ScanRecord]:
    """Scan over (kT/J, h/J) at the fixed ratio grid.fixed['j1_over_j']."""
    kt_axis, h_axis = grid.axes
    j1 = grid.fixed_value("j1_over_j", None)
    if j1 is None:
        raise ValueError("thermal_scan needs j1_over_j among the fixed parameters")
    if kt_axis.start < 0:
        raise ValueError("temperature axis must be non-negative")
    h_values = tuple(h_axis.values())
    args = [(kt, h_values, j1, zero_tol, degeneracy_tol) for kt in kt_axis.values()]
    return _run_tasks(_thermal_task, args, workers)


# --------------------------------------------------------------------------
# analytic phase boundaries


@dataclass(frozen=True)
class PhaseBoundary:
    """One boundary segment of the (J1/J, h/J) ground-state diagram.

    Sloped segments satisfy h_c/J = intercept + slope * (J1/J) for J1/J in
    j1_range; vertical segments sit at j1 over h_range.
    """

    kind: str  # "sloped" | "vertical"
    lower_labels: tuple[QuantumLabel, ...]
    upper_labels: tuple[QuantumLabel, ...]
    slope: float = 0.0
    intercept: float = 0.0
    j1_range: tuple[float, float] = (0.0, 0.0)
    j1: float = 0.0
    h_range: tuple[float, float] = (0.0, 0.0)

    def h_at(self, j1: float) -> float:
        if self.kind != "sloped":
            raise ValueError("h_at applies to sloped segments")
        return self.intercept + self.slope * j1


def _label_groups():
    """Distinct energy lines E = alpha*J + gamma*J1 - b*h with their labels."""
    groups: dict[tuple[float, float, float], list[QuantumLabel]] = {}
    for lab in all_labels():
        c1 = lab.sigma1 * (lab.sigma1 + 1)
        c2 = lab.sigma2 * (lab.sigma2 + 1)
        ct = lab.sigma_t * (lab.sigma_t + 1)
        key = (0.5 * (c1 + c2 - 5.5), 0.5 * (ct - c1 - c2), lab.sigma_t_z)
        groups.setdefault(key, []).append(lab)
    return [(alpha, gamma, b, tuple(labs)) for (alpha, gamma, b), labs in sorted(groups.items())]


def _envelope_sequence(groups, j1: float, h_max: float):
    """Ground-state group indices and crossing fields for h in [0, h_max]."""
    tol = 1e-12
    energies0 = [alpha + gamma * j1 for alpha, gamma, b, _ in groups]

    def winner(h, restrict=None):
        idxs = range(len(groups)) if restrict is None else restrict
        best, best_e = None, math.inf
        for i in idxs:
            e = energies0[i] - groups[i][2] * h
            if e < best_e - tol or (abs(e - best_e) <= tol and (best is None or groups[i][2] > groups[best][2])):
                best, best_e = i, e
        return best

    seq, crossings = [winner(0.0)], []
    h_cur = 0.0
    while True:
        w = seq[-1]
        bw, ew = groups[w][2], energies0[w]
        nxt, h_next = None, math.inf
        for i in range(len(groups)):
            bi = groups[i][2]
            if bi <= bw + tol:
                continue
            hc = (energies0[i] - ew) / (bi - bw)
            if h_cur + tol < hc < h_next - tol or (abs(hc - h_next) <= tol and nxt is not None and bi > groups[nxt][2]):
                nxt, h_next = i, hc
        if nxt is None or h_next > h_max:
            return seq, crossings
        seq.append(nxt)
        crossings.append(h_next)
        h_cur = h_next


def phase_boundaries(
    j1_min: float = 0.0, j1_max: float = 2.0, h_max: float = 6.0, samples: int = 801
) -> list[PhaseBoundary]:
    """All ground-state boundary segments in the (J1/J, h/J) rectangle."""
    if not j1_max > j1_min or h_max <= 0:
        raise ValueError("need j1_max > j1_min and h_max > 0")
    groups = _label_groups()
    # sample at cell midpoints: exact crossings (and degenerate edges such as
    # the decoupled J1 = 0 line) never coincide with a sample
    step = (j1_max - j1_min) / samples
    j1s = j1_min + step * (np.arange(samples) + 0.5)
    sequences = [tuple(_envelope_sequence(groups, j1, h_max)[0]) for j1 in j1s]

    # maximal runs of an unchanged phase sequence
    runs = []
    start = 0
    for k in range(1, len(j1s)):
        if sequences[k] != sequences[start]:
            runs.append((start, k - 1))
            start = k
    runs.append((start, len(j1s) - 1))

    def exact_switch(i, j):
        # two groups with equal Zeeman slope cross at a unique J1
        (a1, g1, b1, _), (a2, g2, b2, _) = groups[i], groups[j]
        if abs(g1 - g2) < 1e-15:
            return None
        return (a2 - a1) / (g1 - g2)

    segments: list[PhaseBoundary] = []
    for r, (lo, hi) in enumerate(runs):
        seq = sequences[lo]
        # exact j1 extent of this run
        left = j1_min if r == 0 else _run_edge(runs[r - 1], runs[r], sequences, groups, j1s, exact_switch)
        right = j1_max if r == len(runs) - 1 else _run_edge(runs[r], runs[r + 1], sequences, groups, j1s, exact_switch)
        for a, bgrp in zip(seq[:-1], seq[1:]):
            (aa, ga, ba, labs_a), (ab, gb, bb, labs_b) = groups[a], groups[bgrp]
            slope = (gb - ga) / (bb - ba)
            intercept = (ab - aa) / (bb - ba)
            segments.append(
                PhaseBoundary(
                    kind="sloped",
                    lower_labels=labs_a,
                    upper_labels=labs_b,
                    slope=slope,
                    intercept=intercept,
                    j1_range=(left, right),
                )
            )
        if r + 1 < len(runs):
            nxt_seq = sequences[runs[r + 1][0]]
            j1_star = right
            changed = [k for k in range(min(len(seq), len(nxt_seq))) if seq[k] != nxt_seq[k]]
            if changed and j1_star is not None:
                _, h_cross = _envelope_sequence(groups, j1_star, h_max)
                hs = [0.0] + list(h_cross) + [h_max]
                h_lo = hs[min(changed)]
                h_hi = hs[max(changed) + 1] if max(changed) + 1 < len(hs) else h_max
                segments.append(
                    PhaseBoundary(
                        kind="vertical",
                        lower_labels=groups[seq[min(changed)]][3],
                        upper_labels=groups[nxt_seq[min(changed)]][3],
                        j1=j1_star,
                        h_range=(h_lo, h_hi),
                    )
                )
    return segments


def _run_edge(run_a, run_b, sequences, groups, j1s, exact_switch):
    """Exact J1 where the phase sequence changes between two adjacent runs."""
    seq_a, seq_b = sequences[run_a[0]], sequences[run_b[0]]
    lo, hi = j1s[run_a[1]], j1s[run_b[0]]
    for k in range(min(len(seq_a), len(seq_b))):
        if seq_a[k] != seq_b[k]:
            j1_star = exact_switch(seq_a[k], seq_b[k])
            if j1_star is not None and lo - 1e-9 <= j1_star <= hi + 1e-9:
                return j1_star
    return 0.5 * (lo + hi)


# --------------------------------------------------------------------------
# threshold temperatures


def threshold_profile(
    j1: float,
    h: float,
    t_max: float,
    observable: str = "N_mu1_S1S2",
    level: float = ZERO_TOL,
    t_step: float = 0.01,
    bisect_tol: float = 1e-4,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> list[tuple[float, float]]:
    """Temperature intervals within [0, t_max] where the observable exceeds `level`.

    The profile is sampled on a t_step grid (plus T=0 via the ground
    manifold) and each boundary is bisected to bisect_tol.  Two or more
    returned intervals, or a first interval detached from T=0, signal
    reentrant behavior.
    """
    if t_max <= 0 or t_step <= 0:
        raise ValueError("t_max and t_step must be positive")
    col = OBSERVABLES.index(observable)
    table = SpectralTable(j1)

    def value(t: float) -> float:
        return node_observables(table.rho(h, t, degeneracy_tol))[col]

    ts = [0.0] + list(np.arange(t_step, t_max + 0.5 * t_step, t_step))
    vals = [value(t) for t in ts]

    def bisect(t_lo, t_hi, rising):
        while t_hi - t_lo > bisect_tol:
            mid = 0.5 * (t_lo + t_hi)
            if (value(mid) > level) == rising:
                t_hi = mid
            else:
                t_lo = mid
        return 0.5 * (t_lo + t_hi)

    intervals = []
    inside = vals[0] > level
    start = 0.0 if inside else None
    for k in range(1, len(ts)):
        now = vals[k] > level
        if now and not inside:
            start = bisect(ts[k - 1], ts[k], rising=True)
        elif inside and not now:
            intervals.append((start, bisect(ts[k - 1], ts[k], rising=False)))
            start = None
        inside = now
    if inside:
        intervals.append((start, ts[-1]))
    return intervals
