"""Tetramer Hamiltonian, spectra, thermal states, and ground-state labels.

The Hamiltonian is

    H = J (S1.mu1 + S2.mu2) + J1 (S1 + mu1).(S2 + mu2) - h Sz_total,

with the J1 term expanded into the four cross-dimer dot products.  Its 36
eigenstates carry quantum numbers (sigma_T^z, sigma1, sigma2, sigma_T) where
sigma1/sigma2 are the composite dimer spins (1/2 or 3/2) and sigma_T the
total composite spin; the closed-form level energies reconstructed from that
structure serve as an analytic cross-check of the numerical spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import eigh_sym
from .spin_algebra import TETRAMER, ClusterLayout, heisenberg_dot, total_sz

#: Default tolerance (in units of J) for treating levels as degenerate.
DEGENERACY_TOL = 1e-9

_REL_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Couplings and field of the tetramer.

    ``h`` may be given directly or derived from a Lande factor ``g`` and flux
    density ``b`` via h = g * mu_b * b (``mu_b`` in the same energy units as
    J per unit of ``b``).  The studied regime is J > 0, J1 >= 0; other signs
    need ``allow_any_sign=True``.
    """

    j: float = 1.0
    j1: float = 0.0
    h: float = 0.0
    g: float | None = None
    b: float | None = None
    mu_b: float = 1.0
    allow_any_sign: bool = False

    def __post_init__(self):
        if (self.g is None) != (self.b is None):
            raise ValueError("g and b must be supplied together")
        if self.g is not None:
            derived = self.g * self.mu_b * self.b
            if self.h:
                scale = max(abs(self.h), abs(derived), 1.0)
                if abs(self.h - derived) > _REL_TOL * scale:
                    raise ValueError(
                        f"inconsistent field: h={self.h} but g*mu_b*b={derived}"
                    )
            object.__setattr__(self, "h", derived)
        if not self.allow_any_sign and (self.j <= 0 or self.j1 < 0):
            raise ValueError(
                f"studied regime needs J > 0 and J1 >= 0 (got J={self.j}, J1={self.j1}); "
                "pass allow_any_sign=True to override"
            )


def _halves(x: float) -> str:
    n = round(2 * x)
    return str(n // 2) if n % 2 == 0 else f"{n}/2"


@dataclass(frozen=True, order=True)
class QuantumLabel:
    """|sigma_T^z, sigma1, sigma2> with the total composite spin sigma_T."""

    sigma_t_z: float
    sigma1: float
    sigma2: float
    sigma_t: float

    def __post_init__(self):
        if self.sigma1 not in (0.5, 1.5) or self.sigma2 not in (0.5, 1.5):
            raise ValueError("dimer composite spins must be 1/2 or 3/2")
        lo, hi = abs(self.sigma1 - self.sigma2), self.sigma1 + self.sigma2
        if not (lo <= self.sigma_t <= hi) or (self.sigma_t - lo) % 1 != 0:
            raise ValueError(f"sigma_T={self.sigma_t} incompatible with ({self.sigma1},{self.sigma2})")
        if abs(self.sigma_t_z) > self.sigma_t or (self.sigma_t - self.sigma_t_z) % 1 != 0:
            raise ValueError(f"sigma_T^z={self.sigma_t_z} incompatible with sigma_T={self.sigma_t}")

    def text(self) -> str:
        """Paper-style label, e.g. '0,1/2,1/2' (sigma_T^z is integral here)."""
        return f"{_halves(self.sigma_t_z)},{_halves(self.sigma1)},{_halves(self.sigma2)}"


@lru_cache(maxsize=1)
def all_labels() -> tuple[QuantumLabel, ...]:
    """All 36 quantum-number labels of the tetramer, deterministic order."""
    labels = []
    for sigma1 in (0.5, 1.5):
        for sigma2 in (0.5, 1.5):
            st = abs(sigma1 - sigma2)
            while st <= sigma1 + sigma2 + 1e-12:
                stz = -st
                while stz <= st + 1e-12:
                    labels.append(QuantumLabel(stz, sigma1, sigma2, st))
                    stz += 1.0
                st += 1.0
    assert len(labels) == 36
    return tuple(labels)


def closed_form_energy(label: QuantumLabel, params: ModelParams) -> float:
    """Level energy from the composite-spin quantum numbers.

    E = J/2 [s1(s1+1) + s2(s2+1) - 11/2]
      + J1/2 [sT(sT+1) - s1(s1+1) - s2(s2+1)] - h sT^z
    """
    c1 = label.sigma1 * (label.sigma1 + 1)
    c2 = label.sigma2 * (label.sigma2 + 1)
    ct = label.sigma_t * (label.sigma_t + 1)
    return (
        0.5 * params.j * (c1 + c2 - 5.5)
        + 0.5 * params.j1 * (ct - c1 - c2)
        - params.h * label.sigma_t_z
    )


def build_hamiltonian(params: ModelParams, layout: ClusterLayout = TETRAMER) -> np.ndarray:
    """Assemble the 36x36 real symmetric tetramer Hamiltonian."""
    if layout.labels != ("mu1", "S1", "mu2", "S2"):
        raise ValueError("build_hamiltonian expects the canonical tetramer layout")
    h = params.j * (heisenberg_dot("S1", "mu1", layout) + heisenberg_dot("S2", "mu2", layout))
    for a in ("S1", "mu1"):
        for b in ("S2", "mu2"):
            h += params.j1 * heisenberg_dot(a, b, layout)
    h -= params.h * total_sz(layout)
    return h


@dataclass(frozen=True)
class Spectrum:
    """Full eigendecomposition: ascending energies, orthonormal column vectors."""

    energies: np.ndarray
    states: np.ndarray

    def z_at(self, beta: float) -> float:
        """Partition function sum_k exp(-beta e_k); z_at(0) equals the dimension."""
        if beta < 0 or not math.isfinite(beta):
            raise ValueError("beta must be finite and non-negative")
        e0 = self.energies[0]
        return float(np.exp(-beta * (self.energies - e0)).sum() * np.exp(-beta * e0))


def diagonalize(h_matrix: np.ndarray) -> Spectrum:
    """Eigendecomposition of a symmetric matrix, ascending and deterministic."""
    h_matrix = np.asarray(h_matrix, dtype=float)
    if h_matrix.ndim != 2 or h_matrix.shape[0] != h_matrix.shape[1]:
        raise ValueError("expected a square matrix")
    if np.abs(h_matrix - h_matrix.T).max() > 1e-12:
        raise ValueError("matrix is not symmetric within 1e-12")
    w, v = eigh_sym(h_matrix)
    return Spectrum(energies=w, states=v)


@dataclass(frozen=True)
class ThermalState:
    """Gibbs or ground-manifold density matrix of the full cluster.

    ``z_shifted`` is sum_k exp(-beta (e_k - energy_shift)) with the shift at
    the ground energy, so it never overflows; the true partition function is
    z_shifted * exp(-beta * energy_shift) (exposed as ``z``, which may
    overflow to inf for extreme beta).
    """

    beta: float
    rho: np.ndarray
    z_shifted: float
    energy_shift: float

    @property
    def z(self) -> float:
        with np.errstate(over="ignore"):
            return float(self.z_shifted * np.exp(-self.beta * self.energy_shift))


def gibbs_state(spectrum: Spectrum, beta: float) -> ThermalState:
    """rho = exp(-beta H) / Z, computed with ground-energy-shifted weights."""
    if beta < 0 or not math.isfinite(beta):
        raise ValueError("beta must be finite and non-negative")
    e0 = float(spectrum.energies[0])
    weights = np.exp(-beta * (spectrum.energies - e0))
    z_shifted = float(weights.sum())
    rho = (spectrum.states * (weights / z_shifted)) @ spectrum.states.T
    return ThermalState(beta=beta, rho=rho, z_shifted=z_shifted, energy_shift=e0)


def ground_manifold(spectrum: Spectrum, degeneracy_tol: float = DEGENERACY_TOL) -> ThermalState:
    """Uniform mixture over all states within degeneracy_tol of the ground energy."""
    if degeneracy_tol <= 0:
        raise ValueError("degeneracy_tol must be positive")
    sel = spectrum.energies - spectrum.energies[0] <= degeneracy_tol
    g = int(sel.sum())
    v = spectrum.states[:, sel]
    rho = (v @ v.T) / g
    return ThermalState(beta=math.inf, rho=rho, z_shifted=float(g),
                        energy_shift=float(spectrum.energies[0]))


def eigenspace_state(spectrum: Spectrum, energy: float, tol: float = DEGENERACY_TOL) -> ThermalState:
    """Uniform mixture over the eigenspace at the given energy (need not be the ground one)."""
    sel = np.abs(spectrum.energies - energy) <= tol
    g = int(sel.sum())
    if g == 0:
        raise ValueError(f"no eigenvalue within {tol} of {energy}")
    v = spectrum.states[:, sel]
    return ThermalState(beta=math.inf, rho=(v @ v.T) / g, z_shifted=float(g),
                        energy_shift=energy)


def classify_ground_state(
    params: ModelParams, degeneracy_tol: float = DEGENERACY_TOL
) -> list[QuantumLabel]:
    """All labels whose closed-form energy is within degeneracy_tol of the minimum."""
    labels = all_labels()
    energies = [closed_form_energy(lab, params) for lab in labels]
    emin = min(energies)
    scale = max(abs(params.j), abs(params.j1), abs(params.h), 1.0)
    return [lab for lab, e in zip(labels, energies) if e - emin <= degeneracy_tol * scale]
