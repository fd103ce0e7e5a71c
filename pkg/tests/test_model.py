import itertools
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from tetraneg.model import (
    ModelParams,
    QuantumLabel,
    all_labels,
    build_hamiltonian,
    classify_ground_state,
    closed_form_energy,
    diagonalize,
    eigenspace_state,
    gibbs_state,
    ground_manifold,
)
from tetraneg.spin_algebra import ClusterLayout, SpinSite, heisenberg_dot


def spectrum_of(j1, h, j=1.0):
    return diagonalize(build_hamiltonian(ModelParams(j=j, j1=j1, h=h)))


# ---------------------------------------------------------------- parameters


def test_params_field_from_g_and_b():
    p = ModelParams(j=1.0, j1=0.5, g=2.0, b=0.25, mu_b=1.0)
    assert p.h == pytest.approx(0.5)


def test_params_inconsistent_field_rejected():
    with pytest.raises(ValueError):
        ModelParams(j=1.0, j1=0.5, h=0.3, g=2.0, b=0.25)


def test_params_sign_validation():
    with pytest.raises(ValueError):
        ModelParams(j=-1.0, j1=0.5)
    with pytest.raises(ValueError):
        ModelParams(j=1.0, j1=-0.1)
    ModelParams(j=-1.0, j1=-0.1, allow_any_sign=True)


def test_params_g_without_b_rejected():
    with pytest.raises(ValueError):
        ModelParams(j=1.0, g=2.0)


# ---------------------------------------------------------------- hamiltonian


def test_all_couplings_off_gives_zero():
    h = build_hamiltonian(ModelParams(j=0.0, j1=0.0, h=0.0, allow_any_sign=True))
    assert np.abs(h).max() == 0.0


def test_traceless():
    rng = np.random.default_rng(5)
    for _ in range(5):
        p = ModelParams(j=rng.uniform(0.5, 2), j1=rng.uniform(0, 3), h=rng.uniform(-4, 4))
        assert build_hamiltonian(p).trace() == pytest.approx(0.0, abs=1e-12)


def test_decoupled_limit_spectrum():
    # brute-force oracle: tensor sum of two independently diagonalized dimers
    dimer = ClusterLayout((SpinSite("m", 0.5), SpinSite("s", 1.0)))
    dimer_eigs = np.linalg.eigvalsh(heisenberg_dot("m", "s", dimer))
    expected = np.sort([a + b for a in dimer_eigs for b in dimer_eigs])
    got = spectrum_of(j1=0.0, h=0.0).energies
    assert_allclose(got, expected, atol=1e-12)
    # closed-form check of the same limit: {1 x16, -1/2 x16, -2 x4}
    values, counts = np.unique(np.round(expected, 9), return_counts=True)
    assert_allclose(values, [-2.0, -0.5, 1.0])
    assert list(counts) == [4, 16, 16]


# ---------------------------------------------------------------- spectrum


def test_diagonalize_identity():
    spec = diagonalize(np.eye(36))
    assert_allclose(spec.energies, np.ones(36))


def test_diagonalize_rejects_asymmetric():
    m = np.zeros((36, 36))
    m[0, 1] = 1e-6
    with pytest.raises(ValueError):
        diagonalize(m)


def test_spectrum_invariants():
    spec = spectrum_of(0.7, 0.3)
    v = spec.states
    assert np.abs(v.T @ v - np.eye(36)).max() <= 1e-10
    h = build_hamiltonian(ModelParams(j=1.0, j1=0.7, h=0.3))
    residual = np.abs(h @ v - v * spec.energies).max()
    assert residual <= 1e-10 * np.abs(h).max()
    assert spec.z_at(0.0) == pytest.approx(36.0)
    assert np.all(np.diff(spec.energies) >= -1e-14)


def test_lowest_level_closed_form():
    spec = spectrum_of(0.5, 0.0)
    assert spec.energies[0] == pytest.approx(-2 - 0.75 * 0.5, abs=1e-12)


def test_spectrum_matches_closed_form_multiset():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p = ModelParams(j=rng.uniform(0.5, 2), j1=rng.uniform(0, 3), h=rng.uniform(-4, 4))
        numeric = diagonalize(build_hamiltonian(p)).energies
        analytic = np.sort([closed_form_energy(lab, p) for lab in all_labels()])
        scale = max(abs(p.j), abs(p.j1), abs(p.h))
        assert np.abs(numeric - analytic).max() <= 1e-9 * scale


def test_field_reversal_spectrum():
    plus = spectrum_of(0.8, 1.3).energies
    minus = spectrum_of(0.8, -1.3).energies
    assert_allclose(plus, minus, atol=1e-12)


def test_zero_field_multiplet_structure():
    # each (sigma1, sigma2, sigma_T) level carries 2*sigma_T+1 states and the
    # four composite sectors hold 4 + 8 + 8 + 16 states
    p = ModelParams(j=1.0, j1=0.37, h=0.0)
    numeric = diagonalize(build_hamiltonian(p)).energies
    sector_total = {}
    for lab in all_labels():
        energy = closed_form_energy(lab, p)
        matches = int(np.sum(np.abs(numeric - energy) <= 1e-9))
        multiplet = [
            o for o in all_labels()
            if (o.sigma1, o.sigma2, o.sigma_t) == (lab.sigma1, lab.sigma2, lab.sigma_t)
        ]
        # degenerate (sigma1,sigma2) <-> (sigma2,sigma1) partners share levels
        partners = [
            o for o in all_labels()
            if {o.sigma1, o.sigma2} == {lab.sigma1, lab.sigma2} and o.sigma_t == lab.sigma_t
        ]
        assert len(multiplet) == 2 * lab.sigma_t + 1
        assert matches == len(partners)
        key = (lab.sigma1, lab.sigma2)
        sector_total[key] = sector_total.get(key, 0) + 1
    assert sector_total == {(0.5, 0.5): 4, (0.5, 1.5): 8, (1.5, 0.5): 8, (1.5, 1.5): 16}


# ---------------------------------------------------------------- labels


def test_label_text():
    assert QuantumLabel(0, 0.5, 0.5, 0).text() == "0,1/2,1/2"
    assert QuantumLabel(2, 0.5, 1.5, 2).text() == "2,1/2,3/2"
    assert QuantumLabel(-1, 1.5, 1.5, 1).text() == "-1,3/2,3/2"


def test_label_validation():
    with pytest.raises(ValueError):
        QuantumLabel(0, 0.5, 0.5, 2)  # sigma_T out of range
    with pytest.raises(ValueError):
        QuantumLabel(3, 0.5, 1.5, 2)  # |sTz| > sT
    with pytest.raises(ValueError):
        QuantumLabel(0, 1.0, 0.5, 0.5)  # bad dimer spin


def test_closed_form_energy_examples():
    p = ModelParams(j=1.0, j1=0.5, h=0.0)
    singlet = QuantumLabel(0, 0.5, 0.5, 0)
    assert closed_form_energy(singlet, p) == pytest.approx(-2 - 0.75 * 0.5)
    saturated = QuantumLabel(3, 1.5, 1.5, 3)
    p2 = ModelParams(j=1.0, j1=2.0, h=1.0)
    assert closed_form_energy(saturated, p2) == pytest.approx(1 + 4.5 - 3)


def test_singlet_crossing_at_j1_equals_j():
    # E(|0,1/2,1/2>) = E(|0,3/2,3/2>) exactly at J1 = J
    a = QuantumLabel(0, 0.5, 0.5, 0)
    b = QuantumLabel(0, 1.5, 1.5, 0)
    p = ModelParams(j=1.0, j1=1.0, h=0.1)
    assert closed_form_energy(a, p) == pytest.approx(closed_form_energy(b, p), abs=1e-12)
    p2 = ModelParams(j=1.0, j1=0.99, h=0.1)
    assert closed_form_energy(a, p2) < closed_form_energy(b, p2)


def test_classify_examples():
    assert [lab.text() for lab in classify_ground_state(ModelParams(j=1, j1=0.5, h=0.1))] == [
        "0,1/2,1/2"
    ]
    assert [lab.text() for lab in classify_ground_state(ModelParams(j=1, j1=2.0, h=6.1))] == [
        "3,3/2,3/2"
    ]
    degenerate = classify_ground_state(ModelParams(j=1, j1=1.0, h=0.1))
    assert sorted(lab.text() for lab in degenerate) == ["0,1/2,1/2", "0,3/2,3/2"]


# ---------------------------------------------------------------- thermal states


def test_gibbs_infinite_temperature():
    state = gibbs_state(spectrum_of(0.5, 0.3), beta=0.0)
    assert_allclose(state.rho, np.eye(36) / 36, atol=1e-14)
    assert state.z == pytest.approx(36.0)


def test_gibbs_invariants():
    spec = spectrum_of(1.2, 0.7)
    state = gibbs_state(spec, beta=2.5)
    assert state.rho.trace() == pytest.approx(1.0, abs=1e-12)
    assert np.abs(state.rho - state.rho.T).max() <= 1e-14
    assert np.linalg.eigvalsh(state.rho).min() >= -1e-12
    h = build_hamiltonian(ModelParams(j=1.0, j1=1.2, h=0.7))
    comm = h @ state.rho - state.rho @ h
    assert np.abs(comm).max() <= 1e-10 * np.abs(h).max()


def test_gibbs_rejects_negative_beta():
    with pytest.raises(ValueError):
        gibbs_state(spectrum_of(0.5, 0.1), beta=-1.0)
    with pytest.raises(ValueError):
        gibbs_state(spectrum_of(0.5, 0.1), beta=math.inf)


def test_ground_state_projector_limit():
    spec = spectrum_of(0.5, 0.1)  # unique ground state
    state = gibbs_state(spec, beta=1e4)
    projector = np.outer(spec.states[:, 0], spec.states[:, 0])
    assert np.abs(state.rho - projector).max() <= 1e-12


def test_ground_manifold_matches_large_beta_gibbs():
    spec = spectrum_of(1.0, 0.1)  # doubly degenerate ground state
    manifold = ground_manifold(spec)
    assert manifold.z_shifted == pytest.approx(2.0)
    limit = gibbs_state(spec, beta=1e6)
    assert np.abs(manifold.rho - limit.rho).max() <= 1e-9


def test_ground_manifold_rank_one():
    manifold = ground_manifold(spectrum_of(0.5, 0.1))
    assert manifold.z_shifted == pytest.approx(1.0)
    eigs = np.linalg.eigvalsh(manifold.rho)
    assert eigs[-1] == pytest.approx(1.0, abs=1e-12)


def test_eigenspace_state():
    p = ModelParams(j=1.0, j1=0.5, h=0.9)
    spec = diagonalize(build_hamiltonian(p))
    target = closed_form_energy(QuantumLabel(1, 0.5, 1.5, 1), p)
    state = eigenspace_state(spec, target)
    assert state.z_shifted == pytest.approx(2.0)  # two dimer-order partners
    assert state.rho.trace() == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        eigenspace_state(spec, 123.456)
