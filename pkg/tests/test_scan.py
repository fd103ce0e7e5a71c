import math

import numpy as np
import pytest

from tetraneg.csvio import scan_csv_text
from tetraneg.model import ModelParams, build_hamiltonian, classify_ground_state, diagonalize, gibbs_state
from tetraneg.negativity import genuine_tripartite, one_vs_two_negativity, two_spin_negativity
from tetraneg.scan import (
    OBSERVABLES,
    Axis,
    ScanGrid,
    SpectralTable,
    field_scan,
    node_observables,
    phase_boundaries,
    thermal_scan,
    threshold_profile,
)

SQ = math.sqrt


def obs(record, name):
    return record.values[OBSERVABLES.index(name)]


def test_axis_validation():
    with pytest.raises(ValueError):
        Axis("x", 0.0, 1.0, 1)
    with pytest.raises(ValueError):
        Axis("x", 1.0, 0.5, 11)


def test_spectral_table_matches_direct_diagonalization():
    table = SpectralTable(j1=0.8)
    for h in (0.0, 0.7, 2.1):
        direct = diagonalize(build_hamiltonian(ModelParams(j=1.0, j1=0.8, h=h)))
        np.testing.assert_allclose(np.sort(table.energies(h)), direct.energies, atol=1e-11)
        state = gibbs_state(direct, beta=2.0)
        np.testing.assert_allclose(table.rho(h, 0.5), state.rho, atol=1e-12)


def test_node_observables_match_public_api():
    table = SpectralTable(j1=1.5)
    rho = table.rho(h=2.0, kt=0.3)
    values = dict(zip(OBSERVABLES, node_observables(rho)))
    assert values["N_mu1_S1S2"] == pytest.approx(
        genuine_tripartite(rho, ("mu1", "S1", "S2")).genuine, abs=1e-14
    )
    assert values["N_S2_vs_mu1mu2"] == pytest.approx(
        one_vs_two_negativity(rho, "S2", ("mu1", "mu2")).value, abs=1e-14
    )
    assert values["N_mu1_vs_S1"] == pytest.approx(
        two_spin_negativity(rho, "mu1", "S1").value, abs=1e-14
    )
    # mirror columns match their partners to eigensolver accuracy
    assert values["N_S1_vs_mu1"] == pytest.approx(values["N_mu1_vs_S1"], abs=1e-12)
    assert values["N_S2_vs_mu2"] == pytest.approx(values["N_mu2_vs_S2"], abs=1e-12)


def test_field_scan_nodes():
    grid = ScanGrid(axes=(Axis("j1_over_j", 0.5, 2.0, 4), Axis("h_over_j", 0.1, 5.0, 8)))
    records = field_scan(grid)
    assert len(records) == 32
    by_node = {(round(r.j1_over_j, 9), round(r.h_over_j, 9)): r for r in records}

    node = by_node[(0.5, 0.1)]
    assert [lab.text() for lab in node.labels] == ["0,1/2,1/2"]
    assert not node.degenerate
    genuine = ((SQ(97) - 1) / 18 * (4 * SQ(5) + SQ(17) + 3) / 18 / 3) ** (1 / 3)
    assert obs(node, "N_mu1_S1S2") == pytest.approx(genuine, abs=1e-9)
    assert obs(node, "N_mu1_mu2S2") == 0.0

    node = by_node[(1.5, 5.0)]  # h > 3 J1 -> saturated
    assert obs(node, "N_mu1_S1S2") == 0.0
    assert obs(node, "N_mu1_mu2S2") == 0.0

    node = by_node[(2.0, 1.5)]  # |0,3/2,3/2> phase
    assert obs(node, "N_mu1_vs_mu2S2") == pytest.approx(0.25, abs=1e-9)


def test_scan_phase_labels_match_argmin():
    grid = ScanGrid(axes=(Axis("j1_over_j", 0.2, 1.8, 5), Axis("h_over_j", 0.0, 6.0, 7)))
    for rec in field_scan(grid):
        expected = classify_ground_state(ModelParams(j=1.0, j1=rec.j1_over_j, h=rec.h_over_j))
        assert rec.labels == tuple(expected)
        assert rec.degenerate == (len(expected) > 1)


def test_saturated_region_scans_to_zero():
    grid = ScanGrid(axes=(Axis("j1_over_j", 1.0, 2.0, 3), Axis("h_over_j", 6.2, 7.0, 3)))
    for rec in field_scan(grid):
        assert obs(rec, "N_mu1_S1S2") == 0.0
        assert obs(rec, "N_mu1_mu2S2") == 0.0


def test_thermal_scan_hot_limit():
    grid = ScanGrid(
        axes=(Axis("kt_over_j", 100.0, 101.0, 2), Axis("h_over_j", 0.0, 3.0, 3)),
        fixed=(("j1_over_j", 0.5),),
    )
    for rec in thermal_scan(grid):
        assert max(rec.values) < 1e-6


def test_thermal_scan_requires_j1():
    grid = ScanGrid(axes=(Axis("kt_over_j", 0.1, 1.0, 3), Axis("h_over_j", 0.0, 1.0, 3)))
    with pytest.raises(ValueError):
        thermal_scan(grid)


def test_worker_count_does_not_change_output():
    grid = ScanGrid(axes=(Axis("j1_over_j", 0.0, 2.0, 6), Axis("h_over_j", 0.0, 6.0, 6)))
    serial = scan_csv_text(field_scan(grid, workers=1))
    parallel = scan_csv_text(field_scan(grid, workers=3))
    assert serial == parallel


# ---------------------------------------------------------------- boundaries


def test_phase_boundaries_known_segments():
    segments = phase_boundaries(0.0, 2.0, 6.0)
    sloped = {(round(s.slope, 9), round(s.intercept, 9), round(s.j1_range[0], 6),
               round(s.j1_range[1], 6))
              for s in segments if s.kind == "sloped"}
    assert (1.0, 0.0, 0.0, 1.0) in sloped       # |0,1/2,1/2> -> |1,1/2,1/2>
    assert (0.5, 1.5, 0.0, 1.0) in sloped       # -> |2,(1/2,3/2)>
    assert (1.5, 1.5, 0.0, 1.0) in sloped       # -> saturation below J1=J
    assert (1.0, 0.0, 1.0, 2.0) in sloped       # |0,3/2,3/2> -> |1,3/2,3/2>
    assert (2.0, 0.0, 1.0, 2.0) in sloped
    assert (3.0, 0.0, 1.0, 2.0) in sloped       # saturation h = 3 J1
    vertical = [s for s in segments if s.kind == "vertical"]
    assert len(vertical) == 1
    assert vertical[0].j1 == pytest.approx(1.0, abs=1e-9)
    assert vertical[0].h_range[0] == pytest.approx(0.0, abs=1e-9)
    assert vertical[0].h_range[1] == pytest.approx(3.0, abs=1e-9)


def test_saturation_segment_labels():
    segments = phase_boundaries(1.0, 2.0, 6.5)
    sat = [s for s in segments if s.kind == "sloped" and s.slope == pytest.approx(3.0)]
    assert sat
    assert all(lab.text() == "3,3/2,3/2" for lab in sat[0].upper_labels)


def test_boundaries_agree_with_argmin_scan():
    # just below each crossing the argmin gives the lower phase, just above
    # it the upper phase, and the label set changes nowhere else
    segments = phase_boundaries(0.0, 2.0, 6.0)
    h_step = 0.01
    for j1 in (0.4, 1.3):
        active = [s for s in segments
                  if s.kind == "sloped" and s.j1_range[0] <= j1 <= s.j1_range[1]]
        crossings = sorted(s.h_at(j1) for s in active)
        for seg in active:
            hc = seg.h_at(j1)
            below = classify_ground_state(ModelParams(j=1.0, j1=j1, h=hc - h_step))
            above = classify_ground_state(ModelParams(j=1.0, j1=j1, h=hc + h_step))
            assert set(below) == set(seg.lower_labels)
            assert set(above) == set(seg.upper_labels)
        changes = 0
        labels = None
        for h in np.arange(h_step / 2, 6.0, h_step):  # offset to dodge exact ties
            now = tuple(classify_ground_state(ModelParams(j=1.0, j1=j1, h=h)))
            changes += labels is not None and now != labels
            labels = now
        assert changes == len(crossings)


def test_every_node_classified():
    rng = np.random.default_rng(8)
    for _ in range(50):
        p = ModelParams(j=1.0, j1=rng.uniform(0, 2), h=rng.uniform(0, 6))
        assert classify_ground_state(p)


# ---------------------------------------------------------------- thresholds


def test_threshold_profile_attached_interval():
    intervals = threshold_profile(0.5, 0.1, t_max=0.6, observable="N_mu1_S1S2")
    assert len(intervals) == 1
    assert intervals[0][0] == 0.0
    assert 0.1 < intervals[0][1] < 0.6


def test_threshold_profile_deep_saturation_empty():
    assert threshold_profile(1.5, 20.0, t_max=1.0, observable="N_mu1_S1S2") == []


def test_threshold_profile_validation():
    with pytest.raises(ValueError):
        threshold_profile(0.5, 0.1, t_max=0.0)
