import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tetraneg import _backend
from tetraneg.model import ModelParams, build_hamiltonian, diagonalize, ground_manifold
from tetraneg.negativity import one_vs_two_negativity

pytestmark = pytest.mark.skipif(
    not _backend.have_compiled(), reason="compiled core not built"
)


@settings(max_examples=25, deadline=None)
@given(
    arrays(
        np.float64,
        (12, 12),
        elements=st.floats(min_value=-5, max_value=5, allow_nan=False),
    )
)
def test_jacobi_agrees_with_lapack(raw):
    a = raw + raw.T
    with _backend.use_backend("compiled"):
        w, v = _backend.eigh_sym(a)
    assert np.abs(np.sort(w) - w).max() == 0.0
    assert np.abs(v.T @ v - np.eye(12)).max() <= 1e-12
    assert np.abs(a @ v - v * w).max() <= 1e-12 * max(1.0, np.abs(a).max())
    np.testing.assert_allclose(w, np.linalg.eigvalsh(a), atol=1e-11)
    with _backend.use_backend("compiled"):
        np.testing.assert_allclose(_backend.eigvalsh_sym(a), w, atol=1e-12)


def test_jacobi_deterministic():
    rng = np.random.default_rng(2)
    a = rng.normal(size=(18, 18))
    a = a + a.T
    with _backend.use_backend("compiled"):
        w1, v1 = _backend.eigh_sym(a)
        w2, v2 = _backend.eigh_sym(a)
    assert np.array_equal(w1, w2)
    assert np.array_equal(v1, v2)


def test_jacobi_rejects_non_square():
    from tetraneg import _core

    with pytest.raises(ValueError):
        _core.jacobi_eigh(np.zeros((3, 4)))


def test_large_matrices_fall_through_to_lapack():
    # above the crossover the compiled backend must defer to LAPACK
    a = np.diag(np.arange(36.0))
    with _backend.use_backend("compiled"):
        w, _ = _backend.eigh_sym(a)
    np.testing.assert_allclose(w, np.arange(36.0))


def test_backends_agree_on_negativities():
    spec = diagonalize(build_hamiltonian(ModelParams(j=1.0, j1=0.5, h=0.1)))
    state = ground_manifold(spec)
    with _backend.use_backend("pure"):
        pure = one_vs_two_negativity(state, "mu1", ("S1", "S2")).value
    with _backend.use_backend("compiled"):
        compiled = one_vs_two_negativity(state, "mu1", ("S1", "S2")).value
    assert abs(pure - compiled) <= 1e-12


def test_use_backend_restores_previous():
    before = _backend.backend_name()
    with _backend.use_backend("pure"):
        assert _backend.backend_name() == "pure"
    assert _backend.backend_name() == before
    with pytest.raises(ValueError):
        with _backend.use_backend("fancy"):
            pass
