import numpy as np
import pytest

from posqubit.errors import BasisMismatchError, NonHermitianError
from posqubit.qcore import (
    ENERGY,
    HBAR,
    POSITION,
    StateVector,
    eig_hermitian,
    evolve_rk4,
    fix_phase,
    matexp_unitary,
    require_hermitian,
    rk4_step,
)

rng = np.random.default_rng(101)


def random_hermitian(n):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (m + m.conj().T)


def test_require_hermitian_accepts_and_rejects():
    h = random_hermitian(3)
    assert np.allclose(require_hermitian(h), h)
    bad = h.copy()
    bad[0, 1] += 1e-6
    with pytest.raises(NonHermitianError):
        require_hermitian(bad)
    with pytest.raises(NonHermitianError):
        require_hermitian(np.ones((2, 3)))


def test_fix_phase_makes_pivot_real_positive():
    v = np.array([0.3 * np.exp(1j * 0.7), -0.9 * np.exp(1j * 2.1)])
    w = fix_phase(v)
    piv = w[np.argmax(np.abs(w))]
    assert abs(piv.imag) < 1e-15 and piv.real > 0
    assert np.allclose(np.abs(w), np.abs(v))


def test_eig_hermitian_matches_numpy_and_is_deterministic():
    for _ in range(20):
        h = random_hermitian(4)
        e, v = eig_hermitian(h)
        assert np.all(np.diff(e) >= -1e-12)
        for k in range(4):
            assert np.allclose(h @ v[:, k], e[k] * v[:, k], atol=1e-10)
        e2, v2 = eig_hermitian(h)
        assert np.array_equal(v, v2)


def test_matexp_unitary_is_unitary_and_matches_series():
    h = random_hermitian(3)
    dt = 0.37
    u = matexp_unitary(h, dt)
    assert np.allclose(u.conj().T @ u, np.eye(3), atol=1e-12)
    # compare against scipy-free scaling and squaring via numpy on a small step
    import scipy.linalg as sla

    assert np.allclose(u, sla.expm(-1j * h * dt / HBAR), atol=1e-12)


def test_rk4_step_scalar_exponential_order():
    # dy/dt = -y, one step error should scale like dt^5
    f = lambda t, y: -y
    errs = []
    for dt in (0.1, 0.05):
        y = rk4_step(f, 0.0, np.array([1.0]), dt)
        errs.append(abs(y[0] - np.exp(-dt)))
    assert errs[1] < errs[0] / 20.0


def test_evolve_rk4_phase_accuracy():
    h = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    psi = evolve_rk4(lambda t: h, np.array([1.0, 1.0]) / np.sqrt(2), 0.0, 2.0, 1e-3)
    exact = np.array([np.exp(-2j), np.exp(2j)]) / np.sqrt(2)
    assert np.max(np.abs(psi - exact)) < 1e-10


def test_evolve_rk4_partial_final_step():
    h = np.array([[1.0]], dtype=complex)
    psi = evolve_rk4(lambda t: h, np.array([1.0]), 0.0, 0.2501, 1e-1)
    assert abs(psi[0] - np.exp(-1j * 0.2501)) < 1e-6


def test_statevector_basics():
    s = StateVector(np.array([3.0, 4.0]))
    assert s.basis == POSITION
    assert s.dim == 2
    assert abs(s.norm() - 5.0) < 1e-15
    assert abs(s.normalized().norm() - 1.0) < 1e-15
    with pytest.raises(BasisMismatchError):
        s.require_basis(ENERGY)
    with pytest.raises(BasisMismatchError):
        StateVector(np.array([1.0]), basis="momentum")
    with pytest.raises(ValueError):
        StateVector(np.zeros((2, 2)))
