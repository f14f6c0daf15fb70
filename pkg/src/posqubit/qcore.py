"""Core linear-algebra kernels for small quantum systems.

Dense complex matrices of fixed small dimension (2x2, 4x4, ...) with a
deterministic eigenvector phase convention, unitary propagation through
exact exponentiation, and a classical RK4 step for time-dependent
generators.  Energies are expressed in a user-chosen unit and hbar = 1
internally, so times carry the inverse of that unit.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BasisMismatchError, NonHermitianError

HBAR = 1.0

HERMITICITY_TOL = 1e-12

POSITION = "position"
ENERGY = "energy"


def require_hermitian(h, tol=HERMITICITY_TOL):
    """Return ``h`` as a complex array, raising if it is not Hermitian.

    The check is ``max |h - h^dag| <= tol`` entrywise.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NonHermitianError(f"expected a square matrix, got shape {h.shape}")
    defect = np.max(np.abs(h - h.conj().T))
    if defect > tol:
        raise NonHermitianError(f"hermiticity defect {defect:.3e} exceeds {tol:.3e}")
    return h


def fix_phase(vec):
    """Rotate a vector's global phase so its largest-magnitude component
    is real and positive.  Ties pick the lowest index."""
    vec = np.asarray(vec, dtype=complex)
    idx = int(np.argmax(np.abs(vec) > np.max(np.abs(vec)) - 1e-15))
    pivot = vec[idx]
    if abs(pivot) == 0.0:
        return vec.copy()
    return vec * (abs(pivot) / pivot)


def eig_hermitian(h, tol=HERMITICITY_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(energies, vectors)`` with energies ascending and vectors in
    columns, each phase-fixed so its largest-magnitude component is real
    positive.  Raises NonHermitianError when the input fails the
    Hermiticity check.
    """
    h = require_hermitian(h, tol)
    energies, vectors = np.linalg.eigh(h)
    vectors = np.column_stack([fix_phase(vectors[:, k]) for k in range(vectors.shape[1])])
    return energies, vectors


def matexp_unitary(h, dt, tol=HERMITICITY_TOL):
    """exp(-i * h * dt / hbar) for Hermitian ``h`` via eigendecomposition."""
    energies, vectors = eig_hermitian(h, tol)
    phases = np.exp(-1j * energies * dt / HBAR)
    return (vectors * phases) @ vectors.conj().T


def rk4_step(f, t, y, dt):
    """One classical Runge-Kutta step of ``dy/dt = f(t, y)``."""
    k1 = f(t, y)
    k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1)
    k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2)
    k4 = f(t + dt, y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def evolve_rk4(h_of_t, psi0, t0, t1, dt):
    """Integrate i hbar dpsi/dt = H(t) psi with RK4 at fixed step ``dt``.

    ``h_of_t`` maps time to a Hermitian matrix (not re-validated per step
    for speed).  The final partial step is shortened to land on ``t1``.
    """
    psi = np.asarray(psi0, dtype=complex).copy()

    def rhs(t, y):
        return (-1j / HBAR) * (h_of_t(t) @ y)

    t = t0
    while t < t1 - 1e-15:
        step = min(dt, t1 - t)
        psi = rk4_step(rhs, t, psi, step)
        t += step
    return psi


@dataclass
class StateVector:
    """Complex amplitude vector tagged with the basis it is written in."""

    amps: np.ndarray
    basis: str = POSITION

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=complex)
        if self.amps.ndim != 1:
            raise ValueError("state amplitudes must be a 1-D vector")
        if self.basis not in (POSITION, ENERGY):
            raise BasisMismatchError(f"unknown basis tag {self.basis!r}")

    @property
    def dim(self):
        return self.amps.shape[0]

    def norm(self):
        return float(np.linalg.norm(self.amps))

    def normalized(self):
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.amps / n, self.basis)

    def require_basis(self, basis):
        if self.basis != basis:
            raise BasisMismatchError(f"expected {basis!r} basis, got {self.basis!r}")
        return self


def require_dim(state, dim):
    if state.dim != dim:
        raise ValueError(f"expected a {dim}-component state, got {state.dim}")
    return state
