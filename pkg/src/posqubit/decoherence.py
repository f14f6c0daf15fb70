"""Coulomb-mediated energy exchange between two coupled charge qubits.

Two qubits A and B interact through four node-node Coulomb terms
k/d(i,j') |x_i x_j'><x_i x_j'|.  Rewriting each node term in the
two-qubit energy basis (ordering |E1A E1B>, |E1A E2B>, |E2A E1B>,
|E2A E2B>) splits it into four channels:

    r1 - diagonal energy renormalization,
    r2 - qubit B excitation/deexcitation (A unchanged),
    r3 - qubit A excitation/deexcitation (B unchanged),
    r4 - simultaneous two-qubit transitions.

Each node term is exactly rank one in the energy basis, which makes the
channel split systematic: with per-qubit overlap vectors
w = (<E1|x>, <E2|x>) the term is (k/d) v v^dag, v = kron(wA, wB).
The module also assembles the resonant base Hamiltonian, the total
decoherence matrix, the symmetric-case scalars, unitary density-matrix
evolution and its first-order angle factorization.
"""

from dataclasses import dataclass

import numpy as np

from . import signals
from .measurement import validate_density
from .qcore import HBAR, matexp_unitary, require_hermitian

NODE_PAIRS = ("11", "22", "12", "21")

# channel masks over the 4x4 energy-composite index (2*(pA-1) + (pB-1))
_R2 = np.zeros((4, 4), dtype=bool)
_R2[0, 1] = _R2[1, 0] = _R2[2, 3] = _R2[3, 2] = True
_R3 = np.zeros((4, 4), dtype=bool)
_R3[0, 2] = _R3[2, 0] = _R3[1, 3] = _R3[3, 1] = True
_R4 = np.zeros((4, 4), dtype=bool)
_R4[0, 3] = _R4[3, 0] = _R4[1, 2] = _R4[2, 1] = True


@dataclass
class QubitEnergyBasis:
    """Eigencoefficient sets (a, b, c, d) of qubits A and B."""

    coeffs_a: object
    coeffs_b: object


@dataclass
class NodeDistances:
    """Node-pair distances d(1,1'), d(2,2'), d(1,2'), d(2,1')."""

    d11: float
    d22: float
    d12: float
    d21: float

    def __post_init__(self):
        if min(self.d11, self.d22, self.d12, self.d21) <= 0:
            raise ValueError("all node distances must be positive")

    def of(self, pair):
        return getattr(self, "d" + pair)


@dataclass
class RenormalizationSplit:
    """One node term split into the four renormalization channels."""

    r1: np.ndarray
    r2: np.ndarray
    r3: np.ndarray
    r4: np.ndarray

    def total(self):
        return self.r1 + self.r2 + self.r3 + self.r4


def _overlap_vector(coeffs, node):
    """w = (<E1|x_node>, <E2|x_node>) for one qubit."""
    if node == "1":
        return np.array([np.conj(coeffs.a), np.conj(coeffs.c)])
    return np.array([np.conj(coeffs.b), np.conj(coeffs.d)])


def coulomb_node_term_energy_basis(node_pair, basis, distance, k):
    """One Coulomb node term k/d |x_i x_j'><x_i x_j'| in the energy basis,
    split into the r1..r4 channels.

    Channel coefficients are products of the per-qubit bra/ket overlap
    coefficients <E|x>: (1,1') uses (a,c) for both qubits, (2,2') uses
    (b,d), and the mixed pairs combine one of each.
    """
    if node_pair not in NODE_PAIRS:
        raise ValueError(f"node pair must be one of {NODE_PAIRS}")
    wa = _overlap_vector(basis.coeffs_a, node_pair[0])
    wb = _overlap_vector(basis.coeffs_b, node_pair[1])
    v = np.kron(wa, wb)
    full = (k / distance) * np.outer(v, v.conj())
    return RenormalizationSplit(
        r1=np.diag(np.diag(full)),
        r2=np.where(_R2, full, 0.0),
        r3=np.where(_R3, full, 0.0),
        r4=np.where(_R4, full, 0.0),
    )


def decoherence_matrix(basis, dist, k):
    """Sum of all four node terms (all channels) in the energy basis."""
    total = np.zeros((4, 4), dtype=complex)
    for pair in NODE_PAIRS:
        total += coulomb_node_term_energy_basis(pair, basis, dist.of(pair), k).total()
    return total


def renormalized_energies(e1a, e2a, e1b, e2b, basis, dist, k):
    """Pairwise eigenenergy sums plus the r1 diagonal shifts."""
    pairwise = np.array([e1a + e1b, e1a + e2b, e2a + e1b, e2a + e2b])
    shifts = np.real(np.diag(decoherence_matrix(basis, dist, k)))
    return pairwise + shifts


def build_h0_resonant(e1a, e2a, e1b, e2b, e12a, e12b, t):
    """Base Hamiltonian of the two uncoupled qubits with their resonant
    channels: diagonal pairwise sums, E12B on the B-transition entries
    (0,1), (2,3) and E12A on the A-transition entries (0,2), (1,3)."""
    e1a_v = signals.as_signal(e1a)(t)
    e2a_v = signals.as_signal(e2a)(t)
    e1b_v = signals.as_signal(e1b)(t)
    e2b_v = signals.as_signal(e2b)(t)
    e12a_v = signals.as_signal(e12a)(t)
    e12b_v = signals.as_signal(e12b)(t)
    h = np.diag(
        np.array(
            [e1a_v + e1b_v, e1a_v + e2b_v, e2a_v + e1b_v, e2a_v + e2b_v], dtype=complex
        )
    )
    h[0, 1] = h[2, 3] = e12b_v
    h[1, 0] = h[3, 2] = np.conj(e12b_v)
    h[0, 2] = h[1, 3] = e12a_v
    h[2, 0] = h[3, 1] = np.conj(e12a_v)
    return h


@dataclass
class SymmetricCase:
    """Closed-form scalars of the symmetric-basis reduction."""

    eab_r1: float
    hq1: float
    hq2: float
    hq3: float
    hq4: float


def symmetric_case(dist, k):
    """Symmetric-basis (|coeff| = 1/sqrt(2)) closed forms: the common r1
    shift and the four signed off-diagonal combinations."""
    c11 = k / dist.d11
    c22 = k / dist.d22
    c12 = k / dist.d12
    c21 = k / dist.d21
    return SymmetricCase(
        eab_r1=0.25 * (c11 + c22 + c12 + c21),
        hq1=0.25 * (-c12 + c21 + c11 - c22),
        hq2=0.25 * (c12 + c21 + c11 - c22),
        hq3=0.25 * (-c12 - c21 + c11 - c22),
        hq4=0.25 * (-c12 - c21 + c11 + c22),
    )


def energy_to_position(op, basis):
    """Rotate a two-qubit operator from the energy-composite basis back to
    the position-composite basis (x1x1', x1x2', x2x1', x2x2')."""
    sa = basis.coeffs_a.basis_matrix()
    sb = basis.coeffs_b.basis_matrix()
    m = np.kron(sa.T, sb.T)  # column p holds <x|E_p> per qubit
    return m @ op @ m.conj().T


def evolve_density_with_decoherence(
    rho0, h0, hdec, t0, t, dt=1e-3, paper_factorized=False
):
    """Unitary von-Neumann evolution of a two-qubit density matrix under
    H0 + Hdec.

    Constant matrices use the exact matrix exponential; callables are
    integrated with RK4 on the von-Neumann equation.  With
    ``paper_factorized`` the propagator is split into the off-diagonal
    decoherence factor times the diagonal phase (first-order
    factorization; exact when the two commute).
    """
    rho = validate_density(rho0, dim=4)
    span = t - t0
    if callable(h0) or callable(hdec):
        h0f = h0 if callable(h0) else (lambda tp: h0)
        hdecf = hdec if callable(hdec) else (lambda tp: hdec)

        def rhs(tp, r):
            h = h0f(tp) + hdecf(tp)
            return (-1j / HBAR) * (h @ r - r @ h)

        from .qcore import rk4_step

        tp = t0
        while tp < t - 1e-15:
            step = min(dt, t - tp)
            rho = rk4_step(rhs, tp, rho, step)
            tp += step
        return rho

    h0 = require_hermitian(h0)
    hdec = require_hermitian(hdec)
    if paper_factorized:
        diag = np.real(np.diag(h0) + np.diag(hdec))
        off = hdec - np.diag(np.diag(hdec))
        u = matexp_unitary(off, span) @ np.diag(np.exp(-1j * diag * span / HBAR))
    else:
        u = matexp_unitary(h0 + hdec, span)
    return u @ rho @ u.conj().T


@dataclass
class AngleDecomposition:
    """First-order angle parameterization of the density evolution.

    alpha holds the four diagonal phase angles (phase factor
    e^{i alpha_k}), theta the six upper-triangle decoherence angles
    Theta_ij = Hdec_ij (t-t0)/hbar; entry (j,i) uses the conjugate.
    """

    alpha: np.ndarray
    theta: dict

    def reconstruct(self, rho0):
        """First-order density matrix: F D rho0 D^dag F^dag with
        D = diag(e^{i alpha}) and F = I - i Theta."""
        d = np.diag(np.exp(1j * self.alpha))
        f = np.eye(4, dtype=complex)
        for (i, j), th in self.theta.items():
            f[i, j] += -1j * th
            f[j, i] += -1j * np.conj(th)
        return f @ d @ rho0 @ d.conj().T @ f.conj().T


def angle_decomposition(h0, hdec, t0, t):
    """Angles of the first-order factorized propagator for constant H0, Hdec."""
    h0 = require_hermitian(h0)
    hdec = require_hermitian(hdec)
    span = (t - t0) / HBAR
    alpha = -np.real(np.diag(h0) + np.diag(hdec)) * span
    theta = {}
    for i in range(4):
        for j in range(i + 1, 4):
            theta[(i, j)] = hdec[i, j] * span
    return AngleDecomposition(alpha=alpha, theta=theta)
