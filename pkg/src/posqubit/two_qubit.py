"""Two electrostatically coupled double quantum dots (swap-style gate).

Basis ordering for all 4x4 operations (BasisOrder4):

    index 0: |0,1>_U |0,1>_L      index 1: |0,1>_U |1,0>_L
    index 2: |1,0>_U |0,1>_L      index 3: |1,0>_U |1,0>_L

where |1,0> means the electron sits on the left node (node 1) of its
double dot and |0,1> on the right node (node 2).  The module builds the
Coulomb couplings from device geometry, assembles the 4x4 Hamiltonian,
gives the closed-form symmetric eigensystem, tests factorizability,
evolves the two-body state, and implements the mean-field one-way
coupling of a third double dot (controlled-NOT style).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import OccupancyNotNormalizedError
from .qcore import HBAR, StateVector, eig_hermitian, evolve_rk4, matexp_unitary

PARALLEL = "parallel"
COLLINEAR = "collinear"
PERPENDICULAR = "perpendicular"


@dataclass
class DotGeometry:
    """Dot spacings and the Coulomb prefactor (charge squared over permittivity)."""

    kind: str = COLLINEAR
    a: float = 1.0
    b: float = 1.0
    d: float = 1.0
    d1: float = 1.0
    d2: float = 1.0
    d3: float = 1.0
    coulomb_k: float = 1.0

    def __post_init__(self):
        if self.kind not in (PARALLEL, COLLINEAR, PERPENDICULAR):
            raise ValueError(f"unknown geometry kind {self.kind!r}")
        for name in ("a", "b", "d", "d1", "d2", "d3"):
            if getattr(self, name) <= 0:
                raise ValueError(f"geometry length {name} must be positive")
        if self.coulomb_k < 0:
            raise ValueError("coulomb_k must be nonnegative")


@dataclass
class CoulombCouplings:
    """Inter-system node-node Coulomb energies E_c(i, j')."""

    ec11: float
    ec22: float
    ec12: float
    ec21: float


def coulomb_couplings(geom):
    """Node-pair Coulomb couplings for the three supported geometries."""
    k = geom.coulomb_k
    if geom.kind == PARALLEL:
        near = k / geom.d1
        far = k / np.hypot(geom.d1, geom.a + geom.b)
        return CoulombCouplings(ec11=near, ec22=near, ec12=far, ec21=far)
    if geom.kind == COLLINEAR:
        span = geom.a + geom.b
        return CoulombCouplings(
            ec11=k / (geom.d + span),
            ec22=k / (geom.d + span),
            ec12=k / (geom.d + 2.0 * span),
            ec21=k / geom.d,
        )
    a, b, d1, d2 = geom.a, geom.b, geom.d1, geom.d2
    return CoulombCouplings(
        ec22=k / np.hypot(d1 + a + 1.5 * b, d2),
        ec21=k / np.hypot(d1 + 0.5 * b, d2),
        ec12=k / np.hypot(d1 + 1.5 * b + a, d2 + b + a),
        ec11=k / np.hypot(d1 + 0.5 * b, d2 + b + a),
    )


@dataclass
class SwapParams:
    """Symmetric-structure two-dot-pair parameters."""

    vs: float
    t_u: float
    t_l: float
    couplings: CoulombCouplings = field(
        default_factory=lambda: CoulombCouplings(0.0, 0.0, 0.0, 0.0)
    )

    def __post_init__(self):
        if self.t_u < 0 or self.t_l < 0:
            raise ValueError("hopping magnitudes must be nonnegative")


def build_h4(params, asymmetric_site_energies=None):
    """4x4 two-body Hamiltonian in BasisOrder4.

    The diagonal holds pairwise site energies plus the matching Coulomb
    coupling; t_l hops the lower system on index pairs (0,1), (2,3) and
    t_u the upper system on (0,2), (1,3); the anti-diagonal couplings
    (both electrons hopping at once) are zero.
    """
    cc = params.couplings
    if asymmetric_site_energies is None:
        ep1 = ep2 = ep1p = ep2p = params.vs
    else:
        ep1, ep2, ep1p, ep2p = asymmetric_site_energies
    h = np.zeros((4, 4), dtype=complex)
    h[0, 0] = ep2 + ep2p + cc.ec22
    h[1, 1] = ep2 + ep1p + cc.ec21
    h[2, 2] = ep1 + ep2p + cc.ec12
    h[3, 3] = ep1 + ep1p + cc.ec11
    h[0, 1] = h[1, 0] = h[2, 3] = h[3, 2] = params.t_l
    h[0, 2] = h[2, 0] = h[1, 3] = h[3, 1] = params.t_u
    return h


@dataclass
class SwapEigensystem:
    """Closed-form labeled eigensystem of the symmetric two-body Hamiltonian."""

    energies: np.ndarray  # labeled order (E1, E2, E3, E4)
    vectors: np.ndarray  # rows in the same labeled order
    sorted_energies: np.ndarray  # ascending, with matching sorted_vectors rows
    sorted_vectors: np.ndarray


def swap_eigensystem_symmetric(ec1s, ec2s, ts, vs):
    """Closed-form eigensystem when both dot pairs share Vs and hopping ts
    and the couplings satisfy Ec11=Ec22=Ec1s, Ec12=Ec21=Ec2s.

    E1 = Ec1s+2Vs and E2 = Ec2s+2Vs belong to the parameter-independent
    entangled vectors (-1,0,0,1)/sqrt(2) and (0,-1,1,0)/sqrt(2); E3/E4
    close the spectrum with 16 ts^2 under the square root.
    """
    if ts <= 0:
        raise ValueError("ts must be positive in the symmetric closed form")
    e1 = ec1s + 2.0 * vs
    e2 = ec2s + 2.0 * vs
    root = np.hypot(ec1s - ec2s, 4.0 * ts)
    e3 = 0.5 * ((ec1s + ec2s) - root + 4.0 * vs)
    e4 = 0.5 * ((ec1s + ec2s) + root + 4.0 * vs)

    v1 = np.array([-1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    v2 = np.array([0.0, -1.0, 1.0, 0.0]) / np.sqrt(2.0)
    x3 = 4.0 * ts / ((ec2s - ec1s) + root)
    x4 = 4.0 * ts / ((ec1s - ec2s) + root)
    v3 = np.array([1.0, -x3, -x3, 1.0])
    v3 = v3 / np.linalg.norm(v3)
    v4 = np.array([1.0, x4, x4, 1.0])
    v4 = v4 / np.linalg.norm(v4)

    energies = np.array([e1, e2, e3, e4])
    vectors = np.array([v1, v2, v3, v4], dtype=complex)
    order = np.argsort(energies, kind="stable")
    return SwapEigensystem(
        energies=energies,
        vectors=vectors,
        sorted_energies=energies[order],
        sorted_vectors=vectors[order],
    )


def is_factorizable(state):
    """Factorizability of a two-body state via tau = |c_a c_d - c_b c_c|.

    Returns (flag, 2 tau); 2 tau plays the role of a concurrence-style
    entanglement measure (1 for the maximally entangled vectors).
    """
    amps = state.amps if isinstance(state, StateVector) else np.asarray(state, dtype=complex)
    tau = abs(amps[0] * amps[3] - amps[1] * amps[2])
    return tau <= 1e-10, 2.0 * tau


def evolve4(h, state, t0, t, dt=1e-3):
    """Evolve a 4-component state under a constant matrix or a callable
    t -> matrix.  Constant path is exact (matrix exponential); callable
    path integrates the Schroedinger equation with RK4."""
    amps = state.amps if isinstance(state, StateVector) else np.asarray(state, dtype=complex)
    if callable(h):
        out = evolve_rk4(h, amps, t0, t, dt)
    else:
        out = matexp_unitary(h, t - t0) @ amps
    return StateVector(out, getattr(state, "basis", "position"))


def swap_occupancies(state):
    """Node occupancies (p1, p2, p1', p2') from BasisOrder4 marginals.

    p1 is the probability that the U electron sits on its node 1
    (indices 2, 3); p1' the same for the L electron (indices 1, 3).
    """
    amps = state.amps if isinstance(state, StateVector) else np.asarray(state, dtype=complex)
    pr = np.abs(amps) ** 2
    return (
        float(pr[2] + pr[3]),
        float(pr[0] + pr[1]),
        float(pr[1] + pr[3]),
        float(pr[0] + pr[2]),
    )


def cnot_meanfield_h2(geom, occupancies, vs2, t2):
    """Mean-field Hamiltonian of the target double dot (system 2) shifted
    by the occupancy-weighted Coulomb field of the four control nodes.

    ``occupancies`` is (p1, p2, p1', p2') for nodes 1, 2, 1', 2' of the
    control; the target sits a distance d3 down the control axis with
    transverse offset d32 = d3 - d2 for the primed pair.
    """
    p1, p2, p1p, p2p = occupancies
    if min(p1, p2, p1p, p2p) < -1e-12:
        raise OccupancyNotNormalizedError("occupancies must be nonnegative")
    k = geom.coulomb_k
    if k != 0.0:
        # each control pair must hold one electron (sum 1) or be absent (sum 0)
        for total in (p1 + p2, p1p + p2p):
            if abs(total - 1.0) > 1e-9 and abs(total) > 1e-9:
                raise OccupancyNotNormalizedError(
                    f"occupancies must sum to 1 (or 0 if absent), got {total}"
                )
    a, b, d1, d3 = geom.a, geom.b, geom.d1, geom.d3
    d32 = geom.d3 - geom.d2
    span = a + b
    diag1 = (
        vs2
        + k * p1 / (d3 + span)
        + k * p2 / d3
        + k * p1p / np.hypot(d32, d1 + 0.5 * b)
        + k * p2p / np.hypot(d32, d1 + a + 1.5 * b)
    )
    diag2 = (
        vs2
        + k * p1 / (d3 + 2.0 * span)
        + k * p2 / (d3 + span)
        + k * p1p / np.hypot(d32, d1 + 0.5 * b)
        + k * p2p / np.hypot(d32 + span, d1 + a + 1.5 * b)
    )
    return np.array([[diag1, t2], [t2, diag2]], dtype=complex)


@dataclass
class CnotRun:
    """Paired time series of the coupled control/target evolution."""

    t: np.ndarray
    control: np.ndarray  # (n, 4) two-body amplitudes
    target: np.ndarray  # (n, 2) target amplitudes
    occupancies: np.ndarray  # (n, 4) control node occupancies


def cnot_coupled_run(swap_params, control0, vs2, t2, target0, geom, t0, t, dt):
    """One-way coupled run: the control pair evolves under its own constant
    Hamiltonian; at each step its node occupancies parameterize the
    target's mean-field Hamiltonian, which is applied for one step.

    Both norms are conserved to integrator accuracy (each step is a
    unitary applied by matrix exponential of the frozen Hamiltonian).
    """
    h4 = build_h4(swap_params)
    control = np.asarray(
        control0.amps if isinstance(control0, StateVector) else control0, dtype=complex
    ).copy()
    target = np.asarray(
        target0.amps if isinstance(target0, StateVector) else target0, dtype=complex
    ).copy()

    n_steps = int(round((t - t0) / dt))
    times = t0 + dt * np.arange(n_steps + 1)
    c_hist = np.zeros((n_steps + 1, 4), dtype=complex)
    q_hist = np.zeros((n_steps + 1, 2), dtype=complex)
    occ_hist = np.zeros((n_steps + 1, 4))

    u4 = matexp_unitary(h4, dt)
    for i in range(n_steps + 1):
        occ = swap_occupancies(control)
        c_hist[i] = control
        q_hist[i] = target
        occ_hist[i] = occ
        if i == n_steps:
            break
        h2 = cnot_meanfield_h2(geom, occ, vs2, t2)
        target = matexp_unitary(h2, dt) @ target
        control = u4 @ control
    return CnotRun(t=times, control=c_hist, target=q_hist, occupancies=occ_hist)


def oracle_check_symmetric(ec1s, ec2s, ts, vs):
    """Numeric-diagonalization cross-check of the closed-form eigensystem.
    Returns the maximum eigenvalue deviation."""
    params = SwapParams(
        vs=vs,
        t_u=ts,
        t_l=ts,
        couplings=CoulombCouplings(ec11=ec1s, ec22=ec1s, ec12=ec2s, ec21=ec2s),
    )
    numeric, _ = eig_hermitian(build_h4(params))
    closed = swap_eigensystem_symmetric(ec1s, ec2s, ts, vs).sorted_energies
    return float(np.max(np.abs(numeric - closed)))
