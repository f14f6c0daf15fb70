"""Single position-based charge qubit in the tight-binding picture.

A qubit is one electron on a double quantum dot described by the 2x2
Hamiltonian

    H = [[Ep1(t),             |ts| e^{+i alpha}],
         [|ts| e^{-i alpha},  Ep2(t)          ]]

in the position basis (|x1>, |x2>).  The module provides the closed-form
eigenstructure, adiabatic and driven evolution, the Rabi-style evolution
matrix assembled from energy integrals, the effective position-basis
Hamiltonian produced by a resonant E12 channel, the inversion that
recovers E12 from the effective hopping terms, the microwave-driven
renormalized Hamiltonian and the u1/u2 propagator formalism.
"""

from dataclasses import dataclass

import numpy as np

from . import signals
from .errors import (
    DegenerateSpectrumError,
    NonHermitianDriveError,
    SingularExtractionError,
)
from .qcore import ENERGY, HBAR, StateVector, rk4_step


@dataclass
class QubitParams:
    """Time-dependent qubit parameters; numbers are promoted to constants."""

    ep1: object = 0.0
    ep2: object = 0.0
    ts_mag: object = 1.0
    alpha: object = 0.0

    def __post_init__(self):
        self.ep1 = signals.as_signal(self.ep1)
        self.ep2 = signals.as_signal(self.ep2)
        self.ts_mag = signals.as_signal(self.ts_mag)
        self.alpha = signals.as_signal(self.alpha)


def build_h2(params, t):
    """Position-basis 2x2 Hamiltonian at time t.  Hermitian by construction."""
    ts = params.ts_mag(t)
    al = params.alpha(t)
    off = ts * np.exp(1j * al)
    return np.array(
        [[params.ep1(t), off], [np.conj(off), params.ep2(t)]], dtype=complex
    )


@dataclass
class EigenCoeffs:
    """Closed-form eigensystem of the 2x2 qubit Hamiltonian.

    Ground state |E1> = a|x1> + b|x2>, excited |E2> = c|x1> + d|x2>,
    with b and d real and each row normalized.
    """

    e1: float
    e2: float
    a: complex
    b: float
    c: complex
    d: float

    def basis_matrix(self):
        """Rows are the eigenstates expressed in the position basis."""
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def ground(self):
        return np.array([self.a, self.b], dtype=complex)

    def excited(self):
        return np.array([self.c, self.d], dtype=complex)


def eigencoeffs(params, t):
    """Closed-form eigenvalues and eigenvector coefficients at time t.

    E_{1,2} = (Ep1+Ep2)/2 -/+ sqrt(((Ep2-Ep1)/2)^2 + |ts|^2).  Raises
    DegenerateSpectrumError when the gap is numerically zero.
    """
    ep1 = params.ep1(t)
    ep2 = params.ep2(t)
    ts = params.ts_mag(t)
    al = params.alpha(t)

    mean = 0.5 * (ep1 + ep2)
    delta = 0.5 * (ep2 - ep1)
    s = np.hypot(delta, ts)
    e1 = mean - s
    e2 = mean + s
    if (e2 - e1) < 1e-14 * max(abs(e1), abs(e2), 1.0):
        raise DegenerateSpectrumError(
            f"spectrum degenerate at t={t}: E2-E1={e2 - e1:.3e}"
        )

    if ts == 0.0:
        # alpha-free branch: eigenvectors are the position basis
        if ep1 <= ep2:
            return EigenCoeffs(e1, e2, 1.0 + 0j, 0.0, 0.0 + 0j, 1.0)
        return EigenCoeffs(e1, e2, 0.0 + 0j, 1.0, 1.0 + 0j, 0.0)

    # stable forms of delta+s and s-delta avoiding cancellation
    p = delta + s if delta >= 0.0 else ts * ts / (s - delta)
    q = s - delta if delta <= 0.0 else ts * ts / (s + delta)
    phase = np.exp(1j * al)
    n1 = np.hypot(p, ts)
    n2 = np.hypot(q, ts)
    a = p * phase / n1
    b = -ts / n1
    c = q * phase / n2
    d = ts / n2
    return EigenCoeffs(e1, e2, a, b, c, d)


def evolve_adiabatic(params, state, t0, t):
    """Diagonal-phase evolution of an energy-basis state.

    Each amplitude acquires exp(-(i/hbar) * integral of E_k); populations
    are exactly preserved.
    """
    state.require_basis(ENERGY)
    if state.dim != 2:
        raise ValueError("evolve_adiabatic acts on two-component states")

    def energy(which):
        def sig(tp):
            co = eigencoeffs(params, tp)
            return co.e1 if which == 1 else co.e2

        return sig

    ph1 = signals.integrate(energy(1), t0, t) / HBAR
    ph2 = signals.integrate(energy(2), t0, t) / HBAR
    amps = state.amps * np.array([np.exp(-1j * ph1), np.exp(-1j * ph2)])
    return StateVector(amps, ENERGY)


def analytic_c1c2(c1_0, c2_0, ep, ts_mag, v1, v2, t0, t):
    """Closed-form position amplitudes for symmetric wells under weak,
    node-diagonal drive potentials V1, V2."""
    tau = (t - t0) / HBAR
    ph_v1 = signals.integrate(v1, t0, t) / HBAR
    ph_v2 = signals.integrate(v2, t0, t) / HBAR
    common = np.exp(-1j * ep * tau)
    co = np.cos(ts_mag * tau)
    si = np.sin(ts_mag * tau)
    c1 = np.exp(-1j * ph_v1) * common * (co * c1_0 - 1j * si * c2_0)
    c2 = np.exp(-1j * ph_v2) * common * (-1j * si * c1_0 + co * c2_0)
    return c1, c2


def rabi_evolution_matrix(e1, e2, e12, t0, t):
    """Energy-basis evolution matrix with the time-ordering replaced by
    plain integrals of E1, E2 and the resonant channel E12.

    Exact for constant signals; for E12 = 0 it reduces to the diagonal
    adiabatic operator exactly.
    """
    e1 = signals.as_signal(e1)
    e2 = signals.as_signal(e2)
    e12 = signals.as_signal(e12)
    avg = signals.integrate(lambda tp: 0.5 * (e1(tp) + e2(tp)), t0, t)
    half_gap = signals.integrate(lambda tp: 0.5 * (e1(tp) - e2(tp)), t0, t)
    i12 = signals.integrate(e12, t0, t)
    omega = np.sqrt(half_gap * half_gap + abs(i12) ** 2)
    theta = omega / HBAR
    sinc = np.sin(theta) / theta if theta > 1e-12 else 1.0 - theta * theta / 6.0
    m = np.array([[half_gap, i12], [np.conj(i12), -half_gap]], dtype=complex)
    u = np.cos(theta) * np.eye(2) - 1j * (sinc / HBAR) * m
    return np.exp(-1j * avg / HBAR) * u


@dataclass
class EffectiveHamiltonianTerms:
    """Position-basis effective terms generated by a resonant E12 channel."""

    ep1_eff: float
    ep2_eff: float
    ts12_eff: complex
    ts21_eff: complex


def effective_hamiltonian(coeffs0, e1, e2, e12, t, t0=0.0):
    """Effective position-basis Hamiltonian terms at time t.

    ``coeffs0`` are the eigencoefficients frozen at t0; E1, E2 and the
    complex channel E12 are signals evaluated at t.  The E12 channel is
    modulated by the gap phase e^{i (E2-E1)(t-t0)/hbar}.
    """
    e1v = signals.as_signal(e1)(t)
    e2v = signals.as_signal(e2)(t)
    e12v = signals.as_signal(e12)(t)
    a, b, c, d = coeffs0.a, coeffs0.b, coeffs0.c, coeffs0.d
    mod = e12v * np.exp(1j * (e2v - e1v) * (t - t0) / HBAR)

    ep1_eff = abs(a) ** 2 * e1v + abs(c) ** 2 * e2v + 2.0 * np.real(a * np.conj(c) * mod)
    ep2_eff = abs(b) ** 2 * e1v + abs(d) ** 2 * e2v + 2.0 * np.real(b * np.conj(d) * mod)
    ts21_eff = a * np.conj(b) * e1v + c * np.conj(d) * e2v + mod * a * np.conj(d)
    ts12_eff = np.conj(ts21_eff)
    return EffectiveHamiltonianTerms(ep1_eff, ep2_eff, ts12_eff, ts21_eff)


def extract_e12(ts12, ts21, coeffs, e1, e2):
    """Invert the effective hopping terms for the resonant channel E12.

    Valid at zero gap phase (t = t0).  The inversion divides by the
    ground-state coefficient a and by d, and is rejected when
    Re(a)*Im(a) or d is numerically zero.
    """
    a, b, c, d = coeffs.a, coeffs.b, coeffs.c, coeffs.d
    if abs(np.real(a) * np.imag(a)) < 1e-12 or abs(d) < 1e-12:
        raise SingularExtractionError(
            "extraction requires Re(a)*Im(a) != 0 and d != 0"
        )
    re_part = (np.real(ts21 + ts12) / 2.0 - np.real(a) * b * e1 - np.real(c) * d * e2) / d
    im_part = (
        np.real((ts21 - ts12) / 2j) - np.imag(a) * b * e1 - np.imag(c) * d * e2
    ) / d
    return (re_part + 1j * im_part) / a


def microwave_h2(ep, ts_mag, f1, f2, t):
    """Renormalized 2x2 Hamiltonian of two symmetric dots under a
    microwave drive: diagonal Ep +/- (f1+f2)/2, off-diagonal |ts| - (f1-f2)/2."""
    f1v = signals.as_signal(f1)(t)
    f2v = signals.as_signal(f2)(t)
    if abs(np.imag(complex(f1v))) > 1e-12 or abs(np.imag(complex(f2v))) > 1e-12:
        raise NonHermitianDriveError("drive signals must be real-valued")
    f1v, f2v = np.real(f1v), np.real(f2v)
    plus = 0.5 * (f1v + f2v)
    minus = 0.5 * (f1v - f2v)
    off = ts_mag - minus
    return np.array([[ep + plus, off], [off, ep - plus]], dtype=complex)


@dataclass
class MicrowaveEigens:
    """Exact eigenvalues of the driven Hamiltonian next to the quoted
    closed form Ep +/- sqrt(|ts|^2 - |ts|(f1-f2)), which drops a
    (f1-f2)^2/4 term."""

    exact: np.ndarray
    approx: np.ndarray
    discrepancy: float


def microwave_eigenvalues(ep, ts_mag, f1v, f2v):
    from .qcore import eig_hermitian

    h = microwave_h2(ep, ts_mag, f1v, f2v, 0.0)
    exact, _ = eig_hermitian(h)
    root = np.sqrt(complex(ts_mag * ts_mag - ts_mag * (f1v - f2v)))
    approx = np.array([ep - root, ep + root])
    disc = float(np.max(np.abs(exact - approx)))
    return MicrowaveEigens(exact, approx, disc)


def u1u2_evolve(ep, ts_mag, f1, u1_0, u2_0, t0, t, dt):
    """Propagator amplitudes u1, u2 integrated with RK4.

    u1 follows the upper branch i hbar du1/dt = (Ep + f1(t) + |ts|) u1 and
    u2 the lower branch with |ts| -> -|ts| (the two first-order
    factorizations of the second-order propagator equation).  For real f1
    both are pure phases, so |u1|^2 + |u2|^2 is conserved.
    """
    f1 = signals.as_signal(f1)

    def rhs(tp, y):
        base = ep + f1(tp)
        return (-1j / HBAR) * np.array(
            [(base + ts_mag) * y[0], (base - ts_mag) * y[1]]
        )

    y = np.array([u1_0, u2_0], dtype=complex)
    tp = t0
    while tp < t - 1e-15:
        step = min(dt, t - tp)
        y = rk4_step(rhs, tp, y, step)
        tp += step
    return y[0], y[1]


def greens_response(ep, ts_mag, f1, t0, t, dt, u1_0=1.0, u2_0=1.0):
    """Propagator response G(1,2,t) = u1(t) * conj(u2(t)).

    Defaults start from the excited eigenmode (c_e=1, c_g=0), i.e.
    u1(t0) = u2(t0) = 1, for which G is the pure phase
    e^{-2i|ts|(t-t0)/hbar}.
    """
    u1, u2 = u1u2_evolve(ep, ts_mag, f1, u1_0, u2_0, t0, t, dt)
    return u1 * np.conj(u2)


def greens_operator_residual(ep, ts_mag, f1, t0, t, dt, fd_step=1e-4):
    """Finite-difference check of the propagator's governing relation.

    Applies O = i hbar d/dt - Ep - f1(t) to G by central differences and
    compares against the closed-form action (2|ts| - Ep - f1(t)) G that
    follows from the two branch solutions; returns the absolute residual.
    """
    f1 = signals.as_signal(f1)
    g_m = greens_response(ep, ts_mag, f1, t0, t - fd_step, dt)
    g_0 = greens_response(ep, ts_mag, f1, t0, t, dt)
    g_p = greens_response(ep, ts_mag, f1, t0, t + fd_step, dt)
    dg = (g_p - g_m) / (2.0 * fd_step)
    applied = 1j * HBAR * dg - (ep + f1(t)) * g_0
    expected = (2.0 * ts_mag - ep - f1(t)) * g_0
    return abs(applied - expected)
