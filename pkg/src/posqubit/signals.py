"""Scalar time signals used as drives and time-dependent energies.

A signal is a plain callable t -> value.  Factories build the common
shapes; ``as_signal`` promotes bare numbers so APIs accept either.
Definite integrals use adaptive Simpson quadrature.
"""

import numpy as np

from .errors import SignalDomainError


def constant(value):
    """Signal that always returns ``value``."""

    def sig(t):
        return value

    return sig


def sinusoid(amplitude, omega, phase=0.0, offset=0.0):
    """offset + amplitude * sin(omega * t + phase)."""

    def sig(t):
        return offset + amplitude * np.sin(omega * t + phase)

    return sig


def table(times, values):
    """Piecewise-linear interpolation through sampled points.

    Evaluation outside [times[0], times[-1]] raises SignalDomainError.
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values)
    if times.ndim != 1 or times.shape != values.shape:
        raise ValueError("times and values must be 1-D arrays of equal length")
    if times.size < 2:
        raise ValueError("a tabulated signal needs at least two samples")
    if np.any(np.diff(times) <= 0):
        raise ValueError("sample times must be strictly increasing")

    def sig(t):
        if t < times[0] - 1e-12 or t > times[-1] + 1e-12:
            raise SignalDomainError(
                f"t={t} outside tabulated domain [{times[0]}, {times[-1]}]"
            )
        return float(np.interp(t, times, values))

    return sig


def as_signal(x):
    """Promote a number to a constant signal; pass callables through."""
    if callable(x):
        return x
    return constant(x)


def _simpson(f, a, fa, b, fb):
    m = 0.5 * (a + b)
    fm = f(m)
    return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, fa, b, fb, m, fm, whole, tol, depth):
    lm, flm, left = _simpson(f, a, fa, m, fm)
    rm, frm, right = _simpson(f, m, fm, b, fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return _adaptive(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) + _adaptive(
        f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1
    )


def integrate(signal, t0, t1, tol=1e-10):
    """Definite integral of a signal over [t0, t1], adaptive Simpson."""
    signal = as_signal(signal)
    if t1 == t0:
        return 0.0 * signal(t0)
    sign = 1.0
    if t1 < t0:
        t0, t1 = t1, t0
        sign = -1.0
    # seed with a few panels so periodic integrands are not missed
    grid = np.linspace(t0, t1, 9)
    vals = [signal(t) for t in grid]
    total = 0.0
    for k in range(len(grid) - 1):
        a, b = grid[k], grid[k + 1]
        fa, fb = vals[k], vals[k + 1]
        m, fm, whole = _simpson(signal, a, fa, b, fb)
        total += _adaptive(signal, a, fa, b, fb, m, fm, whole, tol / 8.0, 40)
    return sign * total
