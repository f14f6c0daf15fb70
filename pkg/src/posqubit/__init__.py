"""Position-based charge qubit simulation in the tight-binding approximation."""

from . import (  # noqa: F401
    cli,
    decoherence,
    errors,
    measurement,
    qcore,
    signals,
    single_qubit,
    spectral,
    two_qubit,
)

__version__ = "0.1.0"
