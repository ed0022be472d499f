"""Radii of starlikeness and convexity for normalized Wright functions."""

from ._core import (
    ConvergenceError,
    DomainError,
    InvariantError,
    ScanExhaustedError,
    bessel_j,
    bounds,
    eval,
    first_zeros,
    interlaced,
    phi,
    radius,
    rayleigh_sums,
    verify,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "InvariantError",
    "ScanExhaustedError",
    "bessel_j",
    "bounds",
    "eval",
    "first_zeros",
    "interlaced",
    "phi",
    "radius",
    "rayleigh_sums",
    "verify",
]
