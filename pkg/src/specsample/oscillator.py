"""Harmonic-oscillator example: levels 2n+1 with cyclic weights 1/n!.

The Borel transform of this model has both a partial-fraction series and a
contour-integral representation; both are implemented and cross-checked.
The closed-form cyclic vector and its overlaps with the oscillator
eigenfunctions validate the weight sequence at coefficient level.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import PoleProximity, QuadratureNonConvergence, ValidationError
from .model import SpectralModel, new_model

_PI4 = math.pi ** -0.25


@lru_cache(maxsize=16)
def _leggauss(points: int):
    return np.polynomial.legendre.leggauss(points)


@lru_cache(maxsize=16)
def _hermgauss(points: int):
    return np.polynomial.hermite.hermgauss(points)


def oscillator_model(levels: int, normalized: bool = False) -> SpectralModel:
    """Finite model with eigenvalues 1, 3, ..., 2*levels-1 and raw weights
    1/n!; total raw weight tends to e as levels grow."""
    if levels < 2:
        raise ValidationError("at least two levels are required")
    lam = np.array([2.0 * n + 1.0 for n in range(levels)])
    w = np.empty(levels)
    inv_fact = 1.0
    for n in range(levels):
        if n > 0:
            inv_fact /= n
        w[n] = inv_fact
    if normalized:
        w = w / math.fsum(w)
    return new_model(lam, w)


def _check_pole(z: complex, terms: int) -> float:
    """Distance from z to the poles below the series cutoff."""
    d = min(
        abs(z - (2 * n + 1)) for n in range(terms)
    )
    if d < 1e-8:
        raise PoleProximity(f"z={z} is too close to an oscillator level")
    return d


def osc_F_series(z: complex, terms: int) -> complex:
    """Partial sum of F(z) = sum 1/(n! (2n+1-z))."""
    z = complex(z)
    _check_pole(z, terms)
    parts = []
    inv_fact = 1.0
    for n in range(terms):
        if n > 0:
            inv_fact /= n
        parts.append(inv_fact / (2.0 * n + 1.0 - z))
    return complex(math.fsum(p.real for p in parts),
                   math.fsum(p.imag for p in parts))


def osc_F_tail_bound(z: complex, terms: int) -> float:
    """Bound on the dropped tail: sum_{n>=terms} 1/(n! |2n+1-z|)."""
    z = complex(z)
    dist = min(abs(2.0 * n + 1.0 - z) for n in range(terms, terms + 64))
    return 2.0 / (math.factorial(min(terms, 170)) * dist)


def _osc_integrand(theta: np.ndarray, z: complex) -> np.ndarray:
    return np.exp(-np.cos(theta) - 1j * np.sin(theta)) * np.exp(
        1j * (1.0 - z) * theta / 2.0
    )


def _integral_value(z: complex, points: int) -> complex:
    # Gauss-Legendre on [-pi, pi]: the integrand is analytic but not
    # periodic, so this converges spectrally where a trapezoid rule stalls
    # at second order.
    x, w = _leggauss(points)
    vals = _osc_integrand(math.pi * x, z)
    acc = math.pi * complex(math.fsum(w * vals.real), math.fsum(w * vals.imag))
    return acc / (4.0 * np.cos(math.pi * z / 2.0))


def osc_F_integral(z: complex, quad_points: int) -> complex:
    """Contour-integral representation of F, by Gauss-Legendre quadrature.

    F(z) = (1/(4 cos(pi z/2))) * integral over [-pi, pi] of
    exp(-cos t - i sin t) exp(i (1-z) t / 2) dt.
    """
    z = complex(z)
    if abs(np.cos(math.pi * z / 2.0)) < 1e-8:
        raise PoleProximity(f"z={z} is too close to an oscillator level")
    coarse = _integral_value(z, max(8, quad_points // 2))
    fine = _integral_value(z, quad_points)
    if abs(fine - coarse) > 1e-8 * (1.0 + abs(fine)):
        raise QuadratureNonConvergence(
            f"refinement changed the integral by {abs(fine - coarse):.3e}"
        )
    return fine


def mu_pointwise(x: float) -> float:
    """Closed form of the cyclic vector on the line."""
    x = float(x)
    return _PI4 * math.exp(-0.5 * (x * x - 2.0 * math.sqrt(2.0) * x + 1.0))


def _hermite_functions(n: int, x: np.ndarray) -> np.ndarray:
    """Normalized Hermite polynomials psi_n = H_n / sqrt(2^n n! sqrt(pi)),
    i.e. the oscillator eigenfunctions with the Gaussian stripped."""
    psi_prev = np.full_like(x, _PI4)
    if n == 0:
        return psi_prev
    psi = math.sqrt(2.0) * x * psi_prev
    for k in range(1, n):
        psi, psi_prev = (
            math.sqrt(2.0 / (k + 1)) * x * psi
            - math.sqrt(k / (k + 1.0)) * psi_prev,
            psi,
        )
    return psi


def hermite_overlap(n: int, quad_points: int) -> float:
    """Overlap of the n-th eigenfunction with the cyclic vector; the exact
    value is 1/sqrt(n!).

    Gauss-Hermite quadrature in the weight exp(-x^2): the Gaussian factors
    of the eigenfunction and the cyclic vector combine into the weight,
    leaving the entire function psi_n(x) * pi^(-1/4) exp(sqrt(2) x - 1/2).
    """
    if n > 20:
        raise ValidationError("overlap recurrence validated only up to n=20")

    def value(points: int) -> float:
        x, w = _hermgauss(points)
        g = _hermite_functions(n, x) * _PI4 * np.exp(
            math.sqrt(2.0) * x - 0.5
        )
        return math.fsum(w * g)

    coarse = value(max(8, quad_points // 2))
    fine = value(quad_points)
    if abs(fine - coarse) > 1e-9 * (1.0 + abs(fine)):
        raise QuadratureNonConvergence(
            f"refinement changed the overlap by {abs(fine - coarse):.3e}"
        )
    return fine
