"""Borel transform of the spectral measure and derived Herglotz quantities.

All sums are accumulated with math.fsum (error-free transformation of the
partial sums), in index order, so results are reproducible across platforms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleProximity, ZeroOfF
from .model import SpectralModel

# Relative pole-exclusion radius; scaled by the model's eigenvalue spread.
EXCLUSION_RADIUS = 1e-8


def _csum(terms: np.ndarray) -> complex:
    """Compensated sum of a complex array, in index order."""
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def pole_radius(model: SpectralModel) -> float:
    return EXCLUSION_RADIUS * model.scale


def check_pole_distance(model: SpectralModel, z: complex) -> None:
    r = pole_radius(model)
    d = np.abs(model.eigenvalues - z)
    if d.min() < r:
        raise PoleProximity(
            f"z={z} is within {r:.3e} of eigenvalue "
            f"{model.eigenvalues[int(d.argmin())]}"
        )


def _weyl_raw(model: SpectralModel, z: complex) -> tuple[complex, complex]:
    """F and F' without exclusion checks.  Callers guard the poles."""
    d = model.eigenvalues - z
    f = _csum(model.weights / d)
    fp = _csum(model.weights / (d * d))
    return f, fp


def _check_zero_of_f(model: SpectralModel, z: complex,
                     f: complex, fp: complex) -> None:
    # Zeros of F are real; only near-real points can be close to one.  The
    # Newton step |F/F'| estimates the distance to the nearest zero.
    r = pole_radius(model)
    if abs(z.imag) < r and abs(f) < r * abs(fp):
        raise ZeroOfF(f"z={z} is within {r:.3e} of a zero of F")


def weyl(model: SpectralModel, z: complex) -> tuple[complex, complex]:
    """Evaluate F(z) = sum w_j/(lam_j - z) and its derivative F'(z)."""
    z = complex(z)
    check_pole_distance(model, z)
    return _weyl_raw(model, z)


def weyl_h(model: SpectralModel, h: float,
           z: complex) -> tuple[complex, complex, complex]:
    """Evaluate the coupled family: F_h = F/(1+hF), G_h = h + 1/F, G_h'."""
    z = complex(z)
    check_pole_distance(model, z)
    f, fp = _weyl_raw(model, z)
    _check_zero_of_f(model, z, f, fp)
    f_h = f / (1.0 + h * f)
    g_h = h + 1.0 / f
    g_h_prime = -fp / (f * f)
    return f_h, g_h, g_h_prime


@dataclass(frozen=True)
class XiVector:
    """The normalized resolvent vector at a point, in eigenbasis coordinates."""

    at: complex
    coords: np.ndarray

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coords) ** 2))


def _xi_coords_raw(model: SpectralModel, z: complex) -> np.ndarray:
    """Coordinates sqrt(w_j)/((lam_j - conj(z)) F(conj(z))), unguarded.

    Exact at eigenvalues (where the limit vector is e_k/sqrt(w_k)); near
    misses below floating resolution are snapped to the limit.
    """
    zb = complex(z).conjugate()
    d = model.eigenvalues - zb
    dist = np.abs(d)
    k = int(dist.argmin())
    if dist[k] < 1e-13 * model.scale and abs(zb.imag) < 1e-13 * model.scale:
        out = np.zeros(model.dim, dtype=complex)
        out[k] = 1.0 / math.sqrt(model.weights[k])
        return out
    f, _ = _weyl_raw(model, zb)
    return model.sqrt_weights / (d * f)


def xi(model: SpectralModel, z: complex) -> XiVector:
    """The eigenvector field: xi(x) spans Ker(A_h - x) for the matching h."""
    z = complex(z)
    check_pole_distance(model, z)
    f, fp = _weyl_raw(model, z)
    _check_zero_of_f(model, z, f, fp)
    return XiVector(at=z, coords=_xi_coords_raw(model, z))


def xi_norm_sq(model: SpectralModel, x: float) -> float:
    """Squared norm of xi at a real point, via F'(x)/F(x)^2."""
    z = complex(x)
    check_pole_distance(model, z)
    f, fp = _weyl_raw(model, z)
    _check_zero_of_f(model, z, f, fp)
    return float((fp / (f * f)).real)
