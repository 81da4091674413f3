"""Core immutable data types: spectral models, couplings, states, samples.

A finite spectral model holds strictly increasing eigenvalues and strictly
positive cyclic-vector weights.  Everything else in the package (Borel
transforms, perturbed spectra, sampling sets) is derived from these two
sequences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    NonPositiveWeight,
    UnsortedEigenvalues,
    ValidationError,
)

# Weights below this are treated as a loss of cyclicity, not as data.
_WEIGHT_FLOOR = 1e-300


@dataclass(frozen=True)
class SpectralModel:
    """Eigenvalues and cyclic-vector weights of a finite self-adjoint model."""

    eigenvalues: np.ndarray
    weights: np.ndarray
    mu_norm_sq: float = field(default=0.0)

    def __post_init__(self):
        lam = np.asarray(self.eigenvalues, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        if lam.ndim != 1 or w.ndim != 1 or lam.size != w.size:
            raise DimensionMismatch(
                f"eigenvalues ({lam.size}) and weights ({w.size}) must be "
                "1-d sequences of equal length"
            )
        if lam.size < 2:
            raise ValidationError("model dimension must be at least 2")
        if not np.all(np.isfinite(lam)):
            raise UnsortedEigenvalues("eigenvalues must be finite")
        if np.any(np.diff(lam) <= 0.0):
            raise UnsortedEigenvalues("eigenvalues must be strictly increasing")
        if not np.all(np.isfinite(w)) or np.any(w <= _WEIGHT_FLOOR):
            raise NonPositiveWeight("all weights must be strictly positive")
        lam.flags.writeable = False
        w.flags.writeable = False
        object.__setattr__(self, "eigenvalues", lam)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "mu_norm_sq", float(math.fsum(w)))

    @property
    def dim(self) -> int:
        return self.eigenvalues.size

    @property
    def sqrt_weights(self) -> np.ndarray:
        return np.sqrt(self.weights)

    @property
    def scale(self) -> float:
        """Length scale used for pole-exclusion radii and root tolerances."""
        return max(1.0, float(self.eigenvalues[-1] - self.eigenvalues[0]))


def new_model(eigenvalues, weights) -> SpectralModel:
    """Validate and build a spectral model from raw sequences."""
    return SpectralModel(np.array(eigenvalues, dtype=float),
                        np.array(weights, dtype=float))


def normalize(model: SpectralModel) -> SpectralModel:
    """Rescale weights so the total weight is exactly one."""
    return SpectralModel(model.eigenvalues.copy(),
                        model.weights / model.mu_norm_sq)


_INFINITE = object()


@dataclass(frozen=True)
class Coupling:
    """A finite real coupling constant, or the symbolic infinite coupling."""

    value: float | None

    @staticmethod
    def finite(h: float) -> "Coupling":
        h = float(h)
        if not math.isfinite(h):
            raise ValidationError("finite coupling must be a finite real number")
        return Coupling(h)

    @staticmethod
    def infinite() -> "Coupling":
        return Coupling(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class StateVector:
    """A vector expressed in the eigenbasis of the unperturbed operator."""

    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=complex)
        if c.ndim != 1:
            raise DimensionMismatch("state coordinates must be a 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValidationError("state coordinates must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coords", c)

    @property
    def dim(self) -> int:
        return self.coords.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))


def check_dims(model: SpectralModel, phi: StateVector) -> None:
    if phi.dim != model.dim:
        raise DimensionMismatch(
            f"state dimension {phi.dim} != model dimension {model.dim}"
        )


@dataclass(frozen=True)
class SampleSet:
    """Sampling nodes, point masses, and sampled values at a finite coupling.

    Self-contained input for Lagrange reconstruction: the generating model
    is not needed, only (h, nodes, node_weights, values).
    """

    h: float
    nodes: np.ndarray
    node_weights: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        h = float(self.h)
        if not math.isfinite(h):
            raise ValidationError("sample sets require a finite coupling")
        x = np.asarray(self.nodes, dtype=float)
        m = np.asarray(self.node_weights, dtype=float)
        v = np.asarray(self.values, dtype=complex)
        if x.ndim != 1 or x.size != m.size or x.size != v.size:
            raise DimensionMismatch(
                "nodes, node_weights and values must have equal length"
            )
        if np.any(np.diff(x) <= 0.0):
            raise UnsortedEigenvalues("nodes must be strictly increasing")
        if np.any(m <= 0.0) or not np.all(np.isfinite(m)):
            raise NonPositiveWeight("node weights must be strictly positive")
        for a in (x, m, v):
            a.flags.writeable = False
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "nodes", x)
        object.__setattr__(self, "node_weights", m)
        object.__setattr__(self, "values", v)

    @property
    def size(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class MeromorphicRep:
    """Partial-fraction form: a constant plus simple poles on the real line."""

    constant: complex
    poles: np.ndarray
    coefficients: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.poles, dtype=float)
        c = np.asarray(self.coefficients, dtype=complex)
        if x.ndim != 1 or x.size != c.size:
            raise DimensionMismatch("poles and coefficients must have equal length")
        if np.any(np.diff(x) <= 0.0):
            raise UnsortedEigenvalues("poles must be strictly increasing")
        x.flags.writeable = False
        c.flags.writeable = False
        object.__setattr__(self, "constant", complex(self.constant))
        object.__setattr__(self, "poles", x)
        object.__setattr__(self, "coefficients", c)
