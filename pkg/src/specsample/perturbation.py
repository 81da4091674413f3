"""Spectra and spectral weights of the rank-one perturbed family.

Eigenvalues of the perturbed operator at coupling h solve the secular
equation 1 + h F(x) = 0; at infinite coupling they are the zeros of F.
Roots are isolated by bisection on a sign change inside each spectral gap
and polished with a few guarded Newton steps.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import BracketFailure, InconsistentNodes
from .herglotz import _weyl_raw
from .model import Coupling, SpectralModel, new_model

# Bisection terminates at this width relative to the model scale.
_BISECT_WIDTH = 1e-13
_NEWTON_STEPS = 5
# Relative endpoint offsets tried when hunting for a sign change next to a
# pole; roots can sit very close to a pole when its weight is small.
_OFFSETS = (1e-2, 1e-3, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12, 1e-13, 1e-14)


def _approach(g, base: float, far: float, want_sign: float):
    """Walk from `far` toward the open endpoint `base` until g has want_sign.

    Returns (x, g(x)) or None when the sign never shows up at resolvable
    offsets (root closer to the pole than floating resolution).
    """
    width = far - base
    for d in _OFFSETS:
        x = base + d * width
        v = g(x)
        if v == 0.0:
            return x, 0.0
        if math.copysign(1.0, v) == want_sign:
            return x, v
    return None


def _polish(g, gp, x: float, lo: float, hi: float) -> float:
    for _ in range(_NEWTON_STEPS):
        d = gp(x)
        if d == 0.0 or not math.isfinite(d):
            break
        step = g(x) / d
        x_new = x - step
        if not (lo <= x_new <= hi) or x_new == x:
            break
        x = x_new
    return x


def _bracketed_root(g, gp, lo: float, hi: float, scale: float,
                    lo_sign: float) -> float:
    """Root of g in (lo, hi) where g carries lo_sign near lo, -lo_sign near hi."""
    left = _approach(g, lo, hi, lo_sign)
    right = _approach(g, hi, lo, -lo_sign)
    if left is None or right is None:
        raise BracketFailure(
            f"no sign change of the secular function resolvable in "
            f"({lo!r}, {hi!r})"
        )
    (a, fa), (b, fb) = left, right
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if a > b:
        raise BracketFailure(f"bracket endpoints crossed in ({lo!r}, {hi!r})")
    tol = _BISECT_WIDTH * scale
    while b - a > tol:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = g(mid)
        if fm == 0.0:
            return mid
        if math.copysign(1.0, fm) == lo_sign:
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    return _polish(g, gp, 0.5 * (a + b), a, b)


def _secular(model: SpectralModel, h: float):
    def g(x):
        f, _ = _weyl_raw(model, x)
        return 1.0 + h * f.real

    def gp(x):
        _, fp = _weyl_raw(model, x)
        return h * fp.real

    return g, gp


def _borel(model: SpectralModel):
    def g(x):
        f, _ = _weyl_raw(model, x)
        return f.real

    def gp(x):
        _, fp = _weyl_raw(model, x)
        return fp.real

    return g, gp


def perturbed_spectrum(model: SpectralModel, coupling: Coupling) -> np.ndarray:
    """Eigenvalues of the perturbed operator, strictly increasing.

    Finite nonzero coupling yields one root per spectral gap plus one
    exterior root within |h| * mu_norm_sq of the edge; infinite coupling
    yields the N-1 zeros of F.
    """
    lam = model.eigenvalues
    scale = model.scale
    if coupling.is_infinite:
        g, gp = _borel(model)
        roots = [
            _bracketed_root(g, gp, lam[j], lam[j + 1], scale, -1.0)
            for j in range(model.dim - 1)
        ]
        return np.array(roots)

    h = float(coupling.value)
    if h == 0.0:
        return lam.copy()

    g, gp = _secular(model, h)
    # Inside each gap F runs from -inf to +inf, so g = 1 + hF starts out
    # with the sign of -h.
    lo_sign = -math.copysign(1.0, h)
    roots = [
        _bracketed_root(g, gp, lam[j], lam[j + 1], scale, lo_sign)
        for j in range(model.dim - 1)
    ]
    shift = abs(h) * model.mu_norm_sq + _BISECT_WIDTH * scale
    # Exterior root: g diverges with sign -sign(h) at the spectral edge and
    # is nonnegative at the rank-one norm bound, so lo_sign carries over.
    if h > 0.0:
        roots.append(
            _bracketed_root(g, gp, lam[-1], lam[-1] + shift, scale, lo_sign)
        )
    else:
        roots.insert(
            0, _bracketed_root(g, gp, lam[0] - shift, lam[0], scale, lo_sign)
        )
    return np.array(sorted(roots))


# Newton-step distance above which supplied nodes are rejected as belonging
# to a different coupling.  A raw residual bound would misfire at roots that
# hug a pole with a tiny weight: there F' is huge and cancellation inflates
# |1 + h F| even for a correctly placed node, while the root distance
# |1 + h F| / (|h| |F'|) stays tiny.
_NODE_DISTANCE_TOL = 1e-7


def node_weights(model: SpectralModel, h: float, nodes) -> np.ndarray:
    """Point masses m_h({x_j}) = 1/||xi(x_j)||^2 at the perturbed spectrum.

    At a secular root F(x_j) = -1/h exactly, so the mass reduces to
    1/(h^2 F'(x_j)); this form stays accurate for roots that hug a pole.
    """
    nodes = np.asarray(nodes, dtype=float)
    if h == 0.0:
        if nodes.size != model.dim or np.max(
            np.abs(nodes - model.eigenvalues)
        ) > 1e-9 * model.scale:
            raise InconsistentNodes("nodes do not match the unperturbed spectrum")
        return model.weights.copy()

    out = np.empty(nodes.size)
    for j, x in enumerate(nodes):
        f, fp = _weyl_raw(model, x)
        residual = abs(1.0 + h * f.real)
        distance = residual / (abs(h) * fp.real)
        if not math.isfinite(distance) or distance > _NODE_DISTANCE_TOL * model.scale:
            raise InconsistentNodes(
                f"node {x!r} has secular residual {residual:.3e} at h={h}"
            )
        out[j] = 1.0 / (h * h * fp.real)
    return out


def perturbed_model(model: SpectralModel, h: float) -> SpectralModel:
    """Spectral model of the perturbed operator with the same cyclic vector."""
    if h == 0.0:
        return new_model(model.eigenvalues, model.weights)
    nodes = perturbed_spectrum(model, Coupling.finite(h))
    return new_model(nodes, node_weights(model, h, nodes))


def compression_spectrum(model: SpectralModel) -> np.ndarray:
    """Eigenvalues of the compression of the model to the complement of mu.

    A Householder reflection maps the first coordinate axis onto mu's
    direction; the remaining reflected axes give a deterministic
    orthonormal basis of the complement.  Cross-validates the zero set
    of F computed by perturbed_spectrum at infinite coupling.
    """
    u = model.sqrt_weights / math.sqrt(model.mu_norm_sq)
    v = u.copy()
    v[0] += 1.0
    refl = np.eye(model.dim) - 2.0 * np.outer(v, v) / np.dot(v, v)
    basis = refl[:, 1:]
    compressed = basis.T @ (model.eigenvalues[:, None] * basis)
    return np.linalg.eigvalsh(compressed)
