"""The r-tension field of a Frenet helix and closed forms to cross-check it.

The oracle evaluates::

    tau_r = nabla_T^{2r-1} T + sum_{l=0}^{r-2} (-1)^l R(nabla_T^{2r-3-l} T, nabla_T^l T) T

over frame coefficients, expanding ``R`` bilinearly against a curvature
table.  Everything runs in the rescaled frame ``G_i = d_i F_i`` (see
:mod:`polyfrenet.frenet`), so rational squared curvatures give an exact
result and numpy integer arrays give exact vectorized sweeps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exact import exact_sqrt
from .frenet import Helix, scaled_powers


@dataclass(frozen=True)
class TensionResult:
    """``tau_r`` of a helix.

    ``coeffs`` are the components along ``F_1..F_n``; ``scaled`` the same
    vector in the rescaled frame (``coeffs[i] = scaled[i] * d_i``).
    """

    coeffs: tuple
    r: int
    scaled: tuple

    @property
    def is_zero(self) -> bool:
        return all(np.all(np.asarray(b) == 0) for b in self.scaled)

    def norm(self) -> float:
        return math.sqrt(sum(float(x) ** 2 for x in self.coeffs))


@dataclass(frozen=True)
class SurfaceCurvatureData:
    """Gaussian curvature ``K_M(s)`` of the surface along a curve."""

    K_M: object

    def __call__(self, s):
        return self.K_M(s) if callable(self.K_M) else self.K_M


def _sqrt_any(x):
    if isinstance(x, np.ndarray):
        return np.sqrt(x)
    return exact_sqrt(x)


def scaled_curvature_table(curvature, eps, kappa_sq) -> dict:
    """Nonzero entries of ``R(G_a, G_b)G_1`` in the rescaled frame.

    With ``G_i = d_i F_i`` the coefficient along ``G_k`` is
    ``(d_a d_b / d_k) R^k_{ab1}``.  The factor ``d_a d_b / d_k`` is a product
    of curvatures ``k_j`` to exponents in ``{-1, 0, 1, 2}``; even exponents use
    ``kappa_sq`` directly, odd ones take a square root.
    """
    n = len(eps)
    table = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b:
                continue
            vec = curvature.frame_curvature(a, b, 1, eps)
            for k, val in enumerate(vec, start=1):
                if isinstance(val, (int, float)) and val == 0:
                    continue
                factor = 1
                for j in range(1, n):
                    e = (j < a) + (j < b) - (j < k)
                    if e == 2:
                        factor = factor * kappa_sq[j - 1]
                    elif e == 1:
                        factor = factor * _sqrt_any(kappa_sq[j - 1])
                    elif e == -1:
                        factor = factor / _sqrt_any(kappa_sq[j - 1])
                table.setdefault((a, b), []).append((k, factor * val))
    return table


def scaled_tension(eps, kappa_sq, curvature, r: int) -> list:
    """Rescaled-frame components of ``tau_r`` for raw sign/curvature data.

    ``kappa_sq`` entries may be ints, Fractions, floats or broadcastable
    numpy arrays; the result has the same scalar type.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    n = len(eps)
    powers = scaled_powers(eps, kappa_sq, 2 * r - 1)
    out = list(powers[2 * r - 1])
    table = scaled_curvature_table(curvature, eps, kappa_sq) if r >= 2 else {}
    for ell in range(r - 1):
        sign = -1 if ell % 2 else 1
        x, y = powers[2 * r - 3 - ell], powers[ell]
        for (a, b), entries in table.items():
            xa, yb = x[a - 1], y[b - 1]
            if _is_literal_zero(xa) or _is_literal_zero(yb):
                continue
            w = sign * xa * yb
            for k, val in entries:
                out[k - 1] = out[k - 1] + w * val
    assert len(out) == n
    return out


def _is_literal_zero(x) -> bool:
    return isinstance(x, int) and x == 0


def tension_field(h: Helix, curvature, r: int) -> TensionResult:
    """``tau_r(gamma)`` of a helix in a geometry with the given curvature table."""
    scaled = scaled_tension(h.eps, h.kappa_sq, curvature, r)
    d = h.scale_factors()
    coeffs = tuple(b * di for b, di in zip(scaled, d))
    return TensionResult(coeffs, r, tuple(scaled))


# -- surfaces ----------------------------------------------------------------


def surface_bitension(k, dk, d2k, K_M, eps1, eps2):
    """Tangent and normal parts of ``tau_2`` for a curve on a surface."""
    tangent = -3 * eps1 * eps2 * k * dk
    normal = eps2 * (K_M * eps1 * k + d2k - eps1 * eps2 * k**3)
    return tangent, normal


def surface_tritension(k, dk, d2k, d3k, d4k, K_M, eps1, eps2):
    """Tangent and normal parts of ``tau_3`` for a curve on a surface.

    Parameters
    ----------
    k, dk, d2k, d3k, d4k
        Curvature and its first four arc-length derivatives at one point.
    K_M
        Gaussian curvature of the surface at that point.
    eps1, eps2
        Causal characters of ``T`` and ``N``.
    """
    e12 = eps1 * eps2
    tangent = -5 * e12 * d3k * k + 10 * k**3 * dk - 10 * e12 * dk * d2k
    normal = (
        eps2 * K_M * (eps1 * d2k - 2 * eps2 * k**3)
        + eps2 * d4k
        - 10 * eps1 * k**2 * d2k
        - 15 * eps1 * k * dk**2
        + eps2 * k**5
    )
    return tangent, normal


# -- n-Frenet closed forms ---------------------------------------------------


def _point_data(curve, s):
    """Curvatures and the derivatives needed by the bitension at ``s``."""
    if isinstance(curve, Helix):
        ks = list(curve.kappas)
        return curve.eps, ks, [0] * len(ks), [0] * len(ks)
    if s is None:
        raise ValueError("a FrenetCurve needs the arc-length point s")
    ks = [k(s) for k in curve.curvatures]
    d1 = [k(s, 1) for k in curve.curvatures]
    d2 = [k(s, 2) for k in curve.curvatures]
    return curve.sig.eps, ks, d1, d2


def n_frenet_bitension(curve, curvature, s=None) -> tuple:
    """Closed-form bitension of an ``n``-Frenet curve, ``n >= 4``.

    Accepts a :class:`Helix` or a :class:`FrenetCurve` evaluated at ``s``;
    derivatives of ``k_1`` and ``k_2`` enter the ``F_1..F_3`` components.
    """
    eps, k, dk, d2k = _point_data(curve, s)
    n = len(eps)
    if n < 4:
        raise ValueError("closed-form bitension needs n >= 4")
    e1, e2, e3, e4 = eps[:4]
    out = [0] * n
    out[0] = -3 * e1 * k[0] * dk[0]
    out[1] = d2k[0] - e1 * e2 * k[0] ** 3 - e2 * e3 * k[0] * k[1] ** 2
    out[2] = e3 * (2 * dk[0] * k[1] + k[0] * dk[1])
    out[3] = e3 * e4 * k[0] * k[1] * k[2]
    R211 = curvature.frame_curvature(2, 1, 1, eps)
    return tuple(e2 * (o + k[0] * rv) for o, rv in zip(out, R211))


def n_frenet_tritension(h: Helix, curvature) -> tuple:
    """Closed-form tritension of an ``n``-Frenet helix.

    The formula is written for ``n >= 6``.  For ``n = 4, 5`` the missing
    curvatures are taken as zero, with filler signs ``+1``, and components
    beyond ``F_n`` are dropped.
    """
    n = h.n
    if n < 4:
        raise ValueError("closed-form tritension needs n >= 4")
    eps = tuple(h.eps) + (1,) * max(0, 6 - n)
    k = list(h.kappas) + [0] * max(0, 5 - (n - 1))
    e1, e2, e3, e4, e5, e6 = eps[:6]
    k1, k2, k3, k4, k5 = k[:5]
    S = e1 * k1**2 + e3 * k2**2
    pad = max(n, 6)
    inner = [0] * pad
    inner[1] = -e2 * (e2 * S**2 + e3**2 * e4 * k2**2 * k3**2)
    inner[3] = e3 * e4 * k2 * k3 * (e2 * S + e4 * (e3 * k3**2 + e5 * k4**2))
    inner[5] = -e3 * e4 * e5 * e6 * k2 * k3 * k4 * k5

    # curvature terms only live on the true frame indices
    true_eps = h.eps
    R211 = curvature.frame_curvature(2, 1, 1, true_eps)
    R321 = curvature.frame_curvature(3, 2, 1, true_eps)
    R411 = curvature.frame_curvature(4, 1, 1, true_eps)
    for i in range(n):
        inner[i] = (
            inner[i]
            + e2 * (2 * e1 * k1**2 + e3 * k2**2) * R211[i]
            + e2 * e3 * k1 * k2 * R321[i]
            - e3 * e4 * k2 * k3 * R411[i]
        )
    return tuple(-e2 * k1 * x for x in inner[:n])
