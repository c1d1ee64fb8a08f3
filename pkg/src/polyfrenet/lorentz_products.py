"""Helices lifted from a Riemannian space form into ``R x N^{m-1}(c)``.

The lorentzian product carries ``g = -dt^2 + g_N``.  A 3-Frenet helix
``alpha`` of the fiber lifts to ``gamma(s) = (d1 s, alpha(d2 s))`` with
``d2^2 = eps1 + d1^2``; ``gamma`` is again a helix and is r-harmonic exactly
when ``alpha`` is.

All quantities are kept squared so rational inputs stay rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import as_exact, exact_sqrt


class LiftError(ValueError):
    """Raised when the lift data violate the arc-length or torsion conditions."""


@dataclass(frozen=True)
class ProductLift:
    """Slope ``d1`` (stored squared) plus fiber helix data ``(kappa_alpha, tau_alpha)``."""

    d1_sq: object
    kappa_alpha_sq: object
    tau_alpha_sq: object
    eps1: int
    eps3: int

    @classmethod
    def from_values(cls, d1, kappa_alpha, tau_alpha, eps1: int, eps3: int) -> "ProductLift":
        d1, ka, ta = (as_exact(v) for v in (d1, kappa_alpha, tau_alpha))
        return cls(d1 * d1, ka * ka, ta * ta, eps1, eps3)

    @property
    def d2_sq(self):
        return self.eps1 + self.d1_sq

    def check(self) -> "ProductLift":
        if self.eps1 not in (1, -1) or self.eps3 not in (1, -1):
            raise LiftError("signs must be +1 or -1")
        if self.kappa_alpha_sq <= 0 or self.tau_alpha_sq <= 0:
            raise LiftError("the fiber helix needs kappa_alpha, tau_alpha > 0")
        if self.d2_sq <= 0:
            raise LiftError("eps1 + d1^2 must be positive")
        if self.eps3 * (self.tau_alpha_sq - self.eps1 * self.d1_sq * self.kappa_alpha_sq) <= 0:
            raise LiftError("eps3 (tau_alpha^2 - eps1 d1^2 kappa_alpha^2) must be positive")
        return self


@dataclass(frozen=True)
class LiftedHelix:
    kappa_sq: object
    tau_sq: object
    eps: tuple
    null_sum: object
    fiber_sum: object
    binormal_norm: object

    @property
    def kappa(self):
        return exact_sqrt(self.kappa_sq)

    @property
    def tau(self):
        return exact_sqrt(self.tau_sq)


def lift_to_product(p: ProductLift) -> LiftedHelix:
    """Curvature, torsion and signs of the lifted helix.

    ``kappa = (eps1 + d1^2) kappa_alpha`` and
    ``tau^2 = eps3 (eps1 + d1^2)(tau_alpha^2 - eps1 d1^2 kappa_alpha^2)``.

    Two consistency values come back alongside:

    ``null_sum``
        ``eps1 kappa^2 + eps3 tau^2``, which must equal
        ``fiber_sum = (d1^2 + eps1)(kappa_alpha^2 + tau_alpha^2)`` and is
        therefore never zero.
    ``binormal_norm``
        ``<B, B>`` rebuilt from the time and fiber parts of ``B``; equals
        ``eps3``.
    """
    p.check()
    d1_sq, ka_sq, ta_sq = (Fraction(v) if isinstance(v, int) else v for v in (p.d1_sq, p.kappa_alpha_sq, p.tau_alpha_sq))
    D = p.eps1 + d1_sq
    kappa_sq = D * D * ka_sq
    tau_sq = p.eps3 * D * (ta_sq - p.eps1 * d1_sq * ka_sq)
    null_sum = p.eps1 * kappa_sq + p.eps3 * tau_sq
    fiber_sum = D * (ka_sq + ta_sq)

    # B = -B_t dt + B~ with B_t = -eps1 eps3 d1 kappa / tau and
    # B~ = (eps3 / tau)((eps1 kappa d2 - kappa / d2) T_alpha + d2 tau_alpha B_alpha)
    bt_sq = kappa_sq * d1_sq / tau_sq
    tangential = kappa_sq * (p.eps1 * D - 1) ** 2 / D
    b_fiber_sq = (tangential + D * ta_sq) / tau_sq
    binormal_norm = -bt_sq + b_fiber_sq
    return LiftedHelix(kappa_sq, tau_sq, (p.eps1, 1, p.eps3), null_sum, fiber_sum, binormal_norm)


def lifted_condition(p: ProductLift, c, r: int):
    """Left side of the r-harmonicity equation written in the lifted ``(kappa, tau)``."""
    h = lift_to_product(p)
    K, X = h.kappa_sq, h.tau_sq
    e1, e3 = p.eps1, p.eps3
    return K * K + 2 * K * e1 * e3 * X + X * X - c * (K * (r - 1 + p.d1_sq * e1) + (p.d1_sq + e1) * e3 * X)


def fiber_condition(p: ProductLift, c, r: int):
    """Left side of the r-harmonicity equation of the fiber helix ``alpha``."""
    Ka, Xa = p.kappa_alpha_sq, p.tau_alpha_sq
    return (Ka + Xa) ** 2 - c * ((r - 1) * Ka + Xa)


@dataclass(frozen=True)
class ProductCheck:
    lifted: bool
    fiber: bool
    lifted_value: object
    fiber_value: object

    @property
    def agree(self) -> bool:
        return self.lifted == self.fiber


def product_r_harmonic_check(p: ProductLift, c, r: int) -> ProductCheck:
    """Evaluate the lifted and the fiber condition independently.

    Raises
    ------
    ValueError
        If ``c = 0`` or ``r < 2``.
    """
    if c == 0:
        raise ValueError("the product construction needs c != 0")
    if r < 2:
        raise ValueError("r must be >= 2")
    a = lifted_condition(p, c, r)
    b = fiber_condition(p, c, r)
    return ProductCheck(a == 0, b == 0, a, b)


def timelike_lift(kappa_alpha_sq, tau_alpha_sq, d2_sq) -> ProductLift:
    """Lift with ``d1^2 = d2^2 + 1``: time-like tangent, space-like binormal."""
    return ProductLift(as_exact(d2_sq) + 1, as_exact(kappa_alpha_sq), as_exact(tau_alpha_sq), -1, 1).check()
