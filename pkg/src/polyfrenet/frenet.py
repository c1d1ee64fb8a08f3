"""Frenet systems, the Omega matrix and frame-coefficient recursions.

Vectors along a curve are handled as coefficient tuples over the Frenet frame
``F_1..F_n`` (a *frame vector*).  For helices the exact recursions work in the
rescaled frame ``G_i = d_i F_i`` with ``d_1 = 1`` and ``d_{i+1} = d_i k_i``.
In that frame the connection matrix only involves the squared curvatures::

    G_i' = -eps_{i-1} k_{i-1}^2 G_{i-1} + eps_{i+1} G_{i+1}

so every covariant power of ``T`` has coefficients that are polynomials in
``k_i^2`` with integer coefficients.  Rational squared curvatures therefore
give exact rational arithmetic, and numpy integer arrays give exact
vectorized sweeps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .exact import as_exact, exact_sqrt
from .metric import Signature

FrameVector = tuple


@dataclass(frozen=True)
class Helix:
    """An ``n``-Frenet helix: sign pattern plus constant curvatures.

    The curvatures are stored squared (``kappa_sq``) because every tension
    computation only needs the squares.  ``kappas`` keeps the unsquared
    values when they were given, so true frame coefficients stay exact for
    rational curvatures.
    """

    sig: Signature
    kappa_sq: tuple
    kappas_given: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.kappa_sq) != self.sig.n - 1:
            raise ValueError(f"need {self.sig.n - 1} curvatures, got {len(self.kappa_sq)}")
        if self.sig.n < 2:
            raise ValueError("a Frenet helix needs n >= 2")
        if not np.all(np.asarray(self.kappa_sq[0], dtype=float) > 0):
            raise ValueError("k_1 must be positive (k_1 = 0 is a geodesic)")
        if any(np.any(np.asarray(k, dtype=float) < 0) for k in self.kappa_sq):
            raise ValueError("squared curvatures must be non-negative")

    @classmethod
    def from_squares(cls, eps, kappa_sq, t=None, m=None) -> "Helix":
        sig = eps if isinstance(eps, Signature) else Signature.of(eps, t=t, m=m)
        return cls(sig, tuple(as_exact(k) for k in kappa_sq))

    @classmethod
    def from_kappas(cls, eps, kappas, t=None, m=None) -> "Helix":
        sig = eps if isinstance(eps, Signature) else Signature.of(eps, t=t, m=m)
        kappas = tuple(as_exact(k) for k in kappas)
        return cls(sig, tuple(k * k for k in kappas), kappas)

    @property
    def n(self) -> int:
        return self.sig.n

    @property
    def eps(self) -> tuple:
        return self.sig.eps

    @property
    def kappas(self) -> tuple:
        if self.kappas_given is not None:
            return self.kappas_given
        return tuple(exact_sqrt(k) for k in self.kappa_sq)

    @property
    def is_full(self) -> bool:
        return bool(np.all(np.asarray(self.kappa_sq[-1], dtype=float) != 0))

    def scale_factors(self) -> tuple:
        """``d_i = k_1 ... k_{i-1}``, the lengths of the rescaled frame ``G_i``."""
        d = [1]
        for k in self.kappas:
            d.append(d[-1] * k)
        return tuple(d)


CurvatureFunction = Callable[..., float]


def constant(value: float) -> CurvatureFunction:
    """Curvature function ``k(s) = value`` with all derivatives available."""

    def k(s, d: int = 0):
        return value if d == 0 else 0.0 * s

    return k


def linear(a: float, b: float) -> CurvatureFunction:
    """``k(s) = a + b s``."""

    def k(s, d: int = 0):
        if d == 0:
            return a + b * s
        return b + 0.0 * s if d == 1 else 0.0 * s

    return k


def from_derivatives(*funcs: Callable[[float], float]) -> CurvatureFunction:
    """Bundle ``f, f', f'', ...`` into one curvature function."""

    def k(s, d: int = 0):
        if d >= len(funcs):
            raise ValueError(f"derivative order {d} not supplied (have {len(funcs) - 1})")
        return funcs[d](s)

    return k


@dataclass(frozen=True)
class FrenetCurve:
    """A Frenet curve with prescribed (possibly non-constant) curvatures.

    Each entry of ``curvatures`` is called as ``k(s, d)`` and returns the
    ``d``-th derivative of the curvature at ``s``.
    """

    sig: Signature
    curvatures: tuple

    @property
    def n(self) -> int:
        return self.sig.n

    @classmethod
    def from_helix(cls, h: Helix) -> "FrenetCurve":
        return cls(h.sig, tuple(constant(float(k)) for k in h.kappas))

    def omega(self, s) -> np.ndarray:
        return _omega(self.sig.eps, [k(s) for k in self.curvatures])


def _omega(eps, kappas):
    n = len(eps)
    om = np.zeros((n, n), dtype=object if _any_exact(kappas) else float)
    for i in range(n - 1):
        om[i, i + 1] = eps[i + 1] * kappas[i]
        om[i + 1, i] = -eps[i] * kappas[i]
    return om


def _any_exact(values) -> bool:
    return any(not isinstance(v, (float, np.floating)) for v in values)


def omega_matrix(h: Helix) -> np.ndarray:
    """Connection matrix with ``nabla_T F_i = sum_j Omega[i, j] F_j``.

    Tridiagonal: ``Omega[i, i+1] = eps_{i+1} k_i``, ``Omega[i, i-1] = -eps_{i-1} k_{i-1}``.
    """
    return _omega(h.eps, h.kappas)


def gram_derivative(gram: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """Right-hand side of the frame Gram-matrix ODE ``X' = Omega X + X Omega^T``.

    ``X_ij = <F_i, F_j>`` evolves this way along any solution of the Frenet
    system, so ``diag(eps)`` being a stationary point is what keeps an
    integrated frame orthonormal.
    """
    return omega @ gram + gram @ omega.T


def scaled_step(v, eps, kappa_sq):
    """One application of ``nabla_T`` to a rescaled constant-coefficient vector."""
    n = len(eps)
    out = []
    for j in range(n):
        term = 0
        if j > 0:
            term = eps[j] * v[j - 1]
        if j < n - 1:
            term = term - eps[j] * kappa_sq[j] * v[j + 1]
        out.append(term)
    return out


def scaled_powers(eps, kappa_sq, kmax: int) -> list:
    """Rescaled coefficients of ``nabla_T^k T`` for ``k = 0..kmax``.

    Entries are whatever scalar type ``kappa_sq`` carries (ints, Fractions,
    surds or numpy arrays broadcast together).
    """
    n = len(eps)
    v = [1] + [0] * (n - 1)
    out = [v]
    for _ in range(kmax):
        v = scaled_step(v, eps, kappa_sq)
        out.append(v)
    return out


def unscale(h: Helix, scaled) -> FrameVector:
    d = h.scale_factors()
    return tuple(b * di for b, di in zip(scaled, d))


def covariant_power(h: Helix, k: int) -> FrameVector:
    """Frame coefficients of ``nabla_T^k T`` for a helix.

    Equivalent to ``e_1 @ Omega^k``; computed through the rescaled frame so
    rational curvatures give exact results.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    return unscale(h, scaled_powers(h.eps, h.kappa_sq, k)[k])


def two_frenet_power(ell: int, parity: str, eps1: int, eps2: int, kappa) -> FrameVector:
    """Closed form of ``nabla_T^{2l} T`` (``parity='even'``) or ``nabla_T^{2l+1} T`` for a 2-Frenet helix."""
    base = (-eps1 * eps2) ** ell
    if parity == "even":
        return (base * kappa ** (2 * ell), 0)
    if parity == "odd":
        return (0, base * eps2 * kappa ** (2 * ell + 1))
    raise ValueError("parity must be 'even' or 'odd'")


@dataclass(frozen=True)
class ABCCoefficients:
    A: object
    B: object
    C: object


def abc_coefficients(ell: int, eps1: int, eps2: int, eps3: int, kappa, tau) -> ABCCoefficients:
    """Coefficients with ``nabla^{2l}T = A T + B B_vec`` and ``nabla^{2l+1}T = C N`` on a 3-Frenet helix."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    s = eps1 * kappa * kappa + eps3 * tau * tau
    sign = (-1) ** ell
    C = sign * eps2 ** (ell + 1) * kappa * s**ell
    if ell == 0:
        return ABCCoefficients(1, 0, C)
    A = sign * eps1 * eps2**ell * kappa * kappa * s ** (ell - 1)
    B = -sign * eps3 * eps2**ell * kappa * tau * s ** (ell - 1)
    return ABCCoefficients(A, B, C)


def abc_scaled(ell: int, eps1: int, eps2: int, eps3: int, kappa_sq, tau_sq) -> ABCCoefficients:
    """``(A, B/(kappa tau), C/kappa)``: the same coefficients in the rescaled frame.

    These are polynomials in the squared curvatures, hence exact for rational input.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    s = eps1 * kappa_sq + eps3 * tau_sq
    sign = (-1) ** ell
    C = sign * eps2 ** (ell + 1) * s**ell
    if ell == 0:
        return ABCCoefficients(1, 0, C)
    A = sign * eps1 * eps2**ell * kappa_sq * s ** (ell - 1)
    B = -sign * eps3 * eps2**ell * s ** (ell - 1)
    return ABCCoefficients(A, B, C)


def jet_powers(curve: FrenetCurve, s: float, kmax: int) -> np.ndarray:
    """Frame coefficients of ``nabla_T^k T`` at ``s`` for a curve with varying curvatures.

    Uses truncated Taylor jets: coefficient ``a^k_j`` is carried together with
    its derivatives and ``a^{k+1} = (a^k)' + a^k Omega(s)`` is evaluated with
    the Leibniz rule.  Needs curvature derivatives up to order ``kmax - 1``.
    Returns an array of shape ``(kmax + 1, n)``.
    """
    n = curve.n
    eps = curve.sig.eps
    order = kmax
    # kj[i][d] = d-th derivative of k_{i+1} at s
    kj = [[float(k(s, d)) for d in range(order)] + [0.0] for k in curve.curvatures]
    jets = np.zeros((n, order + 1))
    jets[0, 0] = 1.0
    out = np.zeros((kmax + 1, n))
    out[0] = jets[:, 0]
    for step in range(1, kmax + 1):
        depth = order - step  # derivatives still needed after this step
        new = np.zeros_like(jets)
        for j in range(n):
            acc = jets[j, 1 : depth + 2].copy()
            if j > 0:
                # from a_{j-1} Omega[j-1, j] = a_{j-1} eps_j k_{j-1}
                acc += eps[j] * _leibniz(jets[j - 1], kj[j - 1], depth)
            if j < n - 1:
                # from a_{j+1} Omega[j+1, j] = -a_{j+1} eps_j k_j
                acc -= eps[j] * _leibniz(jets[j + 1], kj[j], depth)
            new[j, : depth + 1] = acc
        jets = new
        out[step] = jets[:, 0]
    return out


def _leibniz(a, b, depth: int) -> np.ndarray:
    """Derivatives ``0..depth`` of the product of two jets."""
    res = np.zeros(depth + 1)
    for d in range(depth + 1):
        res[d] = sum(math.comb(d, i) * a[i] * b[d - i] for i in range(d + 1))
    return res
