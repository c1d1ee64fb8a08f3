"""Robertson-Walker space-times ``J x N^{m-1}(c)`` with ``g_f = -dt^2 + f(t)^2 g``.

Tangent vectors are written as pairs ``(x_t, x)`` meaning
``x_t d/dt + x``, where ``x`` holds coordinates in a ``g_f``-orthonormal
basis of the fiber directions.  At a fixed time ``t0`` every rule below
depends on ``f`` only through the ratios ``f'/f`` and ``f''/f`` (and
``c / f^2``), so a warping function given symbolically yields exact
rational results wherever those ratios are rational.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import sympy as sp

from .exact import as_exact
from .frenet import Helix
from .spaceforms import curvature_on_frame
from .tension import tension_field

CRITICAL_TOL = 1e-12
T = sp.Symbol("t", positive=True)


def _exact_or_float(x):
    x = sp.nsimplify(x) if isinstance(x, sp.Float) else x
    if x.is_Rational:
        return as_exact(x)
    return float(x)


@dataclass(frozen=True)
class RWModel:
    """Warping function ``f`` on ``J`` over a Riemannian fiber of curvature ``c``.

    ``f`` is given either as a sympy expression in ``t`` (``expr``) or as a
    triple of callables ``(f, f', f'')``.  ``lam`` is set for the power-law
    family ``f = t^lam``.
    """

    expr: object = None
    funcs: tuple | None = None
    J: tuple = (0.0, math.inf)
    c: object = 0
    lam: object = None

    @classmethod
    def power_law(cls, lam, c=0) -> "RWModel":
        lam = sp.Rational(str(as_exact(lam))) if not isinstance(lam, sp.Basic) else lam
        return cls(expr=T**lam, J=(0.0, math.inf), c=c, lam=as_exact(lam))

    @classmethod
    def from_string(cls, text: str, J=(0.0, math.inf), c=0) -> "RWModel":
        """Parse ``f`` from text such as ``"t^(1/2)"`` or ``"cosh(t)"``."""
        expr = sp.sympify(text.replace("^", "**"), locals={"t": T})
        lam = None
        base, exp = expr.as_base_exp()
        if base == T and exp.is_Rational:
            lam = as_exact(exp)
        return cls(expr=expr, J=tuple(J), c=c, lam=lam)

    @classmethod
    def from_callables(cls, f: Callable, df: Callable, d2f: Callable, J=(-math.inf, math.inf), c=0) -> "RWModel":
        return cls(funcs=(f, df, d2f), J=tuple(J), c=c)

    def _check_t(self, t0) -> None:
        lo, hi = self.J
        if not lo < t0 < hi:
            raise ValueError(f"t0={t0} outside J=({lo}, {hi})")

    def values(self, t0) -> tuple:
        """``(f, f', f'')`` at ``t0``."""
        self._check_t(t0)
        if self.funcs is not None:
            return tuple(g(t0) for g in self.funcs)
        t0s = sp.Rational(str(t0)) if isinstance(t0, (int, Fraction)) else sp.Float(t0)
        derivs = [self.expr, sp.diff(self.expr, T), sp.diff(self.expr, T, 2)]
        return tuple(_exact_or_float(sp.simplify(d.subs(T, t0s))) for d in derivs)

    def ratios(self, t0) -> tuple:
        """``(f'/f, f''/f)`` at ``t0``, simplified symbolically before evaluation."""
        self._check_t(t0)
        if self.funcs is not None:
            f, df, d2f = self.values(t0)
            if f <= 0:
                raise ValueError("f must be positive on J")
            return df / f, d2f / f
        t0s = sp.Rational(str(t0)) if isinstance(t0, (int, Fraction)) else sp.Float(t0)
        h1 = sp.simplify(sp.diff(self.expr, T) / self.expr)
        h2 = sp.simplify(sp.diff(self.expr, T, 2) / self.expr)
        return _exact_or_float(h1.subs(T, t0s)), _exact_or_float(h2.subs(T, t0s))

    def deceleration(self, t0):
        """``q = -f f'' / f'^2``."""
        h1, h2 = self.ratios(t0)
        if h1 == 0:
            raise ZeroDivisionError("q is undefined where f' = 0")
        return -h2 / (h1 * h1)


# -- frame-level rules ---------------------------------------------------------


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def _comb(*terms):
    """Sum of ``scalar * vector`` pairs over fiber coordinate tuples."""
    n = len(terms[0][1])
    out = [0] * n
    for s, v in terms:
        for i in range(n):
            out[i] = out[i] + s * v[i]
    return tuple(out)


def rw_inner(X, Y):
    """``g_f(X, Y)`` for vectors in ``(x_t, fiber)`` form."""
    return -X[0] * Y[0] + _dot(X[1], Y[1])


def rw_connection(model: RWModel, t0, X, Y, fiber_part=None):
    """``nabla_X Y`` for fields that are parallel in the fiber and have constant time part.

    ``nabla_{d_t} d_t = 0``, ``nabla_{d_t} Y~ = nabla_{X~} d_t = (f'/f) Y~`` and
    ``nabla_{X~} Y~ = nabla~_{X~} Y~ + <X~, Y~>(f'/f) d_t``.  ``fiber_part``
    supplies ``nabla~_{X~} Y~`` when the fiber fields are not parallel.
    """
    h1, _ = model.ratios(t0)
    xt, x = X
    yt, y = Y
    time = h1 * _dot(x, y)
    fiber = _comb((xt * h1, y), (yt * h1, x))
    if fiber_part is not None:
        fiber = _comb((1, fiber), (1, tuple(fiber_part)))
    return time, fiber


def rw_curvature(model: RWModel, t0, X, Y, Z):
    """``R(X, Y)Z`` from the four structural rules of a warped product.

    With ``K = (f'^2 + c)/f^2`` and ``h = f''/f``::

        R(X~, Y~)Z~ = K (<Y~, Z~> X~ - <X~, Z~> Y~)
        R(X~, d_t)d_t = -h X~
        R(X~, Y~)d_t = 0
        R(X~, d_t)Y~ = -h <X~, Y~> d_t
    """
    h1, h2 = model.ratios(t0)
    f = model.values(t0)[0]
    K = h1 * h1 + model.c / (f * f) if model.c != 0 else h1 * h1
    xt, x = X
    yt, y = Y
    zt, z = Z
    fiber = _comb(
        (K * _dot(y, z), x), (-K * _dot(x, z), y),
        (-h2 * yt * zt, x), (h2 * xt * zt, y),
    )
    time = -h2 * yt * _dot(x, z) + h2 * xt * _dot(y, z)
    return time, fiber


@dataclass(frozen=True)
class RWFrameCurvature:
    """Curvature table on a fixed orthonormal frame, in the shape the tension oracle expects."""

    model: RWModel
    t0: object
    frame: tuple

    def frame_curvature(self, a: int, b: int, cc: int, eps) -> tuple:
        n = len(self.frame)
        for idx in (a, b, cc):
            if not 1 <= idx <= n:
                raise IndexError(f"frame index {idx} outside 1..{n}")
        v = rw_curvature(self.model, self.t0, self.frame[a - 1], self.frame[b - 1], self.frame[cc - 1])
        return tuple(eps[k] * rw_inner(v, self.frame[k]) for k in range(n))


def rw_frame_curvature(model: RWModel, t0, pattern: str):
    """Named curvature and connection rules evaluated on unit vectors.

    ``pattern`` is one of ``"R(X,Y)Z"``, ``"R(X,t)t"``, ``"R(X,Y)t"``,
    ``"R(X,t)Y"``, ``"D_t t"``, ``"D_t X"``, ``"D_X Y"``.  ``X`` and ``Y`` are
    the first two fiber unit vectors and ``t`` is ``d/dt``; the result is a
    vector in ``(x_t, fiber)`` form.
    """
    X = (0, (1, 0))
    Y = (0, (0, 1))
    dt = (1, (0, 0))
    vec = {"X": X, "Y": Y, "Z": X, "t": dt}
    pattern = pattern.replace(" ", "")
    if pattern.startswith("R("):
        a, rest = pattern[2:].split(",", 1)
        b, c = rest.split(")", 1)
        return rw_curvature(model, t0, vec[a], vec[b], vec[c])
    if pattern.startswith("D_") and len(pattern) == 4:
        return rw_connection(model, t0, vec[pattern[2]], vec[pattern[3]])
    raise ValueError(f"unknown pattern {pattern!r}")


# -- tension -------------------------------------------------------------------


def rw_tension_normal(kappa, r: int, f_ratio):
    """``-kappa^{2r-3} (kappa^2 + (r-1) f''/f)``: the ``N`` component of ``tau_r`` when ``N = d_t``."""
    if r < 2:
        raise ValueError("r must be >= 2")
    return -kappa ** (2 * r - 3) * (kappa * kappa + (r - 1) * f_ratio)


def rw_tension_normal_scaled(kappa_sq, r: int, f_ratio):
    """Same coefficient divided by ``kappa``; rational whenever ``kappa^2`` is."""
    return -kappa_sq ** (r - 2) * (kappa_sq + (r - 1) * f_ratio)


def normal_time_helix(model: RWModel, t0, kappa_sq) -> tuple:
    """Helix with ``T`` along the fiber and ``N = d_t``, plus its curvature table."""
    h = Helix.from_squares((1, -1), (kappa_sq,))
    table = RWFrameCurvature(model, t0, ((0, (1,)), (1, (0,))))
    return h, table


def oracle_normal_component(model: RWModel, t0, kappa_sq, r: int) -> tuple:
    """``tau_r`` of :func:`normal_time_helix` through the generic oracle: (scaled, true) ``N`` parts."""
    h, table = normal_time_helix(model, t0, kappa_sq)
    res = tension_field(h, table, r)
    assert res.scaled[0] == 0
    return res.scaled[1], res.coeffs[1]


@dataclass(frozen=True)
class RWCheck:
    r_harmonic: bool
    kappa: object
    kappa_sq: object
    d: object
    value: object
    t0: object
    r: int

    def to_json(self) -> dict:
        return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.__dict__.items()}


def rw_r_harmonic_check(model: RWModel, t0, r: int) -> RWCheck:
    """Whether ``(t0, alpha(s / f(t0)))`` with ``alpha`` a fiber geodesic is proper r-harmonic.

    True iff ``f'(t0) != 0`` and ``f'^2 + (r-1) f f'' = 0``; tested in the
    form ``(f'/f)^2 + (r-1) f''/f = 0``.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    h1, h2 = model.ratios(t0)
    value = h1 * h1 + (r - 1) * h2
    f = model.values(t0)[0]
    d = 1 / f
    kappa = abs(h1)
    return RWCheck(h1 != 0 and value == 0, kappa, h1 * h1, d, value, t0, r)


def power_law_identity(r: int) -> dict:
    """Symbolic check of the power-law family ``f = t^lam``.

    Returns the exponent polynomial ``P(lam)`` with
    ``f'^2 + (r-1) f f'' = P(lam) t^(2 lam - 2)``, its roots in ``(0, 1)`` and
    the deceleration parameter at the root.
    """
    lam = sp.Symbol("lam", positive=True)
    f = T**lam
    lhs = sp.diff(f, T) ** 2 + (r - 1) * f * sp.diff(f, T, 2)
    P = sp.expand(sp.simplify(lhs / T ** (2 * lam - 2)))
    roots = [x for x in sp.solve(P, lam) if x.is_positive and x < 1]
    q = sp.simplify(-f * sp.diff(f, T, 2) / sp.diff(f, T) ** 2)
    return {
        "P": P,
        "expected": sp.expand(lam**2 + (r - 1) * lam * (lam - 1)),
        "roots": roots,
        "q": q,
        "q_at_root": [sp.simplify(q.subs(lam, x)) for x in roots],
    }


@dataclass(frozen=True)
class RescalingCheck:
    gamma_zero: bool
    beta_zero: bool
    ratios: tuple
    expected_ratio: float

    @property
    def agree(self) -> bool:
        return self.gamma_zero == self.beta_zero


def rw_rescaling_check(model: RWModel, t0, beta: Helix, r: int, tol: float = CRITICAL_TOL) -> RescalingCheck:
    """Compare ``tau_r`` of ``gamma = (t0, alpha)`` with that of ``beta(s) = alpha(f(t0) s)``.

    ``beta`` is a unit-speed helix of the Riemannian fiber.  ``gamma`` has the
    same frame up to the factor ``1/f`` and curvatures ``k_i / f``; its
    tension is evaluated with the warped-product curvature rules, that of
    ``beta`` with the fiber's space-form table.  Reported ratios are
    component-wise ``tau_r(gamma) / tau_r(beta)`` in common fiber
    coordinates and should all equal ``f(t0)^{-2r}``.

    Raises
    ------
    ValueError
        If ``|f'(t0)| > tol``.
    """
    f, df, _ = model.values(t0)
    if abs(df) > tol:
        raise ValueError("the rescaling relation needs f'(t0) = 0")
    if any(e != 1 for e in beta.eps):
        raise ValueError("the fiber is Riemannian: beta needs all signs +1")
    n = beta.n
    tb = tension_field(beta, _RiemannianTable(model.c), r)
    gamma = Helix.from_squares(beta.eps, tuple(k / (f * f) for k in beta.kappa_sq))
    frame = tuple((0, tuple(1 if i == j else 0 for j in range(n))) for i in range(n))
    tg = tension_field(gamma, RWFrameCurvature(model, t0, frame), r)
    # tau_r(gamma) in beta's unit frame: divide each coefficient by f
    ratios = tuple(
        (float(g) / float(f)) / float(b) for g, b in zip(tg.coeffs, tb.coeffs) if float(b) != 0
    )
    return RescalingCheck(_near_zero(tg), _near_zero(tb), ratios, float(f) ** (-2 * r))


class _RiemannianTable:
    """Constant-curvature table of the Riemannian fiber (index 0, so no :class:`SpaceForm`)."""

    def __init__(self, c):
        self.c = c

    def frame_curvature(self, a, b, cc, eps):
        return curvature_on_frame(self.c, eps, a, b, cc)


def _near_zero(res, tol: float = 1e-12) -> bool:
    if all(isinstance(x, (int, Fraction)) for x in res.scaled):
        return res.is_zero
    return res.norm() <= tol


def symbolic_warped_curvature(c=0):
    """Riemann tensor of ``-dt^2 + f(t)^2 g`` with a 2-dimensional fiber, by direct computation.

    The fiber metric is ``dx^2 + dy^2`` (``c = 0``) or the round metric
    ``dx^2 + sin(x)^2 dy^2`` (``c = 1``).  Returns ``(coords, metric, R, f)``
    with ``R[a][b][c][d]`` the component of ``R(d_c, d_d) d_b`` along ``d_a``
    and ``f`` the undefined warping function of ``t``.
    """
    t, x, y = sp.symbols("t x y")
    f = sp.Function("f")(t)
    coords = (t, x, y)
    fiber_yy = 1 if c == 0 else sp.sin(x) ** 2
    g = sp.diag(-1, f**2, f**2 * fiber_yy)
    ginv = g.inv()
    n = 3
    Gam = [[[sp.simplify(sum(ginv[a, e] * (sp.diff(g[e, b], coords[cc]) + sp.diff(g[e, cc], coords[b])
                                          - sp.diff(g[b, cc], coords[e])) for e in range(n)) / 2)
             for cc in range(n)] for b in range(n)] for a in range(n)]
    R = [[[[sp.simplify(
        sp.diff(Gam[a][b][d], coords[cc]) - sp.diff(Gam[a][b][cc], coords[d])
        + sum(Gam[a][cc][e] * Gam[e][b][d] - Gam[a][d][e] * Gam[e][b][cc] for e in range(n)))
        for d in range(n)] for cc in range(n)] for b in range(n)] for a in range(n)]
    return coords, g, R, f
