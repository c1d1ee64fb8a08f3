"""Triharmonic curves with non-constant curvature on a ruled Lorentz surface.

A curve ``gamma`` in R^3_1 with Frenet data ``(k, tau)`` sweeps the surface
``X(s, v) = gamma(s) + v N(s)``.  Along ``gamma`` the surface has Gaussian
curvature ``tau^2`` and ``gamma`` has geodesic curvature ``k``, so
triharmonicity in the surface reduces to two ODE conditions on ``(k, tau)``.
With the first integral ``5 k'^2 + k^4 = 1`` the second condition fixes
``tau^2`` algebraically in terms of ``k``.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .tension import surface_tritension

K0_MAX = 0.5 ** 0.25
TAU_SQ_FLOOR = 1e-6


def first_fundamental_form(s, v, k, tau, eps) -> tuple:
    """``(E, F, G)`` of the ruled surface at ``(s, v)``; ``s`` only locates ``k`` and ``tau``."""
    e1, e2, e3 = eps
    E = e1 * (1 - e1 * k * v) ** 2 + e3 * tau**2 * v**2
    return E, 0 * E, e2 + 0 * E


def gauss_curvature_along_gamma(tau_gamma, eps=(-1, 1, 1)):
    """``K_S = -eps1 eps2 eps3 tau^2``; equals ``tau^2`` for the Lorentz construction."""
    e1, e2, e3 = eps
    if e1 * e2 * e3 != -1:
        raise ValueError("the construction needs eps1*eps2*eps3 = -1")
    return -e1 * e2 * e3 * tau_gamma**2


def conservation(k, dk, c1=0.0, c2=1.0):
    """Residual of the first integral ``5 k'^2 + k^4 + 2 c1 / k = c2``."""
    return 5 * dk**2 + k**4 + 2 * c1 / k - c2


@dataclass
class Profile:
    """Curvature profile samples with derivatives up to order four."""

    s: np.ndarray
    k: np.ndarray
    dk: np.ndarray
    d2k: np.ndarray
    d3k: np.ndarray
    d4k: np.ndarray

    def restrict(self, mask) -> "Profile":
        return Profile(*(a[mask] for a in (self.s, self.k, self.dk, self.d2k, self.d3k, self.d4k)))


def solve_profile(k0: float, s_range=(0.0, 1.0), samples: int = 201, rtol: float = 1e-12, atol: float = 1e-14) -> Profile:
    """Integrate ``k'' = -(2/5) k^3`` from ``k(s0) = k0``, ``k'(s0) = +sqrt((1 - k0^4)/5)``.

    The second-order form is the derivative of the first integral and has
    no turning-point singularity.  Higher derivatives come from the ODE::

        k''' = -(6/5) k^2 k'
        k'''' = -(12/5) k k'^2 - (6/5) k^2 k''
    """
    if not 0 < k0 < K0_MAX:
        raise ValueError(f"k0 must lie in (0, {K0_MAX:.6f})")
    s0, s1 = map(float, s_range)
    grid = np.linspace(s0, s1, samples)
    dk0 = math.sqrt((1 - k0**4) / 5)

    def f(_, y):
        return [y[1], -0.4 * y[0] ** 3]

    res = solve_ivp(f, (s0, s1), [k0, dk0], method="DOP853", rtol=rtol, atol=atol, t_eval=grid)
    if not res.success:
        raise RuntimeError(res.message)
    k, dk = res.y
    d2k = -0.4 * k**3
    d3k = -1.2 * k**2 * dk
    d4k = -2.4 * k * dk**2 - 1.2 * k**2 * d2k
    return Profile(grid, k, dk, d2k, d3k, d4k)


def torsion_from_profile(kbar, eps1: int = -1, eps2: int = 1):
    """``tau^2 = 63 (1 - 2 k^4) / (10 k^2 (eps1 + 5 eps2))``.

    Raises
    ------
    ValueError
        If ``eps1 + 5 eps2 = 0`` or the value is not positive.
    """
    den = eps1 + 5 * eps2
    if den == 0:
        raise ValueError("eps1 + 5 eps2 = 0")
    kbar = np.asarray(kbar, dtype=float)
    tau_sq = 63 * (1 - 2 * kbar**4) / (10 * kbar**2 * den)
    if np.any(tau_sq <= 0):
        raise ValueError("non-positive tau^2: outside the construction's neighbourhood")
    return tau_sq if tau_sq.ndim else float(tau_sq)


def triharmonic_residual(k, dk, d2k, d3k, d4k, tau_sq, eps1: int = -1, eps2: int = 1) -> tuple:
    """The two scalar conditions for triharmonicity in the ruled surface."""
    res1 = d3k * k + 2 * k**3 * dk + 2 * dk * d2k
    res2 = (eps1 * d2k - 2 * eps2 * k**3) * tau_sq + d4k + 10 * k**2 * d2k + 15 * k * dk**2 + k**5
    return res1, res2


def strip_half_width(k, tau_sq) -> float:
    """Half the smallest ``|v|`` where ``E`` vanishes, for ``eps = (-1, 1, 1)``.

    ``E = -(1 + k v)^2 + tau^2 v^2`` vanishes where
    ``(tau^2 - k^2) v^2 - 2 k v - 1 = 0``.
    """
    best = math.inf
    for kk, tt in zip(np.atleast_1d(k), np.atleast_1d(tau_sq)):
        a, b, c = tt - kk * kk, -2 * kk, -1.0
        if abs(a) < 1e-15:
            roots = [-c / b]
        else:
            disc = b * b - 4 * a * c
            if disc < 0:
                continue
            sq = math.sqrt(disc)
            roots = [(-b - sq) / (2 * a), (-b + sq) / (2 * a)]
        best = min(best, min(abs(v) for v in roots))
    return 0.5 * best


@dataclass
class RuledSurfaceData:
    eps: tuple
    delta: float
    profile: Profile
    tau_sq: np.ndarray
    res1: np.ndarray
    res2: np.ndarray

    @property
    def window(self) -> tuple:
        return float(self.profile.s[0]), float(self.profile.s[-1])

    def summary(self) -> dict:
        p = self.profile
        return {
            "eps": list(self.eps),
            "window": list(self.window),
            "delta": self.delta,
            "k_range": float(p.k.max() - p.k.min()),
            "max_conservation": float(np.max(np.abs(conservation(p.k, p.dk)))),
            "max_res1": float(np.max(np.abs(self.res1))),
            "max_res2": float(np.max(np.abs(self.res2))),
        }

    def write_csv(self, path) -> None:
        p = self.profile
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["s", "k", "dk", "tau", "res1", "res2"])
            for row in zip(p.s, p.k, p.dk, np.sqrt(self.tau_sq), self.res1, self.res2):
                w.writerow([f"{v:.15g}" for v in row])

    def write_json(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.summary(), fh, indent=2)


def build_ruled_surface(k0: float = 0.5, s_range=(0.0, 1.0), samples: int = 201,
                        eps=(-1, 1, 1), floor: float = TAU_SQ_FLOOR) -> RuledSurfaceData:
    """Profile, torsion, residuals and strip width on the admissible window.

    The window is the connected run of samples around ``s0`` where ``k > 0``
    and ``tau^2 >= floor``.
    """
    e1, e2, e3 = eps
    if e3 != 1 or e1 * e2 != -1:
        raise ValueError("the Lorentz construction uses eps3 = 1 and eps1*eps2 = -1")
    prof = solve_profile(k0, s_range, samples)
    den = e1 + 5 * e2
    raw = 63 * (1 - 2 * prof.k**4) / (10 * prof.k**2 * den)
    ok = (prof.k > 0) & (raw >= floor)
    if not ok[0]:
        raise ValueError("tau^2 is below the floor at s0")
    stop = int(np.argmin(ok)) if not ok.all() else ok.size
    prof = prof.restrict(slice(0, stop))
    tau_sq = torsion_from_profile(prof.k, e1, e2)
    res1, res2 = triharmonic_residual(prof.k, prof.dk, prof.d2k, prof.d3k, prof.d4k, tau_sq, e1, e2)
    delta = strip_half_width(prof.k, tau_sq)
    return RuledSurfaceData(tuple(eps), delta, prof, tau_sq, res1, res2)


def surface_tension_check(data: RuledSurfaceData) -> np.ndarray:
    """Both tritension components with ``K_M = tau^2``, as an independent route to the residuals."""
    p = data.profile
    e1, e2, _ = data.eps
    K_M = gauss_curvature_along_gamma(np.sqrt(data.tau_sq), data.eps)
    t, nrm = surface_tritension(p.k, p.dk, p.d2k, p.d3k, p.d4k, K_M, e1, e2)
    return np.vstack([t, nrm])
