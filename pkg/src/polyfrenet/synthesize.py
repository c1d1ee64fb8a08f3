"""Curves from prescribed curvatures: integrate the Frenet system in a model chart.

State is the point ``x`` together with the frame ``F_1..F_n`` in ambient
coordinates.  Along a quadric ``<x,x> = 1/c`` the ambient derivative of a
frame vector is its covariant derivative plus the normal part::

    x'   = F_1
    F_i' = sum_j Omega_ij F_j - c <F_1, F_i> x

On an orthonormal frame ``<F_1, F_i> = eps_1 delta_1i``, and the integrator
uses that constant: only ``F_1`` picks up the term ``-c eps_1 x``.  This keeps
the system linear in the state (the running inner product would make it cubic
and stiff once roundoff moves it off the constraint).  The frame Gram matrix
is conserved by the exact flow, so its drift measures integrator error only.
"""
from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicSpline

from .config import Tolerances
from .frenet import FrenetCurve, Helix, _omega, jet_powers
from .metric import Signature, SignatureError, gram_schmidt_nondegenerate
from .spaceforms import SpaceForm
from .tension import tension_field

log = logging.getLogger(__name__)

FRAME_TOL = 1e-9


class DriftExceededError(RuntimeError):
    """Frame orthonormality or the on-model constraint drifted past its bound."""

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution


class InsufficientSamplingError(ValueError):
    pass


@dataclass
class SynthesisProblem:
    geometry: SpaceForm
    curve: object  # FrenetCurve or Helix
    initial_point: np.ndarray
    initial_frame: list
    s_range: tuple = (0.0, 10.0)
    tolerances: Tolerances = field(default_factory=Tolerances)
    samples: int = 1001
    reorthonormalize_every: int | None = None  # number of chunks; None = off

    @property
    def frenet(self) -> FrenetCurve:
        return FrenetCurve.from_helix(self.curve) if isinstance(self.curve, Helix) else self.curve

    @property
    def sig(self) -> Signature:
        return self.curve.sig

    def check(self) -> "SynthesisProblem":
        g = self.geometry
        p = np.asarray(self.initial_point, dtype=float)
        if p.shape != (g.ambient_dim,):
            raise ValueError(f"initial point must have {g.ambient_dim} coordinates")
        if g.defect(p) > self.tolerances.defect_max * max(1.0, abs(1 / float(g.c)) if g.c else 1.0):
            raise ValueError(f"initial point off the model (defect {g.defect(p):.3e})")
        eps = self.sig.eps
        if len(self.initial_frame) != len(eps):
            raise ValueError(f"need {len(eps)} frame vectors")
        F = np.asarray(self.initial_frame, dtype=float)
        gram = np.array([[g.inner(a, b) for b in F] for a in F])
        err = np.max(np.abs(gram - np.diag(eps)))
        if err > FRAME_TOL:
            raise ValueError(f"initial frame not orthonormal with signs {eps} (error {err:.3e})")
        if g.kind != "flat":
            tang = max(abs(g.inner(v, p)) for v in F)
            if tang > FRAME_TOL:
                raise ValueError(f"initial frame not tangent to the model ({tang:.3e})")
        return self


@dataclass
class CurveSolution:
    """Sampled curve with its frames and per-sample diagnostics."""

    s: np.ndarray
    points: np.ndarray  # (N, M)
    frames: np.ndarray  # (N, n, M)
    drift: np.ndarray
    defect: np.ndarray
    problem: SynthesisProblem
    dense: object = None
    corrections: list = field(default_factory=list)

    @property
    def max_drift(self) -> float:
        return float(self.drift.max())

    @property
    def max_defect(self) -> float:
        return float(self.defect.max())

    def state(self, s) -> tuple:
        """Point and frame at arbitrary ``s`` from the dense interpolant."""
        y = self.dense(s)
        M = self.problem.geometry.ambient_dim
        n = self.problem.sig.n
        return y[:M], y[M:].reshape(n, M)

    def diagnostics(self) -> dict:
        return {
            "samples": int(self.s.size),
            "s_range": [float(self.s[0]), float(self.s[-1])],
            "max_drift": self.max_drift,
            "max_defect": self.max_defect,
            "reorthonormalizations": len(self.corrections),
            "max_correction": max(self.corrections, default=0.0),
        }


def _rhs(geometry: SpaceForm, frenet: FrenetCurve):
    eps = frenet.sig.eps
    n = len(eps)
    M = geometry.ambient_dim
    c = float(geometry.c)
    curved = geometry.kind != "flat"

    def f(s, y):
        x = y[:M]
        F = y[M:].reshape(n, M)
        om = _omega(eps, [float(k(s)) for k in frenet.curvatures])
        dF = om @ F
        if curved:
            dF[0] -= c * eps[0] * x
        return np.concatenate([F[0], dF.ravel()])

    return f


def _gram_drift(geometry, frames, eps) -> np.ndarray:
    G = np.einsum("kim,m,kjm->kij", frames, geometry.ambient_metric(), frames)
    return np.max(np.abs(G - np.diag(eps)), axis=(1, 2))


def integrate_frenet(p: SynthesisProblem, raise_on_drift: bool = True) -> CurveSolution:
    """Integrate the Frenet system with an adaptive 8(5,3) Runge-Kutta scheme.

    Raises
    ------
    DriftExceededError
        When the frame drift or the on-model defect exceeds its bound; the
        offending solution is attached to the exception.
    """
    p.check()
    g, frenet, tol = p.geometry, p.frenet, p.tolerances
    eps = p.sig.eps
    n, M = len(eps), g.ambient_dim
    s0, s1 = map(float, p.s_range)
    grid = np.linspace(s0, s1, p.samples)
    y0 = np.concatenate([np.asarray(p.initial_point, float), np.asarray(p.initial_frame, float).ravel()])
    f = _rhs(g, frenet)

    chunks = p.reorthonormalize_every or 1
    edges = np.linspace(s0, s1, chunks + 1)
    pieces, dense_parts, corrections = [], [], []
    for a, b in zip(edges[:-1], edges[1:]):
        mask = (grid >= a) & ((grid < b) | (b == s1))
        res = solve_ivp(f, (a, b), y0, method="DOP853", rtol=tol.ode_rel, atol=tol.ode_abs,
                        t_eval=grid[mask], dense_output=True)
        if not res.success:
            raise RuntimeError(f"integration failed: {res.message}")
        pieces.append(res.y.T)
        dense_parts.append((a, b, res.sol))
        y0 = res.sol(b)
        if p.reorthonormalize_every:
            y0, corr = _reorthonormalize(g, y0, n, M)
            corrections.append(corr)
            log.info("re-orthonormalized at s=%.6g, correction %.3e", b, corr)

    Y = np.vstack(pieces)
    points = Y[:, :M]
    frames = Y[:, M:].reshape(-1, n, M)
    drift = _gram_drift(g, frames, eps)
    defect = np.array([g.defect(x) for x in points])

    def dense(s):
        for a, b, sol in dense_parts:
            if s <= b or b == s1:
                return sol(s)
        return dense_parts[-1][2](s)

    sol = CurveSolution(grid, points, frames, drift, defect, p, dense, corrections)
    scale = abs(1 / float(g.c)) if g.c else 1.0
    if raise_on_drift and (sol.max_drift > tol.drift_max or sol.max_defect > tol.defect_max * max(1.0, scale)):
        raise DriftExceededError(
            f"drift {sol.max_drift:.3e} (max {tol.drift_max:.1e}), defect {sol.max_defect:.3e}", sol
        )
    return sol


def _reorthonormalize(g: SpaceForm, y, n, M):
    x = y[:M].copy()
    F = y[M:].reshape(n, M)
    if g.kind != "flat":
        x = x / np.sqrt(abs(g.inner(x, x) * float(g.c)))
        F = F - float(g.c) * np.outer(g.inner(F, x), x)
    E, _ = gram_schmidt_nondegenerate(list(F), g.ambient_index)
    E = np.asarray(E)
    corr = float(max(np.max(np.abs(E - y[M:].reshape(n, M))), np.max(np.abs(x - y[:M]))))
    return np.concatenate([x, E.ravel()]), corr


def orthonormality_drift(sol: CurveSolution) -> float:
    """Max over samples and pairs of ``|<F_i, F_j> - eps_i delta_ij|``."""
    return float(_gram_drift(sol.problem.geometry, sol.frames, sol.problem.sig.eps).max())


# -- residuals ---------------------------------------------------------------


def numeric_tension(sol: CurveSolution, r: int, mode: str = "general") -> np.ndarray:
    """Per-sample norm of ``tau_r`` along a synthesized curve.

    ``mode="helix"`` evaluates the exact oracle on the helix data (constant
    profile).  ``mode="general"`` builds ``nabla_T^k T`` from curvature jets
    and the integrated frames, adds the ambient curvature terms, and reports
    the Euclidean norm of the ambient vector.
    """
    p = sol.problem
    if mode == "helix":
        if not isinstance(p.curve, Helix):
            raise ValueError("helix mode needs constant curvatures")
        res = tension_field(p.curve, p.geometry, r)
        return np.full(sol.s.size, res.norm())
    if mode != "general":
        raise ValueError(f"unknown mode {mode!r}")
    return np.array([np.linalg.norm(v) for v in ambient_tension(sol, r)])


def ambient_tension(sol: CurveSolution, r: int) -> np.ndarray:
    """``tau_r`` in ambient coordinates at every sample, shape ``(N, M)``."""
    p = sol.problem
    g = p.geometry
    kmax = 2 * r - 1
    frenet = p.frenet
    out = np.zeros_like(sol.points)
    for idx, s in enumerate(sol.s):
        try:
            coeffs = jet_powers(frenet, s, kmax)
        except ValueError as exc:
            raise InsufficientSamplingError(str(exc)) from exc
        F = sol.frames[idx]
        V = coeffs @ F  # row k is nabla^k T
        tau = V[kmax].copy()
        for ell in range(r - 1):
            sign = -1.0 if ell % 2 else 1.0
            tau += sign * g.ambient_curvature(sol.points[idx], V[2 * r - 3 - ell], V[ell], V[0])
        out[idx] = tau
    return out


def measured_tension(sol: CurveSolution, r: int) -> np.ndarray:
    """Per-sample ``|tau_r|`` of a helix rebuilt from curvatures measured on the output.

    Curvatures come from :func:`frenet_analysis` (numeric derivatives of the
    integrated frames), so the residual reflects integration error even where
    the jet residual vanishes identically.  Only meaningful for helix problems.
    """
    p = sol.problem
    if not isinstance(p.curve, Helix):
        raise ValueError("measured residual needs a helix problem")
    out = np.zeros(sol.s.size)
    for idx, ks in enumerate(frenet_analysis(sol)):
        h = Helix(p.sig, tuple(float(k) ** 2 for k in ks), tuple(float(k) for k in ks))
        out[idx] = tension_field(h, p.geometry, r).norm()
    return out


def frame_coefficients(sol: CurveSolution, vectors: np.ndarray) -> np.ndarray:
    """Components ``eps_i <v, F_i>`` of ambient vectors along the integrated frames."""
    g = sol.problem.geometry
    eps = np.asarray(sol.problem.sig.eps, float)
    return np.einsum("km,kim->ki", vectors * g.ambient_metric(), sol.frames) * eps


def _derivative(sol: CurveSolution, s: float, h: float = 1e-3) -> np.ndarray:
    """Fourth-order central difference of the dense state.

    Near the ends the boundary interpolant is evaluated slightly outside the
    span, which is accurate at this step size.
    """
    y = [sol.dense(s + k * h) for k in (-2, -1, 1, 2)]
    return (y[0] - 8 * y[1] + 8 * y[2] - y[3]) / (12 * h)


def frenet_defect(sol: CurveSolution, stride: int = 10) -> float:
    """Max mismatch between differentiated frames and the Frenet equations.

    The frames are differentiated numerically, projected onto the model's
    tangent space and compared with ``Omega F``; this checks the
    normal-term sign independently of the integrator's right-hand side.
    """
    p = sol.problem
    g, eps = p.geometry, p.sig.eps
    n, M = len(eps), g.ambient_dim
    worst = 0.0
    tol = max(1e-8, 10 * sol.max_defect)
    for idx in range(0, sol.s.size, stride):
        s = sol.s[idx]
        x, F = sol.state(s)
        dF = _derivative(sol, s)[M:].reshape(n, M)
        om = _omega(eps, [float(k(s)) for k in p.frenet.curvatures])
        for i in range(n):
            cov = g.embedded_connection(x, F[i], dF[i], tol=tol)
            worst = max(worst, float(np.max(np.abs(cov - om[i] @ F))))
    return worst


def frenet_analysis(sol: CurveSolution) -> np.ndarray:
    """Recover ``k_i(s) = <F_i', F_{i+1}>`` at the samples from the dense output."""
    p = sol.problem
    g = p.geometry
    n, M = p.sig.n, g.ambient_dim
    ks = np.zeros((sol.s.size, n - 1))
    for idx, s in enumerate(sol.s):
        _, F = sol.state(s)
        dF = _derivative(sol, s)[M:].reshape(n, M)
        for i in range(n - 1):
            ks[idx, i] = g.inner(dF[i], F[i + 1])
    return ks


def curvatures_from_samples(s: np.ndarray, ks: np.ndarray) -> tuple:
    """Cubic-spline curvature functions ``k(s, d)`` built from sampled values."""
    funcs = []
    for col in ks.T:
        spline = CubicSpline(s, col)

        def k(t, d=0, spline=spline):
            return spline(t, d) if d else spline(t)

        funcs.append(k)
    return tuple(funcs)


# -- initial data ------------------------------------------------------------


def auto_frame(geometry: SpaceForm, sig) -> tuple:
    """Base point and an orthonormal initial frame with the requested signs.

    Picks coordinate directions tangent to the model with the right causal
    character, then passes them through the non-degenerate Gram-Schmidt.
    """
    eps = tuple(sig)
    point = geometry.base_point()
    pool = geometry.tangent_basis(point)
    chosen = []
    for e in eps:
        pick = next((v for v in pool if np.sign(geometry.inner(v, v)) == e), None)
        if pick is None:
            raise SignatureError(f"no tangent direction left with sign {e} for {eps}")
        pool = [v for v in pool if v is not pick]
        chosen.append(pick)
    frame, got = gram_schmidt_nondegenerate(chosen, geometry.ambient_index)
    if got.eps != eps:
        raise SignatureError(f"built frame has signs {got.eps}, wanted {eps}")
    return point, frame


# -- export ------------------------------------------------------------------


def write_csv(sol: CurveSolution, path, residual: np.ndarray | None = None) -> None:
    """Columns: s, point coordinates, frame coordinates, drift, defect[, residual]."""
    M = sol.points.shape[1]
    n = sol.frames.shape[1]
    header = ["s"] + [f"x{j}" for j in range(M)]
    header += [f"F{i + 1}_{j}" for i in range(n) for j in range(M)]
    header += ["drift", "defect"] + (["residual"] if residual is not None else [])
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for k in range(sol.s.size):
            row = [sol.s[k], *sol.points[k], *sol.frames[k].ravel(), sol.drift[k], sol.defect[k]]
            if residual is not None:
                row.append(residual[k])
            w.writerow([f"{v:.15g}" for v in row])


def write_json(sol: CurveSolution, path, extra: dict | None = None) -> None:
    data = sol.diagnostics()
    data.update(extra or {})
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2)
