"""Grid sweeps comparing the tension oracle with the closed-form classifiers.

The oracle side runs on numpy ``int64`` arrays.  Every rescaled component of
``tau_r`` is a homogeneous polynomial in ``(kappa_i^2, c)``, so multiplying
all squared curvatures and ``c`` by the grid denominator turns a rational
grid into an integer one without changing which points vanish.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import (
    classify_2frenet,
    classify_nfrenet_biharmonic,
    three_frenet_tau_sq,
)
from .metric import Signature
from .spaceforms import SpaceForm
from .tension import scaled_tension

DEFAULT_CAP = 5_000_000


class GridTooLargeError(ValueError):
    """Raised when a sweep would exceed the configured number of points."""


@dataclass(frozen=True)
class Grid:
    """Rational ladder ``step, 2*step, ..., stop`` (inclusive)."""

    step: Fraction = Fraction(1, 4)
    stop: Fraction = Fraction(10)

    @property
    def count(self) -> int:
        return int(self.stop / self.step)

    def values(self) -> list:
        return [self.step * i for i in range(1, self.count + 1)]

    def scaled_ints(self) -> np.ndarray:
        """Grid values divided by ``step``: the integers ``1..count``."""
        return np.arange(1, self.count + 1, dtype=np.int64)


def all_signatures(n: int) -> list:
    return [tuple(p) for p in itertools.product((1, -1), repeat=n)]


def _curvature(eps, c):
    sig = Signature.of(eps)
    return SpaceForm(sig.ambient_dim, sig.ambient_index, c)


def oracle_zero_grid(eps, c, r: int, grid: Grid, dims: int | None = None) -> np.ndarray:
    """Boolean array over the grid, True where ``tau_r`` vanishes exactly.

    Axis ``i`` runs over ``kappa_{i+1}^2``.  ``dims`` limits how many
    curvatures are swept; the default sweeps all ``n - 1``.
    """
    n = len(eps)
    dims = n - 1 if dims is None else dims
    base = grid.scaled_ints()
    scale = grid.step.denominator if grid.step.numerator == 1 else None
    if scale is None:
        raise ValueError("grid step must be 1/q for the integer scaling")
    if grid.count ** dims > DEFAULT_CAP * 10:
        raise GridTooLargeError(f"{grid.count}^{dims} points")
    kappa_sq = []
    for i in range(dims):
        shape = [1] * dims
        shape[i] = -1
        kappa_sq.append(base.reshape(shape))
    c_scaled = Fraction(c) * scale
    if c_scaled.denominator != 1:
        raise ValueError("c must be a multiple of the grid step")
    curv = _curvature(eps, int(c_scaled))
    comps = scaled_tension(eps, kappa_sq, curv, r)
    shape = (grid.count,) * dims
    zero = np.ones(shape, dtype=bool)
    for comp in comps:
        zero &= np.broadcast_to(np.asarray(comp) == 0, shape)
    return zero


def classifier_grid_2(eps, c, r: int, grid: Grid) -> np.ndarray:
    res = classify_2frenet(c, eps[0], eps[1], r)
    vals = grid.values()
    out = np.zeros(grid.count, dtype=bool)
    for s in res.proper_solutions():
        if s["kappa_sq"] in vals:
            out[vals.index(s["kappa_sq"])] = True
    return out


def classifier_grid_3(eps, c, r: int, grid: Grid) -> np.ndarray:
    vals = grid.values()
    index = {v: i for i, v in enumerate(vals)}
    out = np.zeros((grid.count, grid.count), dtype=bool)
    for i, K in enumerate(vals):
        for x, _ in three_frenet_tau_sq(c, eps, r, K):
            if x.is_rational and x.a in index:
                out[i, index[x.a]] = True
    return out


@dataclass(frozen=True)
class SweepRecord:
    n: int
    r: int
    c: int
    eps: tuple
    points: int
    solutions: int
    mismatches: int

    def row(self) -> dict:
        return {
            "n": self.n, "r": self.r, "c": self.c, "eps": " ".join(map(str, self.eps)),
            "points": self.points, "solutions": self.solutions, "mismatches": self.mismatches,
        }


def compare_case(task) -> SweepRecord:
    """Oracle vs classifier on one ``(n, r, c, eps)`` cell of the grid."""
    n, r, c, eps, grid = task
    oracle = oracle_zero_grid(eps, c, r, grid)
    if n == 2:
        cls = classifier_grid_2(eps, c, r, grid)
    elif n == 3:
        cls = classifier_grid_3(eps, c, r, grid)
    else:
        raise ValueError("equivalence sweep covers n = 2, 3")
    return SweepRecord(n, r, c, eps, int(oracle.size), int(oracle.sum()), int((oracle != cls).sum()))


def run_tasks(func, tasks, workers: int = 1) -> list:
    """Map ``func`` over ``tasks`` keeping task order, optionally in worker processes."""
    if workers <= 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks))


def equivalence_sweep(ns=(2, 3), rs=range(2, 6), cs=range(-2, 3), grid: Grid = Grid(),
                      workers: int = 1, cap: int = DEFAULT_CAP) -> list:
    tasks = [
        (n, r, c, eps, grid)
        for n in ns for r in rs for c in cs for eps in all_signatures(n)
    ]
    total = sum(grid.count ** (n - 1) for n, *_ in tasks)
    if total > cap:
        raise GridTooLargeError(f"{total} grid points exceed the cap {cap}")
    return run_tasks(compare_case, tasks, workers)


def full_biharmonic_counterexamples(n: int, c, grid: Grid = Grid()) -> int:
    """Grid points where a full ``n``-Frenet helix would be biharmonic (expected none)."""
    count = 0
    for eps in all_signatures(n):
        oracle = oracle_zero_grid(eps, c, 2, grid)
        verdict = classify_nfrenet_biharmonic(eps, c, full=True)
        count += int(oracle.sum()) + (1 if verdict.feasible else 0)
    return count


def root_table(c, eps, r: int, kappa_values) -> list:
    """Rows of admissible ``tau^2`` roots (at most two bracket roots) per ``kappa^2``."""
    from .classify import classify_3frenet

    rows = []
    for K in kappa_values:
        res = classify_3frenet(c, *eps, r, kappa_sq=K)
        bracket = [s["tau_sq"] for s in res.solutions if s.get("origin") != "null-sum"]
        rows.append({
            "kappa_sq": K,
            "tau_sq_lo": bracket[0] if bracket else None,
            "tau_sq_hi": bracket[-1] if len(bracket) > 1 else None,
            "null_sum": any(s.get("origin") == "null-sum" for s in res.proper_solutions()),
            "case": next((s.get("case") for s in res.solutions if "case" in s), ""),
            "status": res.status,
        })
    return rows
