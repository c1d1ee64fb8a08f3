"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
Tolerances and time limits are the ones stated for each criterion.
"""
import os
import random
import time
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from polyfrenet.classify import classify_2frenet, classify_3frenet
from polyfrenet.frenet import Helix
from polyfrenet.lorentz_products import LiftError, ProductLift, product_r_harmonic_check
from polyfrenet.robertson_walker import (
    RWModel,
    oracle_normal_component,
    power_law_identity,
    rw_r_harmonic_check,
    rw_tension_normal,
    rw_tension_normal_scaled,
)
from polyfrenet.ruled import build_ruled_surface, conservation
from polyfrenet.spaceforms import SpaceForm
from polyfrenet.sweep import Grid, equivalence_sweep, full_biharmonic_counterexamples, oracle_zero_grid
from polyfrenet.synthesize import (
    SynthesisProblem,
    auto_frame,
    integrate_frenet,
    measured_tension,
    numeric_tension,
    orthonormality_drift,
)
from polyfrenet.tension import tension_field

WORKERS = max(1, min(4, os.cpu_count() or 1))


def helix_in_model(eps, kappa_sq, c, t):
    h = Helix.from_squares(eps, kappa_sq, t=t)
    return h, SpaceForm(h.sig.ambient_dim, h.sig.ambient_index, c)


# -- 1 -------------------------------------------------------------------------


EXAMPLES = [
    ("S^5_1", (1, 1, -1, 1, 1), (1, 1, 1, 2), 1),
    ("S^4_2", (1, -1, -1, 1), (2, 4, 1), 2),
]


def test_criterion_1_examples_exact(criterion):
    ok, parts, total = True, [], 0.0
    for name, eps, kappa_sq, t in EXAMPLES:
        start = time.perf_counter()
        h, sf = helix_in_model(eps, kappa_sq, 1, t)
        res = tension_field(h, sf, 3)
        exact = all(isinstance(x, (int, Fraction)) for x in res.scaled)
        elapsed = time.perf_counter() - start
        total += elapsed
        ok &= res.is_zero and exact and elapsed < 1.0 and sf.ambient_index == t
        parts.append(f"{name} tau_3 = ({', '.join(map(str, res.scaled))}) in {elapsed:.3f}s")
    criterion(1, "triharmonic helix examples vanish exactly", ok, total, "; ".join(parts))
    assert ok


# -- 2 -------------------------------------------------------------------------


def test_criterion_2_equivalence_sweep(criterion):
    start = time.perf_counter()
    recs = equivalence_sweep(ns=(2, 3), rs=range(2, 6), cs=range(-2, 3), grid=Grid(), workers=WORKERS)
    elapsed = time.perf_counter() - start
    points = sum(r.points for r in recs)
    bad = sum(r.mismatches for r in recs)
    sols = sum(r.solutions for r in recs)
    ok = bad == 0 and elapsed < 60 and len(recs) == 5 * 4 * (4 + 8)
    criterion(2, "oracle/classifier agreement on the 1/4 grid", ok, elapsed,
           f"{len(recs)} cases, {points} points, {sols} zeros, {bad} mismatches")
    assert ok


# -- 3 -------------------------------------------------------------------------


def test_criterion_3_non_existence(criterion):
    start = time.perf_counter()
    grid = Grid()
    # (a) no full biharmonic n-Frenet helix, n = 4, 5
    a = sum(full_biharmonic_counterexamples(n, c, grid) for n in (4, 5) for c in range(-2, 3))
    # (b) Lorentzian 3-space, c > 0, time-like normal: eps = (1, -1, 1) is the only sign
    # pattern with eps2 = -1 and eps3 = -eps1 eps2 in index one
    b = 0
    for c in (1, 2):
        for r in (3, 4, 5):
            b += int(classify_3frenet(c, 1, -1, 1, r).feasible)
            b += int(oracle_zero_grid((1, -1, 1), c, r, grid).sum())
    # (c) space-like curves on a Lorentz surface with c >= 0
    cc = 0
    for c in (0, 1, 2):
        for r in (2, 3, 4, 5):
            cc += int(classify_2frenet(c, 1, -1, r, surface=True).feasible)
            cc += int(oracle_zero_grid((1, -1), c, r, grid).sum())
    elapsed = time.perf_counter() - start
    ok = a == 0 and b == 0 and cc == 0
    criterion(3, "non-existence certificates", ok, elapsed, f"counterexamples (a) {a}, (b) {b}, (c) {cc}")
    assert ok


# -- 4 -------------------------------------------------------------------------


def test_criterion_4_synthesis(criterion):
    start = time.perf_counter()
    g = SpaceForm(3, 1, 0)
    h = Helix.from_kappas((1, 1, -1), (1, 1))
    p, F = auto_frame(g, h.sig)
    flat = integrate_frenet(SynthesisProblem(g, h, p, F, (0.0, 10.0)), raise_on_drift=False)
    drift = orthonormality_drift(flat)
    flat_res = {r: max(numeric_tension(flat, r).max(), measured_tension(flat, r).max()) for r in (2, 3, 4)}

    q = SpaceForm(2, 1, 1)
    hq = Helix.from_squares((-1, 1), (2,))
    pq, Fq = auto_frame(q, hq.sig)
    quad = integrate_frenet(SynthesisProblem(q, hq, pq, Fq, (0.0, 2.0)), raise_on_drift=False)
    quad_res = max(numeric_tension(quad, 3).max(), measured_tension(quad, 3).max())
    elapsed = time.perf_counter() - start
    ok = (drift < 1e-8 and all(v < 1e-6 for v in flat_res.values())
          and quad.max_defect < 1e-8 and quad_res < 1e-6 and elapsed < 10)
    detail = (f"flat drift {drift:.1e}, tau_2/3/4 {', '.join(f'{v:.1e}' for v in flat_res.values())}; "
              f"quadric defect {quad.max_defect:.1e}, tau_3 {quad_res:.1e}")
    criterion(4, "synthesized helices", ok, elapsed, detail)
    assert ok


# -- 5 -------------------------------------------------------------------------


def test_criterion_5_ruled_surface(criterion):
    start = time.perf_counter()
    data = build_ruled_surface(0.5, (0.0, 1.0), 201)
    p = data.profile
    cons = float(np.max(np.abs(conservation(p.k, p.dk))))
    r1, r2 = float(np.max(np.abs(data.res1))), float(np.max(np.abs(data.res2)))
    k_range = float(p.k.max() - p.k.min())
    elapsed = time.perf_counter() - start
    ok = cons < 1e-9 and r1 < 1e-8 and r2 < 1e-8 and k_range > 1e-3 and elapsed < 5
    criterion(5, "ruled-surface profile", ok, elapsed,
           f"window {data.window}, conservation {cons:.1e}, residuals {r1:.1e}/{r2:.1e}, k range {k_range:.3f}")
    assert ok


# -- 6 -------------------------------------------------------------------------


def _random_lift(rng):
    def q():
        return Fraction(rng.randint(1, 40), rng.randint(1, 12))

    while True:
        p = ProductLift(q(), q(), q(), rng.choice((1, -1)), rng.choice((1, -1)))
        try:
            return p.check()
        except LiftError:
            continue


def _solution_lift(rng):
    """A lift whose fiber helix solves its condition, so both sides can be true."""
    while True:
        Ka = Fraction(rng.randint(1, 20), rng.randint(1, 8))
        Xa = Fraction(rng.randint(1, 20), rng.randint(1, 8))
        r = rng.randint(2, 5)
        c = (Ka + Xa) ** 2 / ((r - 1) * Ka + Xa)
        p = ProductLift(Fraction(rng.randint(1, 8), 4), Ka, Xa, 1, 1)
        try:
            return p.check(), c, r
        except LiftError:
            continue


def test_criterion_6_product_equivalence(criterion):
    start = time.perf_counter()
    rng = random.Random(20240611)
    checked = agree = true_cases = 0
    for i in range(2000):
        if i % 4 == 0:
            p, c, r = _solution_lift(rng)
        else:
            p = _random_lift(rng)
            c, r = Fraction(rng.choice((-2, -1, 1, 2)), rng.randint(1, 3)), rng.randint(2, 5)
        chk = product_r_harmonic_check(p, c, r)
        checked += 1
        agree += chk.agree
        true_cases += chk.lifted and chk.fiber
    elapsed = time.perf_counter() - start
    ok = agree == checked == 2000 and true_cases > 0
    criterion(6, "lifted vs fiber condition", ok, elapsed, f"{agree}/{checked} agree, {true_cases} r-harmonic")
    assert ok


# -- 7 -------------------------------------------------------------------------


def test_criterion_7_robertson_walker(criterion):
    start = time.perf_counter()
    mismatches = 0
    models = [("t^(1/2)", 4), ("t^(2/3)", 5), ("t^2", 3), ("t^(3/4)", 2), ("exp(2*t)", 1), ("1 + t^3", 2)]
    for r in range(2, 6):
        for text, t0 in models:
            m = RWModel.from_string(text)
            h1, h2 = m.ratios(t0)
            K = h1 * h1
            scaled, true = oracle_normal_component(m, t0, K, r)
            mismatches += scaled != rw_tension_normal_scaled(K, r, h2)
            if isinstance(K, Fraction) and isinstance(h1, Fraction):
                mismatches += true != rw_tension_normal(abs(h1), r, h2)
    symbolic_ok = True
    for r in range(2, 6):
        out = power_law_identity(r)
        symbolic_ok &= sp.simplify(out["P"] - out["expected"]) == 0
        symbolic_ok &= out["roots"] == [sp.Rational(r - 1, r)]
        symbolic_ok &= out["q_at_root"] == [sp.Rational(1, r - 1)]
        # feasibility on a lambda grid happens only at the root
        hits = [Fraction(i, 60) for i in range(1, 60)
                if rw_r_harmonic_check(RWModel.power_law(Fraction(i, 60)), 2, r).r_harmonic]
        symbolic_ok &= hits == [Fraction(r - 1, r)]
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and symbolic_ok
    criterion(7, "Robertson-Walker normal component and power law", ok, elapsed,
           f"{mismatches} mismatches, power-law identity {'holds' if symbolic_ok else 'fails'}")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
