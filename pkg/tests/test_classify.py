import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyfrenet.classify import (
    classify_2frenet,
    classify_3frenet,
    classify_nfrenet_biharmonic,
    classify_nfrenet_triharmonic,
    classify_triharmonic_2frenet,
    is_3frenet_solution,
    lorentz_tau_sq,
    three_frenet_quadratic,
    three_frenet_tau_sq,
    triharmonic_equations,
)
from polyfrenet.frenet import Helix
from polyfrenet.spaceforms import curvature_on_frame
from polyfrenet.tension import scaled_tension, tension_field

signs = st.sampled_from((1, -1))
sq = st.fractions(min_value=Fraction(1, 4), max_value=8, max_denominator=4)


class Table:
    def __init__(self, c):
        self.c = c

    def frame_curvature(self, a, b, cc, eps):
        return curvature_on_frame(self.c, eps, a, b, cc)


def oracle_zero(eps, K, c, r):
    return all(x == 0 for x in scaled_tension(eps, K, Table(c), r))


@pytest.mark.parametrize("r", [2, 3, 4, 5])
@pytest.mark.parametrize("c", [-2, -1, 1, 2])
@pytest.mark.parametrize("eps", [(1, 1), (1, -1), (-1, 1), (-1, -1)])
def test_2frenet_matches_oracle(eps, c, r):
    res = classify_2frenet(c, *eps, r)
    for s in res.solutions:
        assert oracle_zero(eps, (s["kappa_sq"],), c, r)
    expected = eps[1] * (r - 1) * c
    assert res.feasible == (expected > 0)


def test_2frenet_surface_rules():
    assert classify_2frenet(1, 1, -1, 3, surface=True).solutions == []
    assert classify_2frenet(-1, 1, -1, 3, surface=True).solutions == [{"kappa_sq": 2}]
    with pytest.raises(ValueError):
        classify_2frenet(1, 1, 1, 3, surface=True)
    with pytest.raises(ValueError):
        classify_2frenet(1, 1, 1, 1)


def test_triharmonic_2frenet():
    assert classify_triharmonic_2frenet(1, -1).status == "infeasible"
    res = classify_triharmonic_2frenet(Fraction(1, 2), 1)
    assert res.solutions == [{"kappa_sq": 1}]
    assert oracle_zero((1, 1), (1,), Fraction(1, 2), 3)


def test_3frenet_lorentz_example():
    res = classify_3frenet(1, 1, 1, -1, 3, kappa_sq=2)
    taus = [s["tau_sq"] for s in res.solutions]
    assert taus == [0, 3]
    assert res.solutions[0]["degenerate"] and not res.solutions[1].get("degenerate")
    assert "lorentz-case i.a" in res.notes
    json.dumps(res.to_json())


@settings(max_examples=300, deadline=None)
@given(signs, signs, signs, st.integers(-2, 2), st.integers(2, 5), sq)
def test_3frenet_roots_are_oracle_zeros(e1, e2, e3, c, r, K):
    eps = (e1, e2, e3)
    for x, origin in three_frenet_tau_sq(c, eps, r, K):
        if x <= 0:
            continue
        comps = scaled_tension(eps, (K, x), Table(c), r)
        assert all(v == 0 for v in comps), (x, origin)


@settings(max_examples=400, deadline=None)
@given(signs, signs, signs, st.integers(-2, 2), st.integers(2, 5), sq, sq)
def test_3frenet_point_verdict_equivalent_to_oracle(e1, e2, e3, c, r, K, X):
    eps = (e1, e2, e3)
    assert is_3frenet_solution(c, eps, r, K, X) == oracle_zero(eps, (K, X), c, r)


@given(signs, st.sampled_from([-2, -1, 1, 2]), st.integers(3, 5), sq)
def test_lorentz_branches_agree_with_quadratic(e2, c, r, K):
    e1 = 1
    e3 = -e1 * e2
    general = sorted(x for x, o in three_frenet_tau_sq(c, (e1, e2, e3), r, K) if o == "bracket" and x >= 0)
    branches = sorted(x for x in lorentz_tau_sq(c, e2, r, K) if x >= 0)
    assert [x for x in general if x > 0] == [x for x in branches if x > 0]


def test_quadratic_coefficients():
    b, c0 = three_frenet_quadratic(1, 1, 1, -1, 3, 2)
    assert (b, c0) == (-3, 0)


@pytest.mark.parametrize("eps,c,r,feasible", [
    ((1, 1, 1), 1, 3, True),
    ((1, -1, 1), 1, 3, False),
    ((1, -1, -1), 1, 3, True),
    ((1, 1, 1), -1, 2, False),
])
def test_3frenet_families(eps, c, r, feasible):
    assert classify_3frenet(c, *eps, r).feasible == feasible


def test_nfrenet_biharmonic():
    assert not classify_nfrenet_biharmonic((1, 1, 1, 1), c=1).feasible
    ok = classify_nfrenet_biharmonic((1, 1, 1, 1), c=2, kappa_sq=(1, 1, 0))
    assert ok.feasible
    partial = classify_nfrenet_biharmonic((1, -1, 1, 1), c=1, full=False)
    assert partial.solutions[0]["nonempty"] is False
    with pytest.raises(ValueError):
        classify_nfrenet_biharmonic((1, 1, 1), c=1)


def test_nfrenet_biharmonic_symbolic_system():
    res = classify_nfrenet_biharmonic((1, 1, 1, 1, 1), curvature=Table(1))
    assert len(res.solutions[0]["system"]) == 5


def test_triharmonic_examples_exact():
    res = classify_nfrenet_triharmonic(5, (1, 1, -1, 1, 1), 1, (1, 1, 1, None))
    assert res.solutions == [{"kappa_sq": (1, 1, 1, 2)}]
    h = Helix.from_squares((1, 1, -1, 1, 1), (1, 1, 1, 2))
    assert tension_field(h, Table(1), 3).is_zero
    res = classify_nfrenet_triharmonic(4, (1, -1, -1, 1), 1, (2, 4, 1))
    assert res.feasible
    assert tension_field(Helix.from_squares((1, -1, -1, 1), (2, 4, 1)), Table(1), 3).is_zero


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(signs, min_size=n, max_size=n), st.lists(sq, min_size=n - 1, max_size=n - 1))),
    st.integers(-2, 2))
def test_triharmonic_equations_match_oracle(data, c):
    n, eps, K = data
    eq = triharmonic_equations(n, eps, c, K)
    zero = oracle_zero(tuple(eps), tuple(K), c, 3)
    assert (eq[0] == 0 and eq[1] == 0) == zero


def test_triharmonic_bad_input():
    with pytest.raises(ValueError):
        classify_nfrenet_triharmonic(6, (1,) * 6, 1, (1,) * 5)
    with pytest.raises(ValueError):
        classify_nfrenet_triharmonic(4, (1, 1, 1, 1), 1, (None, None, 1))
