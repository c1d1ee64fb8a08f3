from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyfrenet.frenet import FrenetCurve, Helix, covariant_power, jet_powers
from polyfrenet.metric import Signature
from polyfrenet.spaceforms import SpaceForm, curvature_on_frame
from polyfrenet.tension import (
    n_frenet_bitension,
    n_frenet_tritension,
    scaled_tension,
    surface_bitension,
    surface_tritension,
    tension_field,
)

signs = st.sampled_from((1, -1))
sq = st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=4)


def jet_oracle(eps, ks, c, r, s):
    """tau_r from jets of nabla^k T and the space-form curvature, straight from the definition."""
    curve = FrenetCurve(Signature.of(eps), ks)
    V = jet_powers(curve, s, 2 * r - 1)
    n = len(eps)
    out = V[2 * r - 1].copy()
    for ell in range(r - 1):
        sg = -1 if ell % 2 else 1
        X, Y = V[2 * r - 3 - ell], V[ell]
        for a in range(n):
            for b in range(n):
                w = sg * X[a] * Y[b]
                if w:
                    out += w * np.array(curvature_on_frame(c, eps, a + 1, b + 1, 1), float)
    return out


def poly(*coef):
    P = np.polynomial.Polynomial(coef)

    def k(s, d=0):
        return P.deriv(d)(s) if d else P(s)

    return k


def helix_matrix_oracle(h, c, r):
    """tau_r via true-frame powers with object arithmetic."""
    n = h.n
    P = [covariant_power(h, k) for k in range(2 * r)]
    out = list(P[2 * r - 1])
    for ell in range(r - 1):
        sg = -1 if ell % 2 else 1
        X, Y = P[2 * r - 3 - ell], P[ell]
        for a in range(n):
            for b in range(n):
                w = sg * X[a] * Y[b]
                if w:
                    R = curvature_on_frame(c, h.eps, a + 1, b + 1, 1)
                    out = [o + w * v for o, v in zip(out, R)]
    return tuple(out)


@settings(max_examples=60, deadline=None)
@given(st.lists(signs, min_size=2, max_size=5).flatmap(
    lambda e: st.tuples(st.just(tuple(e)), st.lists(sq, min_size=len(e) - 1, max_size=len(e) - 1))),
    st.integers(-2, 2), st.integers(1, 5))
def test_rescaled_oracle_matches_true_frame(data, c, r):
    eps, K = data
    h = Helix.from_squares(eps, K)
    if any(isinstance(k, float) for k in h.kappas):
        # only compare exactly where the square roots are rational
        got = tension_field(h, _Table(c), r)
        ref = helix_matrix_oracle(h, c, r)
        np.testing.assert_allclose([float(x) for x in got.coeffs], [float(x) for x in ref], rtol=1e-9, atol=1e-9)
    else:
        assert tension_field(h, _Table(c), r).coeffs == helix_matrix_oracle(h, c, r)


class _Table:
    def __init__(self, c):
        self.c = c

    def frame_curvature(self, a, b, cc, eps):
        return curvature_on_frame(self.c, eps, a, b, cc)


def test_exact_rational_result():
    h = Helix.from_squares((1, 1, -1), (2, 3))
    res = tension_field(h, _Table(1), 3)
    assert all(isinstance(x, (int, Fraction)) for x in res.scaled)


def test_biharmonic_2frenet_circle():
    # k^2 = eps2 (r-1) c is the only proper solution
    assert tension_field(Helix.from_squares((1, 1), (1,)), _Table(1), 2).is_zero
    assert not tension_field(Helix.from_squares((1, 1), (2,)), _Table(1), 2).is_zero


def test_vectorized_integer_arrays():
    K = np.arange(1, 6, dtype=np.int64)
    comps = scaled_tension((1, 1), [K], _Table(2), 3)
    zeros = np.asarray(comps[1]) == 0
    assert zeros.tolist() == [False, False, False, True, False]


@pytest.mark.parametrize("eps", [(1, -1), (-1, 1), (1, 1), (-1, -1)])
@pytest.mark.parametrize("c", [0, 1, -2])
def test_surface_tensions_match_jet_oracle(eps, c):
    k = poly(1, 0.3, -0.2, 0.1)
    for s in (0.0, 0.4, 1.3):
        d = [k(s, j) for j in range(5)]
        np.testing.assert_allclose(surface_bitension(*d[:3], c, *eps), jet_oracle(eps, (k,), c, 2, s), atol=1e-12)
        np.testing.assert_allclose(surface_tritension(*d, c, *eps), jet_oracle(eps, (k,), c, 3, s), atol=1e-11)


@pytest.mark.parametrize("eps", [(1, 1, 1, 1), (1, -1, 1, 1), (-1, 1, 1, -1, 1), (1, 1, -1, 1, -1)])
@pytest.mark.parametrize("c", [0, 1, -1])
def test_n_frenet_bitension_general_curve(eps, c):
    ks = (poly(1.2, 0.4, -0.1), poly(0.7, -0.3, 0.2), poly(0.5, 0.1)) + tuple(poly(0.9) for _ in range(len(eps) - 4))
    curve = FrenetCurve(Signature.of(eps), ks)
    sig = Signature.of(eps)
    sf = SpaceForm(sig.ambient_dim, sig.ambient_index, c)
    for s in (0.0, 0.7):
        np.testing.assert_allclose(n_frenet_bitension(curve, sf, s), jet_oracle(eps, ks, c, 2, s), atol=1e-12)


@settings(max_examples=80, deadline=None)
@given(st.integers(4, 7).flatmap(lambda n: st.tuples(
    st.lists(signs, min_size=n, max_size=n), st.lists(sq, min_size=n - 1, max_size=n - 1))),
    st.integers(-2, 2))
def test_n_frenet_closed_forms_match_oracle(data, c):
    eps, K = data
    h = Helix.from_squares(tuple(eps), K)
    table = _Table(c)
    ref = tension_field(h, table, 2).coeffs
    np.testing.assert_allclose([float(x) for x in n_frenet_bitension(h, table)], [float(x) for x in ref], atol=1e-9)
    ref3 = tension_field(h, table, 3).coeffs
    got3 = n_frenet_tritension(h, table)
    np.testing.assert_allclose([float(x) for x in got3], [float(x) for x in ref3], rtol=1e-10, atol=1e-8)


def test_n_frenet_needs_four():
    h = Helix.from_squares((1, 1, 1), (1, 1))
    with pytest.raises(ValueError):
        n_frenet_bitension(h, _Table(0))
    with pytest.raises(ValueError):
        n_frenet_tritension(h, _Table(0))


def test_tension_norm_and_r_bounds():
    h = Helix.from_squares((1, 1), (4,))
    assert tension_field(h, _Table(0), 1).norm() == pytest.approx(2.0)
    with pytest.raises(ValueError):
        scaled_tension((1, 1), (1,), _Table(0), 0)
