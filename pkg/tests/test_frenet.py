from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyfrenet.frenet import (
    FrenetCurve,
    Helix,
    abc_coefficients,
    abc_scaled,
    constant,
    covariant_power,
    gram_derivative,
    jet_powers,
    linear,
    omega_matrix,
    two_frenet_power,
)

signs = st.sampled_from((1, -1))
pos = st.fractions(min_value=Fraction(1, 8), max_value=4, max_denominator=8)


def test_helix_rejects_zero_first_curvature():
    with pytest.raises(ValueError):
        Helix.from_squares((1, 1), (0,))
    with pytest.raises(ValueError):
        Helix.from_squares((1, 1, 1), (1,))


def test_scale_factors():
    h = Helix.from_kappas((1, 1, 1, 1), (2, 3, 5))
    assert h.scale_factors() == (1, 2, 6, 30)


def test_omega_layout():
    h = Helix.from_kappas((1, -1, 1), (2, 3))
    om = omega_matrix(h)
    assert om[0, 1] == -2 and om[1, 0] == -2
    assert om[1, 2] == 3 and om[2, 1] == 3
    assert om[0, 2] == 0


@given(st.lists(signs, min_size=2, max_size=6).flatmap(
    lambda e: st.tuples(st.just(tuple(e)), st.lists(pos, min_size=len(e) - 1, max_size=len(e) - 1))))
def test_omega_skew_iff_signs_equal(data):
    eps, ks = data
    om = omega_matrix(Helix.from_kappas(eps, ks)).astype(float)
    assert np.allclose(om, -om.T) == (len(set(eps)) == 1)
    # Omega preserves the metric diag(eps)
    E = np.diag(eps).astype(float)
    assert np.allclose(gram_derivative(E, om), 0)


@settings(max_examples=100)
@given(st.lists(signs, min_size=2, max_size=5).flatmap(
    lambda e: st.tuples(st.just(tuple(e)), st.lists(pos, min_size=len(e) - 1, max_size=len(e) - 1))),
    st.integers(0, 7))
def test_covariant_power_matches_matrix_power(data, k):
    eps, ks = data
    h = Helix.from_kappas(eps, ks)
    om = np.array(omega_matrix(h), dtype=object)
    row = np.zeros(len(eps), dtype=object)
    row[0] = 1
    for _ in range(k):
        row = row.dot(om)
    assert tuple(covariant_power(h, k)) == tuple(row)


@given(signs, signs, pos, st.integers(0, 5))
def test_two_frenet_closed_form(e1, e2, kappa, ell):
    h = Helix.from_kappas((e1, e2), (kappa,))
    assert covariant_power(h, 2 * ell) == two_frenet_power(ell, "even", e1, e2, kappa)
    assert covariant_power(h, 2 * ell + 1) == two_frenet_power(ell, "odd", e1, e2, kappa)


@given(signs, signs, signs, pos, pos, st.integers(0, 5))
def test_three_frenet_abc_closed_form(e1, e2, e3, kappa, tau, ell):
    h = Helix.from_kappas((e1, e2, e3), (kappa, tau))
    abc = abc_coefficients(ell, e1, e2, e3, kappa, tau)
    assert covariant_power(h, 2 * ell) == (abc.A, 0, abc.B)
    assert covariant_power(h, 2 * ell + 1) == (0, abc.C, 0)
    sc = abc_scaled(ell, e1, e2, e3, kappa * kappa, tau * tau)
    assert sc.A == abc.A and sc.B * kappa * tau == abc.B and sc.C * kappa == abc.C


def test_two_frenet_bad_parity():
    with pytest.raises(ValueError):
        two_frenet_power(1, "both", 1, 1, 1)


def test_jet_powers_constant_equals_helix():
    h = Helix.from_kappas((1, -1, 1, 1), (Fraction(3, 2), 1, Fraction(1, 2)))
    curve = FrenetCurve.from_helix(h)
    jets = jet_powers(curve, 0.3, 7)
    for k in range(8):
        np.testing.assert_allclose(jets[k], [float(x) for x in covariant_power(h, k)], atol=1e-12)


def test_jet_powers_varying_curvature():
    # plane curve with k(s) = 1 + 2s: nabla T = k N, nabla^2 T = -k^2 T + k' N
    curve = FrenetCurve.from_helix(Helix.from_kappas((1, 1), (1,)))
    curve = FrenetCurve(curve.sig, (linear(1.0, 2.0),))
    s = 0.5
    k, dk = 2.0, 2.0
    jets = jet_powers(curve, s, 3)
    np.testing.assert_allclose(jets[1], [0, k])
    np.testing.assert_allclose(jets[2], [-k * k, dk])
    np.testing.assert_allclose(jets[3], [-3 * k * dk, -k**3])


def test_constant_curvature_function_derivatives():
    k = constant(2.5)
    assert k(1.0) == 2.5 and k(1.0, 1) == 0 and k(np.zeros(3), 2).shape == (3,)
