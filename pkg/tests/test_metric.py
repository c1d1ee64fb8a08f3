import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyfrenet.metric import (
    DegenerateSpanError,
    Signature,
    SignatureError,
    gram_schmidt_nondegenerate,
    inner_product,
    validate_signature,
)


def test_inner_product_basis_and_null():
    assert inner_product((1, 0), (1, 0), 1) == -1
    assert inner_product((1, 1), (1, 1), 1) == 0


def test_inner_product_index_two():
    assert inner_product((1, 1, 2), (1, -1, 1), 2) == 2


def test_inner_product_dimension_mismatch():
    with pytest.raises(ValueError):
        inner_product((1, 2), (1, 2, 3), 1)
    with pytest.raises(ValueError):
        inner_product(np.ones(2), np.ones(3), 1)


vec = st.lists(st.integers(-20, 20), min_size=4, max_size=4)


@given(vec, vec, vec, st.integers(-5, 5), st.integers(1, 3))
def test_inner_product_symmetric_bilinear(x, y, z, a, t):
    assert inner_product(x, y, t) == inner_product(y, x, t)
    lhs = inner_product([a * xi + zi for xi, zi in zip(x, z)], y, t)
    assert lhs == a * inner_product(x, y, t) + inner_product(z, y, t)


def test_gram_schmidt_small_example():
    frame, sig = gram_schmidt_nondegenerate([(1, 0), (1, 1)], 1)
    np.testing.assert_allclose(frame[0], [1, 0])
    np.testing.assert_allclose(frame[1], [0, 1])
    assert sig.eps == (-1, 1)


def test_gram_schmidt_idempotent_on_orthonormal():
    vs = [np.array([0.0, 1, 0]), np.array([1.0, 0, 0]), np.array([0.0, 0, 1])]
    frame, sig = gram_schmidt_nondegenerate(vs, 1)
    for a, b in zip(frame, vs):
        np.testing.assert_allclose(a, b)
    assert sig.eps == (1, -1, 1)


def test_gram_schmidt_null_leading_vector():
    with pytest.raises(DegenerateSpanError):
        gram_schmidt_nondegenerate([(1, 1), (0, 1)], 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6).flatmap(lambda m: st.tuples(
    st.just(m),
    st.integers(1, m - 1),
    st.lists(st.lists(st.integers(-5, 5), min_size=m, max_size=m), min_size=m, max_size=m),
)))
def test_gram_schmidt_orthonormal_and_spans(data):
    m, t, rows = data
    A = np.array(rows, dtype=float)
    if abs(np.linalg.det(A)) < 1e-6:
        return
    try:
        frame, sig = gram_schmidt_nondegenerate(list(A), t)
    except DegenerateSpanError:
        return
    E = np.array(frame)
    G = np.array([[inner_product(a, b, t) for b in E] for a in E])
    assert np.max(np.abs(G - np.diag(sig.eps))) < 1e-12 * max(1.0, np.abs(A).max() ** 2)
    for k in range(m):
        coef, *_ = np.linalg.lstsq(E[: k + 1].T, A[k], rcond=None)
        assert np.linalg.norm(E[: k + 1].T @ coef - A[k]) < 1e-10 * max(1.0, np.linalg.norm(A[k]))


def test_validate_signature_examples():
    assert validate_signature(Signature((1, 1, -1), 1, 3)) == []
    report = validate_signature(Signature((-1, -1, 1), 1, 3))
    assert report and "2 time-like" in report[0]
    assert validate_signature(Signature((1, 1, -1, 1, 1), 1, 5)) == []


def test_signature_check_raises():
    with pytest.raises(SignatureError):
        Signature((1, 2), 1, 3).check()
    with pytest.raises(SignatureError):
        Signature((1, 1, 1), 1, 3).check()


def test_signature_of_picks_ambient():
    sig = Signature.of((1, 1, 1))
    assert sig.ambient_dim == 4 and sig.ambient_index == 1
    assert Signature.of((1, -1)).ambient_dim == 2
