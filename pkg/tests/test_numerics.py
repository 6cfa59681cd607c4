"""Dense linear-algebra kernel checks against hand-computed values."""

import numpy as np
import pytest

from gcglasso import (
    InvalidInput,
    NotPositiveDefinite,
    cholesky,
    inv_pd,
    logdet_pd,
    min_eigenvalue,
    symmetrize,
)


def test_cholesky_known_factor():
    m = np.array([[4.0, 2.0], [2.0, 3.0]])
    expected = np.array([[2.0, 0.0], [1.0, 1.4142135623730951]])
    assert np.allclose(cholesky(m), expected, rtol=0.0, atol=1e-15)


def test_cholesky_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        cholesky(np.array([[1.0, 2.0], [2.0, 1.0]]))


def test_logdet_of_diagonal_matrix():
    assert logdet_pd(np.diag([2.0, 8.0])) == pytest.approx(2.772588722239781, abs=1e-14)


def test_inv_pd_known_inverse():
    m = np.array([[2.0, 1.0], [1.0, 2.0]])
    expected = np.array([[2.0, -1.0], [-1.0, 2.0]]) / 3.0
    got = inv_pd(m)
    assert np.allclose(got, expected, rtol=0.0, atol=1e-14)
    assert np.array_equal(got, got.T)


def test_inv_pd_roundtrip_random():
    rng = np.random.default_rng(7)
    for _ in range(20):
        d = int(rng.integers(2, 9))
        a = rng.standard_normal((d, d))
        m = a @ a.T + d * np.eye(d)
        assert np.allclose(inv_pd(m) @ m, np.eye(d), atol=1e-10)


def test_min_eigenvalue():
    assert min_eigenvalue(np.array([[2.0, 1.0], [1.0, 2.0]])) == pytest.approx(1.0, abs=1e-12)


def test_symmetrize_output_is_exactly_symmetric():
    rng = np.random.default_rng(11)
    for _ in range(10):
        m = rng.standard_normal((6, 6))
        out = symmetrize(m)
        assert np.array_equal(out, out.T)


def test_rejects_nonsquare_input():
    with pytest.raises(InvalidInput):
        cholesky(np.ones((2, 3)))
    with pytest.raises(InvalidInput):
        logdet_pd(np.ones(4))
