"""Bias terms (two routes), criterion values, and path selection."""

import numpy as np
import pytest

from gcglasso import (
    DimensionTooLarge,
    EmptyPath,
    InvalidInput,
    MissingContext,
    PenaltySpec,
    PrecisionEstimate,
    band_model,
    commutation_matrix,
    df_aic,
    df_gic,
    df_gic_naive,
    fit_path,
    inv_pd,
    logdet_pd,
    mple,
    pseudo_sample,
    sample_mvn,
    score,
    score_path,
    select_index,
    select_lambda,
)

from conftest import lam_max_of


def make_sample(d=5, n=20, seed=0):
    model = band_model(d)
    return pseudo_sample(sample_mvn(model, n, seed=seed))


def diagonal_estimate(ps):
    om = np.diag(1.0 / np.diag(ps.s_tilde))
    return PrecisionEstimate(
        omega=om,
        sigma=np.diag(np.diag(ps.s_tilde)),
        support=np.eye(ps.d, dtype=bool),
        lam=1.0,
        converged=True,
        iterations=0,
        loglik=0.0,
    )


def test_df_aic_counts_upper_triangle_support():
    sup = np.eye(4, dtype=bool)
    sup[0, 1] = sup[1, 0] = True
    sup[2, 3] = sup[3, 2] = True
    est = PrecisionEstimate(np.eye(4), np.eye(4), sup, 0.1, True, 1, 0.0)
    assert df_aic(est) == 2


def test_df_gic_diagonal_mask_scalar_formula():
    # with a diagonal fit and diagonal-only support the trace bias
    # collapses to a sum of scalar fourth-moment terms
    ps = make_sample(d=6, n=25, seed=4)
    est = diagonal_estimate(ps)
    by_hand = 0.0
    for i in range(ps.d):
        w = est.omega[i, i]
        by_hand += w * w * (
            np.sum(ps.q[:, i] ** 4) / (2.0 * ps.n) - 0.5 * ps.s_tilde[i, i] ** 2
        )
    assert df_gic(est, ps) == pytest.approx(by_hand, abs=1e-10)
    assert df_gic_naive(est, ps) == pytest.approx(by_hand, abs=1e-10)


def test_df_gic_all_ones_mask_equals_unmasked_form():
    ps = make_sample(d=5, n=30, seed=9)
    om = inv_pd(ps.s_tilde)
    est = PrecisionEstimate(
        om, ps.s_tilde.copy(), np.ones((5, 5), dtype=bool), 0.0, True, 0, 0.0
    )
    unmasked = 0.0
    for row in ps.q:
        quad = float(row @ om @ row)
        unmasked += quad * quad
    unmasked = unmasked / (2.0 * ps.n) - 0.5 * float(
        np.trace(ps.s_tilde @ om @ ps.s_tilde @ om)
    )
    assert df_gic(est, ps) == pytest.approx(unmasked, abs=1e-10)
    assert df_gic_naive(est, ps) == pytest.approx(unmasked, abs=1e-10)


def test_commutation_matrix_transposes_vec():
    rng = np.random.default_rng(3)
    for d in (2, 3, 5):
        k = commutation_matrix(d)
        a = rng.standard_normal((d, d))
        assert np.array_equal(k @ a.reshape(-1, order="F"), a.T.reshape(-1, order="F"))


def test_df_routes_agree_on_small_fits():
    ps = make_sample(d=5, n=20, seed=2)
    for family in ("lasso", "adaptive", "scad"):
        est = mple(ps, PenaltySpec(family, 0.08))
        assert abs(df_gic(est, ps) - df_gic_naive(est, ps)) <= 1e-8


def test_naive_route_rejects_large_dimension():
    ps = make_sample(d=13, n=20, seed=0)
    est = diagonal_estimate(ps)
    with pytest.raises(DimensionTooLarge):
        df_gic_naive(est, ps)


def test_criterion_values_follow_definitions():
    ps = make_sample(d=5, n=40, seed=5)
    est = mple(ps, PenaltySpec("lasso", 0.1))
    m2l = -2.0 * est.loglik
    assert score(est, ps, "gic").value == pytest.approx(
        m2l + 2.0 * df_gic(est, ps), abs=1e-10
    )
    assert score(est, ps, "aic").value == pytest.approx(m2l + 2.0 * df_aic(est), abs=1e-10)
    assert score(est, ps, "bic").value == pytest.approx(
        m2l + np.log(ps.n) * df_aic(est), abs=1e-10
    )
    gap = score(est, ps, "gbic").value - score(est, ps, "bic").value
    assert gap == pytest.approx(np.log(ps.n) * (df_gic(est, ps) - df_aic(est)), abs=1e-10)


def test_empty_support_aic_is_minus_two_loglik():
    ps = make_sample(d=4, n=30, seed=6)
    est = mple(ps, PenaltySpec("lasso", lam_max_of(ps.s_tilde)))
    assert df_aic(est) == 0
    assert score(est, ps, "aic").value == pytest.approx(-2.0 * est.loglik, abs=1e-12)


def test_kl_oracle_needs_truth_and_matches_formula():
    model = band_model(5)
    ps = pseudo_sample(sample_mvn(model, 30, seed=7))
    est = mple(ps, PenaltySpec("lasso", 0.1))
    with pytest.raises(MissingContext):
        score(est, ps, "kl_oracle")
    got = score(est, ps, "kl_oracle", sigma0=model.sigma0)
    bias = ps.n * float(np.sum(est.omega * (model.sigma0 - ps.s_tilde)))
    assert got.value == pytest.approx(-2.0 * est.loglik + bias, abs=1e-9)


def test_cv_needs_a_validation_half():
    ps = make_sample(d=4, n=20, seed=1)
    est = mple(ps, PenaltySpec("lasso", 0.05))
    with pytest.raises(MissingContext):
        score(est, ps, "cv")
    other = make_sample(d=4, n=20, seed=2)
    got = score(est, ps, "cv", valid=other)
    expected = float(np.sum(est.omega * other.s_tilde)) - logdet_pd(est.omega)
    assert got.value == pytest.approx(expected, abs=1e-10)


def test_precomputed_bias_is_used_verbatim():
    ps = make_sample(d=4, n=25, seed=3)
    est = mple(ps, PenaltySpec("lasso", 0.05))
    got = score(est, ps, "gic", df=5.0)
    assert got.df == 5.0
    assert got.value == pytest.approx(-2.0 * est.loglik + 10.0, abs=1e-12)


def test_select_index_rules():
    assert select_index([3.0, 1.0, 1.0, 2.0]) == 1
    with pytest.raises(EmptyPath):
        select_index([])
    with pytest.raises(InvalidInput):
        select_index([1.0, float("nan")])


def test_score_path_selects_each_criterion():
    model = band_model(6)
    ps = pseudo_sample(sample_mvn(model, 50, seed=11))
    lam_max = lam_max_of(ps.s_tilde)
    grid = np.geomspace(lam_max, 0.05 * lam_max, 8)
    fits = fit_path(ps, PenaltySpec("lasso", 0.0), grid)
    path = score_path(fits, grid, ps, ("gic", "aic", "bic"))
    for crit in ("gic", "aic", "bic"):
        idx = select_lambda(path, crit)
        assert 0 <= idx < len(grid)
        assert path.scores[crit][idx] == min(path.scores[crit])
    with pytest.raises(EmptyPath):
        select_lambda(path, "kl_oracle")
