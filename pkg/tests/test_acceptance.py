"""End-to-end acceptance gate, one test per numbered requirement.

Each requirement is a single test function so the verbose pytest report
shows one pass/fail line per item.  Tolerances and runtime budgets are
asserted inside the tests.  Requirement 5 encodes a qualitative claim
about the two bias counts that does not hold under the formulas this
package implements; the test states the claim verbatim and is expected
to fail (the measured gap sits around +35 at every grid point).
"""

import math
import time

import numpy as np
import pytest

import gcglasso as gg

from conftest import lam_max_of

FAMILIES = ("lasso", "adaptive", "scad")


def test_requirement_1_bias_routes_agree_everywhere():
    t0 = time.perf_counter()
    worst = 0.0
    for d in (3, 4, 5, 6):
        for n in (10, 20, 30):
            for i in range(50):
                seed = 1000 * d + 10 * n + i
                model = gg.random_model(d, 0.5, seed=seed)
                x = gg.sample_mvn(model, n, seed=seed)
                ps = gg.pseudo_sample(x)
                rng = np.random.default_rng(seed)
                lam = float(rng.uniform(0.05, 0.9)) * lam_max_of(ps.s_tilde)
                for family in FAMILIES:
                    est = gg.mple(ps, gg.PenaltySpec(family, lam))
                    gap = abs(gg.df_gic(est, ps) - gg.df_gic_naive(est, ps))
                    worst = max(worst, gap)
                    assert gap <= 1e-8
    assert time.perf_counter() - t0 < 30.0
    assert worst <= 1e-8


def test_requirement_2_symmetrizer_identity():
    rng = np.random.default_rng(77)
    for _ in range(100):
        d = int(rng.integers(2, 7))
        a = rng.standard_normal((d, d))
        a = a + a.T
        b = rng.standard_normal((d, d))
        om = b + b.T
        kron = np.kron(om, om)
        m = 0.5 * (np.eye(d * d) + gg.commutation_matrix(d))
        for mat in (a, a * _random_mask(rng, d)):
            v = mat.reshape(-1, order="F")
            lhs = kron @ v
            rhs = m @ kron @ v
            assert np.max(np.abs(lhs - rhs)) <= 1e-10


def _random_mask(rng, d):
    mask = rng.integers(0, 2, size=(d, d)).astype(float)
    mask = np.triu(mask, 1)
    mask = mask + mask.T
    np.fill_diagonal(mask, 1.0)
    return mask


def test_requirement_3_solver_stationarity_on_the_default_grid():
    model = gg.band_model(30)
    x = gg.sample_mvn(model, 100, seed=42)
    ps = gg.pseudo_sample(x)
    grid = gg.lambda_grid(ps.s_tilde)
    fits = gg.fit_path(ps, gg.PenaltySpec("lasso", 0.0), grid)
    checked = 0
    for lam, est in zip(grid, fits):
        if not est.converged:
            continue
        w = gg.penalty_weights(gg.PenaltySpec("lasso", float(lam)), d=30)
        assert gg.kkt_residual(est.omega, ps.s_tilde, w) <= 1e-4
        checked += 1
    assert checked > 0
    target = gg.inv_pd(ps.s_tilde)
    free = gg.mple(ps, gg.PenaltySpec("lasso", 0.0))
    rel = np.linalg.norm(free.omega - target, "fro") / np.linalg.norm(target, "fro")
    assert rel <= 1e-4


def test_requirement_4_oracle_criterion_tracks_exact_divergence():
    for rep in range(20):
        model = gg.band_model(15)
        x = gg.sample_mvn(model, 60, seed=rep)
        ps = gg.pseudo_sample(x)
        grid = gg.lambda_grid(ps.s_tilde, size=40)
        fits = gg.fit_path(ps, gg.PenaltySpec("lasso", 0.0), grid)
        path = gg.score_path(fits, grid, ps, ("kl_oracle",), sigma0=model.sigma0)
        exact = []
        for est in fits:
            prod = model.sigma0 @ est.omega
            sign, logdet = np.linalg.slogdet(prod)
            assert sign > 0
            exact.append(float(np.trace(prod)) - logdet - 15.0)
        assert gg.select_lambda(path, "kl_oracle") == int(np.argmin(exact))


def test_requirement_5_trace_count_versus_support_count():
    t0 = time.perf_counter()
    cfg = gg.ExperimentConfig(
        mode="biascurve", model="band", d=50, n=100,
        grid_size=100, seed=42, out=None,
    )
    rows = gg.run_biascurve(cfg)
    lam = np.array([r[0] for r in rows])
    dfg = np.array([r[1] for r in rows])
    dfa = np.array([r[2] for r in rows])
    assert np.all(np.diff(lam) < 0.0)
    # both counts shrink toward the heavy-penalty end
    assert dfg[0] < dfg[-1]
    assert dfa[0] < dfa[-1]
    assert dfa[0] == 0.0
    assert time.perf_counter() - t0 < 120.0
    frac = float(np.mean(dfg <= dfa))
    assert frac >= 0.8, (
        f"df_gic <= df_aic holds at {frac:.0%} of grid points (required: 80%); "
        f"the trace count exceeds the support count by at least "
        f"{float(np.min(dfg - dfa)):.1f} everywhere on this grid"
    )


def test_requirement_6_mean_loss_ordering_at_desk_scale():
    t0 = time.perf_counter()
    cfg = gg.ExperimentConfig(
        mode="sim", model="band", d=60, n=100, replicates=20,
        criteria=("gic", "bic", "kl_oracle"), grid_size=100, seed=42, out=None,
    )
    table = gg.run_simulation(cfg)
    mean_kl = {c: table.aggregate_row(c).kl_loss for c in cfg.criteria}
    assert mean_kl["kl_oracle"] <= mean_kl["gic"]
    assert mean_kl["gic"] < mean_kl["bic"]
    assert mean_kl["gic"] <= 1.25 * mean_kl["kl_oracle"]
    assert time.perf_counter() - t0 < 600.0


def test_requirement_7_rate_swap_identity():
    model = gg.band_model(10)
    x = gg.sample_mvn(model, 60, seed=5)
    ps = gg.pseudo_sample(x)
    grid = gg.lambda_grid(ps.s_tilde, size=15)
    fits = gg.fit_path(ps, gg.PenaltySpec("lasso", 0.0), grid)
    logn = math.log(ps.n)
    for est in fits:
        gap = gg.score(est, ps, "gbic").value - gg.score(est, ps, "bic").value
        expected = logn * (gg.df_gic(est, ps) - gg.df_aic(est))
        assert abs(gap - expected) <= 1e-10


def test_requirement_8_rank_scores_ignore_monotone_marginals():
    model = gg.band_model(12)
    x = gg.sample_mvn(model, 80, seed=21)
    base = _scored_path(model, x)
    for transform in (lambda v: v**3, np.exp):
        other = _scored_path(model, transform(x))
        assert np.array_equal(base["q"], other["q"])
        assert np.array_equal(base["s_tilde"], other["s_tilde"])
        for om_a, om_b in zip(base["omegas"], other["omegas"]):
            assert np.array_equal(om_a, om_b)
        assert base["selected"] == other["selected"]


def _scored_path(model, x):
    ps = gg.pseudo_sample(x)
    grid = gg.lambda_grid(ps.s_tilde, size=30)
    fits = gg.fit_path(ps, gg.PenaltySpec("lasso", 0.0), grid)
    path = gg.score_path(
        fits, grid, ps, ("gic", "aic", "bic", "gbic", "kl_oracle"), sigma0=model.sigma0
    )
    return {
        "q": ps.q,
        "s_tilde": ps.s_tilde,
        "omegas": [f.omega for f in fits],
        "selected": dict(path.selected),
    }


def test_requirement_9_support_scores_match_brute_force():
    rng = np.random.default_rng(99)
    for case in range(50):
        d = int(rng.integers(2, 9))
        model = gg.random_model(d, float(rng.uniform(0.1, 0.9)), seed=case)
        support = np.eye(d, dtype=bool)
        for i in range(d):
            for j in range(i + 1, d):
                if rng.random() < 0.5:
                    support[i, j] = support[j, i] = True
        est = gg.PrecisionEstimate(
            omega=np.eye(d), sigma=np.eye(d), support=support,
            lam=0.1, converged=True, iterations=1, loglik=0.0,
        )
        got = gg.evaluate(model, est)
        tp = fp = tn = fn = 0
        for i in range(d):
            for j in range(i + 1, d):
                edge = (i, j) in model.edges
                found = bool(support[i, j])
                tp += edge and found
                fn += edge and not found
                fp += found and not edge
                tn += not edge and not found
        assert (got.tp, got.fp, got.tn, got.fn) == (tp, fp, tn, fn)
        _check_scores(got, tp, fp, tn, fn)


def _check_scores(got, tp, fp, tn, fn):
    if tn + fp == 0:
        assert math.isnan(got.specificity)
    else:
        assert got.specificity == pytest.approx(100.0 * tn / (tn + fp), abs=1e-12)
    if tp + fn == 0:
        assert math.isnan(got.sensitivity)
    else:
        assert got.sensitivity == pytest.approx(100.0 * tp / (tp + fn), abs=1e-12)
    if tn + fp == 0 or tp + fn == 0:
        assert math.isnan(got.mcc)
        return
    denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn)
    if denom == 0:
        assert got.mcc == 0.0
    else:
        expected = 100.0 * (tp * tn - fp * fn) / math.sqrt(denom)
        assert got.mcc == pytest.approx(expected, abs=1e-12)
