"""Tuning parameter selection along a fitted path.

The centerpiece is the likelihood-based degrees of freedom df_gic: a
plug-in estimate of the trace bias term of the expected Kullback-Leibler
optimism, computed on the support of the fitted precision matrix.  Two
independent routes are provided.  df_gic is the production formula working
with d x d products only; df_gic_naive builds the full quadratic form with
the symmetrizer (I + K)/2 and the Kronecker product, is exponentially more
expensive, and exists purely as a cross-check.  Do not merge them.

All criteria omit the additive (n d / 2) log(2 pi) likelihood constant,
consistently with the estimator module, so values are comparable within a
path but are not absolute likelihoods.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .copula import PseudoSample
from .estimator import PrecisionEstimate, mple
from .exceptions import (
    DimensionMismatch,
    DimensionTooLarge,
    EmptyPath,
    InvalidInput,
    MissingContext,
)
from .numerics import logdet_pd

__all__ = [
    "CRITERIA",
    "CriterionScore",
    "PathResult",
    "commutation_matrix",
    "df_gic",
    "df_gic_naive",
    "df_aic",
    "score",
    "score_path",
    "cv_score",
    "select_index",
    "select_lambda",
]

CRITERIA = ("gic", "aic", "bic", "gbic", "cv", "kl_oracle")

# df_gic_naive materializes d^2 x d^2 arrays; keep it honest but small
NAIVE_MAX_DIM = 12


@dataclass(frozen=True)
class CriterionScore:
    criterion: str
    value: float
    df: float


@dataclass
class PathResult:
    """Scored fits over a strictly decreasing penalty grid."""

    grid: np.ndarray
    estimates: list
    scores: dict = field(default_factory=dict)
    selected: dict = field(default_factory=dict)


def _check_pair(est, ps):
    if not isinstance(est, PrecisionEstimate):
        raise InvalidInput("est must be a PrecisionEstimate")
    if not isinstance(ps, PseudoSample):
        raise InvalidInput("ps must be a PseudoSample")
    if est.omega.shape[0] != ps.d:
        raise DimensionMismatch(
            f"estimate is {est.omega.shape[0]}-dimensional, sample is {ps.d}-dimensional"
        )


def df_gic(est, ps):
    """Trace bias term of the fit, restricted to its support.

    With A_k the outer product of the k-th score row masked to the support
    (diagonal always kept) and A-bar the masked scatter, this is

        (1/2n) sum_k tr(A_k W A_k W) - (1/2) tr(A-bar W A-bar W)

    for W the fitted precision matrix.  Costs O(n d^3) and touches nothing
    larger than n x d x d.
    """
    _check_pair(est, ps)
    mask = est.support.astype(np.float64)
    om = est.omega
    q = ps.q
    n, d = q.shape
    total = 0.0
    chunk = max(1, 4_000_000 // (d * d))
    for start in range(0, n, chunk):
        block = q[start : start + chunk]
        outer = block[:, :, None] * block[:, None, :]
        outer *= mask
        bent = om @ outer @ om
        total += float(np.einsum("nij,nij->", outer, bent))
    abar = ps.s_tilde * mask
    second = 0.5 * float(np.sum(abar * (om @ abar @ om)))
    return total / (2.0 * n) - second


def commutation_matrix(d):
    """Permutation K with K vec(A) = vec(A.T), column-major vec."""
    k = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            k[i + j * d, j + i * d] = 1.0
    return k


def df_gic_naive(est, ps):
    """Reference route for df_gic via the explicit d^2 x d^2 quadratic form.

    Evaluates vec(A masked)' M (W kron W) vec(A masked) with the
    symmetrizer M = (I + K)/2 spelled out.  Only for cross-checking the
    production formula; raises DimensionTooLarge beyond d = 12.
    """
    _check_pair(est, ps)
    d = ps.d
    if d > NAIVE_MAX_DIM:
        raise DimensionTooLarge(f"reference route is capped at d = {NAIVE_MAX_DIM}, got {d}")
    sym = 0.5 * (np.eye(d * d) + commutation_matrix(d))
    big = sym @ np.kron(est.omega, est.omega)
    mask = est.support.astype(np.float64)

    def quad(a):
        v = (a * mask).reshape(-1, order="F")
        return float(v @ big @ v)

    total = 0.0
    for row in ps.q:
        total += quad(np.outer(row, row))
    return total / (2.0 * ps.n) - 0.5 * quad(ps.s_tilde)


def df_aic(est):
    """Number of support entries in the strict upper triangle."""
    if not isinstance(est, PrecisionEstimate):
        raise InvalidInput("est must be a PrecisionEstimate")
    return int(np.count_nonzero(np.triu(est.support, k=1)))


def score(est, ps, criterion, sigma0=None, valid=None, df=None):
    """Evaluate one criterion for one fitted estimate.

    Parameters
    ----------
    est : PrecisionEstimate
    ps : PseudoSample
        The sample the estimate was fitted on.
    criterion : str
        One of CRITERIA.
    sigma0 : (d, d) array_like, optional
        True covariance; required for kl_oracle.
    valid : PseudoSample, optional
        Held-out half; required for cv (est must be fitted on the training
        half in that case).
    df : float, optional
        Precomputed bias term for gic/gbic/aic/bic, skips recomputation.

    Returns
    -------
    CriterionScore
        value to be minimized; df is the bias term used, NaN for cv.
    """
    _check_pair(est, ps)
    if criterion not in CRITERIA:
        raise InvalidInput(f"unknown criterion {criterion!r}")
    neg2l = -2.0 * est.loglik
    if criterion == "gic":
        df = df_gic(est, ps) if df is None else float(df)
        return CriterionScore(criterion, neg2l + 2.0 * df, df)
    if criterion == "aic":
        df = float(df_aic(est)) if df is None else float(df)
        return CriterionScore(criterion, neg2l + 2.0 * df, df)
    if criterion == "bic":
        df = float(df_aic(est)) if df is None else float(df)
        return CriterionScore(criterion, neg2l + math.log(ps.n) * df, df)
    if criterion == "gbic":
        df = df_gic(est, ps) if df is None else float(df)
        return CriterionScore(criterion, neg2l + math.log(ps.n) * df, df)
    if criterion == "kl_oracle":
        if sigma0 is None:
            raise MissingContext("kl_oracle needs the true covariance sigma0")
        sigma0 = np.asarray(sigma0, dtype=np.float64)
        if sigma0.shape != est.omega.shape:
            raise DimensionMismatch("sigma0 shape does not match the estimate")
        bias = ps.n * float(np.sum(est.omega * (sigma0 - ps.s_tilde)))
        return CriterionScore(criterion, neg2l + bias, bias)
    # cv: validation likelihood loss of a training-half fit
    if valid is None:
        raise MissingContext("cv needs the validation half")
    if valid.d != ps.d:
        raise DimensionMismatch("validation sample dimension differs from training")
    value = float(np.sum(est.omega * valid.s_tilde)) - logdet_pd(est.omega)
    return CriterionScore(criterion, value, float("nan"))


def score_path(estimates, grid, ps, criteria, sigma0=None, valid=None):
    """Score every estimate on the path under each requested criterion."""
    grid = np.asarray(grid, dtype=np.float64)
    if len(estimates) == 0:
        raise EmptyPath("no estimates to score")
    if grid.size != len(estimates):
        raise DimensionMismatch("grid length does not match the number of estimates")
    path = PathResult(grid=grid, estimates=list(estimates))
    for criterion in criteria:
        values = np.empty(grid.size)
        for i, est in enumerate(estimates):
            values[i] = score(est, ps, criterion, sigma0=sigma0, valid=valid).value
        path.scores[criterion] = values
        path.selected[criterion] = select_index(values)
    return path


def select_index(values):
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise EmptyPath("cannot select from an empty score vector")
    if not np.all(np.isfinite(values)):
        raise InvalidInput("criterion values must be finite")
    return int(np.argmin(values))


def select_lambda(path, criterion):
    """Index of the minimizing grid point for one criterion.

    Grids are stored strictly decreasing, and argmin takes the first hit,
    so ties resolve toward the larger (sparser) penalty.
    """
    if criterion not in path.scores:
        raise EmptyPath(f"path has no scores for {criterion!r}")
    idx = select_index(path.scores[criterion])
    path.selected[criterion] = idx
    return idx


def cv_score(train, valid, spec, tol=1e-5, max_iter=200):
    """Fit on the training half at spec.lam and return the validation loss."""
    est = mple(train, spec, tol=tol, max_iter=max_iter)
    return score(est, train, "cv", valid=valid).value
