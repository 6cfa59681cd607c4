"""Ground-truth models, Gaussian sampling, and estimate scoring.

Three truth families: a banded precision matrix with geometrically
decaying entries, a sparse random graph (edge probability of order 1/d),
and a dense random graph.  Every generator returns a TrueModel holding the
precision matrix, its inverse, and the edge set; generators are pure
functions of their arguments, randomness comes only from the seed.
"""

from dataclasses import dataclass

import numpy as np

from .estimator import PrecisionEstimate
from .exceptions import DimensionMismatch, InvalidInput
from .numerics import cholesky, inv_pd, logdet_pd, min_eigenvalue, symmetrize

__all__ = [
    "TrueModel",
    "MetricsRecord",
    "band_model",
    "random_model",
    "sample_mvn",
    "evaluate",
]

# smallest eigenvalue enforced on the banded precision matrix
BAND_EIG_FLOOR = 0.1
# diagonal lift added to random-graph adjacency beyond |min eigenvalue|
RANDOM_DIAG_LIFT = 0.2


@dataclass(frozen=True)
class TrueModel:
    """A known precision matrix with its covariance and edge set."""

    kind: str
    omega0: np.ndarray
    sigma0: np.ndarray
    edges: frozenset

    @property
    def d(self):
        return self.omega0.shape[0]


@dataclass(frozen=True)
class MetricsRecord:
    """Distance and support-recovery scores of one estimate against truth.

    specificity, sensitivity, and mcc are on the 0-100 scale; NaN marks a
    score that is not applicable (no true non-edges, or no true edges).
    """

    kl_loss: float
    op_norm: float
    l1_norm: float
    fro_norm: float
    specificity: float
    sensitivity: float
    mcc: float
    tp: int
    fp: int
    tn: int
    fn: int


def _finish_model(kind, omega0, edges):
    omega0 = symmetrize(omega0)
    sigma0 = inv_pd(omega0)
    return TrueModel(kind=kind, omega0=omega0, sigma0=sigma0, edges=frozenset(edges))


def band_model(d, bandwidth=4):
    """Banded truth: entry 0.4^|i-j| inside the band, unit diagonal.

    If the raw matrix has an eigenvalue below 0.1 the diagonal is shifted
    up so the minimum is exactly 0.1.
    """
    if d < 2:
        raise InvalidInput(f"d must be at least 2, got {d}")
    if bandwidth < 1:
        raise InvalidInput(f"bandwidth must be at least 1, got {bandwidth}")
    idx = np.arange(d)
    gap = np.abs(idx[:, None] - idx[None, :])
    omega = np.where(gap <= bandwidth, 0.4**gap, 0.0)
    low = min_eigenvalue(omega)
    if low < BAND_EIG_FLOOR:
        omega = omega + (BAND_EIG_FLOOR - low) * np.eye(d)
    edges = {(i, j) for i in range(d) for j in range(i + 1, d) if j - i <= bandwidth}
    return _finish_model("band", omega, edges)


def random_model(d, edge_prob, weight=None, seed=0):
    """Random-graph truth: each pair is an edge independently.

    Edge entries share one weight, 0.3 by default for sparse graphs
    (edge_prob <= 0.5) and 0.1 for dense ones.  The diagonal is set to
    |min eigenvalue of the off-diagonal part| + 0.2, so the result is
    positive definite with smallest eigenvalue at least 0.2.
    """
    if d < 2:
        raise InvalidInput(f"d must be at least 2, got {d}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidInput(f"edge_prob must lie in [0, 1], got {edge_prob}")
    kind = "sparse_random" if edge_prob <= 0.5 else "dense_random"
    if weight is None:
        weight = 0.3 if edge_prob <= 0.5 else 0.1
    rng = np.random.default_rng(seed)
    draw = rng.random((d, d))
    upper = np.triu(draw < edge_prob, k=1)
    adj = weight * (upper | upper.T)
    shift = abs(min_eigenvalue(adj)) + RANDOM_DIAG_LIFT
    omega = adj + shift * np.eye(d)
    edges = {(int(i), int(j)) for i, j in zip(*np.nonzero(upper))}
    return _finish_model(kind, omega, edges)


def sample_mvn(model, n, seed):
    """n rows from N(0, model.sigma0); same seed, same bytes."""
    if n < 1:
        raise InvalidInput(f"n must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, model.d))
    factor = cholesky(model.sigma0)
    return z @ factor.T


def _confusion(truth_edges, support):
    d = support.shape[0]
    tp = fp = tn = fn = 0
    for i in range(d):
        for j in range(i + 1, d):
            is_edge = (i, j) in truth_edges
            found = bool(support[i, j])
            if is_edge and found:
                tp += 1
            elif is_edge:
                fn += 1
            elif found:
                fp += 1
            else:
                tn += 1
    return tp, fp, tn, fn


def evaluate(model, est):
    """Score one estimate against its generating model.

    kl_loss is tr(sigma0 omega) - log det(sigma0 omega) - d, which is twice
    the Kullback-Leibler divergence between the fitted and true Gaussians.
    Norms are of omega - omega0 (operator, matrix l1, Frobenius).  Support
    scores are percentages over the off-diagonal upper triangle.
    """
    if not isinstance(est, PrecisionEstimate):
        raise InvalidInput("est must be a PrecisionEstimate")
    d = model.d
    if est.omega.shape[0] != d:
        raise DimensionMismatch(
            f"estimate is {est.omega.shape[0]}-dimensional, model is {d}-dimensional"
        )
    om = est.omega
    kl = float(np.sum(model.sigma0 * om)) - (logdet_pd(model.sigma0) + logdet_pd(om)) - d
    diff = om - model.omega0
    op_norm = float(np.linalg.norm(diff, 2))
    l1_norm = float(np.linalg.norm(diff, 1))
    fro_norm = float(np.linalg.norm(diff, "fro"))
    tp, fp, tn, fn = _confusion(model.edges, est.support)
    nan = float("nan")
    specificity = 100.0 * tn / (tn + fp) if tn + fp > 0 else nan
    sensitivity = 100.0 * tp / (tp + fn) if tp + fn > 0 else nan
    if tn + fp == 0 or tp + fn == 0:
        mcc = nan
    else:
        denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn)
        mcc = 100.0 * (tp * tn - fp * fn) / np.sqrt(denom) if denom > 0 else 0.0
    return MetricsRecord(
        kl_loss=kl,
        op_norm=op_norm,
        l1_norm=l1_norm,
        fro_norm=fro_norm,
        specificity=specificity,
        sensitivity=sensitivity,
        mcc=mcc,
        tp=tp,
        fp=fp,
        tn=tn,
        fn=fn,
    )
