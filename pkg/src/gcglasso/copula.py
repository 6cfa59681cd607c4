"""Rank-based Gaussianization of a data matrix.

The estimator downstream never sees raw data, only the matrix of normal
scores q and its scatter S = q.T q / n.  Because the scores depend on the
data through column ranks alone, the whole pipeline is invariant under
strictly increasing transformations applied to any column.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri
from scipy.stats import rankdata

from .exceptions import DegenerateColumn, InvalidInput, OutOfRange
from .numerics import symmetrize

__all__ = ["PseudoSample", "ecdf_transform", "gaussianize", "pseudo_cov", "pseudo_sample"]


@dataclass(frozen=True)
class PseudoSample:
    """Normal scores q (n x d) together with their scatter matrix.

    s_tilde is the average of the outer products of the rows of q, i.e. it
    carries the 1/n factor.
    """

    q: np.ndarray
    s_tilde: np.ndarray
    n: int
    d: int


def _as_data(x):
    a = np.asarray(x, dtype=np.float64)
    if a.ndim != 2:
        raise InvalidInput(f"data must be a 2-D matrix, got ndim={a.ndim}")
    if a.shape[0] < 2:
        raise InvalidInput(f"need at least 2 rows, got {a.shape[0]}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput("data contains non-finite entries")
    return a


def ecdf_transform(x):
    """Map each column to (0, 1) by its rescaled empirical CDF.

    Entry (k, i) becomes rank_k / (n + 1), with average ranks for ties, so
    the result never touches the endpoints.

    Raises
    ------
    DegenerateColumn
        If some column is constant.
    """
    a = _as_data(x)
    n = a.shape[0]
    u = np.empty_like(a)
    for i in range(a.shape[1]):
        col = a[:, i]
        if col.min() == col.max():
            raise DegenerateColumn(f"column {i} is constant")
        u[:, i] = rankdata(col, method="average") / (n + 1.0)
    return u


def gaussianize(u):
    """Apply the standard normal quantile function entrywise.

    Every entry must lie strictly inside (0, 1); raises OutOfRange otherwise.
    """
    a = np.asarray(u, dtype=np.float64)
    if a.size and not ((a > 0.0).all() and (a < 1.0).all()):
        raise OutOfRange("entries must lie in the open interval (0, 1)")
    return ndtri(a)


def pseudo_cov(q):
    """Bundle normal scores with their scatter matrix S = q.T q / n."""
    a = _as_data(q)
    n, d = a.shape
    s_tilde = symmetrize(a.T @ a / n)
    return PseudoSample(q=a, s_tilde=s_tilde, n=n, d=d)


def pseudo_sample(x, copula=True):
    """Full pipeline from raw data to a PseudoSample.

    With copula=True (the default) the scores are normal quantiles of the
    rescaled column ranks.  With copula=False the transform is skipped and
    the columns are merely centered and scaled to unit variance, for data
    already on the Gaussian scale.
    """
    a = _as_data(x)
    if copula:
        q = gaussianize(ecdf_transform(a))
    else:
        sd = a.std(axis=0)
        if np.any(sd == 0.0):
            i = int(np.flatnonzero(sd == 0.0)[0])
            raise DegenerateColumn(f"column {i} is constant")
        q = (a - a.mean(axis=0)) / sd
    return pseudo_cov(q)
