"""Dense symmetric linear algebra helpers.

All decompositions go through the Cholesky factor: determinants are never
formed directly, and inverses are only computed for matrices that proved
positive definite by factoring.
"""

import numpy as np
import scipy.linalg

from .exceptions import InvalidInput, NotPositiveDefinite

__all__ = [
    "symmetrize",
    "as_square",
    "cholesky",
    "logdet_pd",
    "inv_pd",
    "min_eigenvalue",
]


def as_square(m, name="matrix"):
    """Validate that `m` is a square 2-D float array and return it as such."""
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInput(f"{name} must be square 2-D, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput(f"{name} contains non-finite entries")
    return a


def symmetrize(m):
    """Mirror the lower triangle onto the upper one.

    Returns a matrix that is exactly symmetric in floating point, which
    downstream code relies on (LAPACK routines read one triangle, equality
    tests compare both).
    """
    a = as_square(m)
    lower = np.tril(a)
    return lower + np.tril(a, -1).T


def cholesky(m):
    """Lower Cholesky factor L with L @ L.T == m.

    Parameters
    ----------
    m : (d, d) array_like
        Symmetric positive definite matrix.

    Raises
    ------
    NotPositiveDefinite
        If a pivot is not strictly positive.
    """
    a = as_square(m)
    try:
        return scipy.linalg.cholesky(a, lower=True)
    except scipy.linalg.LinAlgError as err:
        raise NotPositiveDefinite(f"Cholesky factorization failed: {err}") from err


def logdet_pd(m):
    """log det of a positive definite matrix, via the Cholesky diagonal."""
    factor = cholesky(m)
    return 2.0 * float(np.sum(np.log(np.diag(factor))))


def inv_pd(m):
    """Inverse of a positive definite matrix, symmetric in floating point."""
    factor = cholesky(m)
    inv = scipy.linalg.cho_solve((factor, True), np.eye(factor.shape[0]))
    # (a + a.T) / 2 is exactly symmetric entrywise, no mirroring needed
    return 0.5 * (inv + inv.T)


def min_eigenvalue(m):
    """Smallest eigenvalue of a symmetric matrix."""
    a = as_square(m)
    return float(np.linalg.eigvalsh(a)[0])
