"""Penalized precision matrix estimation.

The optimization problem is

    maximize  log det(Omega) - tr(S Omega) - sum_{i != j} p(|omega_ij|)

over positive definite Omega, where S is the scatter of the normal scores
and p is an entrywise penalty (lasso, adaptive lasso, or SCAD via local
linear approximation).  The diagonal is never penalized.

The solver is the classic block coordinate descent over columns: each
column update is a weighted lasso on the current working covariance,
solved by cyclic coordinate descent in fixed row order.  Per-entry penalty
weights are supported throughout, which is what the adaptive and SCAD
families reduce to after linearization.
"""

from dataclasses import dataclass, replace

import numpy as np
from numba import njit

from .copula import PseudoSample
from .exceptions import InvalidInput, MissingPilot, NotPositiveDefinite
from .numerics import as_square, inv_pd, logdet_pd

__all__ = [
    "PenaltySpec",
    "PrecisionEstimate",
    "penalty_weights",
    "scad_derivative",
    "glasso_fit",
    "mple",
    "fit_path",
    "kkt_residual",
    "ZERO_TOL",
    "KKT_TOL",
]

# |omega_ij| above this counts as a support entry
ZERO_TOL = 1e-8
# max allowed violation of the stationarity system for a converged fit
KKT_TOL = 1e-4
# pilot magnitudes are floored here before entering adaptive weights
PILOT_FLOOR = 1e-4
# adaptive weights are capped here
WEIGHT_CAP = 1e10

_FAMILIES = ("lasso", "adaptive", "scad")


@dataclass(frozen=True)
class PenaltySpec:
    """Penalty family plus its tuning constants.

    lam is the overall level. gamma is the adaptive exponent, a the SCAD
    knot (must exceed 2). reweight_steps counts the reweighted refits after
    the pilot; when None it resolves to 1 for adaptive and 2 for scad, and
    it is ignored for lasso.
    """

    family: str
    lam: float
    gamma: float = 0.5
    a: float = 3.7
    reweight_steps: int | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InvalidInput(f"unknown penalty family {self.family!r}")
        if not np.isfinite(self.lam) or self.lam < 0.0:
            raise InvalidInput(f"lam must be finite and >= 0, got {self.lam}")
        if self.gamma <= 0.0:
            raise InvalidInput(f"gamma must be positive, got {self.gamma}")
        if self.a <= 2.0:
            raise InvalidInput(f"scad knot a must exceed 2, got {self.a}")
        if self.reweight_steps is not None and self.reweight_steps < 1:
            raise InvalidInput("reweight_steps must be a positive integer")

    @property
    def steps(self):
        if self.reweight_steps is not None:
            return self.reweight_steps
        return {"lasso": 0, "adaptive": 1, "scad": 2}[self.family]


@dataclass(frozen=True)
class PrecisionEstimate:
    """One fitted precision matrix and its bookkeeping.

    support marks entries with |omega_ij| > ZERO_TOL; the diagonal is
    always True.  sigma is the actual inverse of omega, not the solver's
    working matrix.  loglik is (n/2)(log det Omega - tr(S Omega)) with the
    additive normalizing constant omitted everywhere in this package.
    """

    omega: np.ndarray
    sigma: np.ndarray
    support: np.ndarray
    lam: float
    converged: bool
    iterations: int
    loglik: float


def scad_derivative(x, lam, a=3.7):
    """Derivative of the SCAD penalty at |omega| = x (elementwise).

    Equals lam on [0, lam), decays linearly to zero on [lam, a*lam], and is
    zero beyond.
    """
    x = np.asarray(x, dtype=np.float64)
    if a <= 2.0:
        raise InvalidInput(f"scad knot a must exceed 2, got {a}")
    tail = np.maximum(a * lam - x, 0.0) / (a - 1.0)
    return np.where(x < lam, lam, tail)


def penalty_weights(spec, d=None, pilot=None):
    """Per-entry penalty levels for one fit.

    Parameters
    ----------
    spec : PenaltySpec
    d : int, optional
        Dimension; required for lasso when no pilot is given.
    pilot : (d, d) array_like, optional
        Pilot precision estimate; required for adaptive and scad.

    Returns
    -------
    (d, d) ndarray with zero diagonal, symmetric, nonnegative.
    """
    if pilot is not None:
        pilot = as_square(pilot, "pilot")
        d = pilot.shape[0]
    if d is None:
        raise InvalidInput("need either d or a pilot to size the weight matrix")
    off = 1.0 - np.eye(d)
    if spec.family == "lasso":
        return spec.lam * off
    if pilot is None:
        raise MissingPilot(f"{spec.family} penalty needs a pilot estimate")
    mag = np.abs(pilot)
    if spec.family == "adaptive":
        w = spec.lam / np.maximum(mag, PILOT_FLOOR) ** spec.gamma
        w = np.minimum(w, WEIGHT_CAP)
    else:
        w = scad_derivative(mag, spec.lam, spec.a)
    return w * off


@njit(cache=True)
def _lasso_column(W, S, Lam, Bt, j, inner_tol, inner_max):
    # Weighted lasso for column j: minimize over b (b[j] fixed at 0)
    #   0.5 b' W11 b - S[.,j]' b + sum_i Lam[i,j] |b_i|
    # by cyclic coordinate descent, then write w12 = W11 b back into W.
    # W is symmetric and stays so; only row/column j changes here.
    d = W.shape[0]
    b = Bt[j]
    u = W @ b
    for _ in range(inner_max):
        max_delta = 0.0
        for i in range(d):
            if i == j:
                continue
            wii = W[i, i]
            b_old = b[i]
            g = S[i, j] - u[i] + wii * b_old
            lam = Lam[i, j]
            if g > lam:
                b_new = (g - lam) / wii
            elif g < -lam:
                b_new = (g + lam) / wii
            else:
                b_new = 0.0
            diff = b_new - b_old
            if diff != 0.0:
                b[i] = b_new
                for k in range(d):
                    u[k] += W[i, k] * diff
                ad = abs(diff)
                if ad > max_delta:
                    max_delta = ad
        if max_delta <= inner_tol:
            break
    for i in range(d):
        if i != j:
            W[i, j] = u[i]
            W[j, i] = u[i]


@njit(cache=True)
def _glasso_sweeps(S, Lam, W, Bt, Omega, tol, max_sweeps, inner_tol, inner_max):
    # Returns (sweeps_used, status): status 1 = change criterion met,
    # 0 = sweep budget exhausted, -1 = working matrix lost definiteness.
    d = S.shape[0]
    sweeps = 0
    for _ in range(max_sweeps):
        sweeps += 1
        for j in range(d):
            _lasso_column(W, S, Lam, Bt, j, inner_tol, inner_max)
        change = 0.0
        base = 0.0
        for j in range(d):
            denom = W[j, j]
            for i in range(d):
                if i != j:
                    denom -= Bt[j, i] * W[j, i]
            if denom <= 0.0 or not np.isfinite(denom):
                return sweeps, -1
            ojj = 1.0 / denom
            Omega_jj_new = ojj
            for i in range(d):
                if i == j:
                    Omega[j, j] = Omega_jj_new
                else:
                    new = -Bt[j, i] * ojj
                    base += abs(Omega[i, j])
                    change += abs(new - Omega[i, j])
                    Omega[i, j] = new
        rel = change / base if base > 0.0 else change
        if rel < tol:
            return sweeps, 1
    return sweeps, 0


def kkt_residual(omega, s_tilde, weights, zero_tol=ZERO_TOL):
    """Largest violation of the stationarity system at omega.

    For off-diagonal entries the inverse must satisfy
    (omega^-1 - S)_ij = Lam_ij * sign(omega_ij) on the support and
    |(omega^-1 - S)_ij| <= Lam_ij off it; the diagonal of omega^-1 must
    match the diagonal of S exactly.
    """
    omega = as_square(omega, "omega")
    grad = inv_pd(omega) - s_tilde
    d = omega.shape[0]
    offdiag = ~np.eye(d, dtype=bool)
    active = (np.abs(omega) > zero_tol) & offdiag
    inactive = offdiag & ~active
    resid = float(np.max(np.abs(np.diag(grad))))
    if active.any():
        gap = np.abs(grad[active] - weights[active] * np.sign(omega[active]))
        resid = max(resid, float(gap.max()))
    if inactive.any():
        slack = np.abs(grad[inactive]) - weights[inactive]
        resid = max(resid, float(max(slack.max(), 0.0)))
    return resid


def _check_solver_inputs(s_tilde, weights):
    S = as_square(s_tilde, "s_tilde")
    Lam = as_square(weights, "weights")
    if S.shape != Lam.shape:
        raise InvalidInput(f"shape mismatch: s_tilde {S.shape} vs weights {Lam.shape}")
    if np.max(np.abs(S - S.T)) > 1e-10:
        raise InvalidInput("s_tilde must be symmetric")
    if np.any(np.diag(S) <= 0.0):
        raise InvalidInput("s_tilde must have a strictly positive diagonal")
    if np.max(np.abs(Lam - Lam.T)) > 0.0:
        raise InvalidInput("weights must be exactly symmetric")
    if np.any(Lam < 0.0):
        raise InvalidInput("weights must be nonnegative")
    if np.any(np.diag(Lam) != 0.0):
        raise InvalidInput("weights must have a zero diagonal")
    return S, Lam


def _finish(omega, sigma, S, lam, converged, iterations, n_obs):
    support = np.abs(omega) > ZERO_TOL
    np.fill_diagonal(support, True)
    loglik = 0.5 * n_obs * (logdet_pd(omega) - float(np.sum(S * omega)))
    return PrecisionEstimate(
        omega=omega,
        sigma=sigma,
        support=support,
        lam=float(lam),
        converged=converged,
        iterations=iterations,
        loglik=loglik,
    )


def glasso_fit(s_tilde, weights, tol=1e-5, max_iter=200, *, n_obs=1, lam=np.nan, warm=None):
    """Solve the weighted graphical lasso for one weight matrix.

    Parameters
    ----------
    s_tilde : (d, d) array_like
        Scatter matrix of the normal scores (1/n convention).
    weights : (d, d) array_like
        Per-entry penalty levels, symmetric with zero diagonal.
    tol : float
        Relative change of the off-diagonal l1 mass of omega between
        sweeps below which the sweep loop stops.
    max_iter : int
        Outer sweep budget.
    n_obs : int
        Sample size entering the reported log-likelihood.
    lam : float
        Penalty level recorded on the estimate (bookkeeping only).
    warm : PrecisionEstimate, optional
        Previous fit to warm start from.

    Returns
    -------
    PrecisionEstimate
        converged is True only if the stationarity system holds within
        KKT_TOL; reaching max_iter first leaves converged False, it is
        never an error.
    """
    S, Lam = _check_solver_inputs(s_tilde, weights)
    d = S.shape[0]
    if not Lam.any():
        # unpenalized MLE in closed form, same shortcut scikit-learn takes
        omega = inv_pd(S)
        return _finish(omega, S.copy(), S, lam, True, 0, n_obs)

    if warm is not None:
        W = np.array(warm.sigma, dtype=np.float64)
        np.fill_diagonal(W, np.diag(S))
        om = warm.omega
        Bt = -(om / np.diag(om)[:, None])
        np.fill_diagonal(Bt, 0.0)
        Bt = np.ascontiguousarray(Bt)
        Omega = np.array(om, dtype=np.float64)
    else:
        W = S.copy()
        Bt = np.zeros((d, d))
        Omega = np.zeros((d, d))

    remaining = int(max_iter)
    used = 0
    sweep_tol = float(tol)
    inner_tol = 0.1 * float(tol)
    converged = False
    omega_sym = None
    sigma = None
    restarts = 2
    while remaining > 0:
        sweeps, status = _glasso_sweeps(S, Lam, W, Bt, Omega, sweep_tol, remaining, inner_tol, 1000)
        used += sweeps
        remaining -= sweeps
        if status == -1:
            # sloppy column solves on an ill-conditioned scatter can push
            # the working covariance off the cone; restart cold and demand
            # much more of the inner solver before giving up
            if restarts == 0:
                raise NotPositiveDefinite("working covariance lost positive definiteness")
            restarts -= 1
            W = S.copy()
            Bt = np.zeros((d, d))
            Omega = np.zeros((d, d))
            inner_tol *= 1e-3
            continue
        omega_sym = 0.5 * (Omega + Omega.T)
        sigma = inv_pd(omega_sym)
        if kkt_residual(omega_sym, S, Lam) <= KKT_TOL:
            converged = True
            break
        if status == 0:
            break
        # change criterion met but stationarity not yet tight enough
        sweep_tol *= 0.1
        inner_tol *= 0.1
    return _finish(omega_sym, sigma, S, lam, converged, used, n_obs)


def mple(ps, spec, tol=1e-5, max_iter=200, warm=None):
    """Maximum penalized likelihood estimate for one penalty spec.

    lasso is a single solver call.  adaptive and scad first compute a lasso
    pilot at the same lam, then run spec.steps reweighted refits, each
    deriving its weights from the previous round's estimate.
    """
    if not isinstance(ps, PseudoSample):
        raise InvalidInput("ps must be a PseudoSample")
    if spec.family == "lasso":
        w = penalty_weights(spec, d=ps.d)
        return glasso_fit(ps.s_tilde, w, tol, max_iter, n_obs=ps.n, lam=spec.lam, warm=warm)
    pilot_spec = PenaltySpec("lasso", spec.lam)
    w = penalty_weights(pilot_spec, d=ps.d)
    est = glasso_fit(ps.s_tilde, w, tol, max_iter, n_obs=ps.n, lam=spec.lam, warm=warm)
    all_converged = est.converged
    for _ in range(spec.steps):
        w = penalty_weights(spec, pilot=est.omega)
        est = glasso_fit(ps.s_tilde, w, tol, max_iter, n_obs=ps.n, lam=spec.lam, warm=est)
        all_converged = all_converged and est.converged
    if est.converged != all_converged:
        est = replace(est, converged=all_converged)
    return est


def fit_path(ps, spec, grid, tol=1e-5, max_iter=200):
    """Fit the whole path over a strictly decreasing lam grid, warm started.

    spec supplies the family and constants; its lam field is replaced by
    each grid value in turn.
    """
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size == 0:
        raise InvalidInput("grid must be a nonempty 1-D array")
    if grid.size > 1 and not np.all(np.diff(grid) < 0.0):
        raise InvalidInput("grid must be strictly decreasing")
    estimates = []
    warm = None
    for lam in grid:
        est = mple(ps, replace(spec, lam=float(lam)), tol=tol, max_iter=max_iter, warm=warm)
        estimates.append(est)
        warm = est
    return estimates
