"""Sparse precision matrices for Gaussian copula graphical models.

Data are Gaussianized through their column ranks, a weighted graphical
lasso fits a penalty path (lasso, adaptive lasso, SCAD), and the tuning
parameter is picked by information criteria built on a likelihood-based
degrees of freedom, with cross-validation and a truth-aware oracle for
benchmarking.
"""

from .copula import PseudoSample, ecdf_transform, gaussianize, pseudo_cov, pseudo_sample
from .criteria import (
    CRITERIA,
    CriterionScore,
    PathResult,
    commutation_matrix,
    cv_score,
    df_aic,
    df_gic,
    df_gic_naive,
    score,
    score_path,
    select_index,
    select_lambda,
)
from .estimator import (
    KKT_TOL,
    ZERO_TOL,
    PenaltySpec,
    PrecisionEstimate,
    fit_path,
    glasso_fit,
    kkt_residual,
    mple,
    penalty_weights,
    scad_derivative,
)
from .exceptions import (
    ConfigError,
    DegenerateColumn,
    DimensionMismatch,
    DimensionTooLarge,
    EmptyPath,
    GcglassoError,
    InvalidInput,
    MissingContext,
    MissingPilot,
    NotPositiveDefinite,
    OutOfRange,
    ParseError,
)
from .harness import (
    ExperimentConfig,
    ResultRow,
    ResultsTable,
    fit_dataset,
    lambda_grid,
    parse_config,
    run_biascurve,
    run_simulation,
)
from .numerics import cholesky, inv_pd, logdet_pd, min_eigenvalue, symmetrize
from .simulation import MetricsRecord, TrueModel, band_model, evaluate, random_model, sample_mvn

__version__ = "0.1.0"

__all__ = [
    "CRITERIA",
    "KKT_TOL",
    "ZERO_TOL",
    "ConfigError",
    "CriterionScore",
    "DegenerateColumn",
    "DimensionMismatch",
    "DimensionTooLarge",
    "EmptyPath",
    "ExperimentConfig",
    "GcglassoError",
    "InvalidInput",
    "MetricsRecord",
    "MissingContext",
    "MissingPilot",
    "NotPositiveDefinite",
    "OutOfRange",
    "ParseError",
    "PathResult",
    "PenaltySpec",
    "PrecisionEstimate",
    "PseudoSample",
    "ResultRow",
    "ResultsTable",
    "TrueModel",
    "band_model",
    "cholesky",
    "commutation_matrix",
    "cv_score",
    "df_aic",
    "df_gic",
    "df_gic_naive",
    "ecdf_transform",
    "evaluate",
    "fit_dataset",
    "fit_path",
    "gaussianize",
    "glasso_fit",
    "inv_pd",
    "kkt_residual",
    "lambda_grid",
    "logdet_pd",
    "min_eigenvalue",
    "mple",
    "parse_config",
    "penalty_weights",
    "pseudo_cov",
    "pseudo_sample",
    "random_model",
    "run_biascurve",
    "run_simulation",
    "sample_mvn",
    "scad_derivative",
    "score",
    "score_path",
    "select_index",
    "select_lambda",
    "symmetrize",
]
