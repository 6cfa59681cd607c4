"""Experiment orchestration: configuration, runners, and CSV output.

Everything here is deterministic given (config, seed).  Wall-clock
runtimes are recorded on the in-memory rows for interactive use but are
deliberately left out of the CSV files so repeated runs produce identical
bytes.
"""

import argparse
import csv
import json
import math
import os
import time
from dataclasses import dataclass, field, replace

import numpy as np

from .copula import pseudo_sample
from .criteria import CRITERIA, df_aic, df_gic, score, score_path, select_index
from .estimator import PenaltySpec, fit_path, mple
from .exceptions import ConfigError, DegenerateColumn, InvalidInput, ParseError
from .simulation import band_model, evaluate, random_model, sample_mvn

__all__ = [
    "ExperimentConfig",
    "ResultRow",
    "ResultsTable",
    "lambda_grid",
    "parse_config",
    "run_simulation",
    "run_biascurve",
    "fit_dataset",
]

MODES = ("sim", "fit", "biascurve")
MODEL_TOKENS = ("band", "sparse", "dense")
PENALTIES = ("lasso", "adaptive", "scad")

# the split-based criterion always uses this many grid points
CV_GRID_SIZE = 200
# seed offsets keeping the model draw, data draws, and CV splits on
# distinct generator streams
TRUTH_SEED_OFFSET = 100_000
SPLIT_SEED_OFFSET = 1_000_000

_SIM_DEFAULT_CRITERIA = ("gic", "aic", "bic", "gbic", "kl_oracle")
_FIT_DEFAULT_CRITERIA = ("gic",)

_METRIC_FIELDS = (
    "kl_loss",
    "op_norm",
    "l1_norm",
    "fro_norm",
    "specificity",
    "sensitivity",
    "mcc",
)


def lambda_grid(s_tilde, size=100, ratio=0.01):
    """Log-spaced decreasing penalty grid for one scatter matrix.

    The first value is the largest off-diagonal magnitude of s_tilde,
    i.e. the smallest penalty whose lasso fit is already diagonal; the
    last is ratio times that.
    """
    if size < 2:
        raise InvalidInput(f"grid size must be at least 2, got {size}")
    if not 0.0 < ratio < 1.0:
        raise InvalidInput(f"grid ratio must lie in (0, 1), got {ratio}")
    s = np.asarray(s_tilde, dtype=np.float64)
    off = np.abs(s - np.diag(np.diag(s)))
    lam_max = float(off.max())
    if lam_max <= 0.0:
        raise InvalidInput("scatter matrix has no off-diagonal mass")
    return np.geomspace(lam_max, ratio * lam_max, size)


@dataclass(frozen=True)
class ExperimentConfig:
    """Resolved settings for one run; validate() lists every violation."""

    mode: str
    model: str = "band"
    d: int = 30
    n: int = 100
    replicates: int = 20
    penalty: str = "lasso"
    criteria: tuple = ()
    grid_size: int = 100
    grid_ratio: float = 0.01
    gamma: float = 0.5
    scad_a: float = 3.7
    seed: int = 42
    copula: bool = True
    cv_folds: int = 1
    redraw_truth: bool = False
    data: str | None = None
    out: str | None = None

    def penalty_spec(self, lam=0.0):
        return PenaltySpec(family=self.penalty, lam=lam, gamma=self.gamma, a=self.scad_a)

    def violations(self):
        problems = []
        if self.mode not in MODES:
            problems.append(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.model not in MODEL_TOKENS:
            problems.append(f"model must be one of {MODEL_TOKENS}, got {self.model!r}")
        if not isinstance(self.d, int) or self.d < 2:
            problems.append(f"d must be an integer >= 2, got {self.d!r}")
        if not isinstance(self.n, int) or self.n < 3:
            problems.append(f"n must be an integer >= 3, got {self.n!r}")
        if not isinstance(self.replicates, int) or self.replicates < 1:
            problems.append(f"reps must be a positive integer, got {self.replicates!r}")
        if self.penalty not in PENALTIES:
            problems.append(f"penalty must be one of {PENALTIES}, got {self.penalty!r}")
        for c in self.criteria:
            if c not in CRITERIA:
                problems.append(f"unknown criterion {c!r}")
        if not isinstance(self.grid_size, int) or self.grid_size < 2:
            problems.append(f"grid must be an integer >= 2, got {self.grid_size!r}")
        if not 0.0 < self.grid_ratio < 1.0:
            problems.append(f"grid-ratio must lie in (0, 1), got {self.grid_ratio!r}")
        if self.gamma <= 0.0:
            problems.append(f"gamma must be positive, got {self.gamma!r}")
        if self.scad_a <= 2.0:
            problems.append(f"scad-a must exceed 2, got {self.scad_a!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            problems.append(f"seed must be a nonnegative integer, got {self.seed!r}")
        if not isinstance(self.cv_folds, int) or self.cv_folds < 1:
            problems.append(f"cv-folds must be a positive integer, got {self.cv_folds!r}")
        if self.mode == "fit":
            if self.data is None:
                problems.append("fit mode requires --data")
            if "kl_oracle" in self.criteria:
                problems.append("kl_oracle needs a known truth and is unavailable in fit mode")
        else:
            if self.data is not None:
                problems.append("--data only applies to fit mode")
        if "cv" in self.criteria and self.mode != "biascurve":
            folds = 2 if self.cv_folds == 1 else self.cv_folds
            if isinstance(self.n, int) and self.n < 2 * folds:
                problems.append(f"cv with {folds} folds needs n >= {2 * folds}")
        return problems

    def validate(self):
        problems = self.violations()
        if problems:
            raise ConfigError("invalid configuration:\n  " + "\n  ".join(problems))
        return self


_CONFIG_KEYS = {
    "model": str,
    "d": int,
    "n": int,
    "reps": int,
    "penalty": str,
    "criteria": None,
    "grid": int,
    "grid_ratio": float,
    "gamma": float,
    "scad_a": float,
    "seed": int,
    "copula": bool,
    "cv_folds": int,
    "redraw_truth": bool,
    "data": str,
    "out": str,
}

_KEY_TO_FIELD = {"reps": "replicates", "grid": "grid_size"}


def _normalize_criteria(raw, problems):
    if isinstance(raw, str):
        tokens = [t.strip() for t in raw.split(",") if t.strip()]
    else:
        tokens = [str(t) for t in raw]
    out = []
    for t in tokens:
        name = "kl_oracle" if t == "oracle" else t
        if name not in CRITERIA:
            problems.append(f"unknown criterion {t!r}")
        elif name not in out:
            out.append(name)
    if not out:
        problems.append("criteria list is empty")
    return tuple(out)


def _load_config_file(path, problems):
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as err:
        problems.append(f"cannot read config file: {err}")
        return {}
    except json.JSONDecodeError as err:
        problems.append(f"config file is not valid JSON: {err}")
        return {}
    if not isinstance(raw, dict):
        problems.append("config file must hold a JSON object")
        return {}
    values = {}
    for key, value in raw.items():
        if key not in _CONFIG_KEYS:
            problems.append(f"unknown config key {key!r}")
            continue
        want = _CONFIG_KEYS[key]
        if key == "criteria":
            values[key] = _normalize_criteria(value, problems)
        elif want is bool:
            if not isinstance(value, bool):
                problems.append(f"config key {key!r} must be a boolean, got {value!r}")
            else:
                values[key] = value
        elif want in (int, float):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                problems.append(f"config key {key!r} must be a number, got {value!r}")
            elif want is int and int(value) != value:
                problems.append(f"config key {key!r} must be an integer, got {value!r}")
            else:
                values[key] = want(value)
        else:
            values[key] = str(value)
    return values


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gcglasso",
        description="Sparse precision matrices for Gaussian copula graphical models",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    def add_common(p):
        p.add_argument("--penalty", choices=PENALTIES, help="penalty family (default lasso)")
        p.add_argument("--criteria", help="comma-separated criteria, e.g. gic,bic,oracle")
        p.add_argument("--grid", type=int, help="number of penalty grid points (default 100)")
        p.add_argument("--grid-ratio", type=float, help="smallest over largest grid value (default 0.01)")
        p.add_argument("--gamma", type=float, help="adaptive lasso exponent (default 0.5)")
        p.add_argument("--scad-a", type=float, help="SCAD knot, must exceed 2 (default 3.7)")
        p.add_argument("--seed", type=int, help="base seed (default 42)")
        p.add_argument("--no-copula", action="store_const", const=True, default=None,
                       help="skip the rank transform, standardize columns instead")
        p.add_argument("--out", help="output path (fit mode: output directory)")
        p.add_argument("--config", help="JSON file with the same keys as the flags")

    def add_model(p):
        p.add_argument("--model", choices=MODEL_TOKENS, help="truth family (default band)")
        p.add_argument("--d", type=int, help="dimension (default 30)")
        p.add_argument("--n", type=int, help="sample size (default 100)")

    p_sim = sub.add_parser("sim", help="simulation study over replicates")
    add_model(p_sim)
    p_sim.add_argument("--reps", type=int, help="number of replicates (default 20)")
    p_sim.add_argument("--cv-folds", type=int, help="folds for cv (default 1 = one 50/50 split)")
    p_sim.add_argument("--redraw-truth", action="store_const", const=True, default=None,
                       help="draw a fresh random truth per replicate")
    add_common(p_sim)

    p_fit = sub.add_parser("fit", help="fit a dataset from a CSV file")
    p_fit.add_argument("--data", help="input CSV, rows are observations")
    p_fit.add_argument("--cv-folds", type=int, help="folds for cv (default 1 = one 50/50 split)")
    add_common(p_fit)

    p_bias = sub.add_parser("biascurve", help="bias terms along the penalty grid")
    add_model(p_bias)
    add_common(p_bias)
    return parser


def parse_config(argv):
    """CLI arguments (plus optional JSON config file) to a validated config.

    Precedence: built-in defaults, then config file values, then explicit
    flags.  Every violation found is reported in one ConfigError.
    """
    parser = _build_parser()
    namespace = parser.parse_args(list(argv))
    problems = []
    values = {}
    if getattr(namespace, "config", None):
        values.update(_load_config_file(namespace.config, problems))

    direct = {
        "model": "model",
        "d": "d",
        "n": "n",
        "reps": "reps",
        "penalty": "penalty",
        "grid": "grid",
        "grid_ratio": "grid_ratio",
        "gamma": "gamma",
        "scad_a": "scad_a",
        "seed": "seed",
        "cv_folds": "cv_folds",
        "data": "data",
        "out": "out",
    }
    for attr, key in direct.items():
        flag = getattr(namespace, attr, None)
        if flag is not None:
            values[key] = flag
    if getattr(namespace, "criteria", None) is not None:
        values["criteria"] = _normalize_criteria(namespace.criteria, problems)
    if getattr(namespace, "no_copula", None):
        values["copula"] = False
    if getattr(namespace, "redraw_truth", None):
        values["redraw_truth"] = True

    if "criteria" not in values:
        values["criteria"] = _FIT_DEFAULT_CRITERIA if namespace.mode == "fit" else _SIM_DEFAULT_CRITERIA
    if "out" not in values:
        values["out"] = {"sim": "simulation.csv", "biascurve": "biascurve.csv", "fit": "."}[
            namespace.mode
        ]

    kwargs = {"mode": namespace.mode}
    for key, value in values.items():
        kwargs[_KEY_TO_FIELD.get(key, key)] = value
    cfg = ExperimentConfig(**kwargs)
    problems.extend(cfg.violations())
    if problems:
        raise ConfigError("invalid configuration:\n  " + "\n  ".join(problems))
    return cfg


@dataclass
class ResultRow:
    """One selection outcome; aggregate rows put 'mean' in replicate and
    carry standard errors in ses."""

    replicate: object
    criterion: str
    lam: float
    value: float | None
    df: float | None
    kl_loss: float
    op_norm: float
    l1_norm: float
    fro_norm: float
    specificity: float
    sensitivity: float
    mcc: float
    runtime_s: float | None = None
    ses: dict | None = None


@dataclass
class ResultsTable:
    criteria: tuple
    replicates: int
    rows: list = field(default_factory=list)

    def selection_rows(self, criterion=None):
        out = [r for r in self.rows if isinstance(r.replicate, int)]
        if criterion is not None:
            out = [r for r in out if r.criterion == criterion]
        return out

    def aggregate_row(self, criterion):
        for r in self.rows:
            if r.replicate == "mean" and r.criterion == criterion:
                return r
        raise InvalidInput(f"no aggregate row for {criterion!r}")


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, float) and math.isnan(x):
        return "N/A"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def write_results_csv(table, path):
    """Fixed schema; *_se columns are filled on aggregate rows only."""
    head = ["replicate", "criterion", "lambda", "value", "df", *_METRIC_FIELDS]
    head += ["lambda_se"] + [f"{m}_se" for m in _METRIC_FIELDS]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(head)
        for r in table.rows:
            cells = [r.replicate, r.criterion, _fmt(r.lam), _fmt(r.value), _fmt(r.df)]
            cells += [_fmt(getattr(r, m)) for m in _METRIC_FIELDS]
            if r.ses is None:
                cells += [""] * (1 + len(_METRIC_FIELDS))
            else:
                cells += [_fmt(r.ses["lambda"])] + [_fmt(r.ses[m]) for m in _METRIC_FIELDS]
            writer.writerow(cells)


def _build_truth(cfg, rep=None):
    seed = cfg.seed if rep is None else cfg.seed + TRUTH_SEED_OFFSET + rep
    if cfg.model == "band":
        return band_model(cfg.d)
    if cfg.model == "sparse":
        return random_model(cfg.d, 3.0 / cfg.d, seed=seed)
    return random_model(cfg.d, 0.9, seed=seed)


def _metrics_row(replicate, criterion, lam, value, df, metrics, runtime_s):
    return ResultRow(
        replicate=replicate,
        criterion=criterion,
        lam=lam,
        value=value,
        df=df,
        kl_loss=metrics.kl_loss,
        op_norm=metrics.op_norm,
        l1_norm=metrics.l1_norm,
        fro_norm=metrics.fro_norm,
        specificity=metrics.specificity,
        sensitivity=metrics.sensitivity,
        mcc=metrics.mcc,
        runtime_s=runtime_s,
    )


def _cv_select(cfg, x, ps, spec, full_grid, full_fits, data_seed):
    """Pick lam on held-out halves, then refit on the full sample.

    cv_folds = 1 is the default protocol: one seeded 50/50 split, fit the
    training half over a CV_GRID_SIZE-point grid, take the lam with the
    smallest validation loss.  cv_folds >= 2 averages the loss over folds.
    """
    n = x.shape[0]
    rng = np.random.default_rng(data_seed + SPLIT_SEED_OFFSET)
    perm = rng.permutation(n)
    folds = 2 if cfg.cv_folds == 1 else cfg.cv_folds
    parts = np.array_split(perm, folds)
    rounds = [0] if cfg.cv_folds == 1 else list(range(folds))
    cv_grid = None
    total = None
    for k in rounds:
        valid_idx = parts[k]
        train_idx = np.concatenate([parts[m] for m in range(folds) if m != k])
        ps_train = pseudo_sample(x[train_idx], copula=cfg.copula)
        ps_valid = pseudo_sample(x[valid_idx], copula=cfg.copula)
        if cv_grid is None:
            cv_grid = lambda_grid(ps_train.s_tilde, CV_GRID_SIZE, cfg.grid_ratio)
        fits = fit_path(ps_train, spec, cv_grid)
        vals = np.array([score(f, ps_train, "cv", valid=ps_valid).value for f in fits])
        total = vals if total is None else total + vals
    idx = select_index(total)
    lam_cv = float(cv_grid[idx])
    warm = full_fits[int(np.argmin(np.abs(full_grid - lam_cv)))]
    final = mple(ps, replace(spec, lam=lam_cv), warm=warm)
    return lam_cv, float(total[idx] / len(rounds)), final


def run_simulation(cfg):
    """Full study: replicate, fit the path, select by every criterion.

    Returns the ResultsTable (selection rows first, one aggregate row per
    criterion after them) and writes it to cfg.out when set.  Runtimes on
    the rows count the shared path fit plus that criterion's own scoring.
    """
    cfg.validate()
    if cfg.mode != "sim":
        raise InvalidInput("run_simulation needs a sim-mode config")
    table = ResultsTable(criteria=cfg.criteria, replicates=cfg.replicates)
    truth = _build_truth(cfg)
    spec = cfg.penalty_spec()
    path_criteria = [c for c in cfg.criteria if c != "cv"]
    for rep in range(cfg.replicates):
        if cfg.redraw_truth and cfg.model != "band":
            truth = _build_truth(cfg, rep)
        data_seed = cfg.seed + rep
        x = sample_mvn(truth, cfg.n, data_seed)
        ps = pseudo_sample(x, copula=cfg.copula)
        grid = lambda_grid(ps.s_tilde, cfg.grid_size, cfg.grid_ratio)
        t0 = time.perf_counter()
        fits = fit_path(ps, spec, grid)
        # the gic bias term is the expensive score ingredient; compute it
        # once per fit and share it between gic and gbic
        dfg = None
        if any(c in ("gic", "gbic") for c in path_criteria):
            dfg = [df_gic(f, ps) for f in fits]
        fit_time = time.perf_counter() - t0
        for criterion in path_criteria:
            t1 = time.perf_counter()
            dfs = dfg if criterion in ("gic", "gbic") else [None] * len(fits)
            scores = [
                score(f, ps, criterion, sigma0=truth.sigma0, df=dfv).value
                for f, dfv in zip(fits, dfs)
            ]
            idx = select_index(scores)
            sel = score(fits[idx], ps, criterion, sigma0=truth.sigma0, df=dfs[idx])
            metrics = evaluate(truth, fits[idx])
            took = fit_time + (time.perf_counter() - t1)
            table.rows.append(
                _metrics_row(rep, criterion, float(grid[idx]), sel.value, sel.df, metrics, took)
            )
        if "cv" in cfg.criteria:
            t1 = time.perf_counter()
            lam_cv, value, final = _cv_select(cfg, x, ps, spec, grid, fits, data_seed)
            metrics = evaluate(truth, final)
            took = fit_time + (time.perf_counter() - t1)
            table.rows.append(
                _metrics_row(rep, "cv", lam_cv, value, float("nan"), metrics, took)
            )
    for criterion in cfg.criteria:
        rows = table.selection_rows(criterion)
        lam_vals = np.array([r.lam for r in rows])
        ses = {}
        means = {}
        for name, vals in [("lambda", lam_vals)] + [
            (m, np.array([getattr(r, m) for r in rows])) for m in _METRIC_FIELDS
        ]:
            means[name] = float(np.mean(vals))
            if len(vals) >= 2:
                ses[name] = float(np.std(vals, ddof=1) / np.sqrt(len(vals)))
            else:
                ses[name] = float("nan")
        table.rows.append(
            ResultRow(
                replicate="mean",
                criterion=criterion,
                lam=means["lambda"],
                value=None,
                df=None,
                ses=ses,
                **{m: means[m] for m in _METRIC_FIELDS},
            )
        )
    if cfg.out:
        write_results_csv(table, cfg.out)
    return table


def run_biascurve(cfg):
    """Bias terms along the grid for one simulated dataset.

    Writes and returns rows (lambda, df_gic, df_aic, df_kl_true), where
    df_kl_true = n * tr(omega_hat (sigma0 - s_tilde)) uses the known truth.
    """
    cfg.validate()
    if cfg.mode != "biascurve":
        raise InvalidInput("run_biascurve needs a biascurve-mode config")
    truth = _build_truth(cfg)
    x = sample_mvn(truth, cfg.n, cfg.seed)
    ps = pseudo_sample(x, copula=cfg.copula)
    grid = lambda_grid(ps.s_tilde, cfg.grid_size, cfg.grid_ratio)
    fits = fit_path(ps, cfg.penalty_spec(), grid)
    rows = []
    for lam, est in zip(grid, fits):
        df_true = cfg.n * float(np.sum(est.omega * (truth.sigma0 - ps.s_tilde)))
        rows.append((float(lam), df_gic(est, ps), float(df_aic(est)), df_true))
    if cfg.out:
        with open(cfg.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["lambda", "df_gic", "df_aic", "df_kl_true"])
            for row in rows:
                writer.writerow([_fmt(v) for v in row])
    return rows


def _read_matrix_csv(path):
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            raw = [row for row in csv.reader(fh)]
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err}") from err
    rows = [(i + 1, row) for i, row in enumerate(raw) if any(cell.strip() for cell in row)]
    if not rows:
        raise ParseError(f"{path} holds no data")

    def to_float(cell):
        return float(cell.strip())

    first = rows[0][1]
    names = None
    start = 0
    try:
        [to_float(c) for c in first]
    except ValueError:
        names = [c.strip() for c in first]
        start = 1
        if len(rows) == 1:
            raise ParseError(f"{path} has a header row but no data rows") from None
    width = len(names) if names else len(first)
    data = []
    for line_no, row in rows[start:]:
        if len(row) != width:
            raise ParseError(f"line {line_no}: expected {width} columns, got {len(row)}")
        parsed = []
        for c, cell in enumerate(row):
            try:
                parsed.append(to_float(cell))
            except ValueError:
                raise ParseError(
                    f"line {line_no}, column {c + 1}: cannot parse {cell.strip()!r}"
                ) from None
        data.append(parsed)
    return np.array(data, dtype=np.float64), names


@dataclass
class FitResult:
    """Outcome of fit mode: the reported estimate and per-criterion picks."""

    estimate: object
    selector: str
    lam: float
    summary: list
    names: list | None
    files: dict


def fit_dataset(cfg):
    """Fit a CSV dataset, select lam, write omega/edges/summary CSVs.

    The first requested criterion does the selecting; any further ones are
    scored at their own minimizers and reported in the summary file.
    """
    cfg.validate()
    if cfg.mode != "fit":
        raise InvalidInput("fit_dataset needs a fit-mode config")
    x, names = _read_matrix_csv(cfg.data)
    if x.shape[0] < 3:
        raise ParseError(f"need at least 3 data rows, got {x.shape[0]}")
    if x.shape[1] < 2:
        raise ParseError(f"need at least 2 columns, got {x.shape[1]}")
    for i in range(x.shape[1]):
        if x[:, i].min() == x[:, i].max():
            label = names[i] if names else str(i + 1)
            raise DegenerateColumn(f"column {label} is constant")
    ps = pseudo_sample(x, copula=cfg.copula)
    grid = lambda_grid(ps.s_tilde, cfg.grid_size, cfg.grid_ratio)
    spec = cfg.penalty_spec()
    fits = fit_path(ps, spec, grid)
    path_criteria = [c for c in cfg.criteria if c != "cv"]
    path = score_path(fits, grid, ps, path_criteria) if path_criteria else None
    summary = []
    picks = {}
    for criterion in cfg.criteria:
        if criterion == "cv":
            lam_cv, value, final = _cv_select(cfg, x, ps, spec, grid, fits, cfg.seed)
            picks[criterion] = (lam_cv, final)
            summary.append((criterion, lam_cv, value, float("nan"), final))
        else:
            idx = path.selected[criterion]
            est = fits[idx]
            sel = score(est, ps, criterion)
            picks[criterion] = (float(grid[idx]), est)
            summary.append((criterion, float(grid[idx]), sel.value, sel.df, est))
    selector = cfg.criteria[0]
    lam_sel, est_sel = picks[selector]

    out_dir = cfg.out or "."
    os.makedirs(out_dir, exist_ok=True)
    files = {
        "omega": os.path.join(out_dir, "omega.csv"),
        "edges": os.path.join(out_dir, "edges.csv"),
        "summary": os.path.join(out_dir, "summary.csv"),
    }
    with open(files["omega"], "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if names:
            writer.writerow(names)
        for row in est_sel.omega:
            writer.writerow([_fmt(float(v)) for v in row])
    with open(files["edges"], "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["i", "j", "weight"])
        d = ps.d
        for i in range(d):
            for j in range(i + 1, d):
                if est_sel.support[i, j]:
                    a = names[i] if names else str(i + 1)
                    b = names[j] if names else str(j + 1)
                    writer.writerow([a, b, _fmt(float(est_sel.omega[i, j]))])
    with open(files["summary"], "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["criterion", "lambda", "value", "df", "converged", "iterations"])
        for criterion, lam, value, df, est in summary:
            writer.writerow(
                [criterion, _fmt(lam), _fmt(value), _fmt(df), est.converged, est.iterations]
            )
    return FitResult(
        estimate=est_sel,
        selector=selector,
        lam=lam_sel,
        summary=[(c, lam, v, df) for c, lam, v, df, _ in summary],
        names=names,
        files=files,
    )
