"""Command line front end: sim, fit, and biascurve subcommands."""

import sys

from .exceptions import ConfigError, GcglassoError
from .harness import fit_dataset, parse_config, run_biascurve, run_simulation


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
    except ConfigError as err:
        print(err, file=sys.stderr)
        return 2
    try:
        if cfg.mode == "sim":
            run_simulation(cfg)
            print(f"wrote {cfg.out}")
        elif cfg.mode == "biascurve":
            run_biascurve(cfg)
            print(f"wrote {cfg.out}")
        else:
            result = fit_dataset(cfg)
            print(f"selected lambda {result.lam:.6g} by {result.selector}")
            for name in ("omega", "edges", "summary"):
                print(f"wrote {result.files[name]}")
    except GcglassoError as err:
        print(err, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
