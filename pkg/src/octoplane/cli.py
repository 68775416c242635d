"""Batch verification CLI.

    octoplane-verify --suite all --seed 7 --out report.json --format json

Flags: --suite, --lambda, --lmax, --rgrid, --tgrid, --nmc, --ngauss, --seed,
--tol.<check>=<value>, --out, --format, --config.  A config file holds
key = value lines with the same keys; flags override it.  Exit codes:
0 all checks pass, 1 at least one check failed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .report import render_csv, render_json, summary_lines
from .suites import SUITE_NAMES, SuiteConfig, run_suite

_CONFIG_KEYS = {
    "suite", "lambda", "lmax", "rgrid", "tgrid", "nmc", "ngauss", "seed",
    "out", "format",
}


def _parse_floats(text: str) -> tuple:
    try:
        vals = tuple(float(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"expected a comma-separated list of numbers, got {text!r}")
    if not vals:
        raise ValueError("empty numeric list")
    return vals


def _read_config_file(path: str) -> dict:
    settings: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, val = (part.strip() for part in line.split("=", 1))
            if key.startswith("tol."):
                settings.setdefault("tol", {})[key[4:]] = float(val)
            elif key in _CONFIG_KEYS:
                settings[key] = val
            else:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    return settings


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="octoplane-verify",
        description="Run the numerical verification suites and emit a report.",
    )
    p.add_argument("--suite", choices=SUITE_NAMES, default=None)
    p.add_argument("--lambda", dest="lambdas", default=None, metavar="L1,L2,...",
                   help="spectral parameters (nonzero reals)")
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--rgrid", default=None, metavar="R1,R2,...")
    p.add_argument("--tgrid", default=None, metavar="T1,T2,...")
    p.add_argument("--nmc", type=int, default=None)
    p.add_argument("--ngauss", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default=None)
    p.add_argument("--config", default=None, help="key = value config file")
    p.add_argument("--quiet", action="store_true", help="suppress the summary lines")
    return p


def _extract_tol_flags(argv: list[str]) -> tuple[list[str], dict]:
    """Pull --tol.<check>=<value> tokens out of argv."""
    rest: list[str] = []
    tols: dict = {}
    for tok in argv:
        if tok.startswith("--tol."):
            body = tok[len("--tol."):]
            if "=" not in body:
                raise ValueError(f"expected --tol.<check>=<value>, got {tok!r}")
            check, val = body.split("=", 1)
            tols[check] = float(val)
        else:
            rest.append(tok)
    return rest, tols


def build_config(argv: list[str]) -> SuiteConfig:
    argv, tol_flags = _extract_tol_flags(argv)
    args = _build_parser().parse_args(argv)

    settings: dict = {}
    if args.config:
        settings.update(_read_config_file(args.config))
    tols = dict(settings.pop("tol", {}))
    tols.update(tol_flags)

    def pick(flag_val, key, conv, default):
        if flag_val is not None:
            return conv(flag_val) if isinstance(flag_val, str) else flag_val
        if key in settings:
            return conv(settings[key])
        return default

    return SuiteConfig(
        suite=pick(args.suite, "suite", str, "all"),
        lambdas=pick(args.lambdas, "lambda", _parse_floats, (0.5, 1.0, 2.0)),
        l_max=pick(args.lmax, "lmax", int, 10),
        r_grid=pick(args.rgrid, "rgrid", _parse_floats, (0.5, 0.9, 0.99)),
        t_grid=pick(args.tgrid, "tgrid", _parse_floats, (4.0, 8.0, 16.0, 32.0)),
        n_mc=pick(args.nmc, "nmc", int, 200_000),
        n_gauss=pick(args.ngauss, "ngauss", int, 200),
        seed=pick(args.seed, "seed", int, 0),
        tolerances=tols,
        out=pick(args.out, "out", str, None),
        fmt=pick(args.fmt, "format", str, "json"),
    )


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        config = build_config(argv)
    except SystemExit as exc:  # argparse errors carry code 2 already
        return 2 if exc.code not in (0, None) else 0
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2

    quiet = "--quiet" in argv
    report = run_suite(config)
    rendered = render_json(report) if config.fmt == "json" else render_csv(report)

    if config.out:
        try:
            with open(config.out, "w", encoding="utf-8") as fh:
                fh.write(rendered)
        except OSError as exc:
            print(f"i/o error: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(rendered)

    if not quiet:
        for line in summary_lines(report):
            print(line, file=sys.stderr)
    return 0 if report.overall_status == "pass" else 1


if __name__ == "__main__":
    raise SystemExit(main())
