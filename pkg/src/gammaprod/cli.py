"""Command line: ``gammaprod verify|eval|converge``.

Exit codes: 0 when every row passes, 1 when any row fails, 2 for usage
or configuration errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import reports
from .errors import GammaprodError

SUITE_NAMES = tuple(reports.SUITES) + ("all",)
EVAL_TARGETS = ("product", "gamma", "energy", "ratio", "uncertainty", "brouncker", "reflection")
CONVERGE_KINDS = ("product", "ratio", "cf")
TOL_ENV = "GAMMAPROD_TOL"

# flag name -> config key
_GRID_FLAGS = {
    "b": "b", "a": "a", "n_dim": "N", "ell": "ell", "s": "s", "n": "n",
    "k": "k", "depth": "depth", "z": "z", "alpha": "alpha",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p):
    p.add_argument("--b", help="exponent / step b (comma list for grids)")
    p.add_argument("--a", help="offset a")
    p.add_argument("--n-dim", dest="n_dim", help="spatial dimension N")
    p.add_argument("--ell", help="angular momentum ell")
    p.add_argument("--s", help="continued-fraction argument s")
    p.add_argument("--n", help="depth n of sin(pi/2^n)")
    p.add_argument("--k", help="truncation indices, comma separated")
    p.add_argument("--depth", help="continued-fraction depths, comma separated")
    p.add_argument("--z", help="gamma argument z")
    p.add_argument("--alpha", help="trial exponent scale alpha")
    p.add_argument("--tol", type=float, help=f"tolerance (default from ${TOL_ENV} or per operation)")
    p.add_argument("--format", dest="fmt", choices=("csv", "json", "table"), help="output format")
    p.add_argument("--out", help="write output to PATH instead of stdout")
    p.add_argument("--config", help="flat key = value sweep file; flags override it")


def build_parser():
    parser = _Parser(prog="gammaprod", description="Gamma-product identities and their numerical checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    _common(v)
    e = sub.add_parser("eval", help="evaluate one quantity against an independent route")
    e.add_argument("target", choices=EVAL_TARGETS)
    _common(e)
    c = sub.add_parser("converge", help="print a convergence table")
    c.add_argument("kind", choices=CONVERGE_KINDS)
    _common(c)
    return parser


def make_config(args, environ=os.environ):
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = reports.read_config(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from exc
    else:
        cfg = reports.SweepConfig()
    for flag, key in _GRID_FLAGS.items():
        raw = getattr(args, flag)
        if raw is not None:
            try:
                cfg.grids[key] = reports.parse_list(raw)
            except ValueError as exc:
                raise UsageError(f"--{flag.replace('_', '-')}: {exc}") from exc
            if not cfg.grids[key]:
                raise UsageError(f"--{flag.replace('_', '-')} is empty")
    if args.tol is not None:
        cfg.tol = args.tol
    elif cfg.tol is None and environ.get(TOL_ENV):
        try:
            cfg.tol = float(environ[TOL_ENV])
        except ValueError as exc:
            raise UsageError(f"${TOL_ENV}: {exc}") from exc
    if args.fmt is not None:
        cfg.fmt = args.fmt
    if args.out is not None:
        cfg.out = args.out
    if cfg.fmt not in ("csv", "json", "table"):
        raise UsageError(f"unknown format {cfg.fmt!r}")
    return cfg


def _emit(text, cfg, stdout):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = make_config(args)
        if args.command == "verify":
            rows = reports.run_suite(args.suite, cfg)
            _emit(reports.render(rows, cfg.fmt), cfg, stdout)
            return 0 if all(r.passed for r in rows) else 1
        if args.command == "eval":
            row = reports.eval_row(args.target, cfg)
            _emit(reports.render([row], cfg.fmt), cfg, stdout)
            return 0 if row.passed else 1
        table = reports.converge_table(args.kind, cfg)
        _emit(reports.render(table, cfg.fmt, reports.CONVERGE_COLUMNS), cfg, stdout)
        return 0
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (GammaprodError, ValueError, OverflowError, ZeroDivisionError) as exc:
        print(f"gammaprod: {exc}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
