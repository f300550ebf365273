"""Command-line front end: ``verify`` runs suites, ``cayley`` exports product tables.

Exit status: 0 when every check passes, 1 on any failure, 2 when the only
non-passing outcomes are inconclusive, 3 on usage or configuration errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, field, fields

import yaml

from .errors import MonoidError, UsageError
from .extensions import cayley_window
from .recipes import CONSTRUCTIONS, build_semigroup
from .topology import KINDS
from .verify import CHECKS, CheckSpec, Suite, builtin_suite, builtin_suites, run_suites

USAGE_EXIT = 3
DEFAULT_INFINITE_GBOUND = 2


@dataclass
class RunConfig:
    construction: str | None = None
    carrier: object = None
    theta: object = None
    u: object = None
    window: tuple = (-1, 1)
    gbound: int | None = None
    topology: str | None = None
    schedule: int | None = None
    suite: str | None = None
    checks: list = field(default_factory=list)
    format: str = "text"
    out: str | None = None
    cap: int = 10**6

    def to_dict(self):
        d = asdict(self)
        d["window"] = list(self.window)
        return d

    def to_yaml(self):
        return yaml.safe_dump(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, d, source="config"):
        if not isinstance(d, dict):
            raise UsageError(f"{source}: top level must be a mapping")
        known = {f.name for f in fields(cls)}
        for k in d:
            if k not in known:
                raise UsageError(f"{source}: unknown field {k!r}")
        d = dict(d)
        if "window" in d:
            w = d["window"]
            if not (isinstance(w, (list, tuple)) and len(w) == 2 and all(isinstance(v, int) for v in w)):
                raise UsageError(f"{source}: field 'window' must be two integers [lo, hi]")
            d["window"] = tuple(w)
        for k in ("gbound", "schedule", "cap"):
            if d.get(k) is not None and not isinstance(d[k], int):
                raise UsageError(f"{source}: field {k!r} must be an integer")
        if d.get("checks") is None:
            d["checks"] = []
        return cls(**d)

    @classmethod
    def from_yaml(cls, text, source="config"):
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None)
            where = f" line {mark.line + 1}, column {mark.column + 1}" if mark else ""
            raise UsageError(f"{source}:{where} {getattr(exc, 'problem', exc)}") from None
        return cls.from_dict(data or {}, source)

    def validate(self):
        """Reject bad combinations before anything runs; returns the semigroup or None."""
        lo, hi = self.window
        if lo > hi:
            raise UsageError(f"window [{lo}, {hi}] is empty")
        if self.format not in ("text", "machine"):
            raise UsageError(f"format must be text or machine, not {self.format!r}")
        if self.topology is not None and self.topology not in KINDS:
            raise UsageError(f"unknown topology kind {self.topology!r}")
        for c in self.checks:
            if c not in CHECKS:
                raise UsageError(f"unknown check kind {c!r}")
        if self.suite is not None and self.construction is not None:
            raise UsageError("choose either --suite or a construction, not both")
        if self.suite is not None:
            names = {s.name for s in builtin_suites()}
            for n in self.suite.split(","):
                if n != "all" and n not in names:
                    raise UsageError(f"unknown suite {n!r}")
            return None
        if self.construction is None:
            return None
        if self.construction not in CONSTRUCTIONS:
            raise UsageError(f"unknown construction {self.construction!r}")
        try:
            sg = build_semigroup(self.construction, self.carrier, self.theta, self.u)
        except MonoidError as exc:
            raise UsageError(f"carrier: {exc}") from None
        if self.gbound is None and sg.carrier is not None and not getattr(sg.carrier, "is_finite", True):
            self.gbound = DEFAULT_INFINITE_GBOUND
        return sg


def custom_suite(cfg: RunConfig, sg):
    """The suite run for an explicit construction."""
    if cfg.checks:
        kinds = list(cfg.checks)
    else:
        kinds = ["associativity", "vector-scalar-agreement", "idempotents", "simple"]
        if cfg.construction == "warne":
            kinds += ["f-zero-identity", "branch-agreement"]
        else:
            kinds += ["inverse-transfer", "regular-transfer"]
        if cfg.topology is not None:
            kinds += ["hausdorff", "separate-continuity", "nbhd-lowerset"]
    specs = []
    for k in kinds:
        params = {"topology": cfg.topology} if cfg.topology is not None else {}
        if k == "simple":
            params["samples"] = 50
        specs.append(CheckSpec(k, params))
    return Suite("custom", cfg.construction, cfg.carrier, cfg.theta, cfg.u,
                 tuple(cfg.window), cfg.gbound, cfg.schedule, specs)


def select_suites(cfg: RunConfig, sg):
    if cfg.construction is not None:
        return [custom_suite(cfg, sg)]
    names = (cfg.suite or "all").split(",")
    if "all" in names:
        return builtin_suites()
    return [builtin_suite(n) for n in names]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p):
    p.add_argument("--config", help="YAML file with RunConfig fields; flags override it")
    p.add_argument("--construction", choices=CONSTRUCTIONS)
    p.add_argument("--carrier")
    p.add_argument("--theta")
    p.add_argument("--u", help="nontrivial u entries as n:g pairs, comma separated")
    p.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--gbound", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("text", "machine"))


def build_parser():
    parser = _Parser(prog="bruckreilly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", help="run builtin suites or checks on a construction")
    _add_common(v)
    v.add_argument("--topology", choices=KINDS)
    v.add_argument("--schedule", type=int)
    v.add_argument("--suite", help="builtin suite name, comma list, or 'all'")
    v.add_argument("--check", action="append", dest="checks", help="check kind (repeatable)")
    c = sub.add_parser("cayley", help="export the product table of a window")
    _add_common(c)
    c.add_argument("--cap", type=int, help="largest number of products to emit")
    return parser


def load_config(args):
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = RunConfig.from_yaml(fh.read(), args.config)
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    else:
        cfg = RunConfig()
    for k in ("construction", "carrier", "theta", "u", "gbound", "topology", "schedule",
              "suite", "checks", "format", "out", "cap"):
        val = getattr(args, k, None)
        if val is not None:
            setattr(cfg, k, val)
    if args.window is not None:
        cfg.window = tuple(args.window)
    return cfg


def _emit(text, cfg, stdout):
    if text:
        stdout.write(text + "\n")
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n" if text else "")


def cmd_verify(cfg: RunConfig, stdout=sys.stdout):
    sg = cfg.validate()
    report = run_suites(select_suites(cfg, sg))
    _emit(report.machine() if cfg.format == "machine" else report.text(), cfg, stdout)
    return report.exit_code()


def cmd_cayley(cfg: RunConfig, stdout=sys.stdout):
    if cfg.construction is None:
        raise UsageError("cayley needs a construction")
    sg = cfg.validate()
    lo, hi = cfg.window
    lines = cayley_window(sg, lo, hi, cfg.gbound, cap=cfg.cap)
    _emit("\n".join(lines), cfg, stdout)
    return 0


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = load_config(args)
        if args.command == "verify":
            return cmd_verify(cfg, stdout)
        return cmd_cayley(cfg, stdout)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
