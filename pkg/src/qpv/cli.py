"""Command-line front end: ``qpv list | verify | verify-all | expand | enumerate``.

Truncation precedence, lowest first: entry default, QPV_TRUNC, config file, --trunc.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import catalog
from .errors import QPVError, UsageError
from .partitions import FamilyConstraint, enumerate_family, parse_family


@dataclass
class RunConfig:
    trunc: int | None = None
    workers: int = 1

    def update(self, pairs: dict) -> "RunConfig":
        for k, v in pairs.items():
            if k not in ("trunc", "workers"):
                raise UsageError(f"unknown config key {k!r}")
            try:
                setattr(self, k, int(v))
            except ValueError:
                raise UsageError(f"config value for {k} must be an integer, got {v!r}") from None
        return self


def read_config(path: str) -> dict:
    out = {}
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key=value")
        k, v = (s.strip() for s in line.split("=", 1))
        out[k] = v
    return out


def resolve_config(args) -> RunConfig:
    cfg = RunConfig()
    env = os.environ.get("QPV_TRUNC")
    if env:
        cfg.update({"trunc": env})
    if getattr(args, "config", None):
        cfg.update(read_config(args.config))
    if getattr(args, "trunc", None) is not None:
        cfg.trunc = args.trunc
    if getattr(args, "workers", None) is not None:
        cfg.workers = args.workers
    if cfg.trunc is not None and cfg.trunc < 0:
        raise UsageError("truncation must be non-negative")
    if cfg.workers < 1:
        raise UsageError("workers must be at least 1")
    return cfg


def parse_params(extra: list[str]) -> dict:
    """Turn leftover ``--name value`` / ``--name=value`` tokens into a dict of ints."""
    params = {}
    it = iter(extra)
    for tok in it:
        if not tok.startswith("--") or len(tok) < 3:
            raise UsageError(f"unexpected argument {tok!r}")
        name, eq, val = tok[2:].partition("=")
        if not eq:
            val = next(it, None)
            if val is None:
                raise UsageError(f"--{name} needs a value")
        try:
            params[name] = int(val)
        except ValueError:
            raise UsageError(f"--{name} must be an integer, got {val!r}") from None
    return params


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qpv", description="Exact q-series identity checker.")
    p.add_argument("--config", help="key=value file (trunc, workers)")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--trunc", type=int)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--config", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    sub.add_parser("list", parents=[common], help="show catalog entries")

    v = sub.add_parser("verify", parents=[common], help="check one identity")
    v.add_argument("identity")
    v.add_argument("--timing", action="store_true")

    va = sub.add_parser("verify-all", parents=[common], help="check the whole catalog")
    va.add_argument("--workers", type=int)
    va.add_argument("--timing", action="store_true")

    e = sub.add_parser("expand", parents=[common], help="print one series")
    e.add_argument("expression")

    en = sub.add_parser("enumerate", parents=[common], help="list family members")
    en.add_argument("--family", required=True)
    en.add_argument("--max-part", type=int)
    en.add_argument("--max-norm", type=int, required=True)
    return p


def _cmd_list(args, cfg) -> int:
    entries = catalog.list_identities()
    if args.format == "json":
        rows = [{"identity": e.id, "description": e.description, "anchor": e.anchor, "exact": e.exact,
                 "params": {p.name: {"default": p.default, "range": [p.lo, p.hi]} for p in e.params}}
                for e in entries]
        print(json.dumps(rows, indent=1))
        return 0
    for e in entries:
        ps = " ".join(f"{p.name}={p.default}[{p.lo}..{p.hi}]" for p in e.params)
        print(f"{e.id:<24} {e.description}" + (f"  ({ps})" if ps else ""))
    return 0


def _emit(reports, fmt: str):
    if fmt == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=1))
    else:
        for r in reports:
            print(r.to_text())
        bad = sum(r.status != "verified" for r in reports)
        print(f"{len(reports) - bad}/{len(reports)} verified")


def _cmd_verify(args, cfg, params) -> int:
    rep = catalog.verify(args.identity, params, cfg.trunc, timing=args.timing)
    if args.format == "json":
        print(rep.to_json())
    else:
        print(rep.to_text())
    return 0 if rep.status == "verified" else 1


def _cmd_verify_all(args, cfg) -> int:
    reports = catalog.verify_all(cfg.trunc, workers=cfg.workers, timing=args.timing)
    _emit(reports, args.format)
    return 0 if all(r.status == "verified" for r in reports) else 1


def _cmd_expand(args, cfg, params) -> int:
    D = catalog.DEFAULT_TRUNC if cfg.trunc is None else cfg.trunc
    print(catalog.expand(args.expression, params, D, args.format))
    return 0


def _cmd_enumerate(args, cfg) -> int:
    fam = parse_family(args.family)
    members = enumerate_family(FamilyConstraint(fam, args.max_norm, args.max_part))
    if args.format == "json":
        print(json.dumps({"family": str(fam), "max_norm": args.max_norm, "max_part": args.max_part,
                          "count": len(members), "partitions": [list(m.parts) for m in members]}))
    else:
        for m in members:
            print(m)
        print(f"# {len(members)} partitions")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args, extra = build_parser().parse_known_args(argv)
        params = parse_params(extra)
        if params and args.cmd not in ("verify", "expand"):
            raise UsageError(f"unrecognised arguments: {' '.join(extra)}")
        cfg = resolve_config(args)
        if args.cmd == "list":
            return _cmd_list(args, cfg)
        if args.cmd == "verify":
            return _cmd_verify(args, cfg, params)
        if args.cmd == "verify-all":
            return _cmd_verify_all(args, cfg)
        if args.cmd == "expand":
            return _cmd_expand(args, cfg, params)
        return _cmd_enumerate(args, cfg)
    except UsageError as exc:
        print(f"qpv: {exc}", file=sys.stderr)
        return 2
    except QPVError as exc:
        # bad family text, negative bounds and the like are still usage problems
        print(f"qpv: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
