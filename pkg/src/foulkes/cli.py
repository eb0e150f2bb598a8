"""Command-line interface.

Subcommands: core (alias blocks), foulkes, bounds, verify, chartab.
Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse
error, 3 resource cap exceeded.  Data goes to stdout; progress and
diagnostics go to stderr.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from . import bounds as bounds_mod
from . import chars, setparts, verify
from .abacus import block_label
from .errors import CacheCorrupt, CapExceeded, FoulkesError, LimitExceeded, ParseError
from .partitions import Partition, partitions_of
from .plethysm import foulkes_character, foulkes_multiplicity

ENV_CACHE_DIR = "FOULKES_CACHE_DIR"


@dataclass(frozen=True)
class Config:
    cache_dir: Path = Path.home() / ".cache" / "foulkes"
    enumeration_cap: int = 10**7
    group_cap: int = 4 * 10**6
    max_degree: int = 24
    output: str = "text"


def load_config(args):
    """Flags override the environment override the file override defaults."""
    config = Config()
    if args.config is not None:
        with open(args.config, "rb") as fh:
            data = tomllib.load(fh)
        fields = {}
        for key in ("enumeration_cap", "group_cap", "max_degree", "output"):
            if key in data:
                fields[key] = data[key]
        if "cache_dir" in data:
            fields["cache_dir"] = Path(data["cache_dir"]).expanduser()
        config = replace(config, **fields)
    env_cache = os.environ.get(ENV_CACHE_DIR)
    if env_cache:
        config = replace(config, cache_dir=Path(env_cache).expanduser())
    if args.cache_dir is not None:
        config = replace(config, cache_dir=Path(args.cache_dir).expanduser())
    for key in ("enumeration_cap", "group_cap", "max_degree"):
        value = getattr(args, key)
        if value is not None:
            config = replace(config, **{key: value})
    if args.json:
        config = replace(config, output="json")
    return config


def _progress(message):
    print(message, file=sys.stderr, flush=True)


def _emit(config, payload, text_lines):
    if config.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_core(args, config):
    lam = Partition.parse(args.lam)
    label = block_label(lam, args.p)
    _emit(
        config,
        label.to_json(),
        [f"core={label.core} w={label.weight} p={label.prime}"],
    )
    return 0


def cmd_foulkes(args, config):
    phi = foulkes_character(args.a, args.n, config.max_degree)
    if args.mode == "value":
        if args.cls is None:
            raise ParseError("foulkes value needs --class")
        rho = Partition.parse(args.cls)
        value = phi.value(rho)
        _emit(config, {"a": args.a, "n": args.n, "class": list(rho), "value": value},
              [str(value)])
        return 0
    if args.mode == "mult":
        if args.mu is None:
            raise ParseError("foulkes mult needs --mu")
        mu = Partition.parse(args.mu)
        mult = foulkes_multiplicity(phi, mu)
        _emit(config, {"a": args.a, "n": args.n, "mu": list(mu), "mult": mult},
              [str(mult)])
        return 0
    table = chars.character_table(
        args.a * args.n, config.cache_dir, config.max_degree, _progress
    )
    rows = [(mu, foulkes_multiplicity(phi, mu, table))
            for mu in partitions_of(args.a * args.n)]
    _emit(
        config,
        {"a": args.a, "n": args.n,
         "mults": [{"mu": list(mu), "mult": m} for mu, m in rows]},
        [f"{mu}\t{m}" for mu, m in rows],
    )
    return 0


def cmd_bounds(args, config):
    lam = Partition.parse(args.lam)
    report = bounds_mod.ttt1_report(
        args.a,
        args.n,
        args.p,
        lam,
        cache_dir=config.cache_dir,
        include_outside=args.include_outside,
        max_degree=config.max_degree,
        progress=_progress,
    )
    lines = [
        f"lambda={report.lam}  a={report.a} n={report.n} p={report.p}",
        f"block: {report.block}",
        "preconditions: "
        + "  ".join(f"{k}={'yes' if v else 'NO'}" for k, v in report.preconditions.items()),
    ]
    if report.preconditions_met:
        lines.append(f"{'mu':<24}{'status':<26}{'mult':<6}bound")
        for row in report.rows:
            lines.append(
                f"{str(row.mu):<24}{row.status:<26}"
                f"{'' if row.mult is None else row.mult:<6}"
                f"{'' if row.bound is None else row.bound}"
            )
    else:
        lines.append(
            "failed: " + ", ".join(report.failed_preconditions) + "; no rows"
        )
    _emit(config, report.to_json(), lines)
    return 0


def cmd_verify(args, config):
    if args.suite == "lemmas":
        _require(args, "a", "s", "p")
        report = setparts.verify_lemmas(
            args.a, args.s, args.p, args.n, config.enumeration_cap
        )
    elif args.suite == "normalizer":
        _require(args, "a", "s", "p")
        report = verify.normalizer_suite(args.a, args.s, args.p, config.group_cap)
    elif args.suite == "characters":
        report = verify.characters_suite(
            cache_dir=config.cache_dir,
            max_degree=config.max_degree,
            progress=_progress,
        )
    else:
        _require(args, "a", "n")
        report = verify.foulkes_oracle_suite(
            args.a,
            args.n,
            config.enumeration_cap,
            cache_dir=config.cache_dir,
            max_degree=config.max_degree,
        )
    lines = []
    for check in report.checks:
        lines.append(f"[{'PASS' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
    lines.append("suite " + ("PASSED" if report.passed else "FAILED"))
    _emit(config, report.to_json(), lines)
    return 0 if report.passed else 1


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ParseError(f"this suite needs --{name}")


def cmd_chartab(args, config):
    if args.action == "build":
        table = chars.character_table(
            args.n, config.cache_dir, config.max_degree, _progress
        )
        path = chars.cache_path(config.cache_dir, args.n)
        _emit(
            config,
            {"n": args.n, "path": str(path), "size": len(table.partitions)},
            [f"{path}: {len(table.partitions)} x {len(table.partitions)}"],
        )
        return 0
    path = chars.cache_path(config.cache_dir, args.n)
    if not path.exists():
        raise CacheCorrupt(f"{path}: no cache file to check")
    expected = partitions_of(args.n)
    values = chars._load_cache(path, args.n, expected)
    chars.CharacterTable(args.n, expected, values)
    report = verify.characters_suite(
        cache_dir=config.cache_dir,
        jt_max_n=0,
        orthogonality_max_n=0,
        big_n=args.n,
        max_degree=config.max_degree,
    )
    lines = [
        f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in report.checks
    ]
    _emit(config, report.to_json(), lines)
    return 0 if report.passed else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument("--config", help="TOML config file")
    common.add_argument("--cache-dir", dest="cache_dir")
    common.add_argument("--enumeration-cap", dest="enumeration_cap", type=int)
    common.add_argument("--group-cap", dest="group_cap", type=int)
    common.add_argument("--max-degree", dest="max_degree", type=int)

    parser = argparse.ArgumentParser(
        prog="foulkes",
        description="Exact Foulkes characters, p-blocks, and decomposition-matrix column bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    core = sub.add_parser("core", aliases=["blocks"], parents=[common],
                          help="p-core, weight and block label of a partition")
    core.add_argument("--lambda", dest="lam", required=True)
    core.add_argument("--p", type=int, required=True)
    core.set_defaults(func=cmd_core)

    foulkes = sub.add_parser("foulkes", parents=[common],
                             help="Foulkes character multiplicities and values")
    foulkes.add_argument("mode", choices=["mult", "value", "all"])
    foulkes.add_argument("--a", type=int, required=True)
    foulkes.add_argument("--n", type=int, required=True)
    foulkes.add_argument("--mu")
    foulkes.add_argument("--class", dest="cls")
    foulkes.set_defaults(func=cmd_foulkes)

    bounds = sub.add_parser("bounds", parents=[common],
                            help="decomposition-matrix column report")
    bounds.add_argument("--a", type=int, required=True)
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--p", type=int, required=True)
    bounds.add_argument("--lambda", dest="lam", required=True)
    bounds.add_argument("--include-outside", action="store_true",
                        help="also list partitions outside the block")
    bounds.set_defaults(func=cmd_bounds)

    ver = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ver.add_argument("suite", choices=["lemmas", "normalizer", "characters", "foulkes-oracle"])
    ver.add_argument("--a", type=int)
    ver.add_argument("--s", type=int)
    ver.add_argument("--p", type=int)
    ver.add_argument("--n", type=int)
    ver.set_defaults(func=cmd_verify)

    chartab = sub.add_parser("chartab", parents=[common],
                             help="build or check the character-table cache")
    chartab.add_argument("action", choices=["build", "check"])
    chartab.add_argument("--n", type=int, required=True)
    chartab.set_defaults(func=cmd_chartab)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args)
        return args.func(args, config)
    except (CapExceeded, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CacheCorrupt,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FoulkesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
