"""Command-line interface: ``ubp <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__, cache, verify
from .diagrams import UniformBlockPermutation, enumerate_U, multiply
from .order import PartitionPoset, hasse, interval
from .partitions import IntegerPartition
from .repdims import report as dims_report
from .repdims import report_csv
from .submonoids import (
    all_submonoids,
    count_submonoids,
    lattice_to_dot,
    lattice_to_json,
)

ENUMERATION_LIMIT = 7
LIST_LIMIT = 10


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> IntegerPartition:
    try:
        return IntegerPartition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _poset_text(poset: PartitionPoset, fmt: str) -> str:
    return poset.to_dot() if fmt == "dot" else poset.dumps()


def cmd_enumerate(args) -> int:
    k = args.k
    if k < 0:
        raise UsageError("k must be nonnegative")
    if args.type is not None and args.type.k != k:
        raise UsageError(f"type {args.type} is not a partition of {k}")
    if args.count_only:
        if k > ENUMERATION_LIMIT and not args.force:
            raise UsageError(f"counting by enumeration above k = {ENUMERATION_LIMIT} needs --force")
        print(sum(1 for _ in enumerate_U(k, args.type)))
        return 0
    if k > ENUMERATION_LIMIT and not args.force:
        raise UsageError(f"refusing to list U_{k}; pass --force to override")
    lines = [x.dumps() + "\n" for x in enumerate_U(k, args.type)]
    _emit("".join(lines), args.out)
    return 0


def _parse_element(text: str, k: int) -> UniformBlockPermutation:
    if os.path.isfile(text):
        text = Path(text).read_text(encoding="utf-8")
    try:
        x = UniformBlockPermutation.from_json(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse element JSON: {exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if x.k != k:
        raise UsageError(f"element has k = {x.k}, expected {k}")
    return x


def cmd_multiply(args) -> int:
    x = _parse_element(args.lhs, args.k)
    y = _parse_element(args.rhs, args.k)
    _emit(multiply(x, y).dumps() + "\n", args.out)
    return 0


def cmd_poset(args) -> int:
    if args.k < 2:
        raise UsageError("poset needs k >= 2")
    payload = cache.cached(
        "hasse", args.k, lambda: hasse(args.k, threads=args.threads).to_json(), enabled=not args.no_cache
    )
    _emit(_poset_text(PartitionPoset.from_json(payload), args.format), args.out)
    return 0


def cmd_interval(args) -> int:
    for p in (args.bottom, args.top):
        if p.k != args.k:
            raise UsageError(f"{p} is not a partition of {args.k}")
    try:
        iv = interval(args.bottom, args.top)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(_poset_text(iv, args.format), args.out)
    return 0


def cmd_submonoids(args) -> int:
    k = args.k
    if k < 1:
        raise UsageError("k must be positive")
    if args.count or not args.list:
        payload = cache.cached("counts", k, lambda: {"k": k, "n_k": count_submonoids(k)}, enabled=not args.no_cache)
        if args.format == "json":
            _emit(json.dumps(payload) + "\n", args.out)
        else:
            _emit(f"{payload['n_k']}\n", args.out)
        return 0
    if k > LIST_LIMIT:
        raise UsageError(f"listing is limited to k <= {LIST_LIMIT}")
    if args.format == "dot":
        _emit(lattice_to_dot(all_submonoids(k)), args.out)
        return 0
    payload = cache.cached(
        "submonoid-lattice", k, lambda: lattice_to_json(all_submonoids(k)), enabled=not args.no_cache
    )
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", args.out)
    else:
        rows = [f"{s['label']}\t{s['size']}" for s in payload["submonoids"]]
        _emit("\n".join(rows) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        result = verify.report(args.k, args.suite, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(json.dumps(result, indent=2) + "\n", args.out)
    return 0 if result["passed"] else 1


def cmd_dims(args) -> int:
    if args.format == "csv":
        _emit(report_csv(args.k), args.out)
    else:
        _emit(json.dumps({"k": args.k, "rows": dims_report(args.k)}, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ubp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, required=True)
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--no-cache", action="store_true", help=f"ignore ${cache.ENV_VAR}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list or count elements of U_k")
    p.add_argument("--type", type=_partition_arg, help="restrict to one J-class, e.g. 2,1,1")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--force", action="store_true", help=f"allow k > {ENUMERATION_LIMIT}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("multiply", parents=[common], help="product of two elements given as JSON")
    p.add_argument("--lhs", required=True, help="element JSON or a file containing it")
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("poset", parents=[common], help="Hasse diagram of the partition order")
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("interval", parents=[common], help="an interval of the partition order")
    p.add_argument("--bottom", type=_partition_arg, required=True)
    p.add_argument("--top", type=_partition_arg, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("submonoids", parents=[common], help="count or list submonoids containing S_k")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_submonoids)

    p = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    p.add_argument("--suite", default="all", help="one of: " + ", ".join(verify.SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dims", parents=[common], help="irreducible dimensions and J-class sizes")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_dims)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ubp {args.command}: error: {exc}", file=sys.stderr)
        return 2
