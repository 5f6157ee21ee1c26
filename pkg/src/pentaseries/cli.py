"""Command-line driver.

    pentaseries expand    --method {product|method1|method2|closed|all} --order N [--format text|json]
    pentaseries partition --upto N | --n N [--format text|json]
    pentaseries verify    --depth D --order N [--roots M]
    pentaseries bench     --sizes 2000,4000,8000 [--format csv|json]

Exit codes: 0 success (all checks pass), 1 mathematical mismatch, 2 usage or
precondition error.  JSON is emitted canonically (fixed key order, no spaces,
coefficients as decimal strings), so re-serializing a parsed payload gives
back the same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bench import records_to_csv, records_to_json_objs, run_bench
from .partitions import iterated_division_check, partition_count, partition_values
from .pentagonal import closed_form_series
from .roots import root_multiplicity
from .series import TruncatedSeries, partial_product, series_to_json
from .telescoping import stage_emissions, stream_series, verify_stage

_EXPAND_ORDER = ("product", "method1", "method2", "closed")


@dataclass(frozen=True)
class RunConfig:
    command: str
    order: int = 0
    method: str = "closed"
    fmt: str = "text"
    depth: int = 1
    roots: int = 10
    sizes: tuple[int, ...] = ()
    single: bool = False


def canonical_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def format_series(s: TruncatedSeries) -> str:
    """Human form: zero terms omitted, explicit sign separators,
    e.g. "1 - x - x^2 + x^5"."""
    parts: list[str] = []
    for e, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "x" if e == 1 else f"x^{e}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def _build_series(method: str, order: int) -> TruncatedSeries:
    if method == "product":
        return partial_product(order, order)
    if method == "closed":
        return closed_form_series(order)
    return stream_series(method, order)


def cmd_expand(cfg: RunConfig) -> int:
    if cfg.method != "all":
        s = _build_series(cfg.method, cfg.order)
        if cfg.fmt == "json":
            print(canonical_json(series_to_json(s)))
        else:
            print(format_series(s))
        return 0

    results = {name: _build_series(name, cfg.order) for name in _EXPAND_ORDER}
    reference = results["product"]
    verdicts = {name: results[name] == reference for name in _EXPAND_ORDER[1:]}
    all_agree = all(verdicts.values())
    if cfg.fmt == "json":
        payload = series_to_json(reference)
        payload["agree"] = verdicts
        print(canonical_json(payload))
    else:
        print(format_series(reference))
        for name, ok in verdicts.items():
            print(f"{name}: {'agree' if ok else 'MISMATCH'}")
        print("4 methods agree" if all_agree else "methods disagree")
    return 0 if all_agree else 1


def cmd_partition(cfg: RunConfig) -> int:
    if cfg.single:
        p = partition_count(cfg.order)
        if cfg.fmt == "json":
            print(canonical_json({"n": cfg.order, "p": str(p)}))
        else:
            print(p)
        return 0
    values = partition_values(cfg.order)
    if cfg.fmt == "json":
        print(canonical_json({"upto": cfg.order, "p": [str(v) for v in values]}))
    else:
        print(" ".join(str(v) for v in values))
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    for method in ("method1", "method2"):
        # mirror verify_stage's requirement: method 2's identity for stage m
        # involves the emissions of stage m+1
        identity_stage = cfg.depth if method == "method1" else cfg.depth + 1
        needed = stage_emissions(method, identity_stage)[1]
        if cfg.order < needed:
            print(
                f"order below stage emissions: stage {cfg.depth} ({method}) "
                f"needs exponent {needed}, got order {cfg.order}",
                file=sys.stderr,
            )
            return 2

    failures = 0
    for method in ("method1", "method2"):
        for m in range(1, cfg.depth + 1):
            ok = verify_stage(method, m, cfg.order)
            failures += not ok
            print(f"stage {method} m={m}: {'pass' if ok else 'FAIL'}")
    ok = iterated_division_check(cfg.depth, cfg.order)
    failures += not ok
    print(f"division depth={cfg.depth}: {'pass' if ok else 'FAIL'}")
    for d in range(1, cfg.roots + 1):
        expected = cfg.roots // d
        measured = root_multiplicity(cfg.roots, d)
        ok = measured == expected
        failures += not ok
        print(f"root d={d} expected={expected} measured={measured} {'match' if ok else 'MISMATCH'}")
    print("all checks passed" if not failures else f"{failures} check(s) failed")
    return 0 if not failures else 1


def cmd_bench(cfg: RunConfig) -> int:
    records = run_bench(list(cfg.sizes))
    if cfg.fmt == "json":
        print(canonical_json(records_to_json_objs(records)))
    else:
        print(records_to_csv(records))
    return 0


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _size_list(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not sizes or any(s < 0 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be non-negative")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise argparse.ArgumentTypeError("sizes must be strictly increasing")
    return sizes


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentaseries",
        description="Expand (1-x)(1-x^2)(1-x^3)... exactly, by several methods that check each other.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="compute the expansion to a given order")
    p_expand.add_argument("--method", required=True, choices=_EXPAND_ORDER + ("all",))
    p_expand.add_argument("--order", required=True, type=_nonneg)
    p_expand.add_argument("--format", default="text", choices=("text", "json"))

    p_part = sub.add_parser("partition", help="partition counts from the expansion")
    which = p_part.add_mutually_exclusive_group(required=True)
    which.add_argument("--upto", type=_nonneg, help="print p(0)..p(N)")
    which.add_argument("--n", type=_nonneg, help="print p(N) only")
    p_part.add_argument("--format", default="text", choices=("text", "json"))

    p_verify = sub.add_parser("verify", help="stage identities, iterated division, root multiplicities")
    p_verify.add_argument("--depth", required=True, type=_positive)
    p_verify.add_argument("--order", required=True, type=_nonneg)
    p_verify.add_argument("--roots", default=10, type=_positive)

    p_bench = sub.add_parser("bench", help="time the product and partition routes")
    p_bench.add_argument("--sizes", required=True, type=_size_list)
    p_bench.add_argument("--format", default="csv", choices=("csv", "json"))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if ns.command == "expand":
        cfg = RunConfig("expand", order=ns.order, method=ns.method, fmt=ns.format)
        return cmd_expand(cfg)
    if ns.command == "partition":
        single = ns.n is not None
        cfg = RunConfig(
            "partition",
            order=ns.n if single else ns.upto,
            fmt=ns.format,
            single=single,
        )
        return cmd_partition(cfg)
    if ns.command == "verify":
        cfg = RunConfig("verify", order=ns.order, depth=ns.depth, roots=ns.roots)
        return cmd_verify(cfg)
    cfg = RunConfig("bench", sizes=ns.sizes, fmt=ns.format)
    return cmd_bench(cfg)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
