"""Command-line interface.

Subcommands: analyze, design-check, search, verify-identities,
golay-uniqueness.  Reports go to stdout as JSON (or CSV for search).
Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import amcore, search
from .designs import BlockDesign, delta_s, is_t_design_direct
from .errors import CapacityError, ParseError
from .gf2 import BinaryCode

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _jsonable(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(payload: dict) -> None:
    json.dump(_jsonable(payload), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def analysis_report(code: BinaryCode, cap: int | None = None, max_t: int | None = None) -> dict:
    """Full pipeline: parameters, applicability, strengths, certification."""
    counts = code.weight_distribution(cap)
    status = amcore.am_applicability(code, cap)
    report = delta_s(code, cap, max_t=max_t)
    cert = search.certify_with_code(code, cap) if status.t_equality is not None else None
    payload = {
        "n": code.n,
        "k": code.k,
        "d": code.minimum_distance(cap),
        "d_perp": status.d_perp,
        "weight_distribution": {w: c for w, c in enumerate(counts) if c},
        "contains_all_ones": code.contains_all_ones,
        "t_inequality": status.t_inequality,
        "t_equality": status.t_equality,
        "gap": status.gap,
        "case": status.case_label,
        "strengths": report.strengths,
        "delta": report.delta,
        "s": report.s,
        "aggregated_weights": list(report.aggregated_weights),
        "aggregation_excludes_full_weight": True,
    }
    if cert is not None:
        payload["certified_extra_weights"] = list(cert.predicted_weights)
        payload["certification_consistent"] = cert.all_consistent
        payload["dual_delta"] = cert.dual_delta
        payload["dual_s"] = cert.dual_s
    return payload


def _cmd_analyze(args) -> int:
    code = BinaryCode.from_file(args.path)
    _emit(analysis_report(code, cap=args.cap, max_t=args.max_t))
    return EXIT_OK


def _cmd_design_check(args) -> int:
    design = BlockDesign.from_file(args.path)
    check = is_t_design_direct(design, args.t)
    payload = {
        "v": design.v,
        "blocks": design.num_blocks,
        "block_size": design.block_size,
        "t": args.t,
        "is_design": check.is_design,
        "lambda": check.lam,
    }
    if check.witness:
        (sub_a, count_a), (sub_b, count_b) = check.witness
        payload["witness"] = {
            "subset_a": list(sub_a),
            "count_a": count_a,
            "subset_b": list(sub_b),
            "count_b": count_b,
        }
    _emit(payload)
    return EXIT_OK if check.is_design else EXIT_CHECK_FAILED


def _records_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "d", "weights", "provenance"])
    for rec in records:
        writer.writerow(
            [rec.n, rec.d, ",".join(map(str, rec.weights)), ";".join(rec.provenance)]
        )
    return buf.getvalue()


def read_golden_csv(path) -> set[tuple[int, int, tuple[int, ...]]]:
    """Golden table rows as (n, d, weights) triples."""
    with open(path, newline="", encoding="ascii") as fh:
        rows = list(csv.DictReader(fh))
    return {
        (int(r["n"]), int(r["d"]), tuple(int(x) for x in r["weights"].split(",")))
        for r in rows
    }


def _cmd_search(args) -> int:
    try:
        d_perp, t = (int(x) for x in args.case.split(","))
    except ValueError:
        raise ParseError(f"bad case {args.case!r}; expected like '4,1'") from None
    case = (d_perp, t)
    if case == search.CASE_41:
        records = search.reproduce_table_b(args.max_n)
    elif case == search.CASE_63:
        records = search.search_case_63(args.max_n)
    else:
        raise ParseError(f"unsupported case {args.case!r}; use 4,1 or 6,3")
    if args.format == "csv":
        sys.stdout.write(_records_csv(records))
    else:
        _emit(
            {
                "case": list(case),
                "max_n": args.max_n,
                "count": len(records),
                "records": [
                    {
                        "n": r.n,
                        "d": r.d,
                        "weights": list(r.weights),
                        "provenance": list(r.provenance),
                    }
                    for r in records
                ],
            }
        )
    if args.golden:
        got = {(r.n, r.d, r.weights) for r in records}
        want = {row for row in read_golden_csv(args.golden) if row[0] <= args.max_n}
        if got != want:
            missing = sorted(want - got)
            extra = sorted(got - want)
            sys.stderr.write(f"golden mismatch: missing={missing} extra={extra}\n")
            return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_verify_identities(args) -> int:
    report = amcore.verify_det_identities()
    _emit(
        {
            "checks": [
                {
                    "name": c.name,
                    "ok": c.ok,
                    "scale": c.scale,
                    "difference_is_zero": c.difference.is_zero(),
                    "spot_checks_ok": c.spot_checks_ok,
                }
                for c in report.checks
            ],
            "all_ok": report.all_ok,
        }
    )
    return EXIT_OK if report.all_ok else EXIT_CHECK_FAILED


def _cmd_golay_uniqueness(args) -> int:
    cert = search.golay_uniqueness()
    _emit(
        {
            "trials": [
                {"m": t.m, "n": _jsonable(t.n), "status": t.status} for t in cert.trials
            ],
            "survivors": list(cert.survivors),
            "is_singleton": cert.is_singleton,
        }
    )
    expected = {"n": 24, "d": 8, "alpha": 759, "beta": 2576, "k": 12, "code_size": 4096}
    ok = cert.is_singleton and cert.survivors[0] == expected
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amdesigns",
        description="Binary codes, support designs, and the equality-form "
        "applicability toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a generator-matrix file")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap override (log2)")
    p.add_argument("--max-t", type=int, default=None, help="cap the strength search")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("design-check", help="t-design verdict for a block file")
    p.add_argument("path")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_design_check)

    p = sub.add_parser("search", help="scan parameters certifying promoted dual weights")
    p.add_argument("--case", required=True, help="'4,1' or '6,3'")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--golden", default=None, help="CSV of expected rows to diff against")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify-identities", help="check the determinant factorizations")
    p.set_defaults(func=_cmd_verify_identities)

    p = sub.add_parser("golay-uniqueness", help="enumerate the dual-distance-8 parameter sets")
    p.set_defaults(func=_cmd_golay_uniqueness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, IsADirectoryError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except CapacityError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
