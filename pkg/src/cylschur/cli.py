"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage/config error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import sys

from .fusion import fusion_product, reduce_schur, verify_pieri
from .partitions import CylProfile, SkewShape, contains, make_profile
from .schur import cylindric_schur
from .serialize import (
    dumps,
    fusion_payload,
    parse_partition_arg,
    vector_payload,
)
from .tableaux import count_cyl_tableaux, make_weight
from .verify import (
    TSV_COLUMNS,
    ScanConfig,
    scan,
    export_fusion_table,
    verify_proposition1,
    verify_pieri_report,
    verify_theorem1,
)


def _add_profile_args(sp):
    sp.add_argument("--rank", type=int, required=True, help="rank N (>= 1)")
    sp.add_argument("--level", type=int, required=True, help="level L (>= 1)")


def _profile(args) -> CylProfile:
    return make_profile(args.rank, args.level)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylschur",
        description="Cylindric Schur functions, fusion coefficients, and "
                    "exhaustive identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("kcyl", help="cylindric tableau count for a shape and weight")
    _add_profile_args(sp)
    sp.add_argument("--lam", required=True, help="outer partition, e.g. 5,4")
    sp.add_argument("--mu", default="", help="inner partition (default empty)")
    sp.add_argument("--alpha", required=True, help="weight, e.g. 1,1,1")

    sp = sub.add_parser("scyl", help="monomial expansion of a cylindric Schur function")
    _add_profile_args(sp)
    sp.add_argument("--lam", required=True)
    sp.add_argument("--mu", default="")

    sp = sub.add_parser("fusion", help="fusion product of two basis classes")
    _add_profile_args(sp)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nu", required=True)

    sp = sub.add_parser("reduce", help="expand a Schur class in the bounded basis")
    _add_profile_args(sp)
    sp.add_argument("--lam", required=True)

    for name, helptext in (
        ("verify-theorem", "check the skew expansion identity for one shape"),
        ("verify-prop", "check the coefficient identity for one instance"),
        ("verify-pieri", "check the Pieri rule for one (eta, k)"),
    ):
        sp = sub.add_parser(name, help=helptext)
        _add_profile_args(sp)
        if name == "verify-pieri":
            sp.add_argument("--eta", required=True)
            sp.add_argument("--k", type=int, required=True)
        else:
            sp.add_argument("--lam", required=True)
            sp.add_argument("--mu", default="")
        if name == "verify-prop":
            sp.add_argument("--alpha", required=True)
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.add_argument("--verbose", action="store_true",
                        help="include lhs/rhs payloads even on pass")

    sp = sub.add_parser("scan", help="run all identity checks over a grid")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--l-max", type=int, required=True)
    sp.add_argument("--deg-max", type=int, required=True)
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    sp.add_argument("--format", choices=("json", "tsv"), default="json")
    sp.add_argument("--jobs", type=int, default=1,
                    help="parallel workers (0 = auto, 1 = sequential)")
    sp.add_argument("--verbose", action="store_true")

    sp = sub.add_parser("export-table", help="write nonzero structure constants as JSON lines")
    _add_profile_args(sp)
    sp.add_argument("--deg-max", type=int, required=True)
    sp.add_argument("--out", required=True)

    return parser


def _emit_report(report, fmt: str, verbose: bool, fh) -> None:
    if fmt == "json":
        fh.write(dumps(report.to_record(verbose)) + "\n")
    else:
        fh.write(report.to_tsv(verbose) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "kcyl":
        p = _profile(args)
        shape = SkewShape(parse_partition_arg(args.lam), parse_partition_arg(args.mu))
        alpha = make_weight(int(x) for x in args.alpha.split(",")) if args.alpha.strip() else ()
        print(count_cyl_tableaux(p, shape, alpha))
        return 0

    if cmd == "scyl":
        p = _profile(args)
        shape = SkewShape(parse_partition_arg(args.lam), parse_partition_arg(args.mu))
        if not contains(shape.outer, shape.inner):
            raise ValueError(f"inner must be contained in outer: {shape.outer}/{shape.inner}")
        print(dumps(vector_payload(shape.size(), cylindric_schur(p, shape))))
        return 0

    if cmd == "fusion":
        p = _profile(args)
        mu = parse_partition_arg(args.mu)
        nu = parse_partition_arg(args.nu)
        coeffs = fusion_product(p, mu, nu)
        print(dumps(fusion_payload(p, sum(mu) + sum(nu), coeffs)))
        return 0

    if cmd == "reduce":
        p = _profile(args)
        lam = parse_partition_arg(args.lam)
        print(dumps(fusion_payload(p, sum(lam), reduce_schur(p, lam))))
        return 0

    if cmd in ("verify-theorem", "verify-prop", "verify-pieri"):
        p = _profile(args)
        if cmd == "verify-theorem":
            shape = SkewShape(parse_partition_arg(args.lam), parse_partition_arg(args.mu))
            report = verify_theorem1(p, shape)
        elif cmd == "verify-prop":
            alpha = make_weight(int(x) for x in args.alpha.split(",")) if args.alpha.strip() else ()
            report = verify_proposition1(
                p, parse_partition_arg(args.lam), parse_partition_arg(args.mu), alpha)
        else:
            report = verify_pieri_report(p, parse_partition_arg(args.eta), args.k)
        _emit_report(report, args.format, args.verbose, sys.stdout)
        return 0 if report.passed else 1

    if cmd == "scan":
        config = ScanConfig(n_max=args.n_max, l_max=args.l_max,
                            deg_max=args.deg_max, out=args.out,
                            fmt=args.format, jobs=args.jobs)
        failures = 0
        if config.out:
            fh = open(config.out, "w")
        else:
            fh = sys.stdout
        try:
            if config.fmt == "tsv":
                fh.write("\t".join(TSV_COLUMNS) + "\n")
            for report in scan(config):
                failures += 0 if report.passed else 1
                _emit_report(report, config.fmt, args.verbose, fh)
        finally:
            if config.out:
                fh.close()
        return 1 if failures else 0

    if cmd == "export-table":
        p = _profile(args)
        if args.deg_max < 0:
            raise ValueError("deg-max must be nonnegative")
        summary = export_fusion_table(p, args.deg_max, args.out)
        print(dumps(summary))
        return 0

    raise ValueError(f"unknown command {cmd!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
