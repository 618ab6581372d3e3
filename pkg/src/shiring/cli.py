"""Command line surface.

Exit codes: 0 success, 1 usage error, 2 domain error (a point on a
hyperplane or off the dominant chamber), 3 invariant violation.  Output
for identical arguments is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys

from . import export
from .antichains import enumerate_antichains, mobius_matrix, zeta_matrix
from .catalan import catalan_number, q_catalan
from .errors import (
    BoundaryError,
    ChamberError,
    InvalidTypeError,
    InvariantError,
    NotAntichainError,
)
from .regions import classify_point, parse_point, region_report
from .root_system import RootSystem
from .verify import run_checks


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; this surface reserves 2 for
    # domain errors, so remap usage problems to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _add_common(sub, formats, default):
    sub.add_argument("type", help="Dynkin type label, e.g. A3, B2, E6")
    sub.add_argument(
        "-f",
        "--format",
        choices=formats,
        default=default,
        help=f"output format (default {default})",
    )
    sub.add_argument("-o", "--output", default=None, help="output file path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shiring", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    _add_common(subs.add_parser("roots", help="positive roots and their order"),
                ["text", "json", "dot"], "text")
    _add_common(subs.add_parser("antichains", help="antichain poset"),
                ["text", "json", "dot"], "text")
    _add_common(subs.add_parser("catalan", help="Catalan number of the type"),
                ["text", "json", "csv"], "text")
    _add_common(subs.add_parser("qcatalan", help="antichains by ideal size"),
                ["text", "json", "csv"], "text")
    _add_common(subs.add_parser("zeta", help="incidence matrix of the order"),
                ["csv", "json", "text"], "csv")
    _add_common(subs.add_parser("moebius", help="inverse incidence matrix"),
                ["csv", "json", "text"], "csv")
    filt = subs.add_parser("filtration", help="filtration rank table")
    _add_common(filt, ["text", "json", "csv"], "text")
    filt.add_argument(
        "--spanning",
        type=int,
        default=None,
        metavar="K",
        help="dump the spanning vectors of step K as CSV instead",
    )
    _add_common(subs.add_parser("multable", help="monomial multiplication table"),
                ["csv", "json", "text"], "csv")

    cls = subs.add_parser("classify", help="region of a rational point")
    _add_common(cls, ["text", "json"], "text")
    cls.add_argument(
        "--point", required=True, help="exact coordinates, e.g. 1/4,2/5"
    )

    wit = subs.add_parser("witness", help="interior point of a region")
    _add_common(wit, ["text", "json"], "text")
    wit.add_argument(
        "--antichain",
        required=True,
        help="comma separated root indices; empty string for the base region",
    )
    wit.add_argument(
        "--allow-large",
        action="store_true",
        help="lift the rank guard on witness construction",
    )

    ver = subs.add_parser("verify", help="run the invariant suite for a type")
    ver.add_argument("type", help="Dynkin type label")
    ver.add_argument("-o", "--output", default=None, help="output file path")
    return parser


def _parse_antichain(arg: str) -> tuple[int, ...]:
    text = arg.strip()
    if text in ("", "-"):
        return ()
    try:
        return tuple(sorted(int(tok) for tok in text.split(",")))
    except ValueError:
        raise SystemExit(1)


def _run_classify(rs, args) -> str:
    point = parse_point(args.point)
    p = classify_point(rs, point)
    if args.format == "json":
        return export.json_text(
            {
                "type": str(rs.dynkin),
                "point": args.point,
                "antichain": list(p),
                "roots": [list(rs.positive_roots[i]) for i in p],
            }
        )
    roots = " ".join(export._root_label(rs.positive_roots[i]) for i in p)
    return f"antichain: [{','.join(str(i) for i in p)}]\nroots: {roots}\n"


def _run_witness(rs, args) -> str:
    p = _parse_antichain(args.antichain)
    report = region_report(rs, p, allow_large=args.allow_large)
    if args.format == "json":
        return export.json_text(report)
    return ",".join(report["point"]) + "\n"


def _dispatch(args) -> str:
    rs = RootSystem(args.type)
    if args.command == "roots":
        return {
            "text": export.roots_text,
            "json": export.roots_json,
            "dot": export.roots_dot,
        }[args.format](rs)
    if args.command == "catalan":
        if args.format == "json":
            return export.catalan_json(rs)
        if args.format == "csv":
            return export.catalan_csv(rs)
        return f"{catalan_number(rs)}\n"
    if args.command == "classify":
        return _run_classify(rs, args)
    if args.command == "witness":
        return _run_witness(rs, args)

    ap = enumerate_antichains(rs)
    if args.command == "antichains":
        return {
            "text": export.antichains_text,
            "json": export.antichains_json,
            "dot": export.antichains_dot,
        }[args.format](ap)
    if args.command == "qcatalan":
        poly = q_catalan(rs, ap)
        if args.format == "json":
            return export.qpoly_json(rs, poly)
        if args.format == "csv":
            return export.qpoly_csv(poly)
        return f"{poly}\n"
    if args.command == "zeta":
        if args.format == "json":
            return export.matrix_json(rs, "zeta", zeta_matrix(ap))
        return export.matrix_csv(zeta_matrix(ap))
    if args.command == "moebius":
        if args.format == "json":
            return export.matrix_json(rs, "moebius", mobius_matrix(ap))
        return export.matrix_csv(mobius_matrix(ap))
    if args.command == "filtration":
        if args.spanning is not None:
            return export.spanning_matrix_csv(ap, args.spanning)
        return {
            "text": export.filtration_text,
            "json": export.filtration_json,
            "csv": export.filtration_csv,
        }[args.format](ap)
    if args.command == "multable":
        if args.format == "json":
            return export.multable_json(ap)
        return export.multable_csv(ap)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            checks = run_checks(args.type)
            lines = []
            for name, okay, detail in checks:
                tag = "PASS" if okay else "FAIL"
                lines.append(f"{tag}  {name}: {detail}\n")
            passed = sum(1 for _, okay, _ in checks if okay)
            lines.append(
                f"verify {args.type}: {passed}/{len(checks)} invariant "
                "families passed\n"
            )
            _write("".join(lines), args.output)
            return 0 if passed == len(checks) else 3
        text = _dispatch(args)
    except InvalidTypeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (NotAntichainError, IndexError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (BoundaryError, ChamberError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InvariantError as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        return 3
    _write(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
