"""Serializers: JSON documents, CSV matrices, DOT Hasse diagrams.

All output is deterministic: canonical orderings everywhere, sorted JSON
keys, no timestamps.  DOT files contain covering relations only.
"""

from __future__ import annotations

import json

from .antichains import AntichainPoset, mobius_matrix, zeta_matrix
from .catalan import QPolynomial, catalan_number
from .heaviside import filtration_report, h_antichain
from .presented import multiplication_table
from .root_system import RootSystem


def json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def csv_text(rows) -> str:
    return "".join(",".join(str(v) for v in row) + "\n" for row in rows)


def _dot(name: str, labels, edges) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, label in enumerate(labels):
        lines.append(f'  {i} [label="{label}"];')
    for a, b in edges:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _root_label(root) -> str:
    return "(" + ",".join(str(c) for c in root) + ")"


def _antichain_label(p) -> str:
    return "{" + ",".join(str(i) for i in p) + "}"


def roots_json(rs: RootSystem) -> str:
    return json_text(
        {
            "type": str(rs.dynkin),
            "rank": rs.rank,
            "cartan": [list(row) for row in rs.cartan],
            "positive_roots": [list(r) for r in rs.positive_roots],
            "heights": list(rs.heights),
            "highest_root_index": rs.highest_root_index,
            "coxeter_number": rs.coxeter_number,
            "exponents": list(rs.exponents),
        }
    )


def roots_dot(rs: RootSystem) -> str:
    return _dot(
        f"roots_{rs.dynkin}",
        [_root_label(r) for r in rs.positive_roots],
        rs.covering_pairs(),
    )


def roots_text(rs: RootSystem) -> str:
    head = (
        f"type {rs.dynkin}: {len(rs.positive_roots)} positive roots, "
        f"coxeter number {rs.coxeter_number}, "
        f"exponents {' '.join(str(e) for e in rs.exponents)}\n"
    )
    lines = [head, "idx  height  coeffs\n"]
    for i, r in enumerate(rs.positive_roots):
        lines.append(f"{i:<4} {rs.heights[i]:<7} {_root_label(r)}\n")
    return "".join(lines)


def antichains_json(ap: AntichainPoset) -> str:
    return json_text(
        {
            "type": str(ap.rs.dynkin),
            "count": len(ap),
            "antichains": [list(p) for p in ap.antichains],
            "ideals": [list(ap.ideal_at(i)) for i in range(len(ap))],
            "ideal_sizes": list(ap.ideal_sizes),
            "covering_relations": [list(e) for e in ap.covering_pairs()],
        }
    )


def antichains_dot(ap: AntichainPoset) -> str:
    return _dot(
        f"antichains_{ap.rs.dynkin}",
        [_antichain_label(p) for p in ap.antichains],
        ap.covering_pairs(),
    )


def antichains_text(ap: AntichainPoset) -> str:
    lines = [f"type {ap.rs.dynkin}: {len(ap)} antichains\n"]
    lines.append("idx  size  ideal_size  roots\n")
    for i, p in enumerate(ap.antichains):
        lines.append(
            f"{i:<4} {len(p):<5} {ap.ideal_sizes[i]:<10} {_antichain_label(p)}\n"
        )
    return "".join(lines)


def catalan_json(rs: RootSystem) -> str:
    return json_text({"type": str(rs.dynkin), "catalan_number": catalan_number(rs)})


def catalan_csv(rs: RootSystem) -> str:
    return csv_text([["type", "catalan_number"], [rs.dynkin, catalan_number(rs)]])


def qpoly_json(rs: RootSystem, poly: QPolynomial) -> str:
    return json_text(
        {
            "type": str(rs.dynkin),
            "coefficients": list(poly.coeffs),
            "value_at_1": poly.evaluate(1),
        }
    )


def qpoly_csv(poly: QPolynomial) -> str:
    rows = [["degree", "coefficient"]]
    rows += [[k, c] for k, c in enumerate(poly.coeffs)]
    return csv_text(rows)


def matrix_csv(mat) -> str:
    return csv_text([list(map(int, row)) for row in mat])


def matrix_json(rs: RootSystem, name: str, mat) -> str:
    return json_text(
        {
            "type": str(rs.dynkin),
            "name": name,
            "rows": [[int(v) for v in row] for row in mat],
        }
    )


def zeta_csv(ap: AntichainPoset) -> str:
    return matrix_csv(zeta_matrix(ap))


def mobius_csv(ap: AntichainPoset) -> str:
    return matrix_csv(mobius_matrix(ap))


def filtration_rows(ap: AntichainPoset) -> list[list[int]]:
    report = filtration_report(ap)
    return [[k, r] for k, r in enumerate(report.ranks)]


def filtration_csv(ap: AntichainPoset) -> str:
    return csv_text([["k", "rank"]] + filtration_rows(ap))


def filtration_text(ap: AntichainPoset) -> str:
    rows = filtration_rows(ap)
    lines = [f"filtration ranks for {ap.rs.dynkin}\n", "k  rank\n"]
    for k, r in rows:
        lines.append(f"{k:<2} {r}\n")
    return "".join(lines)


def filtration_json(ap: AntichainPoset) -> str:
    report = filtration_report(ap)
    return json_text({"type": str(ap.rs.dynkin), "ranks": list(report.ranks)})


def spanning_matrix_csv(ap: AntichainPoset, k: int) -> str:
    rows = [
        h_antichain(ap, p).coords for p in ap.antichains if len(p) <= k
    ]
    return matrix_csv(rows)


def multable_csv(ap: AntichainPoset) -> str:
    table = multiplication_table(ap)
    rows = [["i", "j", "product"]]
    for i, row in enumerate(table):
        for j, k in enumerate(row):
            rows.append([i, j, k])
    return csv_text(rows)


def multable_json(ap: AntichainPoset) -> str:
    return json_text(
        {"type": str(ap.rs.dynkin), "table": multiplication_table(ap)}
    )
