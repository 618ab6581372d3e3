"""Antichains, upper ideals, and Catalan numbers, three ways.

Antichains of the root order biject with upward-closed sets of roots; the
count is the Catalan number of the type, which the exponent formula
reproduces exactly.  Counting antichains by the size of their ideal gives
a q-analog; for the A family the same polynomial is carried by Dyck paths
graded by the cells above the path.
"""

from shiring import (
    build_root_system,
    catalan_number,
    dyck_area_polynomial,
    enumerate_antichains,
    graded_distribution,
    ideal_of,
    q_catalan,
)

print("type   antichains   exponent formula")
for label in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5",
              "G2", "F4", "E6"]:
    rs = build_root_system(label)
    ap = enumerate_antichains(rs)
    print(f"{label:<6} {len(ap):<12} {catalan_number(rs)}")
print()

rs = build_root_system("A3")
ap = enumerate_antichains(rs)
print("the 14 antichains of A3 and their ideals:")
for p in ap.antichains:
    print(f"  {p!s:<12} ideal {ideal_of(rs, p)}")
print()
print("antichains by cardinality:", graded_distribution(ap))
print("antichains by ideal size :", q_catalan(rs, ap))
print()

print("q-analog against the Dyck path oracle (A family):")
for n in range(1, 6):
    rs = build_root_system(f"A{n}")
    ap = enumerate_antichains(rs)
    ours = q_catalan(rs, ap)
    dyck = dyck_area_polynomial(n)
    print(f"  A{n}: ideals {ours}")
    print(f"      paths  {dyck}   match: {ours == dyck}")
