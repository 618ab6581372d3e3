"""Tour of root systems: Cartan data in, ordered positive roots out.

Everything is derived from the Cartan matrix: the roots themselves (grown
height by height along root strings), the coefficientwise order, the
Coxeter number, and the exponents (read off the height distribution).
"""

from shiring import build_root_system
from shiring.export import roots_dot

for label in ["A2", "B2", "G2"]:
    rs = build_root_system(label)
    print(f"== {label} ==")
    print("cartan matrix:", [list(row) for row in rs.cartan])
    for i, root in enumerate(rs.positive_roots):
        print(f"  root {i}: {root}  height {rs.heights[i]}")
    print("coxeter number:", rs.coxeter_number)
    print("exponents:", rs.exponents)
    print("count check: n*h/2 =", rs.rank * rs.coxeter_number // 2)
    print()

# The order is coefficientwise comparison; covering pairs give the Hasse
# diagram, here as DOT for any renderer.
rs = build_root_system("B2")
print("B2 covering pairs:", rs.covering_pairs())
print()
print(roots_dot(rs))
