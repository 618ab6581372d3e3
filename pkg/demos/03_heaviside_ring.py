"""The function ring on dominant Shi regions and its two bases.

The ring of locally-constant integer functions on the regions has an
obvious basis of indicator idempotents, one per region.  The step
functions of the roots generate the same ring; their products, one per
antichain, form a second basis whose coordinate matrix over the
idempotents is exactly the incidence matrix of the antichain order.
Changing basis back is Moebius inversion, exact over the integers.
"""

from shiring import (
    build_root_system,
    delta_element,
    enumerate_antichains,
    filtration_report,
    format_element,
    h_antichain,
    h_root,
    mobius_matrix,
    multiply,
    to_h_basis,
    zeta_matrix,
)

rs = build_root_system("A2")
ap = enumerate_antichains(rs)
print("A2 antichains in canonical order:", ap.antichains)
print()

print("step-function generators in region coordinates:")
for i, root in enumerate(rs.positive_roots):
    print(f"  root {root}: {h_root(ap, i).coords}")
print()

print("products collapse along the order: for comparable roots the lower wins")
lo, hi = rs.index_of((1, 0)), rs.index_of((1, 1))
prod = multiply(h_root(ap, lo), h_root(ap, hi))
print(f"  h{rs.positive_roots[lo]} * h{rs.positive_roots[hi]} =",
      format_element(ap, prod))
print()

print("zeta matrix (rows are the antichain basis over the idempotents):")
print(zeta_matrix(ap))
print("moebius matrix (the exact inverse):")
print(mobius_matrix(ap))
print()

d0 = delta_element(ap, ())
print("the idempotent of the base region, rewritten over the antichain basis:")
print(" ", format_element(ap, to_h_basis(ap, d0)))
print()

print("filtration by number of step-function factors (rank per step):")
for label in ["A1", "A2", "A3", "A4", "B2", "B3", "G2"]:
    ap = enumerate_antichains(build_root_system(label))
    print(f"  {label}: {filtration_report(ap).ranks}")

print()
print("sanity: the product of all generators lands on the top region")
ap = enumerate_antichains(rs)
simples = tuple(sorted((rs.index_of((1, 0)), rs.index_of((0, 1)))))
print(" ", format_element(ap, h_antichain(ap, simples)))
