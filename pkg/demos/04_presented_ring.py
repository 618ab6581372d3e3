"""A presentation by generators and relations, checked against the model.

One generator per positive root; two comparable generators multiply to
the lower one.  Monomials normalize to antichains, so the abstract ring
has the Catalan number as its rank, and sending each generator to its
step function is an isomorphism onto the region ring: the homomorphism
law is verified pair by pair below, and the matrix of the map is the
unitriangular zeta matrix.
"""

import random

from shiring import (
    build_root_system,
    enumerate_antichains,
    graded_product,
    minimal_elements,
    monomial_product,
    multiply,
    reduce_multiset,
    rho_map,
    rho_matrix,
    u_monomial,
    u_multiply,
)
from shiring.intlinalg import bareiss_determinant

rs = build_root_system("B2")
ap = enumerate_antichains(rs)
names = {i: rs.positive_roots[i] for i in range(len(rs.positive_roots))}
print("B2 roots:", names)
print()

print("normal forms of monomial products (antichain times antichain):")
for p in ap.antichains:
    row = []
    for q in ap.antichains:
        row.append(str(monomial_product(rs, p, q)))
    print(f"  {p!s:<8} {' '.join(f'{r:<10}' for r in row)}")
print()

print("rewriting a multiset of generators, any order, same answer:")
rng = random.Random(7)
multiset = [rs.index_of((1, 1)), rs.index_of((1, 0)), rs.index_of((0, 1)),
            rs.index_of((1, 0))]
print("  multiset:", [names[i] for i in multiset])
for _ in range(3):
    print("  reduces to:", reduce_multiset(rs, multiset, rng))
print("  minimal elements of support:", minimal_elements(rs, set(multiset)))
print()

print("graded variant: products of comparable generators vanish")
lo, hi = rs.index_of((0, 1)), rs.index_of((1, 2))
print(f"  {names[lo]} * {names[hi]} ->", graded_product(rs, (lo,), (hi,)))
a, b = rs.index_of((1, 0)), rs.index_of((0, 1))
print(f"  {names[a]} * {names[b]} ->", graded_product(rs, (a,), (b,)))
print()

print("the generator-to-step-function map is a ring isomorphism:")
bad = 0
for p in ap.antichains:
    for q in ap.antichains:
        lhs = multiply(rho_map(ap, u_monomial(ap, p)),
                       rho_map(ap, u_monomial(ap, q)))
        rhs = rho_map(ap, u_multiply(ap, u_monomial(ap, p), u_monomial(ap, q)))
        bad += lhs != rhs
print(f"  homomorphism law checked on {len(ap) ** 2} pairs, failures: {bad}")
mat = rho_matrix(ap)
print(f"  matrix of the map is zeta; determinant {bareiss_determinant(mat.tolist())}")
