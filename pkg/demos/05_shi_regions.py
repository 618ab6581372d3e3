"""Dominant Shi regions of B2, made concrete with exact rational points.

The walls are the loci where a positive root takes value 0 or 1.  Inside
the dominant chamber the regions are labelled by antichains: the roots
taking values above 1 form an upward-closed set, and the antichain is its
minimal elements.  For each of the six B2 regions we build an interior
witness by exact linear programming and classify it back.
"""

from fractions import Fraction

from shiring import (
    build_root_system,
    classify_point,
    enumerate_antichains,
    format_point,
    ideal_of,
    point_slack,
    root_value,
    sign_vector,
    witness_point,
)

rs = build_root_system("B2")
ap = enumerate_antichains(rs)
print(f"B2 has {len(ap)} dominant regions, one per antichain\n")

for p in ap.antichains:
    w = witness_point(rs, p)
    back = classify_point(rs, w)
    labels = sign_vector(rs, p).labels
    print(f"region of antichain {p} (ideal {ideal_of(rs, p)})")
    print(f"  witness point   {format_point(w)}")
    print(f"  root values     "
          + " ".join(str(root_value(rs, i, w)) for i in range(4)))
    print(f"  sides           {' '.join(labels)}")
    print(f"  wall clearance  {point_slack(rs, w)}")
    print(f"  classified back {back}  ok={back == p}")
    print()

print("classification refuses anything on a wall or off the chamber:")
for coords, note in [
    ((Fraction(1, 2), Fraction(1, 4)), "value 1 on a root"),
    ((Fraction(-1), Fraction(1)), "off the dominant chamber"),
]:
    try:
        classify_point(rs, coords)
    except Exception as exc:
        print(f"  {format_point(coords)} ({note}): {type(exc).__name__}: {exc}")
