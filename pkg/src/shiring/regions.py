"""Dominant Shi regions: classify exact rational points, build witnesses.

Points are tuples of Fractions in the fundamental-coweight basis, so the
value of a root at a point is the integer dot product of the root's
coefficient vector with the coordinates.  A strictly dominant point that
avoids every level-0 and level-1 hyperplane determines a region, labelled
by the antichain of minimal roots taking values above 1.

Witness construction runs an exact rational feasibility program: all the
strict inequalities of the region share one slack margin, the margin is
maximized by the simplex solver, then fixed at half its optimum so the
returned point sits strictly inside with a certified cushion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .antichains import _check_antichain, ideal_of, minimal_elements
from .errors import BoundaryError, ChamberError, InvariantError
from .root_system import RootSystem
from .simplex import OPTIMAL, solve_lp

RationalPoint = tuple[Fraction, ...]

BELOW = "below"
ABOVE = "above"

# Exhaustive witness sweeps get slow past this rank; opt in explicitly.
_DEFAULT_MAX_RANK = 6


@dataclass(frozen=True)
class SignVector:
    """Per-root side labels of a region: above or below the level-1 wall."""

    labels: tuple[str, ...]

    def above_indices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.labels) if s == ABOVE)


def parse_point(text: str) -> RationalPoint:
    """Parse ``"1/4,2/5"`` into exact rationals; floating point is refused."""
    coords = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok or any(ch in tok for ch in ".eE"):
            raise ValueError(
                f"coordinate {tok!r} is not an exact rational a/b"
            )
        if "/" in tok:
            num, den = tok.split("/", 1)
            coords.append(Fraction(int(num), int(den)))
        else:
            coords.append(Fraction(int(tok)))
    return tuple(coords)


def format_point(x: RationalPoint) -> str:
    return ",".join(f"{c.numerator}/{c.denominator}" for c in x)


def root_value(rs: RootSystem, root, x: RationalPoint) -> Fraction:
    """Value of a root (index or coefficient tuple) at a point."""
    coeffs = rs.positive_roots[root] if isinstance(root, int) else tuple(root)
    return sum(Fraction(c) * xi for c, xi in zip(coeffs, x))


def classify_point(rs: RootSystem, x) -> tuple[int, ...]:
    """Antichain of the region containing a strictly dominant point.

    >>> rs = RootSystem("B2")
    >>> classify_point(rs, parse_point("1/4,2/5"))
    (3,)

    Raises ChamberError off the dominant chamber and BoundaryError on any
    hyperplane, naming the root.
    """
    x = tuple(Fraction(c) for c in x)
    if len(x) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(x)}")
    if any(c < 0 for c in x):
        raise ChamberError(
            f"point {format_point(x)} is outside the dominant chamber"
        )
    above = []
    for i, root in enumerate(rs.positive_roots):
        val = root_value(rs, i, x)
        if val == 0 or val == 1:
            raise BoundaryError(root, val)
        if val > 1:
            above.append(i)
    mask = 0
    for i in above:
        mask |= 1 << i
    for i in above:
        if rs.upset_bits[i] & ~mask:
            raise InvariantError(
                "set of roots above level 1 is not upward closed"
            )
    return minimal_elements(rs, above)


def sign_vector(rs: RootSystem, p) -> SignVector:
    """Side labels of the region of an antichain: above on its ideal."""
    ideal = set(ideal_of(rs, p))
    return SignVector(
        tuple(ABOVE if i in ideal else BELOW for i in range(len(rs.positive_roots)))
    )


def _witness_lp(rs: RootSystem, ideal_mask: int, cap: Fraction):
    """Margin program: coordinates and one shared slack t, maximized."""
    n = len(rs.positive_roots[0])
    a, b = [], []
    for i, root in enumerate(rs.positive_roots):
        if (ideal_mask >> i) & 1:
            a.append([-c for c in root] + [1])
            b.append(Fraction(-1))
        else:
            a.append(list(root) + [1])
            b.append(Fraction(1))
    for i in range(n):
        row = [0] * (n + 1)
        row[i] = -1
        row[n] = 1
        a.append(row)
        b.append(Fraction(0))
    a.append([0] * n + [1])
    b.append(cap)
    c = [0] * n + [1]
    return solve_lp(a, b, c)


def witness_point(rs: RootSystem, p, *, allow_large: bool = False) -> RationalPoint:
    """An exact rational point classified back to the given antichain.

    The shared slack margin is maximized, then the program is re-solved
    with the margin capped at half that optimum, so every strict
    inequality of the region holds with a known cushion.
    """
    p = _check_antichain(rs, p)
    if rs.rank > _DEFAULT_MAX_RANK and not allow_large:
        raise ValueError(
            f"rank {rs.rank} witness construction is slow; "
            "pass allow_large=True to run it anyway"
        )
    mask = 0
    for i in p:
        mask |= rs.upset_bits[i]
    status, best, _ = _witness_lp(rs, mask, Fraction(1, 2))
    if status != OPTIMAL or best <= 0:
        raise InvariantError(
            f"region of {p} in {rs.dynkin} has no interior point"
        )
    status, value, sol = _witness_lp(rs, mask, best / 2)
    if status != OPTIMAL or value != best / 2:
        raise InvariantError("margin re-solve failed")
    return tuple(sol[: rs.rank])


def point_slack(rs: RootSystem, x) -> Fraction:
    """Distance, in root values, from a point to the nearest hyperplane."""
    x = tuple(Fraction(c) for c in x)
    best = None
    for i in range(len(rs.positive_roots)):
        val = root_value(rs, i, x)
        gap = min(abs(val), abs(val - 1))
        if best is None or gap < best:
            best = gap
    return best


def region_report(rs: RootSystem, p, *, allow_large: bool = False) -> dict:
    """Region summary: antichain, ideal, side labels, witness, slack."""
    p = _check_antichain(rs, p)
    point = witness_point(rs, p, allow_large=allow_large)
    return {
        "type": str(rs.dynkin),
        "antichain": list(p),
        "ideal": list(ideal_of(rs, p)),
        "sign_vector": list(sign_vector(rs, p).labels),
        "point": [f"{c.numerator}/{c.denominator}" for c in point],
        "slack": str(point_slack(rs, point)),
    }
