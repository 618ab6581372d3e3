"""The ring of locally-constant integer functions on dominant Shi regions.

Elements are exact integer coordinate vectors over the canonical antichain
listing, in one of two bases:

* ``delta``: one orthogonal idempotent per region (value 1 on a single
  region).  Multiplication is componentwise here, so all arithmetic is
  normalized to this basis.
* ``h``: products of the restricted step functions, one generator per
  positive root, one basis element per antichain.  This basis is a view
  through the zeta matrix; converting back uses the Moebius matrix, and
  the round trip is exact over the integers.

The increasing filtration starts at the constants and at step k is spanned
by all products of at most k step-function generators; its ranks are
computed by fraction-free integer row reduction of the spanning vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .antichains import AntichainPoset, _mobius_rows, _zeta_rows
from .intlinalg import fraction_free_rank

DELTA = "delta"
HBASIS = "h"


@dataclass(frozen=True)
class RingElement:
    """An exact integer vector over the antichain listing, with a basis tag."""

    basis: str
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.basis not in (DELTA, HBASIS):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def _require_same(self, other: "RingElement") -> None:
        if self.basis != other.basis or len(self.coords) != len(other.coords):
            raise ValueError("elements live in different bases or rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._require_same(other)
        return RingElement(
            self.basis, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._require_same(other)
        return RingElement(
            self.basis, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "RingElement":
        return RingElement(self.basis, tuple(-a for a in self.coords))

    def __rmul__(self, scalar: int) -> "RingElement":
        return RingElement(self.basis, tuple(scalar * a for a in self.coords))

    def __mul__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        return multiply(self, other)


def delta_element(ap: AntichainPoset, p) -> RingElement:
    """The idempotent of the region labelled by antichain ``p``."""
    i = ap.position(p)
    coords = [0] * len(ap)
    coords[i] = 1
    return RingElement(DELTA, tuple(coords))


def one(ap: AntichainPoset) -> RingElement:
    """The unit: value 1 on every region."""
    return RingElement(DELTA, (1,) * len(ap))


def h_root(ap: AntichainPoset, alpha) -> RingElement:
    """Step-function generator of a root: 1 where the root exceeds 1.

    In region coordinates that is 1 exactly on the antichains whose ideal
    contains the root.
    """
    i = alpha if isinstance(alpha, int) else ap.rs.index_of(alpha)
    coords = tuple((mask >> i) & 1 for mask in ap.ideals)
    return RingElement(DELTA, coords)


def h_antichain(ap: AntichainPoset, p) -> RingElement:
    """Basis element of an antichain: 1 on every region above it.

    Computed from root membership (every root of ``p`` inside the region's
    ideal), which agrees with the ideal-containment order and with the
    product of the root generators; the tests hold all three routes
    together.
    """
    p = tuple(sorted(p))
    ap.position(p)  # validates
    need = 0
    for i in p:
        need |= 1 << i
    coords = tuple(
        1 if mask & need == need else 0 for mask in ap.ideals
    )
    return RingElement(DELTA, coords)


def multiply(x: RingElement, y: RingElement, ap: AntichainPoset | None = None) -> RingElement:
    """Product of two elements, always returned in the delta basis.

    Inputs tagged ``h`` are converted first, which needs the poset.
    """
    if x.basis == HBASIS or y.basis == HBASIS:
        if ap is None:
            raise ValueError("converting from the h basis needs the poset")
        if x.basis == HBASIS:
            x = to_delta_basis(ap, x)
        if y.basis == HBASIS:
            y = to_delta_basis(ap, y)
    if len(x.coords) != len(y.coords):
        raise ValueError("elements live in different rings")
    return RingElement(DELTA, tuple(a * b for a, b in zip(x.coords, y.coords)))


def to_h_basis(ap: AntichainPoset, x: RingElement) -> RingElement:
    """Rewrite a delta-basis element over the antichain basis (Moebius)."""
    if x.basis != DELTA:
        raise ValueError("input must be in the delta basis")
    mob = _mobius_rows(ap)
    m = len(ap)
    coords = tuple(
        sum(mob[q][p] * x.coords[q] for q in range(m)) for p in range(m)
    )
    return RingElement(HBASIS, coords)


def to_delta_basis(ap: AntichainPoset, x: RingElement) -> RingElement:
    """Expand an h-basis element into region coordinates (zeta)."""
    if x.basis != HBASIS:
        raise ValueError("input must be in the h basis")
    zeta = _zeta_rows(ap)
    m = len(ap)
    coords = tuple(
        sum(zeta[p][q] * x.coords[p] for p in range(m)) for q in range(m)
    )
    return RingElement(DELTA, coords)


def filtration_rank(ap: AntichainPoset, k: int) -> int:
    """Rank of the span of all products of at most k step generators.

    Any product of generators collapses to the basis element of some
    antichain of cardinality <= k (comparable factors absorb into the
    lower one), so those vectors span the step; the rank is still computed
    honestly by fraction-free row reduction.
    """
    if k < 0:
        raise ValueError("filtration step must be >= 0")
    rows = [
        h_antichain(ap, p).coords for p in ap.antichains if len(p) <= k
    ]
    return fraction_free_rank(rows)


@dataclass(frozen=True)
class FiltrationReport:
    """Ranks of the filtration steps 0..n as an abelian group."""

    ranks: tuple[int, ...]


def filtration_report(ap: AntichainPoset) -> FiltrationReport:
    """Filtration ranks from the constants up to step n = rank."""
    return FiltrationReport(
        tuple(filtration_rank(ap, k) for k in range(ap.rs.rank + 1))
    )


def format_element(ap: AntichainPoset, x: RingElement) -> str:
    """Human-readable form showing the support antichains."""
    tag = "d" if x.basis == DELTA else "h"
    terms = []
    for i, c in enumerate(x.coords):
        if c == 0:
            continue
        label = "{" + ",".join(str(r) for r in ap.antichains[i]) + "}"
        if c == 1:
            terms.append(f"{tag}{label}")
        elif c == -1:
            terms.append(f"-{tag}{label}")
        else:
            terms.append(f"{c}*{tag}{label}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
