"""A commutative ring presented by one generator per positive root.

Two comparable generators multiply to the lower one; equal generators
collapse to a single copy, the reading forced by the step functions the
generators model (a 0/1-valued function squares to itself).  Monomials
therefore normalize to antichains, and the antichain monomials form a
basis.  The graded variant kills products of comparable generators
instead, giving one basis monomial per antichain in each cardinality
degree.

``reduce_multiset`` normalizes by raw pairwise rewriting and is kept as an
independent route against ``monomial_product`` (minimal elements of the
union), so the confluence of the presentation is tested, not assumed.

``rho_map`` sends the antichain monomial basis to the step-function basis
of the region ring; with elements written as row vectors its matrix is
exactly the zeta matrix of the antichain order, which is unitriangular
with determinant 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .antichains import (
    Antichain,
    AntichainPoset,
    _check_antichain,
    _zeta_rows,
    minimal_elements,
    zeta_matrix,
)
from .heaviside import DELTA, RingElement
from .root_system import RootSystem


@dataclass(frozen=True)
class UMonomial:
    """A basis monomial indexed by an antichain, plain or graded."""

    roots: tuple[int, ...]
    graded: bool = False


def monomial_product(rs: RootSystem, p, q) -> Antichain:
    """Normal form of the product of two antichain monomials.

    The minimal elements of the union, which generate the union of the
    two ideals.
    """
    p = _check_antichain(rs, p)
    q = _check_antichain(rs, q)
    return minimal_elements(rs, set(p) | set(q))


def reduce_multiset(rs: RootSystem, roots, rng: random.Random | None = None) -> Antichain:
    """Normalize a multiset of roots by exhaustive pairwise rewriting.

    Whenever two entries are comparable (or equal) they are replaced by
    the lower one.  ``rng`` picks which pair to rewrite next; the result
    does not depend on that choice, which the tests verify rather than
    assume.
    """
    work = [int(r) for r in roots]
    while True:
        pairs = [
            (i, j)
            for i in range(len(work))
            for j in range(i + 1, len(work))
            if rs.leq(work[i], work[j]) or rs.leq(work[j], work[i])
        ]
        if not pairs:
            break
        i, j = pairs[0] if rng is None else rng.choice(pairs)
        lower = work[i] if rs.leq(work[i], work[j]) else work[j]
        keep = [work[k] for k in range(len(work)) if k not in (i, j)]
        keep.append(lower)
        work = keep
    return tuple(sorted(work))


def graded_product(rs: RootSystem, p, q) -> Antichain | None:
    """Product in the graded ring: ``None`` is the zero of the ring.

    Nonzero exactly when the union is an antichain of cardinality
    |p| + |q|, in which case degrees add.
    """
    p = _check_antichain(rs, p)
    q = _check_antichain(rs, q)
    if set(p) & set(q):
        return None
    union = tuple(sorted(set(p) | set(q)))
    for a in union:
        for b in union:
            if a != b and rs.leq(a, b):
                return None
    return union


def monomial_times(rs: RootSystem, a: UMonomial, b: UMonomial) -> UMonomial | None:
    """Product of two monomials; ``None`` only in the graded ring."""
    if a.graded != b.graded:
        raise ValueError("cannot mix graded and ungraded monomials")
    if a.graded:
        prod = graded_product(rs, a.roots, b.roots)
        return None if prod is None else UMonomial(prod, graded=True)
    return UMonomial(monomial_product(rs, a.roots, b.roots))


@dataclass(frozen=True)
class UElement:
    """Integer coordinates over the canonical antichain monomial basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))


def u_monomial(ap: AntichainPoset, p) -> UElement:
    """The basis element of one antichain monomial."""
    i = ap.position(p)
    coords = [0] * len(ap)
    coords[i] = 1
    return UElement(tuple(coords))


def u_multiply(ap: AntichainPoset, x: UElement, y: UElement) -> UElement:
    """Bilinear product over the monomial basis."""
    m = len(ap)
    out = [0] * m
    for i, a in enumerate(x.coords):
        if a == 0:
            continue
        for j, b in enumerate(y.coords):
            if b == 0:
                continue
            k = ap.index[monomial_product(ap.rs, ap.antichains[i], ap.antichains[j])]
            out[k] += a * b
    return UElement(tuple(out))


def rho_map(ap: AntichainPoset, x: UElement) -> RingElement:
    """Send each antichain monomial to its step-function basis element.

    Returned in region (delta) coordinates.
    """
    zeta = _zeta_rows(ap)
    m = len(ap)
    coords = [0] * m
    for p, c in enumerate(x.coords):
        if c == 0:
            continue
        row = zeta[p]
        for q in range(m):
            if row[q]:
                coords[q] += c
    return RingElement(DELTA, tuple(coords))


def rho_matrix(ap: AntichainPoset) -> np.ndarray:
    """Matrix of the monomial-to-step-function map over row vectors.

    Row p holds the region coordinates of the image of the p-th monomial;
    this is the zeta matrix of the antichain order.
    """
    return zeta_matrix(ap)


def multiplication_table(ap: AntichainPoset) -> list[list[int]]:
    """table[i][j] = canonical index of the product of monomials i and j."""
    m = len(ap)
    rs = ap.rs
    return [
        [
            ap.index[monomial_product(rs, ap.antichains[i], ap.antichains[j])]
            for j in range(m)
        ]
        for i in range(m)
    ]
