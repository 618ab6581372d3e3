"""Antichains of a positive root poset and the ideal-containment order.

An antichain is stored as a sorted tuple of canonical root indices; the
upper ideal it generates is kept as a bitmask over those indices.  The
poset of antichains, ordered by containment of generated ideals, is
materialized with a canonical listing sorted by (ideal size, antichain),
a linear extension that makes the incidence (zeta) matrix upper
unitriangular.  The Moebius matrix is its exact integer inverse.
"""

from __future__ import annotations

import numpy as np

from .errors import NotAntichainError
from .intlinalg import unitriangular_inverse
from .root_system import RootSystem

Antichain = tuple[int, ...]
UpperIdeal = tuple[int, ...]


def _bits_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_antichain(rs: RootSystem, roots) -> Antichain:
    p = tuple(sorted(set(roots)))
    num = len(rs.positive_roots)
    for i in p:
        if not 0 <= i < num:
            raise IndexError(f"root index {i} out of range for {rs.dynkin}")
    for a in p:
        for b in p:
            if a != b and rs.leq(a, b):
                raise NotAntichainError(
                    f"roots {rs.positive_roots[a]} and {rs.positive_roots[b]} "
                    "are comparable"
                )
    return p


def ideal_of(rs: RootSystem, p) -> UpperIdeal:
    """The upper ideal generated by an antichain, as sorted root indices."""
    p = _check_antichain(rs, p)
    mask = 0
    for i in p:
        mask |= rs.upset_bits[i]
    return _bits_to_tuple(mask)


def minimal_elements(rs: RootSystem, s) -> Antichain:
    """Minimal elements of any set of root indices; always an antichain."""
    chosen = set(s)
    mask = 0
    for i in chosen:
        mask |= 1 << i
    return tuple(sorted(i for i in chosen if rs.downset_bits[i] & mask == 0))


class AntichainPoset:
    """All antichains of a root system with the ideal-containment order."""

    def __init__(self, rs: RootSystem, antichains, ideals):
        self.rs = rs
        self.antichains: tuple[Antichain, ...] = tuple(antichains)
        self.ideals: tuple[int, ...] = tuple(ideals)
        self.ideal_sizes: tuple[int, ...] = tuple(m.bit_count() for m in ideals)
        self.index: dict[Antichain, int] = {
            p: i for i, p in enumerate(self.antichains)
        }
        self._zeta = None
        self._mobius = None
        self._zeta_rows = None
        self._mobius_rows = None

    def __len__(self) -> int:
        return len(self.antichains)

    def __iter__(self):
        return iter(self.antichains)

    def __contains__(self, p) -> bool:
        return tuple(sorted(p)) in self.index

    def position(self, p) -> int:
        """Canonical index of an antichain; raises if it does not belong."""
        key = tuple(sorted(p))
        try:
            return self.index[key]
        except KeyError:
            raise NotAntichainError(
                f"{key} is not an antichain of {self.rs.dynkin}"
            ) from None

    def ideal_at(self, i: int) -> UpperIdeal:
        return _bits_to_tuple(self.ideals[i])

    def leq_positions(self, i: int, j: int) -> bool:
        return self.ideals[i] & ~self.ideals[j] == 0

    @property
    def ideal_bit_matrix(self) -> np.ndarray:
        """Ideal membership as a (antichains x roots) 0/1 matrix."""
        num = len(self.rs.positive_roots)
        rows = [
            [(mask >> r) & 1 for r in range(num)] for mask in self.ideals
        ]
        return np.array(rows, dtype=np.int64)

    @property
    def leq(self) -> np.ndarray:
        """Boolean matrix of the ideal-containment order."""
        return zeta_matrix(self).astype(bool)

    def covering_pairs(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with antichain j covering antichain i."""
        z = zeta_matrix(self).astype(bool)
        lt = z & ~np.eye(len(self), dtype=bool)
        covers = lt & ~(lt @ lt)
        return [(int(i), int(j)) for i, j in np.argwhere(covers)]

    def __repr__(self) -> str:
        return f"AntichainPoset({self.rs.dynkin}, {len(self)} antichains)"


def enumerate_antichains(rs: RootSystem) -> AntichainPoset:
    """Enumerate every antichain through its upper ideal.

    Roots are processed in reverse canonical order; a root may enter the
    ideal only when everything above it is already in, which yields each
    upward-closed set exactly once.
    """
    num = len(rs.positive_roots)
    strict_up = [
        rs.upset_bits[i] & ~(1 << i) for i in range(num)
    ]
    found: list[int] = []

    def walk(i: int, mask: int) -> None:
        if i < 0:
            found.append(mask)
            return
        walk(i - 1, mask)
        if strict_up[i] & ~mask == 0:
            walk(i - 1, mask | (1 << i))

    walk(num - 1, 0)

    pairs = []
    for mask in found:
        anti = tuple(
            i for i in _bits_to_tuple(mask) if rs.downset_bits[i] & mask == 0
        )
        pairs.append((mask.bit_count(), anti, mask))
    pairs.sort(key=lambda t: (t[0], t[1]))
    return AntichainPoset(
        rs, [p for _, p, _ in pairs], [m for _, _, m in pairs]
    )


def antichain_leq(ap: AntichainPoset, p, q) -> bool:
    """Whether the ideal of ``p`` is contained in the ideal of ``q``."""
    return ap.leq_positions(ap.position(p), ap.position(q))


def zeta_matrix(ap: AntichainPoset) -> np.ndarray:
    """Incidence matrix of the order in canonical listing, as int64.

    Entry (i, j) is 1 when antichain i is below antichain j.  The listing
    is a linear extension, so the matrix is upper unitriangular.
    """
    if ap._zeta is None:
        bits = ap.ideal_bit_matrix
        misses = bits @ (1 - bits).T
        ap._zeta = (misses == 0).astype(np.int64)
    return ap._zeta.copy()


def mobius_matrix(ap: AntichainPoset) -> np.ndarray:
    """Exact integer inverse of the zeta matrix."""
    if ap._mobius is None:
        ap._mobius = unitriangular_inverse(zeta_matrix(ap))
    return ap._mobius.copy()


def _zeta_rows(ap: AntichainPoset) -> list[list[int]]:
    # plain Python ints, for exact arithmetic with unbounded coordinates
    if ap._zeta_rows is None:
        ap._zeta_rows = zeta_matrix(ap).tolist()
    return ap._zeta_rows


def _mobius_rows(ap: AntichainPoset) -> list[list[int]]:
    if ap._mobius_rows is None:
        ap._mobius_rows = mobius_matrix(ap).tolist()
    return ap._mobius_rows
