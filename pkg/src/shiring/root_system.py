"""Positive root systems of finite Dynkin type, built from Cartan data alone.

Families and rank bounds: A (n >= 1), B (n >= 2), C (n >= 2, C2 being
isomorphic to B2), D (n >= 3), E (n in 6..8), F (n = 4), G (n = 2).

Cartan matrix convention, fixed per family below: ``cartan[i][j]`` is the
pairing of the simple root ``alpha_j`` against the coroot of ``alpha_i``,
so the i-th row dotted with the coefficient vector of any root gives the
pairing of that root against the i-th coroot.  Under this storage the B2
matrix reads ``[[2, -1], [-2, 2]]``.

Node numbering per family (1-based, as used in the matrices below):

* A_n: path 1 - 2 - ... - n
* B_n: path 1 - ... - n with the double bond at the end and alpha_n short
  (``cartan[n][n-1] = -2``)
* C_n: transpose of B_n, alpha_n long (``cartan[n-1][n] = -2``)
* D_n: path 1 - ... - (n-2) with both n-1 and n attached to node n-2
* E_n: path 1 - 3 - 4 - ... - n with node 2 attached to node 4
* F_4: path 1 - 2 - 3 - 4 with the double bond between 2 and 3 and
  alpha_3, alpha_4 short (``cartan[3][2] = -2``)
* G_2: alpha_1 short (``cartan[1][2] = -3``)

All derived data (positive roots, the coefficientwise order, exponents,
Coxeter number) is computed from the Cartan matrix; nothing is tabulated.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import InvalidTypeError, InvariantError

# A root is its tuple of coefficients over the simple roots.
Root = tuple[int, ...]

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-Ga-g])\s*([0-9]+)$")


@dataclass(frozen=True)
class DynkinType:
    """A finite Dynkin family letter together with a rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise InvalidTypeError(
                f"unknown family {self.family!r}: expected one of A B C D E F G"
            )
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            span = f"rank >= {lo}" if hi is None else f"rank in {lo}..{hi}"
            raise InvalidTypeError(
                f"family {self.family} needs {span}, got rank {self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """Parse a label such as ``"B2"`` or ``"e6"``."""
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise InvalidTypeError(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def _edges(self) -> list[tuple[int, int]]:
        """Dynkin diagram edges as 1-based node pairs (bond data aside)."""
        fam, n = self.family, self.rank
        chain = [(i, i + 1) for i in range(1, n)]
        if fam in ("A", "B", "C", "F", "G"):
            return chain
        if fam == "D":
            return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
        # E: path 1-3-4-...-n plus the branch 2-4
        spine = [1, 3] + list(range(4, n + 1))
        return [(a, b) for a, b in zip(spine, spine[1:])] + [(2, 4)]

    def cartan_matrix(self) -> list[list[int]]:
        """Integer Cartan matrix in the convention documented above."""
        fam, n = self.family, self.rank
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for a, b in self._edges():
            m[a - 1][b - 1] = -1
            m[b - 1][a - 1] = -1
        if fam == "B":
            m[n - 1][n - 2] = -2
        elif fam == "C":
            m[n - 2][n - 1] = -2
        elif fam == "F":
            m[2][1] = -2
        elif fam == "G":
            m[0][1] = -3
        return m


def _generate_positive_roots(cartan: list[list[int]]) -> list[Root]:
    """Grow the positive roots level by level using root strings.

    A root beta extends to beta + alpha_i exactly when the length r of the
    alpha_i-string below beta exceeds the pairing of beta with the i-th
    coroot.  Levels are completed in height order, so every string below
    the current level is already known.
    """
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[Root] = set(simple)
    level: list[Root] = list(simple)
    while level:
        grown: set[Root] = set()
        for beta in level:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                r = 0
                gam = list(beta)
                gam[i] -= 1
                while tuple(gam) in roots:
                    r += 1
                    gam[i] -= 1
                if r - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    grown.add(tuple(up))
        grown -= roots
        roots |= grown
        level = sorted(grown)
    return sorted(roots, key=lambda c: (sum(c), c))


class RootSystem:
    """The positive roots of a finite type with the coefficientwise order.

    Roots are kept in a canonical list sorted by (height, lexicographic
    coefficients), which is a linear extension of the order.  ``leq_table``
    is the boolean matrix of that order; ``upset_bits``/``downset_bits``
    give the same data as per-root bitmasks over canonical indices.
    """

    def __init__(self, dynkin: DynkinType | str):
        if isinstance(dynkin, str):
            dynkin = DynkinType.parse(dynkin)
        self.dynkin = dynkin
        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(row) for row in dynkin.cartan_matrix()
        )
        self.positive_roots: tuple[Root, ...] = tuple(
            _generate_positive_roots(dynkin.cartan_matrix())
        )
        self.index: dict[Root, int] = {
            r: i for i, r in enumerate(self.positive_roots)
        }
        self.heights: tuple[int, ...] = tuple(sum(r) for r in self.positive_roots)
        self.highest_root_index: int = len(self.positive_roots) - 1
        self.coxeter_number: int = 1 + self.heights[-1]
        self.exponents: tuple[int, ...] = tuple(exponents_from_heights(self))

        n, num = self.rank, len(self.positive_roots)
        if 2 * num != n * self.coxeter_number:
            raise InvariantError(
                f"{dynkin}: got {num} positive roots, expected "
                f"{n}*{self.coxeter_number}/2"
            )
        if sum(self.exponents) != num:
            raise InvariantError(f"{dynkin}: exponents do not sum to {num}")

        # Bitmask of the principal up-set {j : root_i <= root_j} per root.
        # The canonical order is a linear extension, so only j >= i can
        # dominate i and a one-sided scan suffices.
        up = []
        down = [0] * num
        for i, a in enumerate(self.positive_roots):
            mask = 0
            for j in range(i, num):
                b = self.positive_roots[j]
                if all(b[k] >= a[k] for k in range(n)):
                    mask |= 1 << j
                    if j != i:
                        down[j] |= 1 << i
            up.append(mask)
        self.upset_bits: tuple[int, ...] = tuple(up)
        self.downset_bits: tuple[int, ...] = tuple(down)

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    @property
    def leq_table(self) -> np.ndarray:
        """Boolean matrix of the root order over canonical indices."""
        num = len(self.positive_roots)
        table = np.zeros((num, num), dtype=bool)
        for i, mask in enumerate(self.upset_bits):
            for j in range(num):
                if (mask >> j) & 1:
                    table[i, j] = True
        return table

    def leq(self, a: int, b: int) -> bool:
        """Whether root ``a`` is below root ``b`` coefficientwise."""
        return bool((self.upset_bits[a] >> b) & 1)

    def index_of(self, coeffs) -> int:
        """Canonical index of a root given by its coefficient tuple."""
        return self.index[tuple(coeffs)]

    def covering_pairs(self) -> list[tuple[int, int]]:
        """Pairs (a, b) with b covering a in the root order."""
        num = len(self.positive_roots)
        out = []
        for a in range(num):
            for b in range(a + 1, num):
                if not self.leq(a, b):
                    continue
                between = self.upset_bits[a] & self.downset_bits[b]
                between &= ~((1 << a) | (1 << b))
                if between == 0:
                    out.append((a, b))
        return out

    def __repr__(self) -> str:
        return f"RootSystem({self.dynkin}, {len(self.positive_roots)} roots)"


def build_root_system(t: DynkinType | str) -> RootSystem:
    """Build the positive root system of a finite Dynkin type.

    >>> rs = build_root_system("B2")
    >>> rs.positive_roots
    ((0, 1), (1, 0), (1, 1), (1, 2))
    >>> rs.coxeter_number, rs.exponents
    (4, (1, 3))
    """
    return RootSystem(t)


def root_leq(rs: RootSystem, a: int, b: int) -> bool:
    """True iff root ``b`` minus root ``a`` has no negative coefficient."""
    return rs.leq(a, b)


def exponents_from_heights(rs: RootSystem) -> list[int]:
    """Exponents as the dual partition of the height distribution.

    With m_k the number of positive roots of height k, the dual partition
    of (m_1, m_2, ...) sorted increasingly gives the exponents.
    """
    counts = Counter(rs.heights)
    parts = [counts[k] for k in range(1, max(counts) + 1)]
    dual = [sum(1 for p in parts if p >= j) for j in range(1, max(parts) + 1)]
    return sorted(dual)
