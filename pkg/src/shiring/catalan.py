"""Catalan counts attached to a root system and their q-refinements.

The q-analog counts antichains by the size of the generated upper ideal.
For the A family the same distribution is carried by Dyck paths graded by
the number of complete cells between a path and the maximal path (all up
steps first); ``dyck_area_polynomial`` enumerates paths explicitly and is
kept independent of the poset code so the two routes check each other.
That orientation of the area statistic matches the ideal-size grading
directly, with no coefficient reversal; see the tests pinning A1..A5.
"""

from __future__ import annotations

from dataclasses import dataclass

from .antichains import AntichainPoset
from .errors import InvariantError
from .root_system import RootSystem


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with integer coefficients, low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, q: int = 1) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def reverse(self) -> "QPolynomial":
        """Coefficients read from the top degree down."""
        return QPolynomial(tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                q = "q" if k == 1 else f"q^{k}"
                terms.append(q if c == 1 else f"{c}*{q}")
        return " + ".join(terms) if terms else "0"


def catalan_number(rs: RootSystem) -> int:
    """The Catalan number of the type from its Coxeter number and exponents.

    The product of (h + e + 1) over the exponents, divided by the product
    of (e + 1), reduced once at the end; the division must be exact.

    >>> catalan_number(RootSystem("A3"))
    14
    """
    h = rs.coxeter_number
    num = 1
    den = 1
    for e in rs.exponents:
        num *= h + e + 1
        den *= e + 1
    q, r = divmod(num, den)
    if r != 0:
        raise InvariantError(
            f"{rs.dynkin}: Catalan product {num}/{den} is not an integer"
        )
    return q


def q_catalan(rs: RootSystem, ap: AntichainPoset) -> QPolynomial:
    """Antichains counted by the size of their upper ideal."""
    coeffs = [0] * (len(rs.positive_roots) + 1)
    for size in ap.ideal_sizes:
        coeffs[size] += 1
    return QPolynomial(tuple(coeffs))


def graded_distribution(ap: AntichainPoset) -> list[int]:
    """Entry k counts the antichains of cardinality k."""
    top = max(len(p) for p in ap.antichains)
    counts = [0] * (top + 1)
    for p in ap.antichains:
        counts[len(p)] += 1
    return counts


def dyck_area_polynomial(n: int) -> QPolynomial:
    """Dyck paths of semilength n + 1 graded by cells above the path.

    A path is a sequence of up and down unit steps staying at height >= 0.
    The statistic counts the complete unit cells between the path and the
    maximal path (all ups, then all downs): each down step preceded by u
    up steps contributes (n + 1) - u cells.  Enumeration is by explicit
    backtracking over all paths.
    """
    if not 1 <= n <= 12:
        raise ValueError(f"supported for 1 <= n <= 12, got {n}")
    m = n + 1
    coeffs = [0] * (m * (m - 1) // 2 + 1)

    def walk(ups: int, downs: int, cells: int) -> None:
        if ups == m and downs == m:
            coeffs[cells] += 1
            return
        if ups < m:
            walk(ups + 1, downs, cells)
        if downs < ups:
            walk(ups, downs + 1, cells + (m - ups))

    walk(0, 0, 0)
    return QPolynomial(tuple(coeffs))
