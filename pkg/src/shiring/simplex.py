"""Exact simplex solver for small linear programs over the rationals.

Solves  max c.x  subject to  A x <= b, x >= 0  entirely in Fraction
arithmetic.  Pivoting uses Bland's smallest-index rule in both phases, so
the method cannot cycle and always terminates.  Intended for the small
feasibility programs of this package (tens of rows), not for scale.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class _Dictionary:
    # Row i encodes x_basic[i] = const[i] + sum_j coef[i][j] * x_nonbasic[j];
    # the objective is z = z0 + sum_j obj[j] * x_nonbasic[j].
    def __init__(self, a, b, c):
        m, n = len(a), len(c)
        self.n_struct = n
        self.nonbasic = list(range(n))
        self.basic = [n + i for i in range(m)]
        self.const = [Fraction(x) for x in b]
        self.coef = [[-Fraction(x) for x in row] for row in a]
        self.z0 = Fraction(0)
        self.obj = [Fraction(x) for x in c]

    def entering(self):
        # Bland: smallest variable id among improving columns
        best = None
        for j, var in enumerate(self.nonbasic):
            if self.obj[j] > 0 and (best is None or var < self.nonbasic[best]):
                best = j
        return best

    def leaving(self, col):
        # tightest ratio; ties broken by smallest basic variable id
        best = None
        best_limit = None
        for i in range(len(self.basic)):
            k = self.coef[i][col]
            if k >= 0:
                continue
            limit = -self.const[i] / k
            if (
                best is None
                or limit < best_limit
                or (limit == best_limit and self.basic[i] < self.basic[best])
            ):
                best, best_limit = i, limit
        return best

    def pivot(self, row, col):
        k = self.coef[row][col]
        new_const = -self.const[row] / k
        new_row = [-v / k for v in self.coef[row]]
        new_row[col] = Fraction(1) / k
        for i in range(len(self.basic)):
            if i == row:
                continue
            f = self.coef[i][col]
            if f == 0:
                continue
            self.const[i] += f * new_const
            ri = self.coef[i]
            for j in range(len(new_row)):
                ri[j] = f * new_row[j] if j == col else ri[j] + f * new_row[j]
        f = self.obj[col]
        if f != 0:
            self.z0 += f * new_const
            for j in range(len(new_row)):
                self.obj[j] = (
                    f * new_row[j] if j == col else self.obj[j] + f * new_row[j]
                )
        self.const[row] = new_const
        self.coef[row] = new_row
        self.basic[row], self.nonbasic[col] = (
            self.nonbasic[col],
            self.basic[row],
        )

    def run(self):
        while True:
            col = self.entering()
            if col is None:
                return OPTIMAL
            row = self.leaving(col)
            if row is None:
                return UNBOUNDED
            self.pivot(row, col)

    def solution(self):
        x = [Fraction(0)] * self.n_struct
        for i, var in enumerate(self.basic):
            if var < self.n_struct:
                x[var] = self.const[i]
        return x


def solve_lp(a, b, c):
    """Maximize c.x subject to A x <= b and x >= 0, exactly.

    Returns (status, value, x) with Fractions; value and x are None unless
    the status is optimal.
    """
    d = _Dictionary(a, b, c)
    m, n = len(d.basic), d.n_struct
    if any(v < 0 for v in d.const):
        # Phase 1: bring in an auxiliary variable (largest id, so Bland
        # prefers driving it back out), maximize its negative.
        aux = n + m
        saved_obj = d.obj
        d.obj = [Fraction(0)] * n + [Fraction(-1)]
        d.nonbasic.append(aux)
        for row in d.coef:
            row.append(Fraction(1))
        worst = min(range(m), key=lambda i: (d.const[i], d.basic[i]))
        d.pivot(worst, n)
        status = d.run()
        if status != OPTIMAL or d.z0 != 0:
            return INFEASIBLE, None, None
        if aux in d.basic:
            # degenerate: pivot the auxiliary variable out on any column
            row = d.basic.index(aux)
            col = next(j for j in range(len(d.nonbasic)) if d.coef[row][j] != 0)
            d.pivot(row, col)
        col = d.nonbasic.index(aux)
        d.nonbasic.pop(col)
        for row in d.coef:
            row.pop(col)
        # restore the real objective in terms of the current nonbasics
        d.z0 = Fraction(0)
        d.obj = [Fraction(0)] * len(d.nonbasic)
        for var in range(n):
            cv = saved_obj[var]
            if cv == 0:
                continue
            if var in d.nonbasic:
                d.obj[d.nonbasic.index(var)] += cv
            else:
                i = d.basic.index(var)
                d.z0 += cv * d.const[i]
                for j in range(len(d.nonbasic)):
                    d.obj[j] += cv * d.coef[i][j]
    status = d.run()
    if status != OPTIMAL:
        return status, None, None
    return OPTIMAL, d.z0, d.solution()
