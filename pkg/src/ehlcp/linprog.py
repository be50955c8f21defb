"""Exact rational linear programming by dense two-phase simplex.

Variables are free; constraints are equalities (row . x = rhs) and
inequalities (row . x >= rhs); the objective is maximized.  Bland's
least-index rule guarantees termination.  Everything is Fraction-exact,
which is what makes the downstream sign-pattern decisions trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionError
from .rational import Vec, rat

Constraint = tuple  # (row: Vec, rhs: Fraction)


@dataclass(frozen=True)
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    point: Optional[Vec] = None
    objective_value: Optional[Fraction] = None


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
    basis[row] = col


def _run_simplex(tab: list[list[Fraction]], basis: list[int], cost: list[Fraction]) -> str:
    """Maximize cost over the tableau rows [A | b]; Bland's rule throughout.

    A reduced-cost row is maintained alongside the constraint rows so the
    entering-column scan is a lookup instead of an m-term dot product.
    """
    m = len(tab)
    n_vars = len(cost)
    zero = Fraction(0)
    reduced = [
        cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(m) if tab[i][j])
        for j in range(n_vars)
    ]
    while True:
        enter = -1
        for j in range(n_vars):
            if reduced[j] > 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best: Optional[Fraction] = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(tab, basis, leave, enter)
        f = reduced[enter]
        if f:
            pivot_row = tab[leave]
            for j in range(n_vars):
                if pivot_row[j]:
                    reduced[j] -= f * pivot_row[j]
            reduced[enter] = zero


def lp_solve(
    objective: Vec,
    eq: Sequence[Constraint] = (),
    ineq: Sequence[Constraint] = (),
) -> LpResult:
    """Maximize objective . x subject to eq rows (= rhs) and ineq rows (>= rhs)."""
    dim = len(objective)
    for row, _ in list(eq) + list(ineq):
        if len(row) != dim:
            raise DimensionError("constraint row dimension mismatch")

    # standard form: x = u - v with u, v >= 0, plus one surplus per inequality
    n_ineq = len(ineq)
    n_std = 2 * dim + n_ineq
    rows: list[list[Fraction]] = []
    for row, rhs in eq:
        rows.append([rat(x) for x in row] + [-rat(x) for x in row]
                    + [Fraction(0)] * n_ineq + [rat(rhs)])
    for idx, (row, rhs) in enumerate(ineq):
        surplus = [Fraction(0)] * n_ineq
        surplus[idx] = Fraction(-1)
        rows.append([rat(x) for x in row] + [-rat(x) for x in row]
                    + surplus + [rat(rhs)])
    for row in rows:
        if row[-1] < 0:
            row[:] = [-x for x in row]

    m = len(rows)
    # phase 1: artificial basis, maximize -(sum of artificials)
    tab = [row[:-1] + [Fraction(1 if j == i else 0) for j in range(m)] + [row[-1]]
           for i, row in enumerate(rows)]
    basis = [n_std + i for i in range(m)]
    cost1 = [Fraction(0)] * n_std + [Fraction(-1)] * m
    _run_simplex(tab, basis, cost1)
    if sum(tab[i][-1] for i in range(m) if basis[i] >= n_std) != 0:
        return LpResult("infeasible")
    # drive remaining (zero-valued) artificials out of the basis
    drop_rows = []
    for i in range(m):
        if basis[i] >= n_std:
            col = next((j for j in range(n_std) if tab[i][j] != 0), None)
            if col is None:
                drop_rows.append(i)
            else:
                _pivot(tab, basis, i, col)
    for i in sorted(drop_rows, reverse=True):
        del tab[i]
        del basis[i]

    # phase 2 on the original columns
    tab = [row[:n_std] + [row[-1]] for row in tab]
    obj = [rat(x) for x in objective]
    cost2 = obj + [-x for x in obj] + [Fraction(0)] * n_ineq
    status = _run_simplex(tab, basis, cost2)
    if status == "unbounded":
        return LpResult("unbounded")
    values = [Fraction(0)] * n_std
    for i, b in enumerate(basis):
        values[b] = tab[i][-1]
    point = tuple(values[j] - values[dim + j] for j in range(dim))
    value = sum(o * p for o, p in zip(obj, point))
    return LpResult("optimal", point, value)
