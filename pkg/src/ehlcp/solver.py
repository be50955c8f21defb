"""Exact EHLCP solver by complementarity-branch enumeration.

Each of the 2^{kn} branch patterns pins one side of every wedge condition,
turning the problem into a linear system plus box inequalities.  Branches
with singular pinned systems can contribute whole polyhedral pieces; their
dimension and a kernel basis are computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .classes import is_m
from .errors import CapExceeded, DimensionError, InputError
from .linprog import lp_solve
from .rational import (
    Vec,
    inverse,
    mat_vec,
    pointwise,
    solve_linear,
    vec_add,
    vec_scale,
    zeros,
)
from .representatives import MatrixTuple

BRANCH_CAP = 2**20

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class EhlcpInstance:
    """Problem data: matrix tuple, strictly positive bounds d_1..d_{k-1}, q."""

    matrix_tuple: MatrixTuple
    d: tuple  # k-1 strictly positive vectors of dimension n
    q: Vec

    def __post_init__(self):
        t = self.matrix_tuple
        if len(self.d) != t.k - 1:
            raise InputError("d must contain exactly k - 1 vectors")
        for dj in self.d:
            if len(dj) != t.n:
                raise DimensionError("each d_j must have dimension n")
            if any(x <= 0 for x in dj):
                raise InputError("d must be strictly positive")
        if len(self.q) != t.n:
            raise DimensionError("q must have dimension n")


@dataclass(frozen=True)
class SolutionTuple:
    """Candidate solution vectors (x_0, ..., x_k)."""

    xs: tuple  # k+1 vectors of dimension n


@dataclass(frozen=True)
class BranchPattern:
    """k x n wedge side choices.

    Row 1 column r: x_{0,r} = 0 (left) or x_{1,r} = 0 (right).
    Row j+1 column r: x_{j,r} = d_{j,r} (left) or x_{j+1,r} = 0 (right).
    """

    choice: tuple  # tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class SolutionPiece:
    """One branch's contribution: a point, the piece dimension, and a basis
    of directions spanning the piece's affine hull.  pinned_directions are
    the remaining kernel directions of the branch system, blocked by the
    inequality constraints."""

    pattern: BranchPattern
    point: SolutionTuple
    piece_dimension: int
    kernel_basis: tuple = field(default_factory=tuple)
    pinned_directions: tuple = field(default_factory=tuple)


def _wedge_ok(u: Vec, v: Vec) -> bool:
    # u ^ v = 0 via the equivalent form: both nonnegative, product zero
    return (
        all(x >= 0 for x in u)
        and all(x >= 0 for x in v)
        and all(p == 0 for p in pointwise(u, v))
    )


def is_solution(inst: EhlcpInstance, x: SolutionTuple) -> bool:
    """Exact validity check of the EHLCP system."""
    t = inst.matrix_tuple
    if len(x.xs) != t.k + 1 or any(len(v) != t.n for v in x.xs):
        raise DimensionError("solution tuple shape mismatch")
    lhs = mat_vec(t.mats[0], x.xs[0])
    rhs = list(inst.q)
    for i in range(1, t.k + 1):
        contrib = mat_vec(t.mats[i], x.xs[i])
        rhs = [a + b for a, b in zip(rhs, contrib)]
    if any(a != b for a, b in zip(lhs, rhs)):
        return False
    if not _wedge_ok(x.xs[0], x.xs[1]):
        return False
    for j in range(1, t.k):
        slack = tuple(inst.d[j - 1][r] - x.xs[j][r] for r in range(t.n))
        if not _wedge_ok(slack, x.xs[j + 1]):
            return False
    return True


def enumerate_branches(n: int, k: int, cap: int = BRANCH_CAP) -> Iterator[BranchPattern]:
    """All 2^{kn} branch patterns in row-major binary order (left before right)."""
    if n < 1 or k < 1:
        raise InputError("enumerate_branches needs n >= 1 and k >= 1")
    total = 2 ** (k * n)
    if total > cap:
        raise CapExceeded(
            f"2^(k*n) = {total} exceeds the branch cap {cap}"
        )
    for flat in product((LEFT, RIGHT), repeat=k * n):
        yield BranchPattern(tuple(flat[j * n : (j + 1) * n] for j in range(k)))


def _stack_index(n: int, i: int, r: int) -> int:
    return i * n + r


def _branch_system(inst: EhlcpInstance, b: BranchPattern):
    """Linear system rows (pins + main equation) over the stacked unknowns."""
    t = inst.matrix_tuple
    n, k = t.n, t.k
    dim = (k + 1) * n
    rows, rhs = [], []
    for row in range(n):
        coeffs = [Fraction(0)] * dim
        for r in range(n):
            coeffs[_stack_index(n, 0, r)] = t.mats[0][row][r]
            for i in range(1, k + 1):
                coeffs[_stack_index(n, i, r)] = -t.mats[i][row][r]
        rows.append(coeffs)
        rhs.append(inst.q[row])
    for j in range(k):
        for r in range(n):
            coeffs = [Fraction(0)] * dim
            if j == 0:
                target = (0, r) if b.choice[0][r] == LEFT else (1, r)
                value = Fraction(0)
            elif b.choice[j][r] == LEFT:
                target = (j, r)
                value = inst.d[j - 1][r]
            else:
                target = (j + 1, r)
                value = Fraction(0)
            coeffs[_stack_index(n, *target)] = Fraction(1)
            rows.append(coeffs)
            rhs.append(value)
    return tuple(tuple(r) for r in rows), tuple(rhs)


def _inequalities(inst: EhlcpInstance):
    """Box constraints as (row, rhs) pairs meaning row . x >= rhs."""
    t = inst.matrix_tuple
    n, k = t.n, t.k
    dim = (k + 1) * n
    out = []
    for i in range(k + 1):
        for r in range(n):
            row = [Fraction(0)] * dim
            row[_stack_index(n, i, r)] = Fraction(1)
            out.append((tuple(row), Fraction(0)))  # x_{i,r} >= 0
    for j in range(1, k):
        for r in range(n):
            row = [Fraction(0)] * dim
            row[_stack_index(n, j, r)] = Fraction(-1)
            out.append((tuple(row), -inst.d[j - 1][r]))  # x_{j,r} <= d_{j,r}
    return out


def _split(n: int, k: int, stacked: Vec) -> SolutionTuple:
    return SolutionTuple(
        tuple(tuple(stacked[i * n : (i + 1) * n]) for i in range(k + 1))
    )


def solve_branch(inst: EhlcpInstance, b: BranchPattern) -> Optional[SolutionPiece]:
    """Solution piece of one branch, or None when the branch is infeasible."""
    t = inst.matrix_tuple
    n, k = t.n, t.k
    a_rows, rhs = _branch_system(inst, b)
    res = solve_linear(a_rows, rhs)
    if res.kind == "inconsistent":
        return None
    ineqs = _inequalities(inst)
    if res.kind == "unique":
        point = res.particular
        if any(
            sum(row[j] * point[j] for j in range(len(point))) < bound
            for row, bound in ineqs
        ):
            return None
        return SolutionPiece(b, _split(n, k, point), 0)
    return _affine_piece(inst, b, res.particular, res.kernel_basis, ineqs)


def _affine_piece(inst, b, particular, kernel, ineqs) -> Optional[SolutionPiece]:
    """Feasibility polytope of an underdetermined branch, in the kernel
    coordinates: a relative-interior point, the affine-hull dimension, and a
    spanning basis."""
    t = inst.matrix_tuple
    n, k = t.n, t.k
    dim_a = len(kernel)
    # inequality c in alpha coordinates: grad_c . alpha >= bound_c
    grads, bounds = [], []
    for row, bound in ineqs:
        base = sum(row[j] * particular[j] for j in range(len(particular)))
        grad = tuple(
            sum(row[j] * direction[j] for j in range(len(direction)))
            for direction in kernel
        )
        grads.append(grad)
        bounds.append(bound - base)  # grad . alpha >= bounds

    alpha_ineqs = [
        (grad, bound)
        for grad, bound in zip(grads, bounds)
        if any(g != 0 for g in grad)
    ]
    if any(
        bound > 0
        for grad, bound in zip(grads, bounds)
        if all(g == 0 for g in grad)
    ):
        return None  # a pinned component violates its bound identically
    feas = lp_solve(zeros(dim_a), [], alpha_ineqs)
    if feas.status != "optimal":
        return None
    # classify each inequality: implicit equality on the whole polytope, or
    # attainably slack; average the slack maximizers for a relative-interior
    # point (slack capped at 1 so unbounded pieces stay bounded problems)
    interior_points = []
    implicit_grads = []
    objective = (Fraction(0),) * dim_a + (Fraction(1),)
    base_rows = [(tuple(g) + (Fraction(0),), bd) for g, bd in alpha_ineqs]
    cap_row = ((Fraction(0),) * dim_a + (Fraction(-1),), Fraction(-1))  # s <= 1
    for grad, bound in alpha_ineqs:
        # maximize s subject to grad . alpha - s >= bound, all constraints, s <= 1
        rows = base_rows + [(tuple(grad) + (Fraction(-1),), bound), cap_row]
        res = lp_solve(objective, [], rows)
        assert res.status == "optimal"
        if res.objective_value == 0:
            implicit_grads.append(grad)
        else:
            interior_points.append(res.point[:dim_a])
    if interior_points:
        total = [Fraction(0)] * dim_a
        for p in interior_points:
            total = [a + x for a, x in zip(total, p)]
        alpha = tuple(x / len(interior_points) for x in total)
    else:
        alpha = feas.point

    # affine hull: alpha directions annihilating every implicit equality
    if implicit_grads:
        null = solve_linear(tuple(implicit_grads), zeros(len(implicit_grads)))
        free = null.kernel_basis
    else:
        free = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(dim_a))
            for i in range(dim_a)
        )
    basis = tuple(
        tuple(
            sum(beta[m] * kernel[m][j] for m in range(dim_a))
            for j in range(len(particular))
        )
        for beta in free
    )

    stacked = list(particular)
    for m in range(dim_a):
        stacked = [x + alpha[m] * kernel[m][j] for j, x in enumerate(stacked)]
    point = _split(n, k, tuple(stacked))
    return SolutionPiece(b, point, len(basis), basis, tuple(kernel))


def solve_all(inst: EhlcpInstance, cap: int = BRANCH_CAP) -> list:
    """Union of all branch pieces, dimension-0 points deduplicated exactly."""
    t = inst.matrix_tuple
    pieces = []
    seen_points = set()
    for b in enumerate_branches(t.n, t.k, cap):
        piece = solve_branch(inst, b)
        if piece is None:
            continue
        if piece.piece_dimension == 0:
            key = piece.point.xs
            if key in seen_points:
                continue
            seen_points.add(key)
        pieces.append(piece)
    return pieces


def solve_m_fast(inst: EhlcpInstance) -> Optional[SolutionTuple]:
    """Closed-form solution (C_0^{-1} q, 0, ..., 0) when C_0 is an M-matrix
    and q is strictly positive; None when the hypotheses fail."""
    t = inst.matrix_tuple
    if any(x <= 0 for x in inst.q):
        return None
    if not is_m(t.mats[0]).holds:
        return None
    inv = inverse(t.mats[0])
    x0 = mat_vec(inv, inst.q)
    candidate = SolutionTuple((tuple(x0),) + tuple(zeros(t.n) for _ in range(t.k)))
    if not is_solution(inst, candidate):
        return None
    return candidate
