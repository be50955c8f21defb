"""Single-matrix class oracles: Z, M, P, nondegenerate, column sufficient."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .csw import check_csw
from .errors import CapExceeded, DimensionError
from .rational import Mat, det, identity, inverse, rat_str
from .representatives import PropertyVerdict, make_tuple

MINOR_CAP = 16


def _require_square(m: Mat) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("square matrix required")
    return n


def is_z(m: Mat) -> PropertyVerdict:
    """Z-matrix: all off-diagonal entries nonpositive."""
    n = _require_square(m)
    for i in range(n):
        for j in range(n):
            if i != j and m[i][j] > 0:
                return PropertyVerdict(
                    "z", False,
                    {"row": i + 1, "col": j + 1, "value": rat_str(m[i][j])},
                    "a positive off-diagonal entry exists",
                )
    return PropertyVerdict("z", True, None, "all off-diagonal entries are nonpositive")


def is_m(m: Mat) -> PropertyVerdict:
    """M-matrix: Z-matrix with a nonnegative inverse."""
    z = is_z(m)
    if not z.holds:
        return PropertyVerdict("m", False, z.witness, "not a Z-matrix")
    inv = inverse(m)
    if inv is None:
        return PropertyVerdict("m", False, {"singular": True}, "matrix is singular")
    for i, row in enumerate(inv):
        for j, v in enumerate(row):
            if v < 0:
                return PropertyVerdict(
                    "m", False,
                    {"inverse_row": i + 1, "inverse_col": j + 1, "value": rat_str(v)},
                    "the inverse has a negative entry",
                )
    return PropertyVerdict("m", True, None, "Z-matrix with nonnegative inverse")


def principal_minors(m: Mat, cap: int = MINOR_CAP) -> list:
    """All 2^n - 1 principal minors as (index_set, value), index sets in
    lexicographic order; indices are 1-based."""
    n = _require_square(m)
    if n > cap:
        raise CapExceeded(f"principal minor enumeration capped at n <= {cap}")
    out = []
    for subset in _index_subsets(n):
        sub = tuple(tuple(m[i][j] for j in subset) for i in subset)
        out.append((tuple(i + 1 for i in subset), det(sub)))
    return out


def _index_subsets(n: int) -> Iterator[tuple]:
    for size in range(1, n + 1):
        yield from combinations(range(n), size)


def _minor_verdict(m: Mat, name: str, bad, certificate_ok: str, certificate_bad: str) -> PropertyVerdict:
    for index_set, value in principal_minors(m):
        if bad(value):
            return PropertyVerdict(
                name, False,
                {"index_set": list(index_set), "minor": rat_str(value)},
                certificate_bad,
            )
    return PropertyVerdict(name, True, None, certificate_ok)


def is_p(m: Mat) -> PropertyVerdict:
    """P-matrix: every principal minor strictly positive."""
    return _minor_verdict(
        m, "p", lambda v: v <= 0,
        "all principal minors are positive",
        "a nonpositive principal minor exists",
    )


def is_nondegenerate(m: Mat) -> PropertyVerdict:
    """Nondegenerate matrix: every principal minor nonzero."""
    return _minor_verdict(
        m, "nondegenerate", lambda v: v == 0,
        "all principal minors are nonzero",
        "a zero principal minor exists",
    )


def is_column_sufficient(m: Mat) -> PropertyVerdict:
    """Column sufficiency of a single matrix, decided through the pair
    oracle on the tuple (I, m): x * (m x) <= 0 must force x * (m x) = 0."""
    n = _require_square(m)
    verdict = check_csw(make_tuple([identity(n), m]))
    witness = None
    if verdict.witness is not None:
        pattern, xs = verdict.witness
        witness = {
            "pattern": [list(row) for row in pattern.signs],
            "x": [[str(v) for v in x] for x in xs],
        }
    return PropertyVerdict(
        "column_sufficient", verdict.holds, witness,
        "decided via the tuple (I, C); " + verdict.decided_by,
    )
