"""Column representative enumeration and determinant-sign tuple properties.

A tuple (C_0, ..., C_k) of n x n matrices has (k+1)^n column representative
matrices; their determinant signs decide the column W, column W0 and the
determinant form of the column ND-W property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .errors import CapExceeded, DimensionError, InputError
from .rational import Mat, det, mat, rat_str

SELECTOR_CAP = 10**6


@dataclass(frozen=True)
class MatrixTuple:
    """Ordered tuple (C_0, ..., C_k) of square rational matrices, all n x n."""

    n: int
    k: int
    mats: tuple

    def __post_init__(self):
        if self.k < 1:
            raise InputError("matrix tuple needs k >= 1")
        if len(self.mats) != self.k + 1:
            raise InputError("matrix tuple needs k + 1 matrices")
        for m in self.mats:
            if len(m) != self.n or any(len(row) != self.n for row in m):
                raise DimensionError("all matrices must be n x n")


def make_tuple(mats) -> MatrixTuple:
    ms = tuple(mat(m) for m in mats)
    return MatrixTuple(n=len(ms[0]), k=len(ms) - 1, mats=ms)


@dataclass(frozen=True)
class PropertyVerdict:
    """Decision of a named property with a re-checkable witness on failure."""

    property_name: str
    holds: bool
    witness: Optional[dict] = None
    certificate: str = ""


def selector_count(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise InputError("selector_count needs n >= 1 and k >= 1")
    return (k + 1) ** n


def selectors(n: int, k: int) -> Iterator[tuple]:
    """All column selectors in mixed-radix lexicographic order.

    Column 1 is the most significant digit, so witnesses are deterministic.
    """
    yield from product(range(k + 1), repeat=n)


def representative_matrix(t: MatrixTuple, selector: tuple) -> Mat:
    """Matrix whose column j is column j of C_{selector[j]}."""
    if len(selector) != t.n:
        raise DimensionError("selector length must equal n")
    if any(not 0 <= s <= t.k for s in selector):
        raise InputError("selector entry out of range")
    return tuple(
        tuple(t.mats[selector[j]][i][j] for j in range(t.n)) for i in range(t.n)
    )


def _check_selector_cap(t: MatrixTuple, force: bool) -> None:
    count = selector_count(t.n, t.k)
    if count > SELECTOR_CAP and not force:
        raise CapExceeded(
            f"(k+1)^n = {count} exceeds the selector cap {SELECTOR_CAP}; "
            "pass force=True (CLI: --force) to override"
        )


def representative_dets(t: MatrixTuple, force: bool = False) -> Iterator[tuple]:
    """Yield (selector, determinant) over all representatives, in order."""
    _check_selector_cap(t, force)
    for sel in selectors(t.n, t.k):
        yield sel, det(representative_matrix(t, sel))


def check_column_w(
    t: MatrixTuple, exhaustive: bool = False, force: bool = False
) -> PropertyVerdict:
    """Column W-property: every representative determinant strictly positive,
    or every one strictly negative."""
    name = "column_w"
    sign = 0
    first_sel = None
    violations = []
    for sel, d in representative_dets(t, force):
        if d == 0:
            violations.append({"selector": list(sel), "determinant": "0"})
        elif sign == 0:
            sign = 1 if d > 0 else -1
            first_sel = {"selector": list(sel), "determinant": rat_str(d)}
        elif (d > 0) != (sign > 0):
            violations.append(
                {"conflict_with": first_sel, "selector": list(sel),
                 "determinant": rat_str(d)}
            )
        if violations and not exhaustive:
            break
    if violations:
        return PropertyVerdict(
            name, False, {"violations": violations},
            "a representative determinant is zero or two have opposite signs",
        )
    return PropertyVerdict(
        name, True, None,
        f"all {selector_count(t.n, t.k)} representative determinants are "
        f"strictly {'positive' if sign >= 0 else 'negative'}",
    )


def check_column_w0(t: MatrixTuple, force: bool = False) -> PropertyVerdict:
    """Column W0-property: determinants all >= 0 with one > 0, or all <= 0
    with one < 0."""
    name = "column_w0"
    pos = neg = None
    for sel, d in representative_dets(t, force):
        if d > 0 and pos is None:
            pos = {"selector": list(sel), "determinant": rat_str(d)}
        elif d < 0 and neg is None:
            neg = {"selector": list(sel), "determinant": rat_str(d)}
        if pos is not None and neg is not None:
            return PropertyVerdict(
                name, False, {"positive": pos, "negative": neg},
                "representative determinants of both strict signs exist",
            )
    if pos is None and neg is None:
        return PropertyVerdict(
            name, False, {"all_determinants_zero": True},
            "every representative determinant is zero",
        )
    return PropertyVerdict(
        name, True, None,
        "all representative determinants share a weak sign and one is strict",
    )


def check_column_ndw_det(t: MatrixTuple, force: bool = False) -> PropertyVerdict:
    """Determinant form of the column ND-W property: no representative is
    singular."""
    name = "column_ndw"
    for sel, d in representative_dets(t, force):
        if d == 0:
            return PropertyVerdict(
                name, False, {"selector": list(sel), "determinant": "0"},
                "a singular column representative exists",
            )
    return PropertyVerdict(
        name, True, None,
        f"all {selector_count(t.n, t.k)} representative determinants are nonzero",
    )
