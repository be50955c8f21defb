"""Instance-file parsing and exact JSON serialization.

One schema serves check and solve: {"n", "k", "C", "d", "q"} with rational
entries written as integers, decimal strings or "p/q" strings.  Rationals
are serialized back as exact strings, never floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import InputError
from .rational import Mat, Vec, rat, rat_str, zeros
from .representatives import MatrixTuple, make_tuple
from .solver import EhlcpInstance, SolutionPiece, SolutionTuple


def _parse_matrix(obj: Any, n: int) -> list:
    if not isinstance(obj, list):
        raise InputError("matrix must be an array")
    if obj and isinstance(obj[0], list):
        rows = obj
    else:
        if len(obj) != n * n:
            raise InputError("flat matrix must have n*n entries")
        rows = [obj[i * n : (i + 1) * n] for i in range(n)]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError("matrix must be n x n")
    return rows


def parse_instance(doc: Any) -> EhlcpInstance:
    """Validate and convert a parsed JSON document to an exact instance."""
    if not isinstance(doc, dict):
        raise InputError("instance document must be a JSON object")
    try:
        n = int(doc["n"])
        k = int(doc["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("instance document needs integer fields n and k") from exc
    if n < 1 or k < 1:
        raise InputError("n and k must be positive")
    mats = doc.get("C")
    if not isinstance(mats, list) or len(mats) != k + 1:
        raise InputError("C must be an array of k + 1 matrices")
    t = make_tuple([_parse_matrix(m, n) for m in mats])
    d_raw = doc.get("d", [])
    if d_raw is None:
        d_raw = []
    if len(d_raw) != k - 1:
        raise InputError("d must contain exactly k - 1 vectors")
    d = []
    for dj in d_raw:
        if len(dj) != n:
            raise InputError("each d_j must have dimension n")
        vals = tuple(rat(x) for x in dj)
        if any(x <= 0 for x in vals):
            raise InputError("d must be strictly positive")
        d.append(vals)
    q_raw = doc.get("q")
    if q_raw is None:
        q = zeros(n)
    else:
        if len(q_raw) != n:
            raise InputError("q must have dimension n")
        q = tuple(rat(x) for x in q_raw)
    return EhlcpInstance(t, tuple(d), q)


def load_instance(path: str) -> EhlcpInstance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh, parse_float=Fraction)
    except OSError as exc:
        raise InputError(f"cannot read instance file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in instance file: {exc}") from exc
    return parse_instance(doc)


def vec_to_json(v: Vec) -> list:
    return [rat_str(x) for x in v]


def mat_to_json(m: Mat) -> list:
    return [vec_to_json(row) for row in m]


def tuple_to_json(t: MatrixTuple) -> dict:
    return {"n": t.n, "k": t.k, "C": [mat_to_json(m) for m in t.mats]}


def instance_to_json(inst: EhlcpInstance) -> dict:
    t = inst.matrix_tuple
    return {
        "n": t.n,
        "k": t.k,
        "C": [mat_to_json(m) for m in t.mats],
        "d": [vec_to_json(dj) for dj in inst.d],
        "q": vec_to_json(inst.q),
    }


def solution_to_json(x: SolutionTuple) -> list:
    return [vec_to_json(v) for v in x.xs]


def piece_to_json(piece: SolutionPiece) -> dict:
    return {
        "branch": [list(row) for row in piece.pattern.choice],
        "point": solution_to_json(piece.point),
        "dimension": piece.piece_dimension,
        "kernel_basis": [vec_to_json(v) for v in piece.kernel_basis],
    }


def dump_json(doc: Any) -> str:
    """Canonical serialization: sorted keys, stable separators, newline end."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
