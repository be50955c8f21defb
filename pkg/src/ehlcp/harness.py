"""Seeded generators and end-to-end theorem verification suites.

The random stream is a SplitMix64 generator written out in full below so
reports are reproducible bit-for-bit from (seed, trial index) alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .classes import is_m, is_z
from .csw import check_cone_csw, check_csw, check_x_column_sufficiency
from .errors import InputError
from .io import instance_to_json, tuple_to_json
from .rational import (
    Mat,
    Vec,
    det,
    identity,
    inverse,
    mat,
    mat_mul,
    mat_vec,
    solve_linear,
    zeros,
)
from .representatives import (
    MatrixTuple,
    check_column_ndw_det,
    check_column_w,
    check_column_w0,
    make_tuple,
    representative_matrix,
)
from .csw import check_column_ndw_def
from .solver import EhlcpInstance, SolutionTuple, is_solution, solve_all, solve_m_fast

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64: state advances by the 64-bit golden ratio; outputs are the
    state mixed by two xor-shift-multiply rounds.

        state = (state + 0x9E3779B97F4A7C15) mod 2^64
        z = state
        z = ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
        z = ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2^64
        output = z xor (z >> 31)

    randint reduces by modulo; the bias is irrelevant at desk-scale ranges
    and keeps the stream identical across implementations.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] via modulo reduction."""
        if hi < lo:
            raise InputError("randint needs lo <= hi")
        return lo + self.next_u64() % (hi - lo + 1)


def subseed(seed: int, index: int) -> int:
    """Per-trial sub-seed: one SplitMix64 output of seed xor (index+1)*golden."""
    return SplitMix64((seed ^ ((index + 1) * _GOLDEN)) & _MASK).next_u64()


FAMILIES = ("generic", "column_w_constructive", "z_structured", "degenerate")


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int
    family: str = "generic"
    entry_range: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        if self.entry_range < 1 or self.n < 1 or self.k < 1:
            raise InputError("GenSpec needs n, k, entry_range >= 1")


def _random_matrix(rng: SplitMix64, n: int, lo: int, hi: int) -> Mat:
    return mat([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def gen_tuple(spec: GenSpec) -> MatrixTuple:
    """Deterministic tuple for the spec; family postconditions re-certified."""
    rng = SplitMix64(spec.seed)
    n, k, b = spec.n, spec.k, spec.entry_range
    if spec.family == "generic":
        return make_tuple([_random_matrix(rng, n, -b, b) for _ in range(k + 1)])
    if spec.family == "degenerate":
        mats = [list(map(list, _random_matrix(rng, n, -b, b))) for _ in range(k + 1)]
        which = rng.randint(0, k)
        col = rng.randint(0, n - 1)
        for row in mats[which]:
            row[col] = 0
        t = make_tuple(mats)
        assert not check_column_ndw_det(t).holds
        return t
    if spec.family == "column_w_constructive":
        for _ in range(1000):
            c0 = _random_matrix(rng, n, -b, b)
            if det(c0) != 0:
                break
        else:
            raise RuntimeError("no invertible C_0 found in 1000 attempts")
        mats = [c0]
        for _ in range(k):
            diag = [[Fraction(rng.randint(1, b) if i == j else 0) for j in range(n)]
                    for i in range(n)]
            mats.append(mat_mul(c0, tuple(tuple(row) for row in diag)))
        t = make_tuple(mats)
        assert check_column_w(t).holds
        return t
    # z_structured: C_0 = I and every C_i a Z-matrix
    mats = [identity(n)]
    for _ in range(k):
        rows = [[rng.randint(-b, b) if i == j else rng.randint(-b, 0)
                 for j in range(n)] for i in range(n)]
        mats.append(mat(rows))
    t = make_tuple(mats)
    assert all(is_z(m).holds for m in t.mats[1:])
    return t


def gen_instance(t: MatrixTuple, seed: int, entry_range: int = 2) -> EhlcpInstance:
    """Random instance data: d_j in {1..B}^n, q in {-B..B}^n."""
    rng = SplitMix64(seed)
    b = entry_range
    d = tuple(
        tuple(Fraction(rng.randint(1, b)) for _ in range(t.n))
        for _ in range(t.k - 1)
    )
    q = tuple(Fraction(rng.randint(-b, b)) for _ in range(t.n))
    return EhlcpInstance(t, d, q)


# --- golden data ------------------------------------------------------------

def paper_example_tuple() -> MatrixTuple:
    """The 2x2 triple (I, [[0,1],[-1,0]], I): cS-W without column W."""
    return make_tuple([identity(2), [[0, 1], [-1, 0]], identity(2)])


def skew_pair_tuple() -> MatrixTuple:
    return make_tuple([identity(2), [[0, 1], [-1, 0]]])


def segment_instance() -> EhlcpInstance:
    """HLCP instance whose solution set contains a whole segment."""
    return EhlcpInstance(skew_pair_tuple(), (), (Fraction(0), Fraction(1)))


def w0_not_csw_tuple() -> MatrixTuple:
    """(I, 0, 0): column W0 holds but cS-W fails."""
    z = [[0, 0], [0, 0]]
    return make_tuple([identity(2), z, z])


# --- constructed multi-solution instances -----------------------------------

def kernel_tuple_from_singular_representative(t: MatrixTuple) -> Optional[tuple]:
    """Nonzero (x_0..x_k) with disjoint supports solving the homogeneous
    system, built from a singular representative's kernel; None when the
    tuple has the determinant ND-W property."""
    verdict = check_column_ndw_det(t)
    if verdict.holds:
        return None
    selector = tuple(verdict.witness["selector"])
    rep = representative_matrix(t, selector)
    res = solve_linear(rep, zeros(t.n))
    y = res.kernel_basis[0]
    xs = [list(zeros(t.n)) for _ in range(t.k + 1)]
    for r in range(t.n):
        if y[r] == 0:
            continue
        i = selector[r]
        xs[i][r] = -y[r] if i == 0 else y[r]
    return tuple(tuple(x) for x in xs)


def instance_with_segment(t: MatrixTuple, kernel: tuple) -> tuple:
    """Instance whose solution set contains the segment [x, x + w].

    kernel must be a nonzero disjoint-support solution of the homogeneous
    system.  Returns (instance, endpoint_a, endpoint_b).
    """
    n, k = t.n, t.k
    scale = max(abs(v) for x in kernel for v in x)
    if scale == 0:
        raise InputError("kernel tuple must be nonzero")
    w = [tuple(v / scale for v in x) for x in kernel]  # all |entries| <= 1
    d = tuple((Fraction(2),) * n for _ in range(k - 1))
    xs = [list(zeros(n)) for _ in range(k + 1)]
    for r in range(n):
        m = next((i for i in range(k + 1) if w[i][r] != 0), None)
        if m is None:
            continue
        if m == 0:
            xs[0][r] = Fraction(1)
        else:
            for j in range(1, m):
                xs[j][r] = Fraction(2)  # saturate d_j so x_{j+1} may be positive
            xs[m][r] = Fraction(1)
    base = SolutionTuple(tuple(tuple(x) for x in xs))
    q = tuple(
        a - b
        for a, b in zip(
            mat_vec(t.mats[0], base.xs[0]),
            [
                sum(mat_vec(t.mats[i], base.xs[i])[r] for i in range(1, k + 1))
                for r in range(n)
            ],
        )
    )
    inst = EhlcpInstance(t, d, q)
    other = SolutionTuple(
        tuple(tuple(a + b for a, b in zip(x, wx)) for x, wx in zip(base.xs, w))
    )
    assert is_solution(inst, base) and is_solution(inst, other)
    return inst, base, other


# --- theorem verification ---------------------------------------------------

@dataclass
class TheoremReport:
    theorem_id: str
    trials: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _violation(spec: GenSpec, index: int, t: MatrixTuple, detail: str, **extra) -> dict:
    payload = {
        "seed": spec.seed,
        "trial": index,
        "tuple": tuple_to_json(t),
        "detail": detail,
    }
    payload.update(extra)
    return payload


def _trial_spec(spec: GenSpec, index: int) -> GenSpec:
    return GenSpec(spec.n, spec.k, spec.family, spec.entry_range,
                   subseed(spec.seed, index))


def solution_points(inst: EhlcpInstance) -> list:
    """Representative solution points: every piece point, plus a half-step
    along each spanning direction of positive-dimensional pieces."""
    points = []
    for piece in solve_all(inst):
        points.append(piece.point)
        for direction in piece.kernel_basis:
            stepped = _step(inst, piece.point, direction)
            if stepped is not None:
                points.append(stepped)
    unique = []
    seen = set()
    for p in points:
        if p.xs not in seen:
            seen.add(p.xs)
            unique.append(p)
    return unique


def _step(inst: EhlcpInstance, point: SolutionTuple, direction: Vec) -> Optional[SolutionTuple]:
    """point + (half the largest feasible step) along a stacked direction."""
    t = inst.matrix_tuple
    n, k = t.n, t.k
    flat_point = [v for x in point.xs for v in x]
    limit: Optional[Fraction] = None
    for idx, dv in enumerate(direction):
        i, r = divmod(idx, n)
        lo = Fraction(0)
        hi = inst.d[i - 1][r] if 1 <= i <= k - 1 else None
        if dv > 0 and hi is not None:
            room = (hi - flat_point[idx]) / dv
            limit = room if limit is None else min(limit, room)
        elif dv < 0:
            room = (lo - flat_point[idx]) / dv
            limit = room if limit is None else min(limit, room)
    step = Fraction(1) if limit is None else limit / 2
    if step == 0:
        return None
    moved = [v + step * dv for v, dv in zip(flat_point, direction)]
    xs = tuple(tuple(moved[i * n : (i + 1) * n]) for i in range(k + 1))
    candidate = SolutionTuple(xs)
    return candidate if is_solution(inst, candidate) else None


def combine(a: SolutionTuple, b: SolutionTuple, weight: Fraction) -> SolutionTuple:
    return SolutionTuple(
        tuple(
            tuple(weight * xa + (1 - weight) * xb for xa, xb in zip(va, vb))
            for va, vb in zip(a.xs, b.xs)
        )
    )


def _convexity_violations(inst: EhlcpInstance, where: Callable[[str], dict]) -> list:
    out = []
    points = solution_points(inst)
    weights = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            for w in weights:
                mix = combine(points[i], points[j], w)
                if not is_solution(inst, mix):
                    out.append(where(f"convex combination at t={w} is not a solution"))
    return out


def _check_t21(spec, index, t, rng) -> list:
    out = []
    w = check_column_w(t).holds
    c0_inv = inverse(t.mats[0])
    if c0_inv is None:
        normalized_w = False
    else:
        normalized_w = check_column_w(
            make_tuple([identity(t.n)] + [mat_mul(c0_inv, m) for m in t.mats[1:]])
        ).holds
    if w != (c0_inv is not None and normalized_w):
        out.append(_violation(spec, index, t, "W-property disagrees with the normalized tuple"))
    if w:
        b = spec.entry_range
        for _ in range(100):
            diags = []
            for i in range(t.k + 1):
                diags.append([rng.randint(0, b) for _ in range(t.n)])
            for r in range(t.n):
                if all(diags[i][r] == 0 for i in range(t.k + 1)):
                    diags[rng.randint(0, t.k)][r] = rng.randint(1, b)
            total = [
                [
                    sum(t.mats[i][row][col] * diags[i][col] for i in range(t.k + 1))
                    for col in range(t.n)
                ]
                for row in range(t.n)
            ]
            if det(mat(total)) == 0:
                out.append(_violation(spec, index, t, "singular nonnegative diagonal combination under W"))
        for trial in range(3):
            inst = gen_instance(t, subseed(spec.seed, 1000 + 10 * index + trial), b)
            pieces = solve_all(inst)
            if (
                len(pieces) != 1
                or pieces[0].piece_dimension != 0
                or not is_solution(inst, pieces[0].point)
            ):
                out.append(
                    _violation(spec, index, t, "W tuple without a unique solution",
                               instance=instance_to_json(inst))
                )
    return out


def _check_t22(spec, index, t, rng) -> list:
    out = []
    if not check_column_ndw_det(t).holds:
        return out
    for trial in range(3):
        inst = gen_instance(t, subseed(spec.seed, 2000 + 10 * index + trial), spec.entry_range)
        for piece in solve_all(inst):
            if piece.piece_dimension != 0:
                out.append(
                    _violation(spec, index, t, "positive-dimensional piece under ND-W",
                               instance=instance_to_json(inst))
                )
    return out


def _check_t31(spec, index, t, rng) -> list:
    if not check_csw(t).holds:
        return []
    kernel = kernel_tuple_from_singular_representative(t)
    if kernel is not None and any(v != 0 for x in kernel for v in x):
        inst, _, _ = instance_with_segment(t, kernel)
    else:
        inst = gen_instance(t, subseed(spec.seed, 3000 + index), spec.entry_range)
    where = lambda detail: _violation(spec, index, t, detail, instance=instance_to_json(inst))
    return _convexity_violations(inst, where)


def _m_matrix(rng: SplitMix64, n: int, b: int) -> Mat:
    nonneg = [[rng.randint(0, b) for _ in range(n)] for _ in range(n)]
    s = 1 + max(sum(row) for row in nonneg)
    return mat([[s - nonneg[i][j] if i == j else -nonneg[i][j] for j in range(n)]
                for i in range(n)])


def _check_t32(spec, index, t_ignored, rng) -> list:
    # generated in-suite: C_0 an M-matrix, C_i = C_0 D_i so the tuple is
    # certified column W (hence cS-W), q strictly positive
    n, k, b = spec.n, spec.k, spec.entry_range
    c0 = _m_matrix(rng, n, b)
    mats = [c0]
    for _ in range(k):
        diag = tuple(
            tuple(Fraction(rng.randint(1, b) if i == j else 0) for j in range(n))
            for i in range(n)
        )
        mats.append(mat_mul(c0, diag))
    t = make_tuple(mats)
    out = []
    if not is_m(t.mats[0]).holds or not check_csw(t).holds:
        out.append(_violation(spec, index, t, "constructed tuple fails its certificates"))
        return out
    d = tuple(
        tuple(Fraction(rng.randint(1, b)) for _ in range(n)) for _ in range(k - 1)
    )
    q = tuple(Fraction(rng.randint(1, b)) for _ in range(n))
    inst = EhlcpInstance(t, d, q)
    fast = solve_m_fast(inst)
    expected = SolutionTuple(
        (mat_vec(inverse(c0), q),) + tuple(zeros(n) for _ in range(k))
    )
    pieces = solve_all(inst)
    if fast is None or fast.xs != expected.xs:
        out.append(_violation(spec, index, t, "fast path missing or wrong",
                              instance=instance_to_json(inst)))
    if (
        len(pieces) != 1
        or pieces[0].piece_dimension != 0
        or pieces[0].point.xs != expected.xs
    ):
        out.append(_violation(spec, index, t, "solution not unique under M + cS-W + q > 0",
                              instance=instance_to_json(inst)))
    return out


def _check_p31(spec, index, t, rng) -> list:
    if not check_csw(t).holds:
        return []
    out = []
    for i in range(t.k):
        if not check_x_column_sufficiency(t.mats[i], t.mats[i + 1]).holds:
            out.append(
                _violation(spec, index, t,
                           f"pair (C_{i}, C_{i+1}) fails X-column-sufficiency under cS-W")
            )
    return out


def _check_t41(spec, index, t, rng) -> list:
    if check_column_ndw_def(t).holds != check_column_ndw_det(t).holds:
        return [_violation(spec, index, t, "definition and determinant ND-W deciders disagree")]
    return []


def _check_t42(spec, index, t, rng) -> list:
    out = []
    w = check_column_w(t).holds
    w0 = check_column_w0(t).holds
    nd = check_column_ndw_det(t).holds
    cs = check_csw(t).holds
    if w != (cs and nd):
        out.append(_violation(spec, index, t, "W <=> (cS-W and ND-W) violated"))
    if w != (w0 and nd):
        out.append(_violation(spec, index, t, "W <=> (W0 and ND-W) violated"))
    return out


def _check_t43(spec, index, t, rng) -> list:
    if check_csw(t).holds and not check_column_w0(t).holds:
        return [_violation(spec, index, t, "cS-W tuple without the W0-property")]
    return []


def _check_t44(spec, index, t, rng) -> list:
    c0_inv = inverse(t.mats[0])
    if c0_inv is None or not all(
        is_z(mat_mul(c0_inv, m)).holds for m in t.mats[1:]
    ):
        return []  # hypothesis of the equivalence not met
    if check_cone_csw(t).holds != check_csw(t).holds:
        return [_violation(spec, index, t, "cone cS-W and cS-W disagree on Z-structure")]
    return []


def _check_c41(spec, index, t, rng) -> list:
    c0_inv = inverse(t.mats[0])
    if c0_inv is None or not all(
        is_z(mat_mul(c0_inv, m)).holds for m in t.mats[1:]
    ):
        return []
    if not check_cone_csw(t).holds:
        return []
    kernel = kernel_tuple_from_singular_representative(t)
    if kernel is not None and any(v != 0 for x in kernel for v in x):
        inst, _, _ = instance_with_segment(t, kernel)
    else:
        inst = gen_instance(t, subseed(spec.seed, 4000 + index), spec.entry_range)
    where = lambda detail: _violation(spec, index, t, detail, instance=instance_to_json(inst))
    return _convexity_violations(inst, where)


_SUITES: dict = {
    "T2.1-equiv": (_check_t21, None),
    "T2.2-finite": (_check_t22, None),
    "T3.1-convex": (_check_t31, None),
    "T3.2-unique": (_check_t32, None),
    "P3.1-pairs": (_check_p31, None),
    "T4.1-ndw": (_check_t41, None),
    "T4.2-equiv": (_check_t42, None),
    "T4.3-chain": (_check_t43, None),
    "T4.4-cone": (_check_t44, "z_structured"),
    "C4.1-zconvex": (_check_c41, "z_structured"),
}

THEOREM_IDS = tuple(sorted(_SUITES))

# golden cases appended to every randomized suite
_INJECTED = (paper_example_tuple, w0_not_csw_tuple, skew_pair_tuple)


def verify_theorem(theorem_id: str, trials: int, spec: GenSpec) -> TheoremReport:
    """Run one theorem's invariant suite over generated tuples plus the
    injected golden tuples; every violation payload is replayable."""
    if theorem_id not in _SUITES:
        raise InputError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    check, default_family = _SUITES[theorem_id]
    if default_family is not None and spec.family == "generic":
        spec = GenSpec(spec.n, spec.k, default_family, spec.entry_range, spec.seed)
    report = TheoremReport(theorem_id, trials)
    for index in range(trials):
        sub = _trial_spec(spec, index)
        t = gen_tuple(sub)
        rng = SplitMix64(subseed(sub.seed, 999_983))
        report.violations.extend(check(sub, index, t, rng))
    for offset, golden in enumerate(_INJECTED):
        t = golden()
        sub = GenSpec(t.n, t.k, spec.family, spec.entry_range,
                      subseed(spec.seed, 900_000 + offset))
        rng = SplitMix64(subseed(sub.seed, 999_983))
        report.violations.extend(check(sub, trials + offset, t, rng))
    return report


def paper_example_suite() -> TheoremReport:
    """Hard-coded golden checks for the worked 2x2 example and the
    W0-without-cS-W separation."""
    report = TheoremReport("paper-example", 0)
    t = paper_example_tuple()

    def expect(label: str, ok: bool):
        if not ok:
            report.violations.append({"case": label, "tuple": tuple_to_json(t)})

    expect("csw holds", check_csw(t).holds)
    w = check_column_w(t)
    expect("column W fails", not w.holds)
    expect(
        "W witness has a zero determinant",
        w.witness is not None
        and any(v.get("determinant") == "0" for v in w.witness["violations"]),
    )
    expect("column W0 holds", check_column_w0(t).holds)
    expect("determinant ND-W fails", not check_column_ndw_det(t).holds)

    t = w0_not_csw_tuple()
    expect("(I,0,0) has W0", check_column_w0(t).holds)
    expect("(I,0,0) fails cS-W", not check_csw(t).holds)
    report.trials = 7
    return report
