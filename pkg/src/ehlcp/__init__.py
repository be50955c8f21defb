"""Exact-arithmetic oracles and solver for the extended horizontal LCP.

Everything computes over rationals: tuple properties (column W, W0, ND-W,
column sufficient-W and its cone variant), single-matrix classes (Z, M, P,
nondegenerate, column sufficient), an enumeration solver returning the
full polyhedral solution structure, and a seeded theorem-verification
harness.
"""

__version__ = "0.1.0"

from .classes import (
    is_column_sufficient,
    is_m,
    is_nondegenerate,
    is_p,
    is_z,
    principal_minors,
)
from .csw import (
    CswVerdict,
    SignPattern,
    check_column_ndw_def,
    check_cone_csw,
    check_csw,
    check_x_column_sufficiency,
    pattern_realizable,
)
from .errors import CapExceeded, DimensionError, InputError, UndecidedSize
from .harness import (
    GenSpec,
    SplitMix64,
    TheoremReport,
    gen_instance,
    gen_tuple,
    paper_example_suite,
    verify_theorem,
)
from .linprog import LpResult, lp_solve
from .rational import (
    LinearSolveResult,
    det,
    identity,
    inverse,
    mat,
    pointwise,
    rat,
    solve_linear,
    vec,
)
from .representatives import (
    MatrixTuple,
    PropertyVerdict,
    check_column_ndw_det,
    check_column_w,
    check_column_w0,
    make_tuple,
    representative_matrix,
    selector_count,
    selectors,
)
from .solver import (
    BranchPattern,
    EhlcpInstance,
    SolutionPiece,
    SolutionTuple,
    enumerate_branches,
    is_solution,
    solve_all,
    solve_branch,
    solve_m_fast,
)
