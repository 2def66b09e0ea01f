"""Exact Boros-Moll polynomials and real-rootedness checks for Q_n and R_n."""
from .boros_moll import (
    BMRow,
    Family,
    RecurrenceCoeffs,
    bm_row,
    bm_row_closed,
    bm_row_double_sum,
    bm_row_rec1,
    bm_row_rec2,
    p_polynomial,
    q_polynomial,
    q_polynomial_rec,
    r_polynomial,
    r_polynomial_rec,
    recurrence_coeffs,
)
from .log_concavity import LogConcavityVerdict, is_unimodal, k_log_concave, l_operator, l_transform_poly
from .poly import Poly, Rational, binomial, derivative, divrem, evaluate, gcd, poly_arith, squarefree_part
from .real_roots import (
    InterlaceVerdict,
    IsolatingInterval,
    SturmChain,
    cauchy_root_bound,
    count_real_roots,
    interlaces,
    is_real_rooted,
    isolate_real_roots,
    sturm_chain,
)
from .verification import ClaimId, VerificationReport, check_liu_wang_side_conditions

__version__ = "0.1.0"
