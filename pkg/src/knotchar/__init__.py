"""Exact character-variety polynomials for twist and 2-bridge knots."""

from .polys import (
    BiPoly,
    LaurentBi,
    NotDivisible,
    NotSymmetric,
    UniPoly,
    UnknownVariable,
    exact_div,
    uni_gcd,
)
from .chebyshev import (
    NegativeIndex,
    alt_sum_alpha,
    alt_sum_beta,
    cheb_s,
    cheb_s_diff_roots,
    cheb_s_roots,
    cheb_t,
    recurrence_closed_form,
)
from .twist import (
    Coords,
    check_r_tilde_irreducible,
    l_n,
    l_prime_n,
    r_m,
    r_tilde_m,
    t_poly,
    verify_prop_fg,
    verify_prop_gf,
    verify_prop_odd,
    x_m,
    x_m_closed,
)
from .bridge import (
    BridgeParams,
    InvalidParams,
    IrreducibilityReport,
    OutOfScope,
    check_phi_irreducible_p3,
    epsilon_seq,
    irreducible_by_parity_gcd,
    minimality_report,
    phi_closed_p3,
    phi_recursive_p3,
    pqr_p3,
)
from .oracle import defining_poly, delta_poly, oracle_delta, rep_matrices
from .suites import SuiteResult, run_suite

__version__ = "0.1.0"
