"""Defining polynomials of twist-knot character varieties.

Two coordinate systems are primary here: trace coordinates, where the
even-twist variety is cut out by L_n(x, y) and the odd-twist one by
L'_n(x, y), and skein coordinates, where every twist number m uses
R_m(x, y) = (y+2) * Rtilde_m(x, y).  The change of coordinates is carried
by the quadratic t(x, y) and the recursively defined X_m family, and the
``verify_*`` functions machine-check the identities that make the two
presentations isomorphic.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass

from .chebyshev import ChebCompose, NegativeIndex, cheb_s
from .polys import BiPoly, UniPoly, exact_div, uni_gcd

__all__ = [
    "Coords",
    "VerifyResult",
    "t_poly",
    "x_m",
    "x_m_closed",
    "l_n",
    "l_prime_n",
    "r_m",
    "r_tilde_m",
    "map_f_point",
    "map_g_point",
    "map_f_poly",
    "map_g_poly",
    "verify_prop_gf",
    "verify_prop_fg",
    "verify_prop_odd",
    "check_r_tilde_irreducible",
]

XY = ("x", "y")


class Coords(str, enum.Enum):
    """Coordinate system tags attached to emitted polynomials."""

    TRACE_EVEN = "traceeven"   # x = tr a, y = tr(a b^-1)
    TRACE_ODD = "traceodd"     # x = tr a, y = tr(a b)
    SKEIN = "skein"            # x' = -tr a', y' = -tr(a' b^-1)
    BRIDGE_XZ = "bridgexz"     # x = tr a, z = tr(a b)


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of an identity check; carries the difference on failure."""

    ok: bool
    diff: BiPoly | None = None

    def __bool__(self) -> bool:
        return self.ok


def _mono(e1: int, e2: int, c: int = 1) -> BiPoly:
    return BiPoly.monomial(XY, e1, e2, c)


def _const(c: int) -> BiPoly:
    return BiPoly.const(c, XY)


def t_poly() -> BiPoly:
    """The commutator trace t = y^2 - y*x^2 + 2*x^2 - 2."""
    return BiPoly(XY, {(0, 2): 1, (2, 1): -1, (2, 0): 2, (0, 0): -2})


_lock = threading.Lock()
_x_cache: list[BiPoly] = []
_s_of_t = ChebCompose(t_poly())
# X_m with (x, y) -> (-x, -t) applied; same recursion with y replaced by -t.
_xc_cache: list[BiPoly] = []


def x_m(m: int) -> BiPoly:
    """X_m by the recursion X_{m+1} = y*X_m - X_{m-1} - 2*x^2."""
    if m < 0:
        raise NegativeIndex(f"X_m needs m >= 0, got {m}")
    with _lock:
        if not _x_cache:
            _x_cache.append(_const(-2))
            _x_cache.append(BiPoly(XY, {(2, 0): -1, (0, 1): -1}))
        y = _mono(0, 1)
        two_x2 = _mono(2, 0, 2)
        while len(_x_cache) <= m:
            _x_cache.append(y * _x_cache[-1] - _x_cache[-2] - two_x2)
        return _x_cache[m]


def _s_prefix_sum(m: int, var: str = "y") -> UniPoly:
    """S_0 + S_1 + ... + S_m (empty sum for m < 0)."""
    acc = UniPoly.zero(var)
    for i in range(m + 1):
        acc = acc + cheb_s(i, var)
    return acc


def x_m_closed(m: int) -> BiPoly:
    """Closed form -S_m(y) + S_{m-2}(y) - x^2*(S_{m-1}(y) + 2*sum S_i(y))."""
    if m < 1:
        raise NegativeIndex(f"closed form needs m >= 1, got {m}")
    slice0 = -cheb_s(m, "y") + cheb_s(m - 2, "y")
    slice2 = -(cheb_s(m - 1, "y") + _s_prefix_sum(m - 2, "y") * 2)
    return (BiPoly.from_uni(slice0, XY)
            + _mono(2, 0) * BiPoly.from_uni(slice2, XY))


def l_n(n: int) -> BiPoly:
    """L_n = (y-2) * (S_n(t) + (y+1-x^2)*S_{n-1}(t)), trace-even coords."""
    y_factor = _mono(0, 1) - _const(2)
    inner = _s_of_t.s(n) + (_mono(0, 1) + _const(1) - _mono(2, 0)) * _s_of_t.s(n - 1)
    return y_factor * inner


def l_prime_n(n: int) -> BiPoly:
    """L'_n = (x^2-y-2) * ((y-1)*S_{n-1}(t) - S_{n-2}(t)), trace-odd coords."""
    front = _mono(2, 0) - _mono(0, 1) - _const(2)
    inner = (_mono(0, 1) - _const(1)) * _s_of_t.s(n - 1) - _s_of_t.s(n - 2)
    return front * inner


def r_tilde_m(m: int) -> BiPoly:
    """Rtilde_m = S_m(y) - S_{m-1}(y) + x^2 * sum_{i<m} S_i(y)."""
    if m < 0:
        raise NegativeIndex(f"Rtilde_m needs m >= 0, got {m}")
    slice0 = cheb_s(m, "y") - cheb_s(m - 1, "y")
    return (BiPoly.from_uni(slice0, XY)
            + _mono(2, 0) * BiPoly.from_uni(_s_prefix_sum(m - 1, "y"), XY))


def r_m(m: int) -> BiPoly:
    """R_m = (y+2) * Rtilde_m, skein coordinates.

    Also asserts the cross-identity R_m = -(X_{m+1} + X_m + x^2).
    """
    out = (_mono(0, 1) + _const(2)) * r_tilde_m(m)
    alt = -(x_m(m + 1) + x_m(m) + _mono(2, 0))
    if out != alt:
        raise AssertionError(f"R_m vs X_m identity failed at m={m}")
    return out


# -- the coordinate-change maps f and g -------------------------------------

def map_f_point(x, y):
    """f(x, y) = (-x, -t(x, y))."""
    return (-x, -t_poly()(x, y))


def map_g_point(m: int, x, y):
    """g(x, y) = (-x, -X_m(x, y))."""
    return (-x, -x_m(m)(x, y))


def map_f_poly(p: BiPoly) -> BiPoly:
    """Pullback p o f, i.e. substitute (x, y) -> (-x, -t)."""
    return p.compose(-_mono(1, 0), -t_poly())


def map_g_poly(m: int, p: BiPoly) -> BiPoly:
    """Pullback p o g with g using X_m."""
    return p.compose(-_mono(1, 0), -x_m(m))


def _x_composed(m: int) -> BiPoly:
    """X_m(-x, -t): the X recursion with y replaced by -t."""
    with _lock:
        if not _xc_cache:
            _xc_cache.append(_const(-2))
            _xc_cache.append(t_poly() - _mono(2, 0))
        t = t_poly()
        two_x2 = _mono(2, 0, 2)
        while len(_xc_cache) <= m:
            _xc_cache.append(-t * _xc_cache[-1] - _xc_cache[-2] - two_x2)
        return _xc_cache[m]


def verify_prop_gf(m: int) -> VerifyResult:
    """-X_m^2 - x^2*X_m - 2*x^2 + 2 == y - (y+2)*Rtilde_m*Rtilde_{m-1}."""
    if m < 1:
        raise NegativeIndex(f"needs m >= 1, got {m}")
    xm = x_m(m)
    lhs = -(xm * xm) - _mono(2, 0) * xm - _mono(2, 0, 2) + _const(2)
    rhs = _mono(0, 1) - (_mono(0, 1) + _const(2)) * (r_tilde_m(m) * r_tilde_m(m - 1))
    diff = lhs - rhs
    return VerifyResult(diff.is_zero(), None if diff.is_zero() else diff)


def _gamma_n(n: int) -> BiPoly:
    w = _mono(0, 1) + _const(1) - _mono(2, 0)   # y + 1 - x^2
    return ((_s_of_t.s(n) + w * _s_of_t.s(n - 1))
            * (w * _s_of_t.s(n - 1) + _s_of_t.s(n - 2)))


def _gamma_prime_n(n: int) -> BiPoly:
    w = _const(1) - _mono(0, 1)                 # 1 - y
    return ((_s_of_t.s(n) + w * _s_of_t.s(n - 1))
            * (w * _s_of_t.s(n) + _s_of_t.s(n - 1)))


def verify_prop_fg(n: int) -> VerifyResult:
    """-X_{2n}(-x, -t) - y == (y-2) * gamma_n."""
    if n < 0:
        raise NegativeIndex(f"needs n >= 0, got {n}")
    lhs = -_x_composed(2 * n) - _mono(0, 1)
    rhs = (_mono(0, 1) - _const(2)) * _gamma_n(n)
    diff = lhs - rhs
    return VerifyResult(diff.is_zero(), None if diff.is_zero() else diff)


def verify_prop_odd(n: int) -> VerifyResult:
    """-X_{2n+1}(-x, -t) - y == -(x^2-y-2) * gamma'_n."""
    if n < 0:
        raise NegativeIndex(f"needs n >= 0, got {n}")
    lhs = -_x_composed(2 * n + 1) - _mono(0, 1)
    rhs = -(_mono(2, 0) - _mono(0, 1) - _const(2)) * _gamma_prime_n(n)
    diff = lhs - rhs
    return VerifyResult(diff.is_zero(), None if diff.is_zero() else diff)


def check_r_tilde_irreducible(m: int):
    """Irreducibility certificate for Rtilde_m = f(y) + x^2*g(y).

    f = S_m - S_{m-1} and g = (S_m - S_{m-1} - 1)/(y-2) must have an odd
    degree gap (it is 1) and be coprime; then no factorization into two
    x-linear or x-quadratic-times-constant pieces can exist.
    """
    from .bridge import irreducible_by_parity_gcd

    if m < 1:
        raise NegativeIndex(f"certificate needs m >= 1, got {m}")
    f = cheb_s(m, "y") - cheb_s(m - 1, "y")
    denom = UniPoly("y", (-2, 1))
    g = exact_div(f - UniPoly.const(1, "y"), denom)
    return irreducible_by_parity_gcd(f, g)
