"""Independent brute-force verification path for 2-bridge knot varieties.

Everything downstream of the closed forms is cross-checked against this
module: it builds the standard 2-parameter family of SL2 representations
a -> [[s, 1], [0, 1/s]], b -> [[s, 0], [u, 1/s]], multiplies out relator
words letter by letter over Z[s, 1/s][u], extracts traces, rewrites them
in x = tr a = s + 1/s, and converts to each coordinate system in use.

Signs are measured, never assumed: the defining polynomial is reported
together with the global sign that makes its pure-z (or pure-y) leading
coefficient positive, so comparisons against the closed forms are always
"equal up to recorded sign".
"""

from __future__ import annotations

from dataclasses import dataclass

from .bridge import BridgeParams, InvalidParams, bridge_word
from .chebyshev import cheb_t
from .polys import BiPoly, LaurentBi, NotDivisible, NotSymmetric
from .twist import Coords

__all__ = [
    "SymMat",
    "OracleResult",
    "rep_matrices",
    "word_matrix",
    "word_trace",
    "symmetrize",
    "oracle_delta",
    "delta_poly",
    "defining_poly",
    "measured_sign",
]

XU = ("x", "u")


class SymMat:
    """2x2 matrix over Z[s, 1/s][u]."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: LaurentBi, b: LaurentBi, c: LaurentBi, d: LaurentBi):
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> "SymMat":
        one, zero = LaurentBi.const(1), LaurentBi.const(0)
        return cls(one, zero, zero, one)

    def __matmul__(self, other: "SymMat") -> "SymMat":
        return SymMat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> LaurentBi:
        return self.a * self.d - self.b * self.c

    def trace(self) -> LaurentBi:
        return self.a + self.d

    def inverse(self) -> "SymMat":
        """SL2 adjugate; valid because every matrix here has det 1."""
        return SymMat(self.d, -self.b, -self.c, self.a)


def rep_matrices() -> tuple[SymMat, SymMat]:
    """The meridian images: upper and lower triangular with traces s + 1/s."""
    s = LaurentBi.s_power(1)
    s_inv = LaurentBi.s_power(-1)
    one, zero, u = LaurentBi.const(1), LaurentBi.const(0), LaurentBi.u_gen()
    return (SymMat(s, one, zero, s_inv), SymMat(s, zero, u, s_inv))


def word_matrix(letters) -> SymMat:
    """Left-to-right product over (generator, +-1 exponent) letters."""
    A, B = rep_matrices()
    table = {
        ("a", 1): A, ("a", -1): A.inverse(),
        ("b", 1): B, ("b", -1): B.inverse(),
    }
    acc = SymMat.identity()
    for gen, exp in letters:
        if (gen, exp) not in table:
            raise ValueError(f"bad letter {(gen, exp)!r}; exponents must be +-1")
        acc = acc @ table[(gen, exp)]
    return acc


def word_trace(letters) -> LaurentBi:
    return word_matrix(letters).trace()


def symmetrize(lp: LaurentBi) -> BiPoly:
    """Rewrite an s-palindromic Laurent polynomial as a poly in (x, u).

    Each u-slice must be invariant under s <-> 1/s; the pair s^n + s^-n
    becomes T_n(x).  Traces of words in the two meridians always are.
    """
    slices: dict[int, dict[int, int]] = {}
    for se, ue, c in lp.items():
        slices.setdefault(ue, {})[se] = c
    out: dict[tuple[int, int], int] = {}
    for ue, by_s in slices.items():
        for se, c in by_s.items():
            if by_s.get(-se, 0) != c:
                raise NotSymmetric(
                    f"u^{ue} slice is not s-palindromic at s^{se}")
        for se, c in by_s.items():
            if se < 0:
                continue
            if se == 0:
                key = (0, ue)
                n = out.get(key, 0) + c
                if n:
                    out[key] = n
                else:
                    out.pop(key, None)
            else:
                for e, tc in enumerate(cheb_t(se, "x").coeffs):
                    if tc:
                        key = (e, ue)
                        n = out.get(key, 0) + c * tc
                        if n:
                            out[key] = n
                        else:
                            out.pop(key, None)
    return BiPoly(XU, out)


def oracle_delta(p: int, q: int) -> BiPoly:
    """Delta = tr(b w a^-1) - tr(w) as an exact polynomial in (x, u)."""
    word = list(bridge_word(p, q))
    left = [("b", 1)] + word + [("a", -1)]
    return symmetrize(word_trace(left) - word_trace(word))


_U_SUBS = {
    # u = z + 2 - x^2 expresses the reducible-locus factor in each system
    Coords.BRIDGE_XZ: BiPoly(("x", "z"), {(0, 1): 1, (2, 0): -1, (0, 0): 2}),
    Coords.TRACE_EVEN: BiPoly(("x", "y"), {(0, 1): -1, (0, 0): 2}),
    Coords.TRACE_ODD: BiPoly(("x", "y"), {(0, 1): 1, (2, 0): -1, (0, 0): 2}),
}


def _convert(poly_xu: BiPoly, coords: Coords) -> BiPoly:
    if coords not in _U_SUBS:
        raise InvalidParams(
            f"oracle conversion not defined for coords {coords!r}")
    return poly_xu.substitute("u", _U_SUBS[coords])


def measured_sign(poly: BiPoly) -> int:
    """Sign of the leading coefficient of the x-degree-0 slice.

    Falls back to the canonical leading term if that slice is empty; used
    to report oracle output signs against a fixed convention (pure-z
    leading coefficient +1).
    """
    slice_terms = [(e2, c) for (e1, e2), c in poly.terms.items() if e1 == 0]
    if slice_terms:
        return 1 if max(slice_terms)[1] > 0 else -1
    lead = poly.sorted_terms()[0][2] if poly.terms else 1
    return 1 if lead > 0 else -1


@dataclass(frozen=True)
class OracleResult:
    """Oracle defining polynomial plus its measured global sign."""

    poly: BiPoly
    sign: int
    coords: Coords

    def normalized(self) -> BiPoly:
        return self.poly * self.sign

    def to_json(self) -> dict:
        obj = self.poly.to_json(coords=self.coords.value)
        obj["source"] = "oracle"
        obj["sign"] = self.sign
        return obj


def delta_poly(p: int, q: int, coords: Coords) -> BiPoly:
    """The full Delta (reducible factor included) in the given coordinates."""
    BridgeParams(p, q)
    return _convert(oracle_delta(p, q), coords)


def defining_poly(p: int, q: int, coords: Coords) -> OracleResult:
    """Delta with the reducible-locus factor u divided out, converted.

    Delta must vanish on the reducible locus u = 0 term by term; any
    remainder signals a computation bug, not a property of the knot.
    """
    BridgeParams(p, q)
    delta = oracle_delta(p, q)
    if any(e[1] == 0 for e in delta.terms):
        raise NotDivisible(f"Delta for ({p},{q}) is not divisible by u")
    phi_xu = BiPoly(XU, {(e1, e2 - 1): c for (e1, e2), c in delta.terms.items()})
    phi = _convert(phi_xu, coords)
    return OracleResult(poly=phi, sign=measured_sign(phi), coords=coords)
