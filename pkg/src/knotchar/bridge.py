"""Two-bridge knot machinery: epsilon sequences, the q=3 trace recursion,
its closed form, and irreducibility certificates.

A 2-bridge knot b(p, q) has group <a, b | wa = bw> with
w = a^e1 b^e2 ... b^e_{p-1} and e_j = (-1)^floor(jq/p).  For q = 3 the
sign pattern has a single change (+1 up to l = floor(p/3), then -1 up to
d = (p-1)/2), which makes the trace-polynomial recursion tractable and
yields the closed form Phi = P(z) + x^2 Q(z) R(z) whose degree gap of 1
drives the irreducibility certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chebyshev import alt_sum_alpha, alt_sum_beta, cheb_s
from .polys import BiPoly, UniPoly, uni_gcd

__all__ = [
    "InvalidParams",
    "OutOfScope",
    "BridgeParams",
    "IrreducibilityReport",
    "epsilon_seq",
    "bridge_word",
    "phi_recursive_p3",
    "phi_closed_p3",
    "pqr_p3",
    "irreducible_by_parity_gcd",
    "check_phi_irreducible_p3",
    "minimality_report",
]

XZ = ("x", "z")


class InvalidParams(ValueError):
    """Raised for (p, q) pairs outside the valid 2-bridge range."""


class OutOfScope(ValueError):
    """Raised for knots the minimality corollaries explicitly exclude."""


@dataclass(frozen=True)
class BridgeParams:
    """Validated (p, q) pair with the derived quantities d and l."""

    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0 or self.p % 2 == 0:
            raise InvalidParams(f"p must be a positive odd integer, got {self.p}")
        if not 0 < self.q < self.p:
            raise InvalidParams(f"q must satisfy 0 < q < p, got q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidParams(f"p and q must be coprime, got ({self.p}, {self.q})")

    @property
    def d(self) -> int:
        return (self.p - 1) // 2

    @property
    def ell(self) -> int:
        return self.p // 3

    @property
    def epsilons(self) -> tuple[int, ...]:
        return epsilon_seq(self.p, self.q)

    @property
    def word(self) -> tuple[tuple[str, int], ...]:
        return bridge_word(self.p, self.q)


def epsilon_seq(p: int, q: int) -> tuple[int, ...]:
    """e_j = (-1)^floor(jq/p) for j = 1..p-1; always palindromic."""
    BridgeParams(p, q)
    return tuple(-1 if (j * q // p) % 2 else 1 for j in range(1, p))


def bridge_word(p: int, q: int) -> tuple[tuple[str, int], ...]:
    """The relator word: letters alternate a, b, ... with exponents e_j."""
    eps = epsilon_seq(p, q)
    return tuple(("a" if j % 2 == 0 else "b", e) for j, e in enumerate(eps))


def _validate_p3(p: int) -> BridgeParams:
    if p <= 3:
        raise InvalidParams(f"q=3 machinery needs p > 3, got {p}")
    if p % 3 == 0:
        raise InvalidParams(f"p must be coprime to 3, got {p}")
    return BridgeParams(p, 3)


def _z() -> BiPoly:
    return BiPoly.monomial(XZ, 0, 1)


def _x2() -> BiPoly:
    return BiPoly.monomial(XZ, 2, 0)


def phi_recursive_p3(p: int) -> BiPoly:
    """Phi_w(x, z) for b(p, 3) by the descending trace recursion.

    Working down from the seeds tr w_d = z, tr w_{d+1} = 2 and
    x*tr u_d = x*tr v_d = x^2: while the signs agree the traces satisfy
    the T-type recursion tr w_j = z*tr w_{j+1} - tr w_{j+2}; at the single
    sign change j = l the mixing step brings in the u- and v-traces; below
    it the plain recursion resumes.  Phi is the alternating sum of the
    tr w_j plus (-1)^d.
    """
    params = _validate_p3(p)
    d, ell = params.d, params.ell
    z, x2 = _z(), _x2()

    trw: dict[int, BiPoly] = {d: z, d + 1: BiPoly.const(2, XZ)}
    xu: dict[int, BiPoly] = {d: x2}
    for j in range(d - 1, ell, -1):
        trw[j] = z * trw[j + 1] - trw[j + 2]
        xu[j] = x2 * trw[j + 1] - xu[j + 1]
    # sign change: tr u and tr v agree by symmetry of the seeds
    trw[ell] = ((z - x2) * trw[ell + 1] - trw[ell + 2]
                + xu[ell + 1] * 2)
    for j in range(ell - 1, 0, -1):
        trw[j] = z * trw[j + 1] - trw[j + 2]

    phi = BiPoly.const((-1) ** d, XZ)
    for j in range(1, d + 1):
        phi = phi + trw[j] * ((-1) ** (j - 1))
    return phi


def phi_closed_p3(p: int) -> BiPoly:
    """Closed form of Phi_w(x, z) for b(p, 3)."""
    params = _validate_p3(p)
    d, ell = params.d, params.ell
    h = ell // 2
    slice0 = cheb_s(d, "z") - cheb_s(d - 1, "z")
    slice2 = ((UniPoly.const(2, "z") - UniPoly.x("z"))
              * cheb_s(d - ell - 1, "z")
              * cheb_s(ell - 1 - h, "z")
              * (cheb_s(h, "z") - cheb_s(h - 1, "z")))
    return BiPoly.from_uni(slice0, XZ) + _x2() * BiPoly.from_uni(slice2, XZ)


def pqr_p3(p: int) -> tuple[UniPoly, UniPoly, UniPoly]:
    """The components of Phi = P + x^2*Q*R for b(p, 3).

    P = S_d - S_{d-1} (checked against the x = 0 slice of the closed
    form), Q is the alternating S-sum at index l-1 and R the alternating
    T-sum at index d-l-1; the product decomposition itself is asserted.
    """
    params = _validate_p3(p)
    d, ell = params.d, params.ell
    P = cheb_s(d, "z") - cheb_s(d - 1, "z")
    Q = alt_sum_alpha(ell - 1, "z")
    R = alt_sum_beta(d - ell - 1, "z")

    phi = phi_closed_p3(p)
    x0_slice = UniPoly("z", [phi.terms.get((0, e), 0)
                             for e in range(phi.degrees()[1] + 1)])
    if x0_slice != P:
        raise AssertionError(f"P != Phi(0, z) at p={p}")
    rebuilt = BiPoly.from_uni(P, XZ) + _x2() * BiPoly.from_uni(Q * R, XZ)
    if rebuilt != phi:
        raise AssertionError(f"Phi != P + x^2*Q*R at p={p}")
    return P, Q, R


@dataclass(frozen=True)
class IrreducibilityReport:
    """Certificate record for Phi = f + x^2*g decompositions.

    ``verdict`` is "Irreducible" only when the degree gap is odd and the
    gcd is 1; the criterion is sufficient, not necessary, so the other
    verdict is "CriterionInapplicable", never "reducible".
    """

    f: UniPoly
    g: UniPoly
    degree_gap: int
    gcd: UniPoly
    verdict: str

    @property
    def irreducible(self) -> bool:
        return self.verdict == "Irreducible"

    def to_json(self, knot: str | None = None) -> dict:
        obj = {
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "degree_gap": self.degree_gap,
            "gcd": str(self.gcd),
            "verdict": self.verdict,
        }
        if knot is not None:
            obj = {"knot": knot, **obj}
        return obj


def irreducible_by_parity_gcd(f: UniPoly, g: UniPoly) -> IrreducibilityReport:
    """Certify irreducibility of f(z) + x^2*g(z) by degree parity and gcd."""
    gap = f.degree - g.degree
    gcd = uni_gcd(f, g)
    ok = gap % 2 != 0 and gcd == UniPoly.const(1, f.var)
    return IrreducibilityReport(
        f=f, g=g, degree_gap=gap, gcd=gcd,
        verdict="Irreducible" if ok else "CriterionInapplicable")


def check_phi_irreducible_p3(p: int) -> IrreducibilityReport:
    """Certificate that Phi_w(x, z) is irreducible for b(p, 3).

    Besides the parity/gcd criterion on (P, Q*R) this asserts the
    arithmetic fact gcd(2d+1, 2*floor(l/2)+1) = 1 underlying the
    root-disjointness of P from the Q-factor, and checks coprimality of P
    with each Chebyshev factor separately.
    """
    params = _validate_p3(p)
    d, ell = params.d, params.ell
    h = ell // 2
    if math.gcd(2 * d + 1, 2 * h + 1) != 1:
        raise AssertionError(f"gcd(2d+1, 2*floor(l/2)+1) != 1 at p={p}")
    P, Q, R = pqr_p3(p)
    one = UniPoly.const(1, "z")
    if uni_gcd(P, cheb_s(ell - 1 - h, "z")) != one:
        raise AssertionError(f"P shares a root with S_(l-1-floor(l/2)) at p={p}")
    if uni_gcd(P, cheb_s(d - ell - 1, "z")) != one:
        raise AssertionError(f"P shares a root with S_(d-l-1) at p={p}")
    return irreducible_by_parity_gcd(P, Q * R)


def minimality_report(kind: str, value: int) -> dict:
    """Minimality record for a twist knot or a b(p, 3) knot.

    The irreducible-component count is certified here; hyperbolicity is an
    assumption of the cited surjectivity results and is reported as such,
    never computed.
    """
    if kind == "twist":
        if value in (0, 1):
            raise OutOfScope(
                f"K_{value} is excluded: K_1 is the trefoil (non-hyperbolic) "
                "and K_0 is trivial")
        if value < 0:
            raise InvalidParams("twist parameter must be >= 2 here")
        report = check_r_tilde_irreducible_cert(value)
        knot = f"K_{value}"
        certificate = "skein-form nonabelian factor irreducible (two components)"
    elif kind == "bridge3":
        report = check_phi_irreducible_p3(value)
        knot = f"b({value},3)"
        certificate = "Phi_w irreducible (exactly two components)"
    else:
        raise InvalidParams(f"unknown knot kind {kind!r}")
    return {
        "knot": knot,
        "minimal": report.irreducible,
        "certificate": certificate,
        "verdict": report.verdict,
        "assumptions": ["knot is hyperbolic"],
    }


def check_r_tilde_irreducible_cert(m: int) -> IrreducibilityReport:
    from .twist import check_r_tilde_irreducible

    return check_r_tilde_irreducible(m)
