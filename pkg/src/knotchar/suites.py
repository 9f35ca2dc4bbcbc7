"""Named identity suites with deterministic summaries.

Each suite runs a family of exact checks up to a caller-chosen bound and
returns a :class:`SuiteResult` listing any failing case identifiers in
case order, so output is independent of scheduling.

The large-range Chebyshev product suite compares both sides after
evaluation at the integer point 2^B, with B chosen above the coefficient
growth of every polynomial involved; base-2^B signed-digit expansions are
unique, so agreement of the evaluations is equivalent to exact polynomial
equality.  Small indices are additionally compared symbolically.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import gmpy2

from . import bridge, oracle, twist
from .chebyshev import cheb_s, cheb_s_diff_roots, cheb_s_roots, recurrence_closed_form
from .polys import BiPoly, LaurentBi, NotDivisible, UniPoly, exact_div
from .twist import Coords

__all__ = ["SuiteResult", "run_suite", "SUITES"]


@dataclass
class SuiteResult:
    """Summary of one suite run; exit status 0 iff no failures."""

    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases,
                "failures": self.failures, "ms": self.ms}

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"suite {self.suite}: {self.cases} cases, "
                 f"{len(self.failures)} failures [{status}]"]
        lines.extend(f"  FAIL {f}" for f in self.failures)
        return "\n".join(lines)


class _Recorder:
    def __init__(self, result: SuiteResult):
        self.result = result

    def check(self, case: str, ok: bool, detail: str = "") -> None:
        self.result.cases += 1
        if not ok:
            self.result.failures.append(case + (f": {detail}" if detail else ""))


def _digest(p) -> str:
    s = str(p)
    return s if len(s) <= 120 else s[:117] + "..."


# ---------------------------------------------------------------------------
# chebyshev suite
# ---------------------------------------------------------------------------

def _suite_chebyshev(rec: _Recorder, bound: int) -> None:
    one = UniPoly.const(1, "z")
    # reflection, Lemma S, Lemma S2: direct symbolic products
    for m in range(-bound, bound + 1):
        rec.check(f"reflection m={m}", cheb_s(-m) == -cheb_s(m - 2))
    z2m2 = UniPoly("z", (-2, 0, 1))
    for m in range(-bound, bound + 1):
        sm, sm1, sm2 = cheb_s(m), cheb_s(m - 1), cheb_s(m - 2)
        rec.check(f"S m={m}", sm * sm2 - sm1 * sm1 == -one)
        sp1 = cheb_s(m + 1)
        rec.check(f"S2 m={m}",
                  sp1 * sp1 + sm1 * sm1 - z2m2 * (sm * sm) == UniPoly.const(2, "z"))

    # product-sum identity used by the odd-twist verifier
    z = UniPoly.x("z")
    for n in range(-bound, bound + 1):
        lhs = (cheb_s(n + 1) * cheb_s(n) + cheb_s(n - 1) * cheb_s(n - 2)
               - z2m2 * (cheb_s(n) * cheb_s(n - 1)))
        rec.check(f"product-sum n={n}", lhs == z)

    # Lemma S0 over the full (r, s) grid via exact packed evaluation
    top = 3 * bound
    maxc = max(max((abs(c) for c in cheb_s(k).coeffs), default=0)
               for k in range(top + 1))
    B = (maxc * maxc * (top + 2)).bit_length() + 8
    x0 = gmpy2.mpz(1) << B
    sv = [gmpy2.mpz(1), x0]
    for k in range(2, top + 1):
        sv.append(x0 * sv[-1] - sv[-2])
    acc = [sv[0], sv[1]]
    for k in range(2, top + 1):
        acc.append(acc[k - 2] + sv[k])
    ok_all = True
    bad = None
    for r in range(bound + 1):
        for s in range(bound + 1):
            rhs = acc[2 * r + s] - (acc[s - 2] if s >= 2 else 0)
            if sv[r] * sv[r + s] != rhs:
                ok_all = False
                bad = (r, s)
                break
        if not ok_all:
            break
    rec.check(f"S0 grid 0<=r,s<={bound}", ok_all,
              "" if ok_all else f"first failure at (r,s)={bad}")
    for r in range(min(bound, 25) + 1):
        for s in range(min(bound, 25) + 1):
            rhs = UniPoly.zero("z")
            for k in range(s, 2 * r + s + 1, 2):
                rhs = rhs + cheb_s(k)
            rec.check(f"S0 symbolic r={r} s={s}", cheb_s(r) * cheb_s(r + s) == rhs)

    # numeric root descriptions; evaluate by the recurrence, which keeps
    # intermediate values bounded where Horner at degree ~50 overflows the
    # tolerance through cancellation
    def seval(n: int, x: float) -> float:
        lo, hi = 1.0, x
        for _ in range(n - 1):
            lo, hi = hi, x * hi - lo
        return hi if n >= 1 else lo

    for n in range(1, min(bound, 50) + 1):
        sn = cheb_s(n)
        tol = 1e-9 * (1 + sum(abs(c) for c in sn.coeffs))
        rec.check(f"roots S_{n}",
                  all(abs(seval(n, r)) <= tol for r in cheb_s_roots(n)))
        diff = sn - cheb_s(n - 1)
        tol = 1e-9 * (1 + sum(abs(c) for c in diff.coeffs))
        rec.check(f"roots S_{n}-S_{n - 1}",
                  all(abs(seval(n, r) - seval(n - 1, r)) <= tol
                      for r in cheb_s_diff_roots(n)))


# ---------------------------------------------------------------------------
# twist suite
# ---------------------------------------------------------------------------

def _suite_twist(rec: _Recorder, bound: int) -> None:
    XY = ("x", "y")
    x2 = BiPoly.monomial(XY, 2, 0)
    y = BiPoly.monomial(XY, 0, 1)
    for m in range(1, bound + 1):
        rec.check(f"Xm closed m={m}", twist.x_m(m) == twist.x_m_closed(m))
    for m in range(0, bound + 1):
        try:
            twist.r_m(m)  # asserts R_m == -(X_{m+1}+X_m+x^2) internally
            rec.check(f"Rm identity m={m}", True)
        except AssertionError as exc:
            rec.check(f"Rm identity m={m}", False, str(exc))
    lemma_x_const = BiPoly(XY, {(0, 2): -1, (2, 1): -2, (4, 0): -1,
                                (2, 0): -4, (0, 0): 4})
    for m in range(1, bound + 1):
        xm, xm1 = twist.x_m(m), twist.x_m(m - 1)
        lhs = (xm * xm + xm1 * xm1 - y * (xm * xm1)
               + x2 * 2 * (xm + xm1))
        rec.check(f"Lemma X m={m}", lhs == lemma_x_const,
                  _digest(lhs - lemma_x_const))
        rhs = ((y + BiPoly.const(2, XY))
               * (xm * xm + x2 * xm + y + x2 * 2 - BiPoly.const(2, XY)))
        rec.check(f"Lemma R m={m}", twist.r_m(m) * twist.r_m(m - 1) == rhs)
    for m in range(2, bound + 1):
        lhs = (twist.x_m(m + 2) + twist.x_m(m - 2)
               - (y * y - BiPoly.const(2, XY)) * twist.x_m(m))
        rec.check(f"Lemma X2 m={m}",
                  lhs == BiPoly(XY, {(2, 1): -2, (2, 0): -4}))


# ---------------------------------------------------------------------------
# maps suite
# ---------------------------------------------------------------------------

def _suite_maps(rec: _Recorder, bound: int) -> None:
    XY = ("x", "y")
    y = BiPoly.monomial(XY, 0, 1)
    t = twist.t_poly()
    two = BiPoly.const(2, XY)
    for m in range(1, bound + 1):
        res = twist.verify_prop_gf(m)
        rec.check(f"Prop gf m={m}", res.ok, _digest(res.diff) if res.diff else "")
    small = min(bound, 50)
    for n in range(0, small + 1):
        res = twist.verify_prop_fg(n)
        rec.check(f"Prop fg n={n}", res.ok, _digest(res.diff) if res.diff else "")
        res = twist.verify_prop_odd(n)
        rec.check(f"Prop odd n={n}", res.ok, _digest(res.diff) if res.diff else "")
    for n in range(1, small + 1):
        target = -twist._x_composed(2 * n) - y
        try:
            q = exact_div(target, twist.l_n(n))
            rec.check(f"L_n divides n={n}", q * twist.l_n(n) == target)
        except NotDivisible as exc:
            rec.check(f"L_n divides n={n}", False, str(exc))
    replay = min(bound, 100)
    x2 = BiPoly.monomial(XY, 2, 0)
    for n in range(0, replay + 1):
        rec.check(f"replay L_n n={n}",
                  recurrence_closed_form(y - two, y - t, n, t) == twist.l_n(n))
        lhs = ((x2 - t - y) * twist._s_of_t.s(n - 1)
               - (x2 - two - y) * twist._s_of_t.s(n - 2))
        rec.check(f"replay L'_n n={n}", lhs == twist.l_prime_n(n))


# ---------------------------------------------------------------------------
# bridge3 suite
# ---------------------------------------------------------------------------

def _valid_p3(bound: int):
    return [p for p in range(5, bound + 1, 2) if p % 3]


def _suite_bridge3(rec: _Recorder, bound: int) -> None:
    # even q names the same knot as the odd q -+ p; only odd q is palindromic
    for p in range(3, min(bound, 200) + 1, 2):
        for q in range(1, p, 2):
            try:
                eps = bridge.epsilon_seq(p, q)
            except bridge.InvalidParams:
                continue
            rec.check(f"palindrome p={p} q={q}",
                      all(eps[j - 1] == eps[p - j - 1] for j in range(1, p)))
    for p in _valid_p3(min(bound, 101)):
        rec.check(f"recursion==closed p={p}",
                  bridge.phi_recursive_p3(p) == bridge.phi_closed_p3(p))
    for p in _valid_p3(bound):
        try:
            P, Q, R = bridge.pqr_p3(p)  # asserts the PQR decomposition
            d, ell = (p - 1) // 2, p // 3
            rec.check(f"degree profile p={p}",
                      P.degree == d and (Q * R).degree == d - 1)
        except AssertionError as exc:
            rec.check(f"degree profile p={p}", False, str(exc))
        try:
            rep = bridge.check_phi_irreducible_p3(p)
            rec.check(f"irreducible p={p}", rep.irreducible, rep.verdict)
        except AssertionError as exc:
            rec.check(f"irreducible p={p}", False, str(exc))


# ---------------------------------------------------------------------------
# oracle suite
# ---------------------------------------------------------------------------

def _suite_oracle(rec: _Recorder, bound: int) -> None:
    A, B = oracle.rep_matrices()
    one = LaurentBi.const(1)
    rec.check("det rep a", A.det() == one)
    rec.check("det rep b", B.det() == one)

    for p in range(3, min(bound, 45) + 1, 2):
        for q in range(1, p, 2):
            try:
                bridge.BridgeParams(p, q)
            except bridge.InvalidParams:
                continue
            word = list(bridge.bridge_word(p, q))
            rec.check(f"det word p={p} q={q}",
                      oracle.word_matrix(word).det() == one)
            delta = oracle.oracle_delta(p, q)
            rec.check(f"u divides Delta p={p} q={q}",
                      all(e[1] >= 1 for e in delta.terms))
            res = oracle.defining_poly(p, q, Coords.BRIDGE_XZ)
            d = (p - 1) // 2
            target = cheb_s(d, "z") - cheb_s(d - 1, "z")
            x0 = UniPoly("z", [res.poly.terms.get((0, e), 0)
                               for e in range(res.poly.degrees()[1] + 1)])
            rec.check(f"abelian slice p={p} q={q}",
                      x0 == target or x0 == -target)

    for n in range(1, min(bound, 15) + 1):
        delta = oracle.delta_poly(4 * n + 1, 2 * n + 1, Coords.TRACE_EVEN)
        ln = twist.l_n(n)
        rec.check(f"K_{2 * n} oracle", delta == ln or delta == -ln)
        delta = oracle.delta_poly(4 * n - 1, 2 * n - 1, Coords.TRACE_ODD)
        lpn = twist.l_prime_n(n)
        rec.check(f"K_{2 * n - 1} oracle", delta == lpn or delta == -lpn)

    for p in _valid_p3(min(bound, 61)):
        res = oracle.defining_poly(p, 3, Coords.BRIDGE_XZ)
        closed = bridge.phi_closed_p3(p)
        rec.check(f"b({p},3) oracle",
                  res.poly == closed or res.poly == -closed)


SUITES = {
    "chebyshev": _suite_chebyshev,
    "twist": _suite_twist,
    "maps": _suite_maps,
    "bridge3": _suite_bridge3,
    "oracle": _suite_oracle,
}


def run_suite(name: str, bound: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    result = SuiteResult(suite=name)
    start = time.monotonic()
    SUITES[name](_Recorder(result), bound)
    result.ms = int((time.monotonic() - start) * 1000)
    return result
