"""Exact polynomial arithmetic over arbitrary-precision integers.

Three carrier types:

* ``UniPoly``   -- dense univariate polynomials over the integers.
* ``BiPoly``    -- sparse bivariate polynomials over the integers.
* ``LaurentBi`` -- bivariate polynomials where the first variable (s) may
  carry negative exponents; used as the carrier ring for symbolic 2x2
  matrix computations.

All values are immutable after construction and all operations are pure,
so everything here is safe to use from multiple threads.

Large products go through a Kronecker-substitution fast path: the operands
are packed into big integers (one coefficient per 2^B-digit), multiplied
with gmpy2, and unpacked.  The packing map is the evaluation homomorphism
at 2^B, which is injective as long as every coefficient stays below
2^(B-1) in absolute value, so the result is exact.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

import gmpy2

__all__ = [
    "UniPoly",
    "BiPoly",
    "LaurentBi",
    "NotDivisible",
    "UnknownVariable",
    "NotSymmetric",
    "exact_div",
    "uni_gcd",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient over the integers does not exist."""


class UnknownVariable(KeyError):
    """Raised when a substitution names a variable the polynomial lacks."""


class NotSymmetric(ValueError):
    """Raised when a Laurent polynomial is not invariant under s <-> 1/s."""


# Dict-multiplication cost (|a| * |b| term pairs) above which the packed
# integer fast path is used instead.
_FAST_MUL_THRESHOLD = 5000


# ---------------------------------------------------------------------------
# Kronecker packing helpers
# ---------------------------------------------------------------------------

def _pack(dense: list[int], B: int) -> int:
    """Pack signed coefficients into one integer, one per 2^B digit.

    Requires |c| < 2^(B-1) for every coefficient.  B must be a multiple
    of 8.
    """
    nbytes = B // 8
    full = 1 << B
    buf = bytearray(nbytes * len(dense))
    borrow = 0
    for k, c in enumerate(dense):
        t = c + borrow
        if t < 0:
            t += full
            borrow = -1
        else:
            borrow = 0
        buf[k * nbytes:(k + 1) * nbytes] = t.to_bytes(nbytes, "little")
    value = int.from_bytes(buf, "little")
    if borrow:
        value -= 1 << (B * len(dense))
    return value


def _unpack(value: int, B: int, nslots: int) -> list[int]:
    """Inverse of :func:`_pack` for values whose digits stay in range."""
    sign = 1
    if value < 0:
        sign, value = -1, -value
    nbytes = B // 8
    half = 1 << (B - 1)
    full = 1 << B
    raw = value.to_bytes(nbytes * nslots + nbytes, "little")
    out = []
    carry = 0
    for k in range(nslots):
        d = int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(sign * d)
    return out


def _mul_bits(max_a: int, max_b: int, nterms: int) -> int:
    """Digit width (multiple of 8) safe for a product's coefficients."""
    bound = max_a * max_b * max(nterms, 1)
    B = bound.bit_length() + 2
    return (B + 7) // 8 * 8


def _big_mul(a: int, b: int) -> int:
    return int(gmpy2.mpz(a) * gmpy2.mpz(b))


# ---------------------------------------------------------------------------
# UniPoly
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``var**k``; the stored tuple never
    has trailing zeros.  The zero polynomial stores an empty tuple and has
    degree -1 (a sentinel, never a valid exponent).
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("UniPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "z") -> "UniPoly":
        return cls(var, ())

    @classmethod
    def const(cls, c: int, var: str = "z") -> "UniPoly":
        return cls(var, (c,))

    @classmethod
    def x(cls, var: str = "z") -> "UniPoly":
        return cls(var, (0, 1))

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, UniPoly)
                and self.var == other.var and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise UnknownVariable(
                f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(self.var, out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(self.var, [c * other for c in self.coeffs])
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.var)
        if len(a) * len(b) >= _FAST_MUL_THRESHOLD:
            return self._mul_packed(other)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def _mul_packed(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        B = _mul_bits(max(abs(c) for c in a), max(abs(c) for c in b),
                      min(len(a), len(b)))
        prod = _big_mul(_pack(list(a), B), _pack(list(b), B))
        return UniPoly(self.var, _unpack(prod, B, len(a) + len(b) - 1))

    def shift(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return UniPoly(self.var, (0,) * k + self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner; works for int, float or gmpy2 values."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- division and normalization ----------------------------------------

    def divmod(self, d: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division over the integers.

        Each leading-coefficient division must be exact; otherwise
        :class:`NotDivisible` is raised (no quotient with integer
        coefficients exists for the consumed leading terms).
        """
        self._check_var(d)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dc = d.coeffs
        dl = dc[-1]
        qlen = len(rem) - len(dc) + 1
        if qlen <= 0:
            return UniPoly.zero(self.var), self
        q = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            lead = rem[k + len(dc) - 1]
            if lead == 0:
                continue
            if lead % dl:
                raise NotDivisible(
                    f"{self} not divisible by {d} over the integers")
            t = lead // dl
            q[k] = t
            for i, c in enumerate(dc):
                rem[k + i] -= t * c
        return UniPoly(self.var, q), UniPoly(self.var, rem)

    def exact_div(self, d: "UniPoly") -> "UniPoly":
        q, r = self.divmod(d)
        if not r.is_zero():
            raise NotDivisible(f"{self} not divisible by {d}")
        return q

    def content(self) -> int:
        from math import gcd
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self) -> "UniPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading() < 0:
            g = -g
        return UniPoly(self.var, [c // g for c in self.coeffs])

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            parts.append((c, e))
        chunks = []
        for i, (c, e) in enumerate(parts):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                v = self.var if e == 1 else f"{self.var}^{e}"
                body = v if mag == 1 else f"{mag}*{v}"
            if i == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)

    __repr__ = __str__

    def to_json(self) -> dict:
        terms = [[e, str(self.coeffs[e])]
                 for e in range(len(self.coeffs) - 1, -1, -1)
                 if self.coeffs[e]]
        return {"vars": [self.var], "terms": terms}

    @classmethod
    def from_json(cls, obj: Mapping) -> "UniPoly":
        (var,) = obj["vars"]
        coeffs: dict[int, int] = {}
        for e, c in obj["terms"]:
            coeffs[e] = coeffs.get(e, 0) + int(c)
        if not coeffs:
            return cls.zero(var)
        dense = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            dense[e] = c
        return cls(var, dense)


# ---------------------------------------------------------------------------
# Univariate gcd
# ---------------------------------------------------------------------------

_GCD_PRIMES = (1000003, 999983, 1000033)


def _gcd_degree_mod(a: UniPoly, b: UniPoly, prime: int) -> int:
    """Degree of gcd(a mod prime, b mod prime); -1 for the zero gcd."""
    fa = [c % prime for c in a.coeffs]
    fb = [c % prime for c in b.coeffs]

    def strip(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    fa, fb = strip(fa), strip(fb)
    while fb:
        inv = pow(fb[-1], prime - 2, prime)
        # remainder of fa by monic fb
        r = fa[:]
        db = len(fb) - 1
        for k in range(len(r) - 1 - db, -1, -1):
            lead = r[k + db]
            if lead:
                t = lead * inv % prime
                for i, c in enumerate(fb):
                    r[k + i] = (r[k + i] - t * c) % prime
        fa, fb = fb, strip(r)
    return len(fa) - 1


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Primitive positive-leading gcd generator over the rationals.

    Computed by a primitive pseudo-remainder sequence over the integers.
    A modular coprimality certificate short-circuits the common case:
    if gcd(p, q) mod m is constant for a prime m not dividing lc(p), then
    p and q are coprime over Q.
    """
    if p.var != q.var:
        raise UnknownVariable(f"variable mismatch: {p.var!r} vs {q.var!r}")
    if p.is_zero():
        return q.primitive()
    if q.is_zero():
        return p.primitive()

    if p.degree > 0 and q.degree > 0:
        for prime in _GCD_PRIMES:
            if p.leading() % prime and _gcd_degree_mod(p, q, prime) == 0:
                return UniPoly.const(1, p.var)
            if q.leading() % prime and _gcd_degree_mod(q, p, prime) == 0:
                return UniPoly.const(1, p.var)

    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        if b.degree == 0:
            return UniPoly.const(1, p.var)
        # pseudo-remainder of a by b; the stray lc(b) powers are harmless
        # because only the primitive part is kept.
        r = a
        bl = b.leading()
        while r.degree >= b.degree:
            k = r.degree - b.degree
            r = r * bl - b.shift(k) * r.leading()
        a, b = b, r.primitive()
    return a.primitive()


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse bivariate polynomial with integer coefficients.

    ``terms`` maps exponent pairs (e1, e2) to nonzero coefficients; two
    values are equal iff their variable pairs and term maps coincide, so
    equality of canonical forms is plain ``==``.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, str], terms: Mapping[tuple[int, int], int]):
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "terms",
                           {e: c for e, c in terms.items() if c})

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("BiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple[str, str]) -> "BiPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, c: int, vars: tuple[str, str]) -> "BiPoly":
        return cls(vars, {(0, 0): c})

    @classmethod
    def monomial(cls, vars: tuple[str, str], e1: int, e2: int,
                 c: int = 1) -> "BiPoly":
        return cls(vars, {(e1, e2): c})

    @classmethod
    def from_uni(cls, p: UniPoly, vars: tuple[str, str]) -> "BiPoly":
        """Lift a univariate polynomial in one of the two variables."""
        if p.var == vars[0]:
            return cls(vars, {(e, 0): c for e, c in enumerate(p.coeffs) if c})
        if p.var == vars[1]:
            return cls(vars, {(0, e): c for e, c in enumerate(p.coeffs) if c})
        raise UnknownVariable(f"{p.var!r} is not one of {vars}")

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BiPoly)
                and self.vars == other.vars and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def degrees(self) -> tuple[int, int]:
        if not self.terms:
            return (-1, -1)
        return (max(e[0] for e in self.terms), max(e[1] for e in self.terms))

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.terms.values()), default=0)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms in canonical rendering order.

        Total degree descending, then first-variable exponent descending.
        """
        return [(e1, e2, self.terms[(e1, e2)])
                for e1, e2 in sorted(self.terms,
                                     key=lambda e: (-(e[0] + e[1]), -e[0]))]

    # -- arithmetic ---------------------------------------------------------

    def _check_vars(self, other: "BiPoly") -> None:
        if self.vars != other.vars:
            raise UnknownVariable(
                f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            n = out.get(e, 0) + c
            if n:
                out[e] = n
            else:
                out.pop(e, None)
        return BiPoly(self.vars, out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __neg__(self) -> "BiPoly":
        return BiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly(self.vars,
                          {e: c * other for e, c in self.terms.items()})
        self._check_vars(other)
        if not self.terms or not other.terms:
            return BiPoly.zero(self.vars)
        if len(self.terms) * len(other.terms) >= _FAST_MUL_THRESHOLD:
            return self._mul_packed(other)
        out: dict[tuple[int, int], int] = {}
        get = out.get
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                e = (a1 + b1, a2 + b2)
                n = get(e, 0) + ca * cb
                if n:
                    out[e] = n
                else:
                    out.pop(e, None)
        return BiPoly(self.vars, out)

    __rmul__ = __mul__

    def _mul_packed(self, other: "BiPoly") -> "BiPoly":
        da1, da2 = self.degrees()
        db1, db2 = other.degrees()
        stride = da1 + db1 + 1
        nslots = stride * (da2 + db2 + 1)
        B = _mul_bits(self.max_abs_coeff(), other.max_abs_coeff(),
                      min(len(self.terms), len(other.terms)))

        def pack(p: "BiPoly") -> int:
            dense = [0] * nslots
            for (e1, e2), c in p.terms.items():
                dense[e1 + stride * e2] = c
            return _pack(dense, B)

        prod = _big_mul(pack(self), pack(other))
        flat = _unpack(prod, B, nslots)
        out = {}
        for k, c in enumerate(flat):
            if c:
                out[(k % stride, k // stride)] = c
        return BiPoly(self.vars, out)

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        acc = BiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return acc

    def __call__(self, v1, v2):
        """Evaluate at numeric values (ints, floats, gmpy2)."""
        acc = 0
        for (e1, e2), c in self.terms.items():
            acc += c * v1 ** e1 * v2 ** e2
        return acc

    # -- substitution -------------------------------------------------------

    def substitute(self, which: str, value: "BiPoly") -> "BiPoly":
        """Replace one variable by a polynomial in the output variables.

        The other variable of ``self`` must be one of ``value.vars``; the
        result is fully expanded in ``value.vars``.
        """
        if which not in self.vars:
            raise UnknownVariable(f"{which!r} is not one of {self.vars}")
        idx = self.vars.index(which)
        keep = self.vars[1 - idx]
        out_vars = value.vars
        if keep not in out_vars:
            raise UnknownVariable(
                f"remaining variable {keep!r} not in output vars {out_vars}")
        # Horner over the substituted variable, coefficients in the kept one.
        by_exp: dict[int, dict[tuple[int, int], int]] = {}
        kidx = out_vars.index(keep)
        for e, c in self.terms.items():
            se, ke = e[idx], e[1 - idx]
            key = (ke, 0) if kidx == 0 else (0, ke)
            by_exp.setdefault(se, {})[key] = c
        if not by_exp:
            return BiPoly.zero(out_vars)
        acc = BiPoly.zero(out_vars)
        for se in range(max(by_exp), -1, -1):
            acc = acc * value
            if se in by_exp:
                acc = acc + BiPoly(out_vars, by_exp[se])
        return acc

    def compose(self, v1: "BiPoly", v2: "BiPoly") -> "BiPoly":
        """Simultaneous substitution of both variables."""
        v1._check_vars(v2)
        out_vars = v1.vars
        d1, d2 = self.degrees()
        pow1 = [BiPoly.const(1, out_vars)]
        for _ in range(max(d1, 0)):
            pow1.append(pow1[-1] * v1)
        pow2 = [BiPoly.const(1, out_vars)]
        for _ in range(max(d2, 0)):
            pow2.append(pow2[-1] * v2)
        acc = BiPoly.zero(out_vars)
        for (e1, e2), c in self.terms.items():
            acc = acc + pow1[e1] * pow2[e2] * c
        return acc

    # -- exact division -----------------------------------------------------

    def exact_div(self, d: "BiPoly") -> "BiPoly":
        """Exact quotient over the integers, or :class:`NotDivisible`.

        Fast path: both operands are packed into integers (evaluation at
        2^B); exact polynomial division implies exact integer division of
        the packed values, and the unpacked candidate is verified by
        multiplying back, so a digit-width that turned out too small can
        only cause a retry, never a wrong answer.
        """
        self._check_vars(d)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        da1, da2 = self.degrees()
        dd1, dd2 = d.degrees()
        if dd1 > da1 or dd2 > da2:
            raise NotDivisible("divisor degree exceeds dividend degree")

        stride = da1 + 1
        nslots = stride * (da2 + 1)
        base_bits = max(self.max_abs_coeff().bit_length(),
                        d.max_abs_coeff().bit_length())
        B = (base_bits + 72) // 8 * 8
        for _ in range(6):
            dense_p = [0] * nslots
            for (e1, e2), c in self.terms.items():
                dense_p[e1 + stride * e2] = c
            dense_d = [0] * nslots
            for (e1, e2), c in d.terms.items():
                dense_d[e1 + stride * e2] = c
            vp, vd = _pack(dense_p, B), _pack(dense_d, B)
            q_mpz, rem = gmpy2.t_divmod(gmpy2.mpz(vp), gmpy2.mpz(vd))
            q_int = int(q_mpz)
            if rem:
                raise NotDivisible("no exact quotient over the integers")
            flat = _unpack(q_int, B, nslots)
            out = {}
            for k, c in enumerate(flat):
                if c:
                    out[(k % stride, k // stride)] = c
            q = BiPoly(self.vars, out)
            if q * d == self:
                return q
            B *= 2  # candidate aliased by too-small digits; widen and retry
        raise NotDivisible("no exact quotient over the integers")

    # -- rendering ----------------------------------------------------------

    def _term_str(self, e1: int, e2: int, c: int) -> str:
        factors = []
        for var, e in ((self.vars[0], e1), (self.vars[1], e2)):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        mag = abs(c)
        if not factors:
            return str(mag)
        if mag == 1:
            return "*".join(factors)
        return "*".join([str(mag)] + factors)

    def __str__(self) -> str:
        terms = self.sorted_terms()
        if not terms:
            return "0"
        chunks = []
        for i, (e1, e2, c) in enumerate(terms):
            body = self._term_str(e1, e2, c)
            if i == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(chunks)

    __repr__ = __str__

    def to_json(self, coords: str | None = None) -> dict:
        obj = {
            "vars": list(self.vars),
            "terms": [[e1, e2, str(c)] for e1, e2, c in self.sorted_terms()],
        }
        if coords is not None:
            obj["coords"] = coords
        return obj

    @classmethod
    def from_json(cls, obj: Mapping) -> "BiPoly":
        v1, v2 = obj["vars"]
        out: dict[tuple[int, int], int] = {}
        for e1, e2, c in obj["terms"]:
            key = (e1, e2)
            out[key] = out.get(key, 0) + int(c)
        return cls((v1, v2), out)


def exact_div(p, d):
    """Exact quotient q with q*d == p; NotDivisible otherwise."""
    return p.exact_div(d)


# ---------------------------------------------------------------------------
# LaurentBi
# ---------------------------------------------------------------------------

# Keys are packed as s_exp * _USPAN + u_exp with 0 <= u_exp < _USPAN, so
# key addition is exponent addition.  Word lengths here stay far below the
# span.
_USPAN = 1 << 20


class LaurentBi:
    """Polynomial in Z[s, 1/s][u]: s-exponents any sign, u-exponents >= 0."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None,
                 _packed: dict[int, int] | None = None):
        if _packed is not None:
            object.__setattr__(self, "_t",
                               {k: c for k, c in _packed.items() if c})
        else:
            packed = {}
            for (se, ue), c in (terms or {}).items():
                if ue < 0:
                    raise ValueError("u-exponent must be non-negative")
                if c:
                    packed[se * _USPAN + ue] = c
            object.__setattr__(self, "_t", packed)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("LaurentBi is immutable")

    @classmethod
    def const(cls, c: int) -> "LaurentBi":
        return cls({(0, 0): c})

    @classmethod
    def s_power(cls, n: int, c: int = 1) -> "LaurentBi":
        return cls({(n, 0): c})

    @classmethod
    def u_gen(cls) -> "LaurentBi":
        return cls({(0, 1): 1})

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (s_exp, u_exp, coeff) triples."""
        for k, c in self._t.items():
            se, ue = divmod(k, _USPAN)
            yield se, ue, c

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentBi) and self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __add__(self, other: "LaurentBi") -> "LaurentBi":
        out = dict(self._t)
        for k, c in other._t.items():
            n = out.get(k, 0) + c
            if n:
                out[k] = n
            else:
                out.pop(k, None)
        return LaurentBi(_packed=out)

    def __sub__(self, other: "LaurentBi") -> "LaurentBi":
        return self + (-other)

    def __neg__(self) -> "LaurentBi":
        return LaurentBi(_packed={k: -c for k, c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentBi(_packed={k: c * other for k, c in self._t.items()})
        out: dict[int, int] = {}
        get = out.get
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                n = get(k, 0) + ca * cb
                if n:
                    out[k] = n
                else:
                    out.pop(k, None)
        return LaurentBi(_packed=out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for se, ue, c in sorted(self.items()):
            factors = []
            if se:
                factors.append(f"s^{se}" if se != 1 else "s")
            if ue:
                factors.append(f"u^{ue}" if ue != 1 else "u")
            body = "*".join([str(c)] + factors) if factors else str(c)
            parts.append(body)
        return " + ".join(parts)

    __repr__ = __str__
