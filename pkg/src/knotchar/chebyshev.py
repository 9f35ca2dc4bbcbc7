"""Chebyshev polynomials of the second kind S_n and first kind T_n.

S satisfies S_{n+1} = z*S_n - S_{n-1} with S_0 = 1, S_1 = z, extended to
negative indices by the reflection S_{-n} = -S_{n-2}.  T uses the seeds
T_0 = 2, T_1 = z.  Alternating sums of both families collapse to short
closed forms, which the corresponding helpers compute and cross-check.
"""

from __future__ import annotations

import math
import threading

from .polys import BiPoly, UniPoly

__all__ = [
    "NegativeIndex",
    "cheb_s",
    "cheb_t",
    "cheb_s_roots",
    "cheb_s_diff_roots",
    "alt_sum_alpha",
    "alt_sum_beta",
    "recurrence_closed_form",
    "ChebCompose",
]


class NegativeIndex(ValueError):
    """Raised for operations that only accept non-negative indices."""


_lock = threading.Lock()
_s_cache: dict[str, list[UniPoly]] = {}
_t_cache: dict[str, list[UniPoly]] = {}


def _extend(cache: list[UniPoly], n: int, var: str) -> None:
    z = UniPoly.x(var)
    while len(cache) <= n:
        cache.append(z * cache[-1] - cache[-2])


def cheb_s(n: int, var: str = "z") -> UniPoly:
    """S_n for any integer n; negative indices use S_{-n} = -S_{n-2}."""
    if n < 0:
        if n == -1:
            return UniPoly.zero(var)
        return -cheb_s(-n - 2, var)
    with _lock:
        cache = _s_cache.setdefault(
            var, [UniPoly.const(1, var), UniPoly.x(var)])
        _extend(cache, n, var)
        return cache[n]


def cheb_t(n: int, var: str = "z") -> UniPoly:
    """T_n for n >= 0 (T_0 = 2, T_1 = z)."""
    if n < 0:
        raise NegativeIndex(f"T_n needs n >= 0, got {n}")
    with _lock:
        cache = _t_cache.setdefault(
            var, [UniPoly.const(2, var), UniPoly.x(var)])
        _extend(cache, n, var)
        return cache[n]


def cheb_s_roots(n: int) -> list[float]:
    """The n roots 2*cos(j*pi/(n+1)) of S_n, descending."""
    if n < 1:
        raise NegativeIndex(f"root list needs n >= 1, got {n}")
    return [2.0 * math.cos(j * math.pi / (n + 1)) for j in range(1, n + 1)]


def cheb_s_diff_roots(n: int) -> list[float]:
    """The n roots 2*cos((2j+1)*pi/(2n+1)) of S_n - S_{n-1}, descending."""
    if n < 1:
        raise NegativeIndex(f"root list needs n >= 1, got {n}")
    return [2.0 * math.cos((2 * j + 1) * math.pi / (2 * n + 1))
            for j in range(n)]


def alt_sum_alpha(n: int, var: str = "z") -> UniPoly:
    """S_n - S_{n-1} + ... +- S_0, cross-checked against its closed form.

    The sum collapses to S_{n-floor((n+1)/2)} * (S_{floor((n+1)/2)} -
    S_{floor((n-1)/2)}).
    """
    if n < 0:
        raise NegativeIndex(f"alternating sum needs n >= 0, got {n}")
    acc = UniPoly.zero(var)
    for k in range(n + 1):
        term = cheb_s(k, var)
        acc = acc + term if (n - k) % 2 == 0 else acc - term
    h = (n + 1) // 2
    closed = cheb_s(n - h, var) * (cheb_s(h, var) - cheb_s((n - 1) // 2, var))
    if acc != closed:
        raise AssertionError(f"alternating S-sum closed form failed at n={n}")
    return acc


def alt_sum_beta(n: int, var: str = "z") -> UniPoly:
    """-T_{n+1} + 2*(T_n - T_{n-1} + ... +- T_1 +- 1) == (2-z)*S_n."""
    if n < 0:
        raise NegativeIndex(f"alternating sum needs n >= 0, got {n}")
    acc = -cheb_t(n + 1, var)
    for k in range(n, 0, -1):
        term = cheb_t(k, var) * 2
        acc = acc + term if (n - k) % 2 == 0 else acc - term
    tail = UniPoly.const(2 if n % 2 == 0 else -2, var)
    acc = acc + tail
    closed = (UniPoly.const(2, var) - UniPoly.x(var)) * cheb_s(n, var)
    if acc != closed:
        raise AssertionError(f"alternating T-sum closed form failed at n={n}")
    return acc


class ChebCompose:
    """Cache of S_n(t) for a fixed bivariate argument t.

    Negative indices follow the same reflection as :func:`cheb_s`.  The
    cache only grows; concurrent use is guarded by a lock, so results are
    identical to recomputing from scratch.
    """

    def __init__(self, t: BiPoly):
        self.t = t
        self._vals = [BiPoly.const(1, t.vars), t]
        self._lock = threading.Lock()

    def s(self, n: int) -> BiPoly:
        if n < 0:
            if n == -1:
                return BiPoly.zero(self.t.vars)
            return -self.s(-n - 2)
        with self._lock:
            while len(self._vals) <= n:
                self._vals.append(self.t * self._vals[-1] - self._vals[-2])
            return self._vals[n]


_compose_cache: dict[BiPoly, ChebCompose] = {}


def recurrence_closed_form(f0: BiPoly, f_neg1: BiPoly, n: int,
                           t: BiPoly) -> BiPoly:
    """General term f_0*S_n(t) - f_{-1}*S_{n-1}(t) of f_{k+1} = t*f_k - f_{k-1}."""
    with _lock:
        comp = _compose_cache.setdefault(t, ChebCompose(t))
    return f0 * comp.s(n) - f_neg1 * comp.s(n - 1)
