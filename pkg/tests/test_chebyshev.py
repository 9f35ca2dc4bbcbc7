"""Chebyshev families S_n and T_n, their sums, roots, and identities."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from knotchar.chebyshev import (
    ChebCompose,
    NegativeIndex,
    alt_sum_alpha,
    alt_sum_beta,
    cheb_s,
    cheb_s_diff_roots,
    cheb_s_roots,
    cheb_t,
    recurrence_closed_form,
)
from knotchar.polys import BiPoly, UniPoly

indices = st.integers(min_value=-60, max_value=60)


def zpoly(*cs):
    return UniPoly("z", cs)


class TestS:
    def test_seed_values(self):
        assert cheb_s(0) == zpoly(1)
        assert cheb_s(1) == zpoly(0, 1)
        assert cheb_s(2) == zpoly(-1, 0, 1)
        assert cheb_s(3) == zpoly(0, -2, 0, 1)
        assert cheb_s(-1) == zpoly()
        assert cheb_s(-2) == zpoly(-1)

    @given(indices)
    def test_reflection(self, m):
        assert cheb_s(-m) == -cheb_s(m - 2)

    @given(indices)
    def test_determinant_identity(self, m):
        assert (cheb_s(m) * cheb_s(m - 2)
                - cheb_s(m - 1) * cheb_s(m - 1)) == zpoly(-1)

    @given(st.integers(0, 25), st.integers(0, 25))
    @settings(deadline=None)
    def test_product_expands_to_sum(self, r, s):
        total = UniPoly.zero("z")
        for k in range(s, 2 * r + s + 1, 2):
            total = total + cheb_s(k)
        assert cheb_s(r) * cheb_s(r + s) == total


class TestT:
    def test_seed_values(self):
        assert cheb_t(0) == zpoly(2)
        assert cheb_t(1) == zpoly(0, 1)
        assert cheb_t(2) == zpoly(-2, 0, 1)

    def test_negative_index_rejected(self):
        with pytest.raises(NegativeIndex):
            cheb_t(-1)

    @given(st.integers(0, 60))
    def test_difference_of_s(self, n):
        assert cheb_t(n) == cheb_s(n) - cheb_s(n - 2)


class TestRoots:
    def test_small_lists(self):
        assert cheb_s_roots(1) == pytest.approx([0.0])
        assert cheb_s_roots(2) == pytest.approx([1.0, -1.0])
        assert cheb_s_roots(3) == pytest.approx([math.sqrt(2), 0.0,
                                                 -math.sqrt(2)])

    def test_descending_and_counted(self):
        for n in (4, 9, 17):
            roots = cheb_s_roots(n)
            assert len(roots) == n == len(cheb_s_diff_roots(n))
            assert roots == sorted(roots, reverse=True)

    def test_rejects_zero(self):
        with pytest.raises(NegativeIndex):
            cheb_s_roots(0)


class TestAltSums:
    def test_alpha_examples(self):
        assert alt_sum_alpha(0) == zpoly(1)
        assert alt_sum_alpha(1) == zpoly(-1, 1)
        assert alt_sum_alpha(2) == zpoly(0, -1, 1)

    def test_beta_examples(self):
        two_minus_z = zpoly(2, -1)
        assert alt_sum_beta(0) == two_minus_z
        assert alt_sum_beta(1) == two_minus_z * zpoly(0, 1)
        assert alt_sum_beta(2) == two_minus_z * zpoly(-1, 0, 1)

    @given(st.integers(0, 80))
    @settings(deadline=None)
    def test_beta_closed_form(self, n):
        assert alt_sum_beta(n) == (zpoly(2, -1)) * cheb_s(n)


class TestRecurrenceClosedForm:
    ZZ = ("x", "z")

    def test_pure_s_sequence(self):
        t = BiPoly.monomial(self.ZZ, 0, 1)
        got = recurrence_closed_form(
            BiPoly.const(1, self.ZZ), BiPoly.zero(self.ZZ), 5, t)
        assert got == BiPoly.from_uni(cheb_s(5), self.ZZ)

    def test_t_sequence_seed(self):
        t = BiPoly.monomial(self.ZZ, 0, 1)
        got = recurrence_closed_form(BiPoly.const(2, self.ZZ), t, 1, t)
        assert got == t

    def test_n_zero_returns_seed(self):
        vars_ = ("x", "y")
        y = BiPoly.monomial(vars_, 0, 1)
        t = BiPoly(vars_, {(0, 2): 1, (2, 1): -1, (2, 0): 2, (0, 0): -2})
        assert recurrence_closed_form(
            y - BiPoly.const(2, vars_), y - t, 0, t) == y - BiPoly.const(2, vars_)

    @given(st.integers(0, 20))
    def test_matches_direct_iteration(self, n):
        vars_ = ("x", "y")
        t = BiPoly(vars_, {(2, 0): 1, (0, 1): 1})
        f_prev = BiPoly.const(3, vars_)            # f_{-1}
        f_cur = BiPoly(vars_, {(1, 1): 1})         # f_0
        for _ in range(n):
            f_prev, f_cur = f_cur, t * f_cur - f_prev
        assert recurrence_closed_form(
            BiPoly(vars_, {(1, 1): 1}), BiPoly.const(3, vars_), n, t) == f_cur


class TestChebCompose:
    def test_matches_substitution(self):
        vars_ = ("x", "y")
        t = BiPoly(vars_, {(0, 2): 1, (2, 0): -1})
        comp = ChebCompose(t)
        for n in (-3, -1, 0, 1, 4):
            direct = BiPoly.from_uni(cheb_s(n, "y"), vars_).substitute("y", t)
            assert comp.s(n) == direct
