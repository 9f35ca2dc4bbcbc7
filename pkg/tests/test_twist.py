"""Twist-knot polynomials in trace and skein coordinates."""

import pytest
from hypothesis import given, settings, strategies as st

from knotchar.chebyshev import NegativeIndex
from knotchar.polys import BiPoly, NotDivisible, UniPoly, exact_div
from knotchar.twist import (
    check_r_tilde_irreducible,
    l_n,
    l_prime_n,
    map_f_point,
    map_g_point,
    r_m,
    r_tilde_m,
    t_poly,
    verify_prop_fg,
    verify_prop_gf,
    verify_prop_odd,
    x_m,
    x_m_closed,
)

XY = ("x", "y")


def poly(terms):
    return BiPoly(XY, terms)


X2 = poly({(2, 0): 1})
Y = poly({(0, 1): 1})


class TestT:
    def test_point_values(self):
        t = t_poly()
        assert t(0, 2) == 2
        assert t(2, 2) == 2

    def test_t_minus_y_factors(self):
        lhs = t_poly() - Y
        rhs = (Y - poly({(0, 0): 2})) * (Y + poly({(0, 0): 1}) - X2)
        assert lhs == rhs


class TestXm:
    def test_seed_values(self):
        assert x_m(0) == poly({(0, 0): -2})
        assert x_m(1) == poly({(2, 0): -1, (0, 1): -1})
        assert x_m(2) == poly({(0, 2): -1, (2, 1): -1, (2, 0): -2, (0, 0): 2})

    def test_rejects_negative(self):
        with pytest.raises(NegativeIndex):
            x_m(-1)
        with pytest.raises(NegativeIndex):
            x_m_closed(0)

    @given(st.integers(1, 60))
    @settings(deadline=None)
    def test_recursion_equals_closed_form(self, m):
        assert x_m(m) == x_m_closed(m)


class TestTracePolynomials:
    def test_l_small(self):
        assert l_n(0) == Y - poly({(0, 0): 2})
        expected = ((Y - poly({(0, 0): 2}))
                    * (t_poly() + Y + poly({(0, 0): 1}) - X2))
        assert l_n(1) == expected

    def test_l_divisible_by_y_minus_2(self):
        y_minus_2 = Y - poly({(0, 0): 2})
        for n in range(21):
            q = exact_div(l_n(n), y_minus_2)
            assert q * y_minus_2 == l_n(n)

    def test_l_prime_small(self):
        front = X2 - Y - poly({(0, 0): 2})
        assert l_prime_n(0) == front
        assert l_prime_n(1) == front * (Y - poly({(0, 0): 1}))


class TestSkeinPolynomials:
    def test_small_values(self):
        assert r_tilde_m(0) == poly({(0, 0): 1})
        assert r_m(0) == Y + poly({(0, 0): 2})
        expected = (Y + poly({(0, 0): 2})) * (Y - poly({(0, 0): 1}) + X2)
        assert r_m(1) == expected

    def test_r_m_cross_identity(self):
        # the constructor asserts R_m == -(X_{m+1} + X_m + x^2); spot-check it
        assert r_m(1) == -(x_m(2) + x_m(1) + X2)

    @given(st.integers(0, 40))
    @settings(deadline=None)
    def test_r_factor(self, m):
        assert r_m(m) == (Y + poly({(0, 0): 2})) * r_tilde_m(m)


class TestCoordinateMaps:
    def test_f_point(self):
        assert map_f_point(0, 2) == (0, -2)

    def test_g_point(self):
        assert map_g_point(0, 7, -3) == (-7, 2)
        assert map_g_point(1, 1, 1) == (-1, 2)


class TestIdentityVerifiers:
    @pytest.mark.parametrize("m", [1, 2, 10])
    def test_gf(self, m):
        assert verify_prop_gf(m)

    @pytest.mark.parametrize("n", [0, 1, 2, 8])
    def test_fg_and_odd(self, n):
        assert verify_prop_fg(n)
        assert verify_prop_odd(n)

    def test_failure_carries_difference(self):
        res = verify_prop_gf(3)
        assert res.ok and res.diff is None


class TestIrreducibility:
    def test_m1(self):
        report = check_r_tilde_irreducible(1)
        assert report.f == UniPoly("y", (-1, 1))
        assert report.g == UniPoly.const(1, "y")
        assert report.degree_gap == 1
        assert report.verdict == "Irreducible"

    def test_m2(self):
        report = check_r_tilde_irreducible(2)
        assert report.f == UniPoly("y", (-1, -1, 1))
        assert report.g == UniPoly("y", (1, 1))
        assert report.gcd == UniPoly.const(1, "y")
        assert report.irreducible

    def test_rejects_m0(self):
        with pytest.raises(NegativeIndex):
            check_r_tilde_irreducible(0)
