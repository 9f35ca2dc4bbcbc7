"""2-bridge epsilon sequences, the q=3 trace polynomial, certificates."""

import pytest
from hypothesis import given, settings, strategies as st

from knotchar.bridge import (
    BridgeParams,
    InvalidParams,
    OutOfScope,
    bridge_word,
    check_phi_irreducible_p3,
    epsilon_seq,
    irreducible_by_parity_gcd,
    minimality_report,
    phi_closed_p3,
    phi_recursive_p3,
    pqr_p3,
)
from knotchar.chebyshev import cheb_s
from knotchar.polys import BiPoly, UniPoly

XZ = ("x", "z")


def zpoly(*cs):
    return UniPoly("z", cs)


class TestParams:
    @pytest.mark.parametrize("p,q", [(4, 1), (-5, 2), (5, 0), (5, 5), (9, 3)])
    def test_invalid(self, p, q):
        with pytest.raises(InvalidParams):
            BridgeParams(p, q)

    def test_derived_quantities(self):
        params = BridgeParams(13, 3)
        assert params.d == 6
        assert params.ell == 4


class TestEpsilons:
    def test_examples(self):
        assert epsilon_seq(3, 1) == (1, 1)
        assert epsilon_seq(5, 3) == (1, -1, -1, 1)
        assert epsilon_seq(7, 3) == (1, 1, -1, -1, 1, 1)

    def test_word_alternates_generators(self):
        word = bridge_word(5, 3)
        assert word == (("a", 1), ("b", -1), ("a", -1), ("b", 1))

    @given(st.integers(1, 60), st.integers(0, 58))
    @settings(deadline=None)
    def test_palindromic_for_odd_q(self, k, j):
        p = 2 * k + 1
        q = 2 * (j % k) + 1 if k else 1
        if q >= p:
            return
        from math import gcd
        if gcd(p, q) != 1:
            return
        eps = epsilon_seq(p, q)
        assert eps == eps[::-1]


class TestPhi:
    def test_p5(self):
        expected = BiPoly(XZ, {(0, 2): 1, (0, 1): -1, (0, 0): -1,
                               (2, 0): 2, (2, 1): -1})
        assert phi_recursive_p3(5) == expected
        assert phi_closed_p3(5) == expected

    def test_p7(self):
        # z^3 - z^2 - 2z + 1 + x^2*(2-z)*(z-1)
        expected = BiPoly(XZ, {(0, 3): 1, (0, 2): -1, (0, 1): -2, (0, 0): 1,
                               (2, 2): -1, (2, 1): 3, (2, 0): -2})
        assert phi_recursive_p3(7) == expected
        assert phi_closed_p3(7) == expected

    def test_p13_structure(self):
        d, ell = 6, 4
        slice2 = ((zpoly(2, -1)) * cheb_s(d - ell - 1)
                  * cheb_s(1) * (cheb_s(2) - cheb_s(1)))
        expected = (BiPoly.from_uni(cheb_s(6) - cheb_s(5), XZ)
                    + BiPoly.monomial(XZ, 2, 0)
                    * BiPoly.from_uni(slice2, XZ))
        assert phi_closed_p3(13) == expected

    @pytest.mark.parametrize("p", [4, 9, 3, 15, 2])
    def test_invalid_p(self, p):
        with pytest.raises(InvalidParams):
            phi_closed_p3(p)

    @given(st.integers(5, 101).filter(lambda p: p % 2 and p % 3))
    @settings(deadline=None)
    def test_recursion_matches_closed_form(self, p):
        assert phi_recursive_p3(p) == phi_closed_p3(p)


class TestPQR:
    def test_p5(self):
        P, Q, R = pqr_p3(5)
        assert P == zpoly(-1, -1, 1)
        assert Q == zpoly(1)
        assert R == zpoly(2, -1)

    def test_p7(self):
        P, Q, R = pqr_p3(7)
        assert P == zpoly(1, -2, -1, 1)
        assert Q == zpoly(-1, 1)
        assert R == zpoly(2, -1)

    @given(st.integers(5, 101).filter(lambda p: p % 2 and p % 3))
    @settings(deadline=None)
    def test_degree_profile(self, p):
        P, Q, R = pqr_p3(p)
        d = (p - 1) // 2
        assert P.degree == d
        assert (Q * R).degree == d - 1


class TestCriterion:
    def test_applicable(self):
        report = irreducible_by_parity_gcd(zpoly(0, 1), zpoly(1))
        assert report.verdict == "Irreducible"

    def test_shared_factor(self):
        report = irreducible_by_parity_gcd(zpoly(-1, 0, 1), zpoly(-1, 1))
        assert report.verdict == "CriterionInapplicable"
        assert report.gcd == zpoly(-1, 1)

    def test_even_gap(self):
        report = irreducible_by_parity_gcd(zpoly(0, 0, 1), zpoly(1))
        assert report.verdict == "CriterionInapplicable"
        assert not report.irreducible

    @pytest.mark.parametrize("p", [5, 7, 11, 101])
    def test_phi_certificates(self, p):
        assert check_phi_irreducible_p3(p).irreducible

    def test_report_json_shape(self):
        obj = check_phi_irreducible_p3(5).to_json(knot="b(5,3)")
        assert obj["knot"] == "b(5,3)"
        assert obj["verdict"] == "Irreducible"
        assert obj["gcd"] == "1"
        assert obj["degree_gap"] == 1


class TestMinimality:
    def test_twist(self):
        record = minimality_report("twist", 2)
        assert record["knot"] == "K_2"
        assert record["minimal"] is True
        assert record["assumptions"] == ["knot is hyperbolic"]

    def test_bridge(self):
        record = minimality_report("bridge3", 5)
        assert record["knot"] == "b(5,3)"
        assert record["minimal"] is True

    @pytest.mark.parametrize("m", [0, 1])
    def test_excluded_twists(self, m):
        with pytest.raises(OutOfScope):
            minimality_report("twist", m)

    def test_unknown_kind(self):
        with pytest.raises(InvalidParams):
            minimality_report("granny", 5)
