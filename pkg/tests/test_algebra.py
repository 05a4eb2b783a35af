from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import nonzero_polys, nonzero_rationals, polys
from selfadj.algebra import (
    ZERO_DEGREE,
    DiffOperator,
    Poly,
    RatFunc,
    compose_linear,
    count_real_roots,
    order_at,
    partial_fractions,
    poly_divrem,
    poly_gcd,
    rational_roots,
    recombine,
    squarefree_part,
    to_rational,
)
from selfadj.errors import InvalidOperator, IrreducibleFactor

x = Poly.x()


def P(*cs):
    return Poly(cs)


class TestRational:
    def test_accepts_exact_inputs(self):
        assert to_rational("3/4") == Fraction(3, 4)
        assert to_rational(-2) == -2
        assert to_rational(Fraction(6, 8)) == Fraction(3, 4)

    @pytest.mark.parametrize("bad", [0.5, "0.5", "1e3", True])
    def test_rejects_inexact_inputs(self, bad):
        with pytest.raises((TypeError, ValueError)):
            to_rational(bad)


class TestPoly:
    def test_difference_of_squares(self):
        assert (1 + x) * (1 - x) == 1 - x**2

    def test_derivative_chain_rule(self):
        assert ((1 - x**2) ** 2).deriv() == -4 * x * (1 - x**2)

    def test_legendre_a3_vanishes_at_one(self):
        assert (-8 * x * (1 - x**2))(1) == 0

    def test_zero_degree_sentinel(self):
        assert Poly().degree == ZERO_DEGREE
        assert Poly([0, 0]).degree == ZERO_DEGREE
        assert Poly([1, 0, 0]).coeffs == (Fraction(1),)

    def test_divrem_examples(self):
        assert poly_divrem(x**2 - 1, x - 1) == (x + 1, Poly())
        assert poly_divrem(x**3, x**2) == (x, Poly())

    def test_divrem_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_divrem(x, Poly())

    def test_congruence_example_legendre(self):
        a4, a3 = (1 - x**2) ** 2, -8 * x * (1 - x**2)
        prod = a3 * (a3 - 4 * a4.deriv()) * (a3 - 2 * a4.deriv())
        assert (prod % a4).is_zero()

    def test_gcd_examples(self):
        assert poly_gcd((1 - x**2) ** 2, 1 - x**2) == x**2 - 1
        assert poly_gcd(x**2, x**3) == x**2
        assert poly_gcd(x**2, -2 * (x - 2) * x) == x

    def test_gcd_of_zeros(self):
        with pytest.raises(ZeroDivisionError):
            poly_gcd(Poly(), Poly())

    def test_compose_linear(self):
        assert compose_linear(x**2, 1, 1) == x**2 + 2 * x + 1
        assert compose_linear(x * (x - 2), 1, 1) == x**2 - 1
        p = P(3, -1, 2)
        assert compose_linear(p, 1, 0) == p
        with pytest.raises(ValueError):
            compose_linear(p, 0, 1)

    def test_rational_roots(self):
        p = (x - 1) ** 3 * (2 * x + 1) * (x**2 + 1)
        roots, rest = rational_roots(p)
        assert roots == [(Fraction(-1, 2), 1), (Fraction(1), 3)]
        assert rest == x**2 + 1

    def test_count_real_roots(self):
        p = (x - 1) * (x + 2) * (x**2 - 2) * (x**2 + 1)
        assert count_real_roots(p) == 4
        assert count_real_roots(p, 0, 3) == 2
        assert count_real_roots(p, -1, 1) == 0  # endpoint roots are excluded
        assert count_real_roots(x**2 + 1) == 0

    def test_squarefree_part(self):
        assert squarefree_part((x - 1) ** 3 * (x + 1) ** 2) == (x - 1) * (x + 1)

    @given(polys(), polys(), polys())
    def test_distributive(self, p, q, r):
        assert (p + q) * r == p * r + q * r

    @given(polys(), polys())
    def test_leibniz(self, p, q):
        assert (p * q).deriv() == p * q.deriv() + q * p.deriv()

    @given(polys(), nonzero_polys(5))
    def test_divrem_round_trip(self, p, q):
        quot, rem = poly_divrem(p, q)
        assert q * quot + rem == p
        assert rem.degree < q.degree

    @given(nonzero_polys(6))
    def test_derivative_lowers_degree_by_one(self, p):
        assume(p.degree >= 1)
        assert p.deriv().degree == p.degree - 1

    @given(nonzero_polys(5), nonzero_polys(5))
    def test_gcd_divides_both(self, p, q):
        g = poly_gcd(p, q)
        assert g.lc == 1
        assert (p % g).is_zero() and (q % g).is_zero()

    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=6), nonzero_rationals)
    def test_rational_roots_recovered(self, roots, lc):
        p = Poly.from_roots([Fraction(r, 2) for r in roots]) * lc
        found, rest = rational_roots(p)
        assert sum(m for _, m in found) == len(roots)
        assert rest.degree == 0


class TestRatFunc:
    def test_normalize(self):
        r = RatFunc(2 * x**2 - 2, 2 * x - 2)
        assert r.num == x + 1 and r.den == Poly.constant(1)

    def test_derivative_of_reciprocal(self):
        assert RatFunc(Poly.constant(1), x).deriv() == RatFunc(Poly.constant(-1), x**2)

    def test_hermite_log_derivative(self):
        a4, a3 = Poly.constant(1), -4 * x
        rho = RatFunc(2 * a3, 4 * a4) - RatFunc(a4.deriv(), a4)
        assert rho == RatFunc(-2 * x)

    def test_order_at_examples(self):
        assert order_at(RatFunc((1 - x**2) ** 2), 1) == 2
        assert order_at(RatFunc(Poly.constant(1), x), 0) == -1
        a4, a3 = (1 - x**2) ** 2, -8 * x * (1 - x**2)
        assert order_at(RatFunc(a3, a4), 1) == -1

    def test_order_at_zero_rejected(self):
        with pytest.raises(ValueError):
            order_at(RatFunc(0), 1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(x) / RatFunc(0)

    def test_partial_fraction_examples(self):
        poly, terms = partial_fractions(RatFunc(-2 * x))
        assert poly == -2 * x and terms == []
        a, b = 4, -2
        rho = RatFunc((a + b * x) * x, 2 * x**2) - RatFunc(2 * x, x**2)
        poly, terms = partial_fractions(rho)
        assert poly == Poly.constant(-1)
        assert terms == []  # the exponent a/2 - 2 vanishes at a = 4
        with pytest.raises(IrreducibleFactor):
            partial_fractions(RatFunc(Poly.constant(1), x**2 + 1))

    @given(nonzero_polys(4), nonzero_rationals)
    def test_normalization_is_canonical(self, p, c):
        q = x**2 - 3
        assert RatFunc(p * q * c, q * (x + 1) * c) == RatFunc(p, x + 1)

    @given(nonzero_polys(4), nonzero_polys(4), st.integers(-3, 3))
    def test_order_at_additive(self, p, q, point):
        r = RatFunc(p, (x - 1) ** 2)
        s = RatFunc(q * (x - point), x + 5)
        assert order_at(r * s, point) == order_at(r, point) + order_at(s, point)

    @given(polys(4), st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), max_size=3))
    def test_partial_fractions_round_trip(self, num, factors):
        den = Poly.constant(1)
        for r, m in factors:
            den = den * (x - r) ** m
        r = RatFunc(num, den)
        poly, terms = partial_fractions(r)
        assert recombine(poly, terms) == r


class TestDiffOperator:
    def test_valid(self):
        op = DiffOperator({4: (1 - x**2) ** 2, 3: -8 * x * (1 - x**2), 2: Poly.constant(8), 1: -24 * x})
        assert op.order == 4 and op.leading == (1 - x**2) ** 2

    @pytest.mark.parametrize(
        "coeffs",
        [
            {3: Poly.constant(1)},  # odd order
            {2: Poly(), 1: x},  # zero leading coefficient
            {2: x**3, 1: x},  # degree exceeds index
            {2: Poly.constant(1), 0: x},  # order-zero term
        ],
    )
    def test_invalid(self, coeffs):
        with pytest.raises(InvalidOperator):
            DiffOperator(coeffs)
