import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import SEED, nonzero_rationals, op_from
from selfadj import families
from selfadj.algebra import Poly, RatFunc
from selfadj.errors import IrreducibleFactor, NotARoot
from selfadj.weights import (
    NEG_INF,
    POS_INF,
    Interval,
    LimitVerdict,
    RootKind,
    WeightForm,
    admissibility,
    boundary_exponent,
    build_weight,
    classify_root,
    log_derivative,
)

x = Poly.x()
F = Fraction
WHOLE = Interval(NEG_INF, POS_INF)
HALF = Interval(F(0), POS_INF)
UNIT = Interval(F(-1), F(1))


def hermite4():
    return families.instantiate("H4", {"m1": 0, "m2": 1, "A": -4}).operator


def laguerre4(a=4, b=-2, A=-5):
    return families.instantiate("L4", {"a": a, "b": b, "A": A}).operator


# ---- intervals ----------------------------------------------------------

class TestInterval:
    def test_parse_and_format(self):
        iv = Interval.of("-inf", "3/2")
        assert iv.lo == NEG_INF and iv.hi == F(3, 2)
        assert iv.to_json() == ["-inf", "3/2"]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Interval.of(1, 1)
        with pytest.raises(ValueError):
            Interval.of("+inf", 0)


# ---- log-derivative and weight construction ------------------------------

class TestLogDerivative:
    def test_hermite(self):
        assert log_derivative(hermite4()) == RatFunc(-2 * x)

    def test_laguerre6_is_exponential(self):
        op = families.instantiate("L6", {"a": 9, "b": -3, "A": 1, "C": 1}).operator
        assert op.leading == x**3 and op.subleading == -3 * (x - 3) * x**2
        assert log_derivative(op) == RatFunc(-1)

    def test_constant_weight(self):
        a4 = (1 - x**2) ** 2
        op = op_from({4: a4, 3: 2 * a4.deriv(), 2: Poly.constant(1), 1: x})
        assert log_derivative(op).is_zero()


class TestBuildWeight:
    def test_hermite(self):
        w = build_weight(hermite4(), WHOLE)
        assert w.powers == () and w.essential == ()
        assert w.exp_poly == -(x**2)

    def test_laguerre_family(self):
        for a, b in [(5, -2), (F(7, 3), F(-1, 2))]:
            w = build_weight(laguerre4(a, b), HALF)
            assert w.powers == ((F(0), F(a) / 2 - 2),)
            assert w.exp_poly == F(b) / 2 * x

    def test_jacobi_family(self):
        a, b = F(-3), F(2)
        a4 = (1 - x**2) ** 2
        a3 = -2 * (b + (a - 2) * x) * (x**2 - 1)
        op = op_from({4: a4, 3: a3, 2: Poly.constant(1), 1: x})
        w = build_weight(op, UNIT)
        assert dict(w.powers) == {F(-1): (b - a - 2) / 2, F(1): -(b + a + 2) / 2}
        assert w.exp_poly.degree <= 0

    def test_irreducible_smooth_part(self):
        op = families.instantiate("EX4.3", {"m": 1, "A": 1, "C0": 0, "C1": 0, "C2": 0, "D0": 0, "D1": 0}).operator
        w = build_weight(op, WHOLE)
        assert w.smooth == RatFunc(-2 * x, x**2 + 1)
        assert w.exp_poly == -(x**2)

    def test_irreducible_factor_with_root_in_interval(self):
        a2 = x**2 - 2
        op = op_from({2: a2, 1: Poly.constant(1)})
        with pytest.raises(IrreducibleFactor):
            build_weight(op, Interval.of(0, 2))

    def test_json_shape(self):
        w = build_weight(laguerre4(5, -2), HALF)
        assert w.to_json() == {
            "powers": [["0", "1/2"]],
            "expPoly": ["0", "-1"],
            "essential": [],
            "smooth": None,
            "interval": ["0", "+inf"],
        }


# ---- roots -----------------------------------------------------------------

class TestClassifyRoot:
    def test_legendre_logarithmic(self):
        op = families.instantiate("J4.b0", {"a": -2, "A": 14}).operator
        c = classify_root(op, 1)
        assert (c.alpha, c.beta, c.kind) == (2, 1, RootKind.LOGARITHMIC)
        assert F(2, 4) * c.phi - c.alpha == 0  # weight exponent at 1: p = 1
        assert c.integrable_left and c.integrable_right

    def test_order_two_logarithmic(self):
        op = op_from({2: x**2 - 1, 1: 3 * x + 1})
        c = classify_root(op, 1)
        assert (c.alpha, c.beta, c.kind) == (1, 0, RootKind.LOGARITHMIC)

    def test_ordinary(self):
        op = op_from({4: (x - 2) ** 3, 3: Poly.constant(5), 2: Poly.constant(1)})
        c = classify_root(op, 2)
        assert c.beta - c.alpha + 1 == -2 and c.kind == RootKind.ORDINARY

    def test_not_a_root(self):
        with pytest.raises(NotARoot):
            classify_root(laguerre4(), 1)

    @given(nonzero_rationals, st.integers(-3, 3), st.integers(1, 3), st.integers(0, 2))
    def test_kind_invariant_under_scaling(self, c, r, alpha, beta):
        a = (x - r) ** alpha * (x + 5)
        b = (x - r) ** beta * (x + 7)
        op1 = op_from({4: a, 3: b})
        op2 = op_from({4: a * c, 3: b * c})
        assert classify_root(op1, r).kind == classify_root(op2, r).kind


# ---- admissibility -----------------------------------------------------------

def _simple_weight(interval, powers=(), exp_poly=Poly()):
    return WeightForm(interval=interval, powers=tuple(powers), exp_poly=exp_poly)


class TestAdmissibility:
    def test_gaussian(self):
        assert admissibility(build_weight(hermite4(), WHOLE)).admissible

    def test_laguerre_sign_of_b(self):
        assert admissibility(build_weight(laguerre4(4, -2), HALF)).admissible
        growing = op_from({4: x**2, 3: x * (4 + 2 * x)})
        rep = admissibility(build_weight(growing, HALF))
        assert not rep.admissible
        bad = [e for e in rep.endpoints if not e.admissible]
        assert [e.point for e in bad] == [POS_INF]

    def test_divergent_power(self):
        w = _simple_weight(UNIT, [(F(1), F(-3))])
        rep = admissibility(w)
        assert not rep.admissible
        assert [e.point for e in rep.endpoints if not e.admissible] == [F(1)]

    def test_boundary_exponent_minus_one_excluded(self):
        assert not admissibility(_simple_weight(UNIT, [(F(-1), F(-1))])).admissible
        assert admissibility(_simple_weight(UNIT, [(F(-1), F(-99, 100))])).admissible

    def test_interior_singularity(self):
        rep = admissibility(_simple_weight(Interval.of(-2, 2), [(F(0), F(1, 2))]))
        assert not rep.admissible and rep.interior

    def test_essential_factor_sides(self):
        # exp(-1/x) decays as x -> 0+ but blows up as x -> 0-
        w_right = WeightForm(HALF, (), -(x**2), ((F(0), Poly([0, -1])),))
        assert admissibility(w_right).admissible
        w_left = WeightForm(Interval(NEG_INF, F(0)), (), -(x**2), ((F(0), Poly([0, -1])),))
        assert not admissibility(w_left).admissible


# ---- boundary limits -------------------------------------------------------

class TestBoundaryExponent:
    def test_legendre_leading_coefficient(self):
        w = _simple_weight(UNIT)
        assert boundary_exponent(w, RatFunc((1 - x**2) ** 2), F(1)) == LimitVerdict.ZERO

    def test_laguerre_subleading(self):
        op = laguerre4(4, -2)
        w = build_weight(op, HALF)
        assert boundary_exponent(w, RatFunc(op.subleading), F(0)) == LimitVerdict.ZERO
        assert boundary_exponent(w, RatFunc(Poly.constant(1)), F(0)) == LimitVerdict.FINITE
        assert boundary_exponent(w, RatFunc(Poly.constant(1), x), F(0)) == LimitVerdict.DIVERGENT

    def test_example_failing_condition(self):
        inst = families.instantiate("EX4.2", {"m": 1, "A": 1, "C": 1})
        op = inst.operator
        w = build_weight(op, HALF)
        rho = log_derivative(op)
        a = op.coeffs
        # a4'' - 3 a3' + 5 a2, each (p a_k)^(m) expanded through rho
        from selfadj.selfadjoint import d_rho
        expr = d_rho(RatFunc(a[4]), rho, 2) - 3 * d_rho(RatFunc(a[3]), rho, 1) + 5 * RatFunc(a[2])
        assert boundary_exponent(w, expr, F(0)) == LimitVerdict.FINITE

    def test_infinite_endpoint_power_type(self):
        w = _simple_weight(Interval.of(1, "+inf"), [(F(0), F(-3))])
        assert boundary_exponent(w, RatFunc(x), POS_INF) == LimitVerdict.ZERO
        assert boundary_exponent(w, RatFunc(x**3), POS_INF) == LimitVerdict.FINITE
        assert boundary_exponent(w, RatFunc(x**4), POS_INF) == LimitVerdict.DIVERGENT

    def test_growth_at_infinity(self):
        w = _simple_weight(HALF, exp_poly=x)
        assert boundary_exponent(w, RatFunc(Poly.constant(1), x**5), POS_INF) == LimitVerdict.DIVERGENT

    def test_not_an_endpoint(self):
        with pytest.raises(ValueError):
            boundary_exponent(_simple_weight(UNIT), RatFunc(x), F(0))


# ---- properties -----------------------------------------------------------

@st.composite
def split_operators(draw):
    """Operators whose a_n and a_{n-1} split over the rationals."""
    n = draw(st.sampled_from([2, 4, 6]))
    roots = draw(st.lists(st.integers(-3, 3), max_size=n))
    a = Poly.from_roots([F(r) for r in roots]) * draw(st.sampled_from([1, -1, 2, F(1, 3)]))
    b = Poly([draw(st.integers(-5, 5)) for _ in range(n)])
    assume(b)
    return op_from({n: a, n - 1: b})


class TestProperties:
    @given(split_operators())
    def test_round_trip(self, op):
        w = build_weight(op, WHOLE if op.leading.degree == 0 else Interval.of(10, "+inf"))
        assert w.log_derivative() == log_derivative(op)

    @given(split_operators())
    def test_admissible_implies_leading_vanishes(self, op):
        roots = sorted({r for r in range(-3, 4) if op.leading(r) == 0})
        pts = [NEG_INF] + [F(r) for r in roots] + [POS_INF]
        for lo, hi in zip(pts, pts[1:]):
            w = build_weight(op, Interval(lo, hi))
            if not admissibility(w).admissible:
                continue
            for e in (lo, hi):
                if not math.isinf(e):
                    assert boundary_exponent(w, RatFunc(op.leading), e) == LimitVerdict.ZERO

    @pytest.mark.parametrize("spec", [s for s in families.list_catalog() if s.valid], ids=lambda s: s.id)
    def test_catalog_weights_match_stated_exponents(self, spec):
        for params in families.seeded_draws(spec.id, SEED):
            inst = families.instantiate(spec.id, params)
            w = build_weight(inst.operator, spec.interval)
            powers, exp_poly = families.expected_weight(spec.id, params)
            assert dict(w.powers) == powers
            assert w.exp_poly == exp_poly
            assert admissibility(w).admissible

