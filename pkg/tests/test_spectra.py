from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SEED, op_from
from selfadj import families
from selfadj.algebra import DiffOperator, Poly
from selfadj.errors import InconsistentSystem, InsufficientMoments, UnsupportedWeightClass
from selfadj.spectra import (
    GAUSSIAN_OVER_QUADRATIC,
    HERMITE,
    JACOBI,
    LAGUERRE,
    apply,
    compose,
    eigenbasis,
    eigenpolynomial,
    eigenvalues,
    gaussian_over_quadratic_moments,
    gram,
    hermite_moments,
    inner,
    is_zero_matrix,
    jacobi_moments,
    laguerre_moments,
    matrix,
    moments,
    orthogonalize_degenerate,
    power,
    symmetry_defect,
)
from selfadj.weights import Interval, WeightForm, build_weight

x = Poly.x()
F = Fraction
UNIT = Interval.of(-1, 1)


def degenerate_op():
    """Fourth-order operator whose eigenvalue -24 occurs at degrees 1 and 3."""
    return op_from({4: (x**2 - 1) ** 2, 3: 8 * x * (x**2 - 1), 2: Poly.constant(8), 1: -24 * x})


def hermite4():
    return families.instantiate("H4", {"m1": 0, "m2": 1, "A": -4}).operator


def flat_table(K):
    return moments(WeightForm(UNIT, (), Poly()), K)


# ---- apply / matrix / eigenvalues -----------------------------------------

class TestApply:
    def test_hermite_cubic(self):
        assert apply(hermite4(), x**3).coeff(3) == 36

    def test_degenerate_cubic(self):
        assert apply(degenerate_op(), x**3) == -24 * x**3

    @given(st.sampled_from(["H4", "L6", "J8.I.a"]))
    def test_constants_are_annihilated(self, fid):
        params = families.seeded_draws(fid, SEED)[0]
        assert apply(families.instantiate(fid, params).operator, Poly.constant(7)).is_zero()


class TestMatrix:
    def test_degenerate_diagonal(self):
        lam = lambda n: n * ((n - 1) * (n - 2) * (n + 5) - 24)  # noqa: E731
        assert matrix(degenerate_op(), 3).diagonal() == [lam(n) for n in range(4)]
        assert matrix(degenerate_op(), 3).diagonal() == [0, -24, -48, -24]

    def test_size_zero(self):
        assert matrix(hermite4(), 0).entries == ((0,),)

    def test_hermite_diagonal(self):
        assert matrix(hermite4(), 4).diagonal() == [0, 4, 16, 36, 64]

    def test_negative_size(self):
        with pytest.raises(ValueError):
            matrix(hermite4(), -1)

    @pytest.mark.parametrize("spec", families.list_catalog(), ids=lambda s: s.id)
    def test_triangular(self, spec):
        params = families.seeded_draws(spec.id, SEED)[0] if spec.params else {}
        assert matrix(families.instantiate(spec.id, params).operator, 10).is_upper_triangular()


class TestEigen:
    def test_hermite6(self):
        op = families.instantiate("H6", {"C": 16, "D": -8}).operator
        assert list(eigenvalues(op, 6).lambdas) == [-8 * n**3 for n in range(7)]

    def test_legendre8(self):
        op = families.instantiate("J8.I.a", {"D": -1856, "F": -216, "G": 16}).operator
        assert list(eigenvalues(op, 8).lambdas) == [n**4 * (n + 1) ** 4 for n in range(9)]

    def test_groups(self):
        spec = eigenvalues(degenerate_op(), 3)
        assert spec.groups == ((0,), (2,), (1, 3))
        assert spec.repeated() == [(1, 3)]

    def test_degenerate_polys(self):
        _, basis = eigenbasis(degenerate_op(), 3)
        assert basis.polys == (Poly.constant(1), x, x**2 - F(1, 3), x**3)
        assert not basis.orthogonalized

    def test_eigenpolynomial_relation(self):
        op = families.instantiate("L4", {"a": 5, "b": -3, "A": 2}).operator
        spec, basis = eigenbasis(op, 6)
        for lam, p in zip(spec.lambdas, basis.polys):
            assert apply(op, p) == p * lam
            assert p.lc == 1

    def test_degree_zero(self):
        assert eigenpolynomial(hermite4(), 0) == Poly.constant(1)

    def test_inconsistent(self):
        op = op_from({2: x**2, 1: 1 - 2 * x})
        # lambda_1 = lambda_2 = -2 but x^2 has no eigenvector partner
        assert eigenvalues(op, 2).lambdas[1] == eigenvalues(op, 2).lambdas[2]
        with pytest.raises(InconsistentSystem):
            eigenpolynomial(op, 2)


# ---- moments ----------------------------------------------------------------

class TestMoments:
    def test_flat(self):
        m = flat_table(4).normalized
        assert m[2:5] == [F(1, 3), 0, F(1, 5)]

    def test_gaussian(self):
        table = moments(build_weight(hermite4(), Interval.of("-inf", "+inf")), 4)
        assert table.weight_class == HERMITE and table.normalized[2] == F(1, 2)

    def test_exponential(self):
        w = WeightForm(Interval.of(0, "+inf"), (), -x)
        table = moments(w, 8)
        assert table.weight_class == LAGUERRE
        fact = [1]
        for k in range(1, 9):
            fact.append(fact[-1] * k)
        assert table.normalized == fact

    def test_jacobi_class(self):
        w = WeightForm(UNIT, ((F(-1), F(1, 2)), (F(1), F(3))), Poly())
        assert moments(w, 2).weight_class == JACOBI

    def test_gaussian_over_quadratic(self):
        op = families.instantiate("EX4.3", {"m": 1, "A": 1, "C0": 0, "C1": 0, "C2": 0, "D0": 0, "D1": 0}).operator
        table = moments(build_weight(op, Interval.of("-inf", "+inf")), 4)
        assert table.weight_class == GAUSSIAN_OVER_QUADRATIC and table.basis == ("I", "G")
        # mu_2 = G - I, mu_4 = g_2 - mu_2 = G/2 - G + I
        assert table.values[2] == (-1, 1) and table.values[4] == (1, F(-1, 2))
        with pytest.raises(UnsupportedWeightClass):
            table.normalized

    def test_unsupported(self):
        w = WeightForm(Interval.of(0, "+inf"), (), -(x**2), ((F(0), Poly([0, -1])),))
        with pytest.raises(UnsupportedWeightClass):
            moments(w, 4)
        with pytest.raises(UnsupportedWeightClass):
            moments(WeightForm(UNIT, ((F(1), F(-2)),), Poly()), 4)

    def test_json(self):
        assert flat_table(2).to_json() == {"weightClass": JACOBI, "basis": ["mu0"], "moments": [["1"], ["0"], ["1/3"]]}

    @pytest.mark.parametrize("A,B", [(0, 0), (F(1, 2), F(-1, 2)), (3, 1), (F(-1, 2), F(-1, 2))])
    def test_jacobi_hankel_positive(self, A, B):
        m = jacobi_moments(A, B, 12)
        for size in range(1, 7):
            H = [[m[i + j] for j in range(size)] for i in range(size)]
            assert _det(H) > 0

    @given(st.fractions(min_value=F(1, 10), max_value=10, max_denominator=20),
           st.fractions(min_value=-5, max_value=5, max_denominator=20))
    def test_hermite_integration_by_parts(self, s, m1):
        # int (x^k)' p = -int x^k p' with p' = (-2 s x + m1) p
        m = hermite_moments(s, m1, 12)
        for k in range(1, 12):
            assert k * m[k - 1] == 2 * s * m[k + 1] - m1 * m[k]

    @given(st.fractions(min_value=F(-9, 10), max_value=6, max_denominator=20),
           st.fractions(min_value=-5, max_value=F(-1, 20), max_denominator=20))
    def test_laguerre_integration_by_parts(self, A, b):
        # int (x^(k+1))' p = -int x^(k+1) p' with x p' = (A + b x) p
        m = laguerre_moments(A, b, 12)
        for k in range(12):
            assert (k + 1) * m[k] == -(A * m[k] + b * m[k + 1])


def _det(M):
    M = [row[:] for row in M]
    n = len(M)
    det = F(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return F(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


# ---- gram / orthogonalization -----------------------------------------------

class TestGram:
    def test_examples(self):
        t = flat_table(6)
        assert gram([x, x**3], t)[0][1] == F(1, 5)
        assert gram([x, x**3 - F(3, 5) * x], t)[0][1] == 0
        assert gram([Poly.constant(1), x], t)[0][0] == 1

    def test_insufficient(self):
        with pytest.raises(InsufficientMoments):
            inner(x**3, x**3, flat_table(4))

    def test_degenerate_orthogonalization(self):
        spec, basis = eigenbasis(degenerate_op(), 3)
        out = orthogonalize_degenerate(basis, spec, flat_table(6))
        assert out.polys[3] == x**3 - F(3, 5) * x
        assert out.polys[:3] == basis.polys[:3]
        assert out.orthogonalized

    def test_distinct_spectrum_unchanged(self):
        op = hermite4()
        spec, basis = eigenbasis(op, 6)
        table = moments(build_weight(op, Interval.of("-inf", "+inf")), 12)
        assert orthogonalize_degenerate(basis, spec, table).polys == basis.polys

    def test_within_group_orthogonal(self):
        spec, basis = eigenbasis(degenerate_op(), 3)
        t = flat_table(6)
        G = gram(orthogonalize_degenerate(basis, spec, t), t)
        for g in spec.repeated():
            for i in g:
                for j in g:
                    if i != j:
                        assert G[i][j] == 0

    @pytest.mark.parametrize("spec", [s for s in families.list_catalog() if s.valid], ids=lambda s: s.id)
    def test_full_orthogonality(self, spec):
        for params in families.seeded_draws(spec.id, SEED) if spec.params else [{}]:
            inst = families.instantiate(spec.id, params)
            table = moments(inst.weight, 16)
            sp, basis = eigenbasis(inst.operator, 8)
            G = gram(orthogonalize_degenerate(basis, sp, table), table)
            for i in range(9):
                assert G[i][i] > 0
                for j in range(9):
                    if i != j:
                        assert G[i][j] == 0, (i, j)


# ---- composition and the symmetry defect ----------------------------------------

class TestCompose:
    def test_hermite_square(self):
        h = families.second_order("hermite")
        assert compose(h, h).coeffs == {4: Poly.constant(1), 3: -4 * x, 2: 4 * (x**2 - 1), 1: 4 * x}

    def test_laguerre_square(self):
        lag = families.second_order("laguerre")
        assert compose(lag, lag).coeffs == {4: x**2, 3: -2 * (x - 2) * x, 2: x**2 - 5 * x + 2, 1: x - 1}

    def test_zero_operator(self):
        zero = DiffOperator({2: Poly()}, check=False)
        out = compose(hermite4(), zero)
        assert all(a.is_zero() for a in out.coeffs.values())

    def test_power_matches_repeated_compose(self):
        leg = families.second_order("legendre")
        assert power(leg, 3).coeffs == compose(compose(leg, leg), leg).coeffs
        with pytest.raises(ValueError):
            power(leg, 0)

    @settings(max_examples=30)
    @given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=6, max_size=6))
    def test_associative(self, rows):
        ops = []
        for i in range(3):
            a2, a1 = Poly(rows[2 * i]), Poly(rows[2 * i + 1][:2])
            ops.append(DiffOperator({2: a2, 1: a1}, check=False))
        p, q, r = ops
        assert compose(compose(p, q), r).coeffs == compose(p, compose(q, r)).coeffs

    @given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.integers(0, 5))
    def test_compose_is_application(self, cs, deg):
        p = DiffOperator({2: Poly(cs), 1: x + 1}, check=False)
        q = families.second_order("laguerre")
        y = Poly.monomial(deg) + x
        assert apply(compose(p, q), y) == apply(p, apply(q, y))


class TestSymmetryDefect:
    def test_hermite_zero(self):
        op = hermite4()
        table = moments(build_weight(op, Interval.of("-inf", "+inf")), 12)
        assert is_zero_matrix(symmetry_defect(op, table, 6))

    def test_ex43_nonzero(self):
        inst = families.instantiate("EX4.3", {"m": 1, "A": 2, "C0": 1, "C1": 0, "C2": 3, "D0": 0, "D1": 1})
        table = moments(inst.weight, 16)
        S = symmetry_defect(inst.operator, table, 8)
        assert not is_zero_matrix(S)

    def test_antisymmetric(self):
        op = families.instantiate("EX4.2", {"m": 1, "A": 2, "C": 3}).operator
        table = moments(WeightForm(Interval.of(0, "+inf"), ((F(0), F(2)),), -x), 12)
        S = symmetry_defect(op, table, 6)
        assert not is_zero_matrix(S)
        for i in range(7):
            assert S[i][i] == 0
            for j in range(7):
                assert S[i][j] == -S[j][i]

    def test_insufficient(self):
        with pytest.raises(InsufficientMoments):
            symmetry_defect(hermite4(), flat_table(4), 3)


def test_gaussian_over_quadratic_odd_moments_vanish():
    for k, (ci, cg) in enumerate(gaussian_over_quadratic_moments(F(2), 9)):
        if k % 2:
            assert ci == cg == 0
