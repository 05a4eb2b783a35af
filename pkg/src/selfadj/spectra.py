"""Eigenvalues, monic eigenpolynomials, exact moments, Gram matrices and composition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .algebra import DiffOperator, Poly, RatFunc, binomial
from .errors import InconsistentSystem, InsufficientMoments, UnsupportedWeightClass, ZeroNormMember
from .weights import WeightForm, admissibility

JACOBI = "JacobiType"
LAGUERRE = "LaguerreType"
HERMITE = "HermiteType"
GAUSSIAN_OVER_QUADRATIC = "GaussianOverQuadratic"


def apply(op: DiffOperator, y: Poly) -> Poly:
    out = Poly()
    for k, a in op.coeffs.items():
        if y.degree < k:
            continue
        out = out + a * y.deriv(k)
    return out


@dataclass(frozen=True)
class OperatorMatrix:
    """entries[i][j] = coefficient of x^i in L(x^j)."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def diagonal(self) -> list[Fraction]:
        return [self.entries[i][i] for i in range(self.size)]

    def is_upper_triangular(self) -> bool:
        return all(not self.entries[i][j] for i in range(self.size) for j in range(i))


def matrix(op: DiffOperator, N: int) -> OperatorMatrix:
    if N < 0:
        raise ValueError("N must be nonnegative")
    cols = [apply(op, Poly.monomial(j)) for j in range(N + 1)]
    return OperatorMatrix(tuple(tuple(cols[j].coeff(i) for j in range(N + 1)) for i in range(N + 1)))


@dataclass(frozen=True)
class Spectrum:
    lambdas: tuple[Fraction, ...]
    groups: tuple[tuple[int, ...], ...]

    def repeated(self) -> list[tuple[int, ...]]:
        return [g for g in self.groups if len(g) > 1]


def _group(lambdas: Sequence[Fraction]) -> tuple[tuple[int, ...], ...]:
    by_value: dict[Fraction, list[int]] = {}
    for d, lam in enumerate(lambdas):
        by_value.setdefault(lam, []).append(d)
    return tuple(sorted((tuple(g) for g in by_value.values()), key=lambda g: g[-1]))


def eigenvalues(op: DiffOperator, N: int, mat: Optional[OperatorMatrix] = None) -> Spectrum:
    mat = matrix(op, N) if mat is None else mat
    lambdas = tuple(mat.diagonal())
    return Spectrum(lambdas, _group(lambdas))


def eigenpolynomial(op: DiffOperator, m: int, spectrum: Optional[Spectrum] = None,
                    mat: Optional[OperatorMatrix] = None) -> Poly:
    """Monic degree-m solution of (M - lambda_m I)c = 0; coordinates at degrees sharing lambda_m are set to 0."""
    if mat is None or mat.size <= m:
        mat = matrix(op, m)
    lam = mat.entries[m][m]
    c = [Fraction(0)] * (m + 1)
    c[m] = Fraction(1)
    for i in range(m - 1, -1, -1):
        s = sum((mat.entries[i][j] * c[j] for j in range(i + 1, m + 1)), Fraction(0))
        diff = mat.entries[i][i] - lam
        if diff:
            c[i] = -s / diff
        elif s:
            raise InconsistentSystem(f"degree {m}: equation for x^{i} reads 0 = {-s}")
    return Poly(c)


@dataclass(frozen=True)
class EigenBasis:
    polys: tuple[Poly, ...]
    orthogonalized: bool = False


def eigenbasis(op: DiffOperator, N: int) -> tuple[Spectrum, EigenBasis]:
    mat = matrix(op, N)
    spec = eigenvalues(op, N, mat)
    return spec, EigenBasis(tuple(eigenpolynomial(op, m, spec, mat) for m in range(N + 1)))


# -- moments --------------------------------------------------------------------------

@dataclass(frozen=True)
class MomentTable:
    """Moments as exact vectors over a basis of (possibly transcendental) constants.

    For the three classical classes the basis is the single constant mu_0 and the
    entries are the normalized moments m_k = mu_k / mu_0.  For a Gaussian over
    (x^2 + 1) the basis is (I, G) with I = int p and G = int exp(-s x^2).
    """

    weight_class: str
    basis: tuple[str, ...]
    values: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def normalized(self) -> list[Fraction]:
        if len(self.basis) != 1:
            raise UnsupportedWeightClass(f"{self.weight_class} moments are not rational multiples of mu_0")
        return [v[0] for v in self.values]

    def to_json(self) -> dict:
        return {"weightClass": self.weight_class, "basis": list(self.basis),
                "moments": [[str(c) for c in v] for v in self.values]}


def _scalar_table(cls: str, ms: list[Fraction]) -> MomentTable:
    return MomentTable(cls, ("mu0",), tuple((m,) for m in ms))


def jacobi_moments(A: Fraction, B: Fraction, K: int) -> list[Fraction]:
    """Normalized moments of (1-x)^A (1+x)^B on (-1, 1).

    Integrating d/dx[(1-x)^(A+1)(1+x)^(B+1) x^k] over the interval gives
    (A+B+2+k) mu_{k+1} = (B-A) mu_k + k mu_{k-1}.
    """
    A, B = Fraction(A), Fraction(B)
    if A <= -1 or B <= -1:
        raise UnsupportedWeightClass("Jacobi weight is not integrable")
    ms = [Fraction(1)]
    for k in range(K):
        prev = ms[k - 1] if k else Fraction(0)
        ms.append(((B - A) * ms[k] + k * prev) / (A + B + 2 + k))
    return ms


def laguerre_moments(A: Fraction, b: Fraction, K: int) -> list[Fraction]:
    """Normalized moments of x^A e^(bx) on (0, inf), b < 0."""
    A, b = Fraction(A), Fraction(b)
    if A <= -1 or b >= 0:
        raise UnsupportedWeightClass("Laguerre weight is not integrable")
    ms = [Fraction(1)]
    for k in range(K):
        ms.append(ms[k] * (A + k + 1) / (-b))
    return ms


def hermite_moments(s: Fraction, m1: Fraction, K: int) -> list[Fraction]:
    """Normalized moments of exp(-s x^2 + m1 x) on the real line, s > 0."""
    s, m1 = Fraction(s), Fraction(m1)
    if s <= 0:
        raise UnsupportedWeightClass("Gaussian weight needs a negative quadratic exponent")
    ms = [Fraction(1)]
    for k in range(K):
        prev = ms[k - 1] if k else Fraction(0)
        ms.append((m1 * ms[k] + k * prev) / (2 * s))
    return ms


def gaussian_over_quadratic_moments(s: Fraction, K: int) -> list[tuple[Fraction, Fraction]]:
    """Moments of exp(-s x^2)/(x^2 + 1) as (coefficient of I, coefficient of G).

    x^(k+2)/(x^2+1) = x^k - x^k/(x^2+1) gives mu_{k+2} = g_k - mu_k, with g_k the
    Gaussian moments; odd moments vanish by symmetry.
    """
    s = Fraction(s)
    if s <= 0:
        raise UnsupportedWeightClass("Gaussian weight needs a negative quadratic exponent")
    g = hermite_moments(s, Fraction(0), K)
    mu: list[tuple[Fraction, Fraction]] = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(0))]
    for k in range(K - 1):
        prev = mu[k]
        mu.append((-prev[0], g[k] - prev[1]))
    return mu[:K + 1]


def moments(weight: WeightForm, K: int) -> MomentTable:
    """Exact moments up to x^K for the supported weight classes."""
    iv = weight.interval
    if weight.essential:
        raise UnsupportedWeightClass("weights with essential singular factors are not supported")
    if not admissibility(weight).admissible:
        raise UnsupportedWeightClass("weight is not admissible on its interval")
    q = weight.exp_poly
    powers = dict(weight.powers)
    lo, hi = iv.lo, iv.hi
    if weight.smooth is not None:
        expected = RatFunc(Poly([0, -2]), Poly([1, 0, 1]))
        if (weight.smooth == expected and not powers and math.isinf(lo) and math.isinf(hi)
                and q.degree == 2 and q.coeff(1) == 0):
            vals = gaussian_over_quadratic_moments(-q.coeff(2), K)
            return MomentTable(GAUSSIAN_OVER_QUADRATIC, ("I", "G"), tuple(vals))
        raise UnsupportedWeightClass("unsupported irreducible factor in the weight")
    if lo == -1 and hi == 1 and q.degree < 1 and set(powers) <= {Fraction(-1), Fraction(1)}:
        return _scalar_table(JACOBI, jacobi_moments(powers.get(Fraction(1), 0), powers.get(Fraction(-1), 0), K))
    if lo == 0 and math.isinf(hi) and q.degree == 1 and set(powers) <= {Fraction(0)}:
        return _scalar_table(LAGUERRE, laguerre_moments(powers.get(Fraction(0), 0), q.coeff(1), K))
    if math.isinf(lo) and math.isinf(hi) and q.degree == 2 and not powers:
        return _scalar_table(HERMITE, hermite_moments(-q.coeff(2), q.coeff(1), K))
    raise UnsupportedWeightClass(f"no moment formula for this weight on {iv}")


# -- Gram matrices and orthogonalization ----------------------------------------------

def _pairing(u: Poly, v: Poly, table: MomentTable) -> tuple[Fraction, ...]:
    need = max(u.degree, 0) + max(v.degree, 0)
    if u and v and need >= table.size:
        raise InsufficientMoments(f"need moments up to degree {need}, have {table.size - 1}")
    out = [Fraction(0)] * len(table.basis)
    for i, ci in enumerate(u.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(v.coeffs):
            if cj:
                for t, m in enumerate(table.values[i + j]):
                    out[t] += ci * cj * m
    return tuple(out)


Entry = Union[Fraction, tuple[Fraction, ...]]


def _unwrap(vec: tuple[Fraction, ...]) -> Entry:
    return vec[0] if len(vec) == 1 else vec


def inner(u: Poly, v: Poly, table: MomentTable) -> Entry:
    return _unwrap(_pairing(u, v, table))


def gram(basis: Union[EigenBasis, Sequence[Poly]], table: MomentTable) -> list[list[Entry]]:
    polys = basis.polys if isinstance(basis, EigenBasis) else tuple(basis)
    return [[inner(u, v, table) for v in polys] for u in polys]


def orthogonalize_degenerate(basis: EigenBasis, spectrum: Spectrum, table: MomentTable) -> EigenBasis:
    """Monic Gram-Schmidt inside each repeated-eigenvalue group, in ascending degree."""
    polys = list(basis.polys)
    for group in spectrum.groups:
        done: list[Poly] = []
        norms: list[Fraction] = []
        for d in group:
            if d >= len(polys):
                break
            q = polys[d]
            for prev, nrm in zip(done, norms):
                q = q - prev * (_scalar(inner(polys[d], prev, table)) / nrm)
            nrm = _scalar(inner(q, q, table))
            if nrm == 0:
                raise ZeroNormMember(f"degree {d} member has zero norm")
            polys[d] = q
            done.append(q)
            norms.append(nrm)
    return EigenBasis(tuple(polys), True)


def _scalar(e: Entry) -> Fraction:
    if isinstance(e, tuple):
        raise UnsupportedWeightClass("inner products are not rational multiples of mu_0")
    return e


# -- composition and the symmetry oracle -----------------------------------------------

def compose(op1: DiffOperator, op2: DiffOperator) -> DiffOperator:
    """op1 o op2 via a_j D^j (b_k D^k y) = sum_i C(j,i) a_j b_k^(j-i) D^(k+i).

    Both factors lack an order-zero term, so k + i >= 1 and none can appear.
    """
    out: dict[int, Poly] = {}
    for j, a in op1.coeffs.items():
        if not a:
            continue
        for k, b in op2.coeffs.items():
            if not b:
                continue
            for i in range(j + 1):
                term = a * b.deriv(j - i) * binomial(j, i)
                if term:
                    out[k + i] = out.get(k + i, Poly()) + term
    order = op1.order + op2.order
    return DiffOperator({m: out.get(m, Poly()) for m in range(1, order + 1)}, check=False)


def power(op: DiffOperator, k: int) -> DiffOperator:
    if k < 1:
        raise ValueError("power must be positive")
    out = op
    for _ in range(k - 1):
        out = compose(out, op)
    return out


def symmetry_defect(op: DiffOperator, table: MomentTable, N: int) -> list[list[Entry]]:
    """S[i][j] = <L x^i, x^j> - <x^i, L x^j>, expanded exactly into moments."""
    if 2 * N >= table.size:
        raise InsufficientMoments(f"need moments up to degree {2 * N}, have {table.size - 1}")
    images = [apply(op, Poly.monomial(i)) for i in range(N + 1)]
    monos = [Poly.monomial(i) for i in range(N + 1)]
    S = []
    for i in range(N + 1):
        row = []
        for j in range(N + 1):
            left = _pairing(images[i], monos[j], table)
            right = _pairing(monos[i], images[j], table)
            row.append(_unwrap(tuple(a - b for a, b in zip(left, right))))
        S.append(row)
    return S


def is_zero_matrix(S: Sequence[Sequence[Entry]]) -> bool:
    for row in S:
        for e in row:
            if isinstance(e, tuple):
                if any(e):
                    return False
            elif e:
                return False
    return True


def spectrum_json(spectrum: Spectrum, basis: Optional[EigenBasis] = None) -> dict:
    out = {
        "lambdas": [str(v) for v in spectrum.lambdas],
        "groups": [list(g) for g in spectrum.groups],
    }
    if basis is not None:
        out["polys"] = [[str(c) for c in p.coeffs] for p in basis.polys]
        out["orthogonalized"] = basis.orthogonalized
    return out


__all__ = [
    "apply",
    "matrix",
    "OperatorMatrix",
    "Spectrum",
    "EigenBasis",
    "MomentTable",
    "eigenvalues",
    "eigenpolynomial",
    "eigenbasis",
    "moments",
    "jacobi_moments",
    "laguerre_moments",
    "hermite_moments",
    "gaussian_over_quadratic_moments",
    "gram",
    "inner",
    "orthogonalize_degenerate",
    "compose",
    "power",
    "symmetry_defect",
    "is_zero_matrix",
    "spectrum_json",
]
