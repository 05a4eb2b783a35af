"""Determining equations, boundary conditions, congruences and structural checks.

Formal expressions are linear combinations of symbols ``b_j^(m)`` where
``b_j = p * a_j``.  Every expression produced here is homogeneous: each
symbol satisfies ``j - m = w`` for a fixed weight ``w``, so an expression is
stored as its weight plus a map ``j -> coefficient``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import DiffOperator, Poly, RatFunc, binomial, count_real_roots, rational_roots
from .errors import InvalidOperator, Unsupported
from .weights import (
    AdmissibilityReport,
    Interval,
    LimitVerdict,
    WeightForm,
    admissibility,
    boundary_exponent,
    build_weight,
    format_endpoint,
    log_derivative,
)


def _primes(m: int) -> str:
    return "'" * m if m <= 3 else f"^({m})"


@dataclass(frozen=True)
class FormalExpr:
    """sum_j coeffs[j] * b_j^(j - weight)."""

    weight: int
    coeffs: tuple[tuple[int, Fraction], ...]

    @classmethod
    def of(cls, weight: int, coeffs: dict[int, Fraction]) -> "FormalExpr":
        return cls(weight, tuple(sorted(((j, Fraction(c)) for j, c in coeffs.items() if c), reverse=True)))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def top(self) -> int:
        return self.coeffs[0][0]

    def normalized(self) -> "FormalExpr":
        """Primitive integer coefficients with a positive coefficient on the highest index."""
        if not self.coeffs:
            return self
        lcm = 1
        for _, c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for _, c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[0] < 0:
            g = -g
        return FormalExpr(self.weight, tuple((j, Fraction(v, g)) for (j, _), v in zip(self.coeffs, ints)))

    def label(self) -> str:
        parts = []
        for j, c in self.coeffs:
            m = j - self.weight
            sym = f"b{j}{_primes(m)}"
            mag = abs(c)
            body = sym if mag == 1 else f"{mag}{sym}" if mag.denominator == 1 else f"({mag}){sym}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def evaluate(self, op: DiffOperator, rho: RatFunc, cache: Optional[dict] = None) -> RatFunc:
        """The expression divided by p, as an exact rational function."""
        total = RatFunc(0)
        for j, c in self.coeffs:
            total = total + d_rho_cached(op.a(j), rho, j - self.weight, cache) * c
        return total


def d_rho(r, rho, m: int) -> RatFunc:
    """m-fold application of r -> rho*r + r'; equals (p*r)^(m) / p when p'/p = rho."""
    out = r if isinstance(r, RatFunc) else RatFunc(r)
    rho = rho if isinstance(rho, RatFunc) else RatFunc(rho)
    for _ in range(m):
        out = rho * out + out.deriv()
    return out


def d_rho_cached(a: Poly, rho: RatFunc, m: int, cache: Optional[dict]) -> RatFunc:
    if cache is None:
        return d_rho(a, rho, m)
    key = (a, m)
    if key not in cache:
        if m == 0:
            cache[key] = RatFunc(a)
        else:
            prev = d_rho_cached(a, rho, m - 1, cache)
            cache[key] = rho * prev + prev.deriv()
    return cache[key]


# -- determining equations --------------------------------------------------------

@dataclass(frozen=True)
class DeterminingEquation:
    """lhs = rhs with lhs = sum_{j>k} c_j b_j^(j-k) and rhs = 2 b_k (k odd) or 0 (k even)."""

    k: int
    lhs: FormalExpr
    rhs_factor: int

    def as_expr(self) -> FormalExpr:
        d = self.lhs.as_dict()
        d[self.k] = d.get(self.k, Fraction(0)) - self.rhs_factor
        return FormalExpr.of(self.k, d)


@dataclass(frozen=True)
class DeterminingSystem:
    order: int
    equations: tuple[DeterminingEquation, ...]
    reduced: tuple[FormalExpr, ...]

    def reduced_by_k(self) -> dict[int, FormalExpr]:
        return {e.weight: e for e in self.reduced}


def _check_order(n: int) -> None:
    if n < 2 or n % 2:
        raise InvalidOperator(f"order must be even and >= 2, got {n}")


def raw_equation(n: int, k: int) -> DeterminingEquation:
    """Coefficient of y^(k) in the self-adjointness identity sum_j (-1)^j (b_j y)^(j) = sum_j b_j y^(j)."""
    lhs = {j: Fraction((-1) ** j * binomial(j, k)) for j in range(k + 1, n + 1)}
    if k % 2 == 0:
        return DeterminingEquation(k, FormalExpr.of(k, lhs), 0)
    return DeterminingEquation(k, FormalExpr.of(k, lhs), 2)


def _eliminate(expr: FormalExpr, rules: list[FormalExpr]) -> FormalExpr:
    """Substitute every rule's top symbol; rules are processed from the highest top down."""
    d = expr.as_dict()
    for rule in sorted(rules, key=lambda r: -r.top):
        if rule.weight < expr.weight:
            continue
        t = rule.top
        c = d.get(t)
        if not c:
            continue
        rd = rule.as_dict()
        scale = c / rd[t]
        for j, cj in rd.items():
            d[j] = d.get(j, Fraction(0)) - scale * cj
        d.pop(t, None)
    return FormalExpr.of(expr.weight, d)


def determining_system(n: int) -> DeterminingSystem:
    """All n relations (k = 0..n-1) plus the reduced odd-k system used for checking.

    The reduced equation for odd k keeps b_k .. b_t with t = (n + k + 1)/2; higher
    indices are eliminated with the already reduced equations for larger odd k.
    """
    _check_order(n)
    equations = tuple(raw_equation(n, k) for k in range(n))
    reduced: list[FormalExpr] = []
    for k in range(n - 1, 0, -2):
        expr = _eliminate(equations[k].as_expr(), reduced).normalized()
        reduced.append(expr)
    return DeterminingSystem(n, equations, tuple(reduced))


def elimination_rules(n: int) -> list[FormalExpr]:
    return list(determining_system(n).reduced)


@dataclass(frozen=True)
class EquationResult:
    id: str
    k: int
    label: str
    passed: bool
    residual: Optional[RatFunc]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "k": self.k,
            "equation": self.label + " = 0",
            "pass": self.passed,
            "residual": None if self.residual is None else str(self.residual),
        }


def check_determining(op: DiffOperator, rho: Optional[RatFunc] = None,
                      cache: Optional[dict] = None) -> list[EquationResult]:
    rho = log_derivative(op) if rho is None else rho
    cache = {} if cache is None else cache
    out = []
    for expr in determining_system(op.order).reduced:
        res = expr.evaluate(op, rho, cache)
        ok = res.is_zero()
        out.append(EquationResult(f"k={expr.weight}", expr.weight, expr.label(), ok, None if ok else res))
    return out


# -- boundary conditions ----------------------------------------------------------

def boundary_rows(n: int) -> list[tuple[int, int, FormalExpr]]:
    """Coefficients of y^(t-1-l) u^(l) in the bilinear boundary form, for 1 <= t <= n, 0 <= l < t.

    Row (t, l) is sum_{k>=t} (-1)^(k-t+l) C(k-t+l, l) b_k^(k-t).
    """
    _check_order(n)
    rows = []
    for t in range(n, 0, -1):
        for l in range(t):
            coeffs = {k: Fraction((-1) ** (k - t + l) * binomial(k - t + l, l)) for k in range(t, n + 1)}
            rows.append((t, l, FormalExpr.of(t, coeffs)))
    return rows


def _rank_insert(basis: list[dict[int, Fraction]], vec: dict[int, Fraction]) -> bool:
    """Reduce vec against an echelon basis (in place); append and return True if independent."""
    v = dict(vec)
    for b in basis:
        pivot = max(b)
        c = v.get(pivot)
        if c:
            s = c / b[pivot]
            for j, bj in b.items():
                v[j] = v.get(j, Fraction(0)) - s * bj
            v = {j: c for j, c in v.items() if c}
    v = {j: c for j, c in v.items() if c}
    if not v:
        return False
    basis.append(v)
    return True


def boundary_system(n) -> list[FormalExpr]:
    """Independent spanning set of the boundary expressions after eliminating via the determining equations.

    Rows are taken by decreasing weight (lower-derivative expressions first) and
    greedily kept when independent of the rows already kept at that weight.
    """
    n = n.order if isinstance(n, DiffOperator) else n
    rules = elimination_rules(n)
    echelons: dict[int, list] = {}
    kept = []
    for t, _, row in boundary_rows(n):
        red = _eliminate(row, rules)
        if red.is_zero():
            continue
        if _rank_insert(echelons.setdefault(t, []), red.as_dict()):
            kept.append(red.normalized())
    return kept


def same_span(first: list[FormalExpr], second: list[FormalExpr]) -> bool:
    """Mutual membership of two sets of formal expressions."""

    def rank(exprs):
        by_w: dict[int, list] = {}
        r = 0
        for e in exprs:
            if _rank_insert(by_w.setdefault(e.weight, []), e.as_dict()):
                r += 1
        return r

    a, b = rank(first), rank(second)
    return a == b == rank(list(first) + list(second))


@dataclass(frozen=True)
class BoundaryResult:
    index: int
    label: str
    verdict: LimitVerdict
    passed: bool

    def to_json(self) -> dict:
        return {"index": self.index, "expression": self.label, "verdict": self.verdict.value, "pass": self.passed}


def check_boundary(op: DiffOperator, weight: WeightForm, rho: Optional[RatFunc] = None,
                   cache: Optional[dict] = None) -> dict[str, list[BoundaryResult]]:
    rho = log_derivative(op) if rho is None else rho
    cache = {} if cache is None else cache
    exprs = boundary_system(op.order)
    values = [e.evaluate(op, rho, cache) for e in exprs]
    out: dict[str, list[BoundaryResult]] = {}
    for side, point in weight.interval.endpoints():
        results = []
        for i, (e, v) in enumerate(zip(exprs, values)):
            verdict = boundary_exponent(weight, v, point)
            results.append(BoundaryResult(i, e.label(), verdict, verdict == LimitVerdict.ZERO))
        out[side] = results
    return out


# -- congruences and structural conditions ------------------------------------------

@dataclass(frozen=True)
class CheckOutcome:
    name: str
    status: str  # pass | fail | skip | indeterminate
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "skip")

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def congruence_checks(op: DiffOperator) -> list[CheckOutcome]:
    """Products that must vanish modulo a_n for a self-adjoint operator."""
    n = op.order
    if n == 2:
        return [CheckOutcome("congruences mod a_n", "skip", "only for order > 2")]
    a, b = op.leading, op.subleading
    da = a.deriv()
    half = Fraction(n, 2)
    items = [("a_{n-1}(a_{n-1} - n a_n')(a_{n-1} - (n/2) a_n')", b * (b - da * n) * (b - da * half))]
    if n == 6:
        a4 = op.a(4)
        items.append(("5a_5(a_5 - 6a_6')(a_5 - 3a_6')", b * 5 * (b - da * 6) * (b - da * 3)))
        items.append(("a_4(a_5 - 9a_6')(a_5 - 6a_6')(a_5 - 3a_6')",
                      a4 * (b - da * 9) * (b - da * 6) * (b - da * 3)))
    out = []
    for name, prod in items:
        rem = prod % a
        ok = rem.is_zero()
        out.append(CheckOutcome(name + " = 0 mod a_n", "pass" if ok else "fail",
                                "" if ok else f"remainder {rem}"))
    return out


def _real_root_count(p: Poly) -> int:
    return count_real_roots(p)


def structural_validate(op: DiffOperator) -> list[CheckOutcome]:
    n = op.order
    a, b = op.leading, op.subleading
    if n == 2:
        return [CheckOutcome("root multiplicities", "skip", "only for order > 2"),
                CheckOutcome("degree bounds", "skip", "only for order > 2")]
    out = []
    roots, _ = rational_roots(a)
    n_real = _real_root_count(a) if a.degree >= 1 else 0
    irrational = n_real > len(roots)

    bad = []
    for r, alpha in roots:
        beta = b.multiplicity(r) if not b.is_zero() else None
        if alpha < 2:
            bad.append(f"root {r} of a_n is simple")
        elif beta is None or not 1 <= beta <= alpha - 1:
            bad.append(f"root {r}: multiplicity {beta if beta is not None else 'inf'} in a_(n-1) "
                       f"outside [1, {alpha - 1}]")
    if bad:
        out.append(CheckOutcome("root multiplicities", "fail", "; ".join(bad)))
    elif irrational:
        out.append(CheckOutcome("root multiplicities", "indeterminate", "a_n has irrational real roots"))
    else:
        out.append(CheckOutcome("root multiplicities", "pass"))

    if n == 4 and n_real >= 2:
        if irrational:
            out.append(CheckOutcome("two double roots", "indeterminate", "a_4 has irrational real roots"))
        else:
            ok = len(roots) == 2 and all(m == 2 and b.multiplicity(r) == 1 for r, m in roots)
            out.append(CheckOutcome("two double roots", "pass" if ok else "fail",
                                    "" if ok else "a_4 needs exactly two double real roots, simple in a_3"))

    if n_real <= 1:
        out.append(_degree_bounds(n, a, b, roots, n_real))
    return out


def _degree_bounds(n: int, a: Poly, b: Poly, roots, n_real: int) -> CheckOutcome:
    da = a.degree
    db = b.degree if not b.is_zero() else -1
    if not (2 * db - da <= n - 2 or 3 * db - 2 * da <= n - 3):
        return CheckOutcome("degree bounds", "fail", f"deg a_n = {da}, deg a_(n-1) = {db}")
    if n_real == 0:
        ok = da < db <= n - 3
        return CheckOutcome("degree bounds", "pass" if ok else "fail",
                            "" if ok else f"no real root needs deg a_n < deg a_(n-1) <= {n - 3}")
    if not roots:
        return CheckOutcome("degree bounds", "indeterminate", "the real root of a_n is irrational")
    (r, alpha), = roots
    beta = b.multiplicity(r) if not b.is_zero() else 0
    du = da - alpha
    dv = db - beta
    ok = 2 <= da <= db <= n - 2 and 1 + du <= dv <= n - 3
    return CheckOutcome("degree bounds", "pass" if ok else "fail",
                        "" if ok else f"one real root needs 2 <= {da} <= {db} <= {n - 2} and "
                                      f"{1 + du} <= {dv} <= {n - 3}")


def legendre_leading_terms(n: int, alpha, beta, A) -> tuple[Poly, Poly]:
    """a_n = A (x-alpha)^(n/2) (x-beta)^(n/2) and the matching a_(n-1)."""
    _check_order(n)
    alpha, beta, A = Fraction(alpha), Fraction(beta), Fraction(A)
    if not alpha < beta:
        raise InvalidOperator("requires alpha < beta")
    if A == 0:
        raise InvalidOperator("requires A != 0")
    h = n // 2
    la, lb = Poly.from_roots([alpha]), Poly.from_roots([beta])
    an = la**h * lb**h * A
    an1 = Poly.from_roots([(alpha + beta) / 2]) * la ** (h - 1) * lb ** (h - 1) * (A * n * n / 2)
    return an, an1


# -- full verification --------------------------------------------------------------

@dataclass
class VerificationReport:
    determining: list[EquationResult] = field(default_factory=list)
    boundary: dict[str, list[BoundaryResult]] = field(default_factory=dict)
    admissible: Optional[AdmissibilityReport] = None
    structural: list[CheckOutcome] = field(default_factory=list)
    congruences: list[CheckOutcome] = field(default_factory=list)
    weight: Optional[WeightForm] = None
    unsupported: Optional[str] = None

    @property
    def overall(self) -> bool:
        return (
            self.unsupported is None
            and all(e.passed for e in self.determining)
            and all(r.passed for rs in self.boundary.values() for r in rs)
            and self.admissible is not None and self.admissible.admissible
            and all(c.status == "pass" or c.status == "skip" for c in self.structural)
            and all(c.passed for c in self.congruences)
        )

    def failures(self) -> list[str]:
        out = [f"determining {e.id}" for e in self.determining if not e.passed]
        for side, rs in self.boundary.items():
            out += [f"boundary {side} #{r.index}: {r.label}" for r in rs if not r.passed]
        if self.admissible is not None and not self.admissible.admissible:
            out.append("admissibility")
        out += [f"structural {c.name}" for c in self.structural if c.status not in ("pass", "skip")]
        out += [f"congruence {c.name}" for c in self.congruences if not c.passed]
        if self.unsupported:
            out.append(f"unsupported: {self.unsupported}")
        return out

    def to_json(self) -> dict:
        return {
            "overall": self.overall,
            "determining": [e.to_json() for e in self.determining],
            "boundary": {side: [r.to_json() for r in rs] for side, rs in self.boundary.items()},
            "admissible": None if self.admissible is None else self.admissible.to_json(),
            "structural": [c.to_json() for c in self.structural],
            "congruences": [c.to_json() for c in self.congruences],
            "weight": None if self.weight is None else self.weight.to_json(),
            "unsupported": self.unsupported,
        }


def verify(op: DiffOperator, interval: Interval) -> VerificationReport:
    report = VerificationReport()
    report.structural = structural_validate(op)
    report.congruences = congruence_checks(op)
    rho = log_derivative(op)
    cache: dict = {}
    report.determining = check_determining(op, rho, cache)
    try:
        weight = build_weight(op, interval)
        report.weight = weight
        report.admissible = admissibility(weight)
        report.boundary = check_boundary(op, weight, rho, cache)
    except Unsupported as exc:
        report.unsupported = str(exc) or type(exc).__name__
    return report


__all__ = [
    "FormalExpr",
    "DeterminingEquation",
    "DeterminingSystem",
    "EquationResult",
    "BoundaryResult",
    "CheckOutcome",
    "VerificationReport",
    "d_rho",
    "determining_system",
    "raw_equation",
    "check_determining",
    "boundary_rows",
    "boundary_system",
    "same_span",
    "check_boundary",
    "congruence_checks",
    "structural_validate",
    "legendre_leading_terms",
    "verify",
    "format_endpoint",
]
