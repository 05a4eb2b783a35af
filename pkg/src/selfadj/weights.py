"""Symmetry weight construction, root classification and integrability."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .algebra import (
    DiffOperator,
    Poly,
    RatFunc,
    count_real_roots,
    order_at,
    partial_fractions,
    poly_divrem,
    rational_roots,
)
from .errors import IrreducibleFactor, NotARoot

Endpoint = Union[Fraction, float]
NEG_INF = -math.inf
POS_INF = math.inf


def parse_endpoint(value) -> Endpoint:
    """Accept a rational (int, Fraction, "p/q") or "-inf"/"+inf"/"inf"."""
    if isinstance(value, float):
        if math.isinf(value):
            return value
        raise ValueError("finite endpoints must be exact rationals")
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("-inf", "-infinity"):
            return NEG_INF
        if text in ("inf", "+inf", "infinity", "+infinity"):
            return POS_INF
        return Fraction(text)
    return Fraction(value)


def format_endpoint(value: Endpoint) -> str:
    if value == NEG_INF:
        return "-inf"
    if value == POS_INF:
        return "+inf"
    return str(value)


@dataclass(frozen=True)
class Interval:
    lo: Endpoint
    hi: Endpoint

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"interval requires lo < hi, got ({self.lo}, {self.hi})")
        if self.lo == POS_INF or self.hi == NEG_INF:
            raise ValueError("interval endpoints are inverted infinities")

    @classmethod
    def of(cls, lo, hi) -> "Interval":
        return cls(parse_endpoint(lo), parse_endpoint(hi))

    def contains_open(self, x: Fraction) -> bool:
        return self.lo < x < self.hi

    def endpoints(self) -> list[tuple[str, Endpoint]]:
        return [("lo", self.lo), ("hi", self.hi)]

    def to_json(self) -> list[str]:
        return [format_endpoint(self.lo), format_endpoint(self.hi)]

    def __str__(self) -> str:
        return f"({format_endpoint(self.lo)}, {format_endpoint(self.hi)})"


class LimitVerdict(str, Enum):
    ZERO = "ZeroLimit"
    FINITE = "FiniteNonzero"
    DIVERGENT = "Divergent"


class RootKind(str, Enum):
    ORDINARY = "Ordinary"
    LOGARITHMIC = "Logarithmic"


def log_derivative(op: DiffOperator) -> RatFunc:
    """rho = p'/p = 2 a_{n-1} / (n a_n) - a_n' / a_n."""
    n = op.order
    a, b = op.leading, op.subleading
    return RatFunc(b * Fraction(2, n) - a.deriv(), a)


def split_log_derivative(rho: RatFunc):
    """Partial fractions of rho that tolerate a root-free irreducible remainder.

    Returns (poly_part, [(root, order, coeff)], smooth) where ``smooth`` is a
    proper RatFunc whose denominator has no rational roots (or None).
    """
    poly_part, rem = poly_divrem(rho.num, rho.den)
    if rho.den.is_constant():
        return poly_part / rho.den.coeff(0), [], None
    roots, cofactor = rational_roots(rho.den)
    linear = Poly.constant(1)
    for r, m in roots:
        linear = linear * Poly.from_roots([r]) ** m
    smooth = None
    terms: list[tuple[Fraction, int, Fraction]] = []
    if not cofactor.is_constant():
        # rem/den = s/linear + t/cofactor with linear and cofactor coprime
        t = _bezout_split(rem, linear, cofactor)
        smooth = RatFunc(t, cofactor)
        rest = RatFunc(rem, rho.den) - smooth
    else:
        rest = RatFunc(rem, rho.den)
    if not rest.is_zero():
        _, terms = partial_fractions(rest)
    return poly_part, terms, smooth


def _bezout_split(num: Poly, f: Poly, g: Poly) -> Poly:
    """Numerator t with deg t < deg g such that num/(f g) - t/g has denominator f."""
    # num ≡ t f (mod g)  =>  t = num * f^{-1} mod g
    inv = _inverse_mod(f % g, g)
    return (num * inv) % g


def _inverse_mod(f: Poly, g: Poly) -> Poly:
    r0, r1 = g, f
    s0, s1 = Poly(), Poly.constant(1)
    while not r1.is_zero():
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ArithmeticError("polynomials are not coprime")
    return s0 / r0.coeff(0)


@dataclass(frozen=True)
class WeightForm:
    """p = prod |x - r|^gamma * exp(q(x)) * prod exp(tail_r(1/(x - r))) * exp(int smooth), up to a constant."""

    interval: Interval
    powers: tuple[tuple[Fraction, Fraction], ...]
    exp_poly: Poly
    essential: tuple[tuple[Fraction, Poly], ...] = ()
    smooth: Optional[RatFunc] = None

    def power_at(self, x: Fraction) -> Fraction:
        for r, g in self.powers:
            if r == x:
                return g
        return Fraction(0)

    def essential_at(self, x: Fraction) -> Optional[Poly]:
        for r, tail in self.essential:
            if r == x:
                return tail
        return None

    def log_derivative(self) -> RatFunc:
        out = RatFunc.from_poly(self.exp_poly.deriv())
        for r, g in self.powers:
            out = out + RatFunc(Poly.constant(g), Poly.from_roots([r]))
        for r, tail in self.essential:
            lin = Poly.from_roots([r])
            for k, c in enumerate(tail.coeffs):
                if c:
                    # d/dx c (x-r)^{-k} = -k c (x-r)^{-k-1}
                    out = out + RatFunc(Poly.constant(-k * c), lin ** (k + 1))
        if self.smooth is not None:
            out = out + self.smooth
        return out

    def exponent_at_infinity(self) -> Fraction:
        """Power-type exponent of p at infinity, ignoring exp(q): the 1/x coefficient of rho's proper part."""
        total = sum((g for _, g in self.powers), Fraction(0))
        if self.smooth is not None and not self.smooth.is_zero():
            num, den = self.smooth.num, self.smooth.den
            if num.degree == den.degree - 1:
                total += num.lc / den.lc
        return total

    def exp_trend(self, side: int) -> int:
        """-1 if exp(q) decays toward side*infinity, +1 if it grows, 0 if q is constant."""
        q = self.exp_poly
        if q.degree < 1:
            return 0
        sign = 1 if q.lc > 0 else -1
        if side < 0 and q.degree % 2 == 1:
            sign = -sign
        return sign

    def to_json(self) -> dict:
        return {
            "powers": [[str(r), str(g)] for r, g in self.powers],
            "expPoly": [str(c) for c in self.exp_poly.coeffs],
            "essential": [[str(r), [str(c) for c in tail.coeffs]] for r, tail in self.essential],
            "smooth": None if self.smooth is None else [
                [str(c) for c in self.smooth.num.coeffs],
                [str(c) for c in self.smooth.den.coeffs],
            ],
            "interval": self.interval.to_json(),
        }


def build_weight(op: DiffOperator, interval: Interval) -> WeightForm:
    """Factored weight for ``op`` on ``interval``.

    An irreducible factor of the denominator of rho is accepted only when it
    has no real root in the closed interval; otherwise IrreducibleFactor.
    """
    rho = log_derivative(op)
    poly_part, terms, smooth = split_log_derivative(rho)
    if smooth is not None:
        den = smooth.den
        lo = None if interval.lo == NEG_INF else interval.lo
        hi = None if interval.hi == POS_INF else interval.hi
        inside = count_real_roots(den, lo if lo is not None else "-inf", hi if hi is not None else "+inf")
        at_ends = any(e is not None and den(e) == 0 for e in (lo, hi))
        if inside or at_ends:
            raise IrreducibleFactor(den)
    powers: dict[Fraction, Fraction] = {}
    tails: dict[Fraction, list[Fraction]] = {}
    for root, order, c in terms:
        if order == 1:
            powers[root] = powers.get(root, Fraction(0)) + c
        else:
            lst = tails.setdefault(root, [])
            k = order - 1
            while len(lst) <= k:
                lst.append(Fraction(0))
            lst[k] += -c / k
    weight = WeightForm(
        interval=interval,
        powers=tuple(sorted((r, g) for r, g in powers.items() if g)),
        exp_poly=poly_part.antideriv(),
        essential=tuple(sorted((r, Poly(lst)) for r, lst in tails.items() if Poly(lst))),
        smooth=smooth,
    )
    if weight.log_derivative() != rho:
        raise ArithmeticError("weight reconstruction does not reproduce the log-derivative")
    return weight


@dataclass(frozen=True)
class RootClassification:
    root: Fraction
    alpha: int
    beta: Optional[int]
    kind: RootKind
    phi: Fraction
    integrable_left: bool
    integrable_right: bool

    def to_json(self) -> dict:
        return {
            "root": str(self.root),
            "alpha": self.alpha,
            "beta": self.beta,
            "kind": self.kind.value,
            "phi": str(self.phi),
            "integrableLeft": self.integrable_left,
            "integrableRight": self.integrable_right,
        }


def classify_root(op: DiffOperator, root) -> RootClassification:
    root = Fraction(root)
    a, b, n = op.leading, op.subleading, op.order
    alpha = a.multiplicity(root)
    if alpha == 0:
        raise NotARoot(f"{root} is not a root of a_{n}")
    lin = Poly.from_roots([root])
    a_rest = a.exact_div(lin**alpha)
    if b.is_zero():
        return RootClassification(root, alpha, None, RootKind.ORDINARY, Fraction(0), False, False)
    beta = b.multiplicity(root)
    b_rest = b.exact_div(lin**beta)
    phi = b_rest(root) / a_rest(root)
    if beta - alpha + 1 == 0:
        ok = Fraction(2, n) * phi - alpha + 1 > 0
        return RootClassification(root, alpha, beta, RootKind.LOGARITHMIC, phi, ok, ok)
    d = alpha - beta
    right = d >= 2 and phi > 0
    left = d >= 2 and (-1) ** d * phi < 0
    return RootClassification(root, alpha, beta, RootKind.ORDINARY, phi, left, right)


@dataclass(frozen=True)
class EndpointAdmissibility:
    side: str
    point: Endpoint
    admissible: bool
    reason: str

    def to_json(self) -> dict:
        return {"side": self.side, "point": format_endpoint(self.point), "admissible": self.admissible,
                "reason": self.reason}


@dataclass(frozen=True)
class AdmissibilityReport:
    endpoints: tuple[EndpointAdmissibility, ...]
    interior: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return all(e.admissible for e in self.endpoints) and not self.interior

    def to_json(self) -> dict:
        return {"admissible": self.admissible, "endpoints": [e.to_json() for e in self.endpoints],
                "interior": list(self.interior)}


def _essential_decays(tail: Poly, from_right: bool) -> bool:
    k = tail.degree
    c = tail.lc
    return c < 0 if from_right else c * (-1) ** k < 0


def admissibility(weight: WeightForm) -> AdmissibilityReport:
    """Whether every polynomial has finite norm, judged endpoint by endpoint."""
    iv = weight.interval
    results = []
    for side, point in iv.endpoints():
        from_right = side == "lo"
        if math.isinf(point):
            trend = weight.exp_trend(1 if point > 0 else -1)
            if trend < 0:
                results.append(EndpointAdmissibility(side, point, True, "exponential decay"))
            elif trend > 0:
                results.append(EndpointAdmissibility(side, point, False, "exponential growth"))
            else:
                results.append(EndpointAdmissibility(side, point, False, "no exponential decay at infinity"))
            continue
        tail = weight.essential_at(point)
        if tail is not None:
            ok = _essential_decays(tail, from_right)
            results.append(EndpointAdmissibility(
                side, point, ok, "essential factor decays" if ok else "essential factor grows"))
            continue
        g = weight.power_at(point)
        ok = g > -1
        results.append(EndpointAdmissibility(side, point, ok, f"power exponent {g}"))
    interior = []
    for r, _ in weight.powers:
        if iv.contains_open(r):
            interior.append(f"singular point {r} inside the interval")
    for r, _ in weight.essential:
        if iv.contains_open(r):
            interior.append(f"essential singularity {r} inside the interval")
    return AdmissibilityReport(tuple(results), tuple(interior))


def boundary_exponent(weight: WeightForm, expr: RatFunc, endpoint: Endpoint) -> LimitVerdict:
    """Limit of p * expr at an endpoint of the weight's interval."""
    iv = weight.interval
    if endpoint not in (iv.lo, iv.hi):
        raise ValueError(f"{endpoint} is not an endpoint of {iv}")
    if expr.is_zero():
        return LimitVerdict.ZERO
    if math.isinf(endpoint):
        trend = weight.exp_trend(1 if endpoint > 0 else -1)
        if trend < 0:
            return LimitVerdict.ZERO
        if trend > 0:
            return LimitVerdict.DIVERGENT
        total = weight.exponent_at_infinity() + (expr.num.degree - expr.den.degree)
        if total < 0:
            return LimitVerdict.ZERO
        return LimitVerdict.FINITE if total == 0 else LimitVerdict.DIVERGENT
    tail = weight.essential_at(endpoint)
    if tail is not None:
        from_right = endpoint == iv.lo
        return LimitVerdict.ZERO if _essential_decays(tail, from_right) else LimitVerdict.DIVERGENT
    total = weight.power_at(endpoint) + order_at(expr, endpoint)
    if total > 0:
        return LimitVerdict.ZERO
    return LimitVerdict.FINITE if total == 0 else LimitVerdict.DIVERGENT


def weight_exponents(weight: WeightForm) -> dict[Fraction, Fraction]:
    return dict(weight.powers)


__all__ = [
    "Interval",
    "WeightForm",
    "LimitVerdict",
    "RootKind",
    "RootClassification",
    "AdmissibilityReport",
    "EndpointAdmissibility",
    "log_derivative",
    "build_weight",
    "classify_root",
    "admissibility",
    "boundary_exponent",
    "parse_endpoint",
    "format_endpoint",
    "NEG_INF",
    "POS_INF",
]
