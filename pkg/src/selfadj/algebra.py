"""Exact univariate algebra over the rationals.

Dense polynomials with :class:`fractions.Fraction` coefficients, reduced
rational functions with a monic denominator, and the polynomial-coefficient
differential operator value type.  Everything here is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Mapping, Sequence, Union

from .errors import IrreducibleFactor, InvalidOperator

Rational = Fraction
Number = Union[int, Fraction]

# Degree of the zero polynomial.  Comparisons work, arithmetic is never done on it.
ZERO_DEGREE = float("-inf")

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Parse an int, Fraction or "p/q" string into a Fraction (floats are rejected)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"not an exact rational: {value!r}")


class Poly:
    """Dense polynomial, coefficients stored in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else to_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, cs: list) -> "Poly":
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def constant(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw([_ZERO, _ONE])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls._raw([_ZERO] * k + [Fraction(c)])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "Poly":
        out = cls.constant(1)
        for r in roots:
            out = out * cls._raw([-Fraction(r), _ONE])
        return out

    # -- basic queries -------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs])

    def __pos__(self) -> "Poly":
        return self

    def __add__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        o = Poly._coerce(other).coeffs
        a, b = (self.coeffs, o) if len(self.coeffs) >= len(o) else (o, self.coeffs)
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        return self + (-Poly._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw([])
            return Poly._raw([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([])
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("Poly powers must be nonnegative integers")
        result, base = Poly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            inv = 1 / Fraction(other)
            return Poly._raw([c * inv for c in self.coeffs])
        if isinstance(other, Poly):
            if other.is_constant():
                return self / other.coeff(0)
            return RatFunc(self, other)
        if isinstance(other, RatFunc):
            return RatFunc.from_poly(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        return RatFunc.from_poly(Poly._coerce(other)) / RatFunc.from_poly(self)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divrem(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divrem(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divrem(self, other)[1]

    # -- calculus and evaluation ---------------------------------------------
    def deriv(self, m: int = 1) -> "Poly":
        cs = list(self.coeffs)
        for _ in range(m):
            cs = [c * k for k, c in enumerate(cs)][1:]
        return Poly._raw(cs)

    def antideriv(self) -> "Poly":
        return Poly._raw([_ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def __call__(self, x):
        if isinstance(x, Poly):
            out = Poly._raw([])
            for c in reversed(self.coeffs):
                out = out * x + c
            return out
        x = Fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("the zero polynomial has no monic form")
        return self / self.lc

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = poly_divrem(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def multiplicity(self, root: Number) -> int:
        """Multiplicity of ``root`` as a root (0 if not a root); the zero polynomial is rejected."""
        if not self.coeffs:
            raise ValueError("multiplicity is undefined for the zero polynomial")
        root = Fraction(root)
        m, cs = 0, list(self.coeffs)
        while True:
            q, r = _synthetic_div(cs, root)
            if r:
                return m
            m += 1
            cs = q

    def shift(self, r: Number) -> "Poly":
        """The polynomial y -> p(y + r)."""
        return compose_linear(self, 1, r)

    def integer_primitive(self) -> tuple[list[int], Fraction]:
        """Return (primitive integer coefficients, scale) with self = scale * primitive."""
        return _to_primitive_ints(self.coeffs)


def _synthetic_div(cs: Sequence[Fraction], r: Fraction) -> tuple[list, Fraction]:
    n = len(cs)
    if n == 0:
        return [], _ZERO
    q = [_ZERO] * (n - 1)
    acc = _ZERO
    for i in range(n - 1, 0, -1):
        acc = acc * r + cs[i]
        q[i - 1] = acc
    rem = acc * r + cs[0]
    return q, rem


def _to_primitive_ints(cs: Sequence[Fraction]) -> tuple[list[int], Fraction]:
    if not cs:
        return [], _ONE
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    cont = 0
    for v in ints:
        cont = gcd(cont, v)
    if ints[-1] < 0:
        cont = -cont
    return [v // cont for v in ints], Fraction(cont, den)


def poly_divrem(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: p = q*quot + rem with deg(rem) < deg(q)."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    if len(rem) - 1 < dq:
        return Poly._raw([]), p
    inv_lc = 1 / q.lc
    quot = [_ZERO] * (len(rem) - dq)
    qc = q.coeffs
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i] * inv_lc
        if not c:
            continue
        quot[i - dq] = c
        base = i - dq
        for j in range(dq + 1):
            rem[base + j] -= c * qc[j]
    return Poly._raw(quot), Poly._raw(rem[:dq])


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (ascending lists, b nonzero)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = 0
    for v in a:
        g = gcd(g, v)
    return [v // g for v in a] if g > 1 else a


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (primitive remainder sequence over the integers)."""
    if p.is_zero() and q.is_zero():
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_constant() or q.is_constant():
        return Poly.constant(1)
    a, _ = _to_primitive_ints(p.coeffs)
    b, _ = _to_primitive_ints(q.coeffs)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r) if r else []
    return Poly._raw([Fraction(v) for v in a]).monic()


def compose_linear(p: Poly, c: Number, d: Number) -> Poly:
    """Substitute x <- c*x + d."""
    c, d = Fraction(c), Fraction(d)
    if not c:
        raise ValueError("compose_linear requires c != 0")
    return p(Poly._raw([d, c]))


def squarefree_part(p: Poly) -> Poly:
    if p.is_constant():
        return Poly.constant(1)
    return p.exact_div(poly_gcd(p, p.deriv())).monic()


# -- rational roots ------------------------------------------------------------

def _small_factor(n: int) -> dict[int, int]:
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n and d < 1_000_000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _divisors(n: int) -> list[int]:
    divs = [1]
    for prime, e in _small_factor(n).items():
        divs = [d * prime**k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(p: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """Rational roots with multiplicities, plus the monic cofactor without rational roots.

    Candidates come from the rational root theorem applied to the primitive
    integer form of ``p``.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    rest = p.monic()
    roots: list[tuple[Fraction, int]] = []
    m0 = rest.multiplicity(0)
    if m0:
        roots.append((_ZERO, m0))
        rest = Poly._raw(list(rest.coeffs[m0:]))
    if rest.degree >= 1:
        sqf = squarefree_part(rest)
        ints, _ = _to_primitive_ints(sqf.coeffs)
        cands: set[Fraction] = set()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                cands.add(Fraction(num, den))
                cands.add(Fraction(-num, den))
        for r in sorted(cands):
            if sqf(r) == 0:
                m = rest.multiplicity(r)
                roots.append((r, m))
                rest = rest.exact_div(Poly.from_roots([r]) ** m)
    roots.sort()
    return roots, rest.monic()


# -- real root counting (Sturm) ---------------------------------------------

def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.deriv()]
    while not chain[-1].is_zero():
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _sign_at(p: Poly, x) -> int:
    if x == "-inf":
        if p.is_zero():
            return 0
        return (1 if p.lc > 0 else -1) * (1 if p.degree % 2 == 0 else -1)
    if x == "+inf":
        return (p.lc > 0) - (p.lc < 0)
    v = p(x)
    return (v > 0) - (v < 0)


def _variations(chain: list[Poly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly, lo="-inf", hi="+inf") -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    ``lo``/``hi`` are rationals or the strings "-inf" / "+inf".
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    q = squarefree_part(p)
    for end in (lo, hi):
        if end not in ("-inf", "+inf"):
            m = q.multiplicity(end)
            if m:
                q = q.exact_div(Poly.from_roots([end]))
    if q.is_constant():
        return 0
    chain = _sturm_chain(q)
    return _variations(chain, lo) - _variations(chain, hi)


class RatFunc:
    """Reduced rational function num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._coerce(num) if not isinstance(num, Poly) else num
        den = Poly.constant(1) if den is None else (den if isinstance(den, Poly) else Poly._coerce(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly.constant(1)
            return
        if not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den = num, den

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RatFunc":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls._reduced(p, Poly.constant(1))

    @staticmethod
    def _coerce(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_poly(Poly.constant(other))
        raise TypeError(f"cannot combine RatFunc with {type(other).__name__}")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_constant()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        try:
            o = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __neg__(self) -> "RatFunc":
        return RatFunc._reduced(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        o = RatFunc._coerce(other)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            if self.den.is_constant():
                return RatFunc._reduced(self.num + o.num, self.den)
            return RatFunc(self.num + o.num, self.den)
        if o.den.is_constant():
            return RatFunc._reduced(self.num + o.num * self.den, self.den)
        if self.den.is_constant():
            return RatFunc._reduced(self.num * o.den + o.num, o.den)
        g = poly_gcd(self.den, o.den)
        if g.is_constant():
            return RatFunc._reduced(self.num * o.den + o.num * self.den, self.den * o.den)
        d1, d2 = self.den.exact_div(g), o.den.exact_div(g)
        return RatFunc(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-RatFunc._coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc._coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc.from_poly(Poly())
            return RatFunc._reduced(self.num * other, self.den)
        o = RatFunc._coerce(other)
        if self.is_zero() or o.is_zero():
            return RatFunc.from_poly(Poly())
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if not d2.is_constant():
            g = poly_gcd(n1, d2)
            if not g.is_constant():
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if not d1.is_constant():
            g = poly_gcd(n2, d1)
            if not g.is_constant():
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        num, den = n1 * n2, d1 * d2
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        return RatFunc._reduced(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        num, den = self.den, self.num
        lc = den.lc
        return RatFunc._reduced(num / lc, den / lc)

    def __truediv__(self, other) -> "RatFunc":
        return self * RatFunc._coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._reduced(self.num**k, self.den**k)

    def deriv(self) -> "RatFunc":
        n, d = self.num, self.den
        if d.is_constant():
            return RatFunc._reduced(n.deriv(), d)
        # d = g*h with g = gcd(d, d'): (n/d)' = (n' h - n (d'/g)) / (d h)
        g = poly_gcd(d, d.deriv())
        h = d.exact_div(g)
        top = n.deriv() * h - n * d.deriv().exact_div(g)
        return RatFunc(top, d * h)

    def __call__(self, x) -> Fraction:
        dv = self.den(x)
        if not dv:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / dv

    def order_at(self, point: Number) -> int:
        return order_at(self, point)


def order_at(r, point: Number) -> int:
    """Valuation at ``point``: multiplicity in numerator minus multiplicity in denominator."""
    r = RatFunc._coerce(r)
    if r.is_zero():
        raise ValueError("order_at is undefined for the zero rational function")
    return r.num.multiplicity(point) - r.den.multiplicity(point)


def _series_div(num: list, den: list, terms: int) -> list:
    """First ``terms`` Taylor coefficients of num/den at 0 (den[0] != 0)."""
    out = []
    num = list(num) + [_ZERO] * max(0, terms - len(num))
    inv = 1 / den[0]
    for k in range(terms):
        acc = num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc * inv)
    return out


def partial_fractions(r) -> tuple[Poly, list[tuple[Fraction, int, Fraction]]]:
    """Split r into polynomial part + sum of c/(x - root)^order over rational roots.

    Zero coefficients are omitted.  Raises IrreducibleFactor when the
    denominator does not split into rational linear factors.
    """
    r = RatFunc._coerce(r)
    poly_part, rem = poly_divrem(r.num, r.den)
    if r.den.is_constant():
        return poly_part / r.den.coeff(0), []
    roots, cofactor = rational_roots(r.den)
    if not cofactor.is_constant():
        raise IrreducibleFactor(cofactor)
    terms: list[tuple[Fraction, int, Fraction]] = []
    for root, mult in roots:
        others = r.den.exact_div(Poly.from_roots([root]) ** mult)
        shifted_num = rem.shift(root).coeffs
        shifted_den = others.shift(root).coeffs
        series = _series_div(shifted_num, shifted_den, mult)
        for j, c in enumerate(series):
            if c:
                terms.append((root, mult - j, c))
    return poly_part, terms


def recombine(poly_part: Poly, terms) -> RatFunc:
    out = RatFunc.from_poly(poly_part)
    for root, order, c in terms:
        out = out + RatFunc(Poly.constant(c), Poly.from_roots([root]) ** order)
    return out


class DiffOperator:
    """L = sum_{k=1}^n a_k(x) D^k with polynomial a_k of degree <= k and n even."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs: Mapping[int, Poly] | Sequence[Poly], *, check: bool = True):
        if isinstance(coeffs, Mapping):
            items = {int(k): (v if isinstance(v, Poly) else Poly(v)) for k, v in coeffs.items()}
            if not items:
                raise InvalidOperator("operator has no coefficients")
            n = max(items)
            if min(items) < 1:
                raise InvalidOperator("coefficient indices start at 1 (no order-zero term)")
            cs = tuple(items.get(k, Poly()) for k in range(1, n + 1))
        else:
            cs = tuple(c if isinstance(c, Poly) else Poly(c) for c in coeffs)
            n = len(cs)
        self.order = n
        self._coeffs = cs
        if check:
            self._validate()

    def _validate(self) -> None:
        n = self.order
        if n < 2 or n % 2:
            raise InvalidOperator(f"order must be even and >= 2, got {n}")
        if self._coeffs[-1].is_zero():
            raise InvalidOperator("leading coefficient a_n is zero")
        for k, a in enumerate(self._coeffs, start=1):
            if a.degree > k:
                raise InvalidOperator(f"deg a_{k} = {a.degree} exceeds {k}")

    def a(self, k: int) -> Poly:
        if k < 1 or k > self.order:
            return Poly()
        return self._coeffs[k - 1]

    @property
    def coeffs(self) -> dict[int, Poly]:
        return {k: self._coeffs[k - 1] for k in range(1, self.order + 1)}

    @property
    def leading(self) -> Poly:
        return self._coeffs[-1]

    @property
    def subleading(self) -> Poly:
        return self._coeffs[-2]

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffOperator) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(f"a{k}={a}" for k, a in self.coeffs.items())
        return f"DiffOperator(n={self.order}; {body})"

    def scaled(self, c: Number) -> "DiffOperator":
        return DiffOperator([a * Fraction(c) for a in self._coeffs])


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


__all__ = [
    "Rational",
    "ZERO_DEGREE",
    "to_rational",
    "Poly",
    "RatFunc",
    "DiffOperator",
    "poly_divrem",
    "poly_gcd",
    "compose_linear",
    "order_at",
    "partial_fractions",
    "recombine",
    "rational_roots",
    "count_real_roots",
    "squarefree_part",
    "binomial",
]

