"""Operator JSON: {"order": n, "coeffs": {"1": ["c0", "c1", ...], ...}} with rationals as strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .algebra import DiffOperator, Poly, to_rational
from .errors import InvalidOperator
from .weights import Interval


class OperatorFormatError(InvalidOperator):
    pass


def rational_str(value: Fraction) -> str:
    return str(Fraction(value))


def poly_to_json(p: Poly) -> list[str]:
    return [rational_str(c) for c in p.coeffs]


def operator_to_json(op: DiffOperator, **extra: Any) -> dict:
    out = {"order": op.order, "coeffs": {str(k): poly_to_json(a) for k, a in op.coeffs.items()}}
    out.update(extra)
    return out


def _field_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise OperatorFormatError(f"{where}: expected a rational string such as \"3/4\", got {value!r}")
    try:
        return to_rational(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise OperatorFormatError(f"{where}: {exc}") from None


def operator_from_json(data: Any) -> DiffOperator:
    if not isinstance(data, dict):
        raise OperatorFormatError("top level: expected an object with \"order\" and \"coeffs\"")
    order = data.get("order")
    if isinstance(order, bool) or not isinstance(order, int):
        raise OperatorFormatError(f"order: expected an integer, got {order!r}")
    coeffs = data.get("coeffs")
    if not isinstance(coeffs, dict):
        raise OperatorFormatError("coeffs: expected an object mapping \"k\" to coefficient arrays")
    polys: dict[int, Poly] = {}
    for key, arr in coeffs.items():
        try:
            k = int(key)
        except ValueError:
            raise OperatorFormatError(f"coeffs[{key!r}]: key is not an integer") from None
        if not 1 <= k <= order:
            raise OperatorFormatError(f"coeffs[{key!r}]: index outside 1..{order}")
        if not isinstance(arr, list):
            raise OperatorFormatError(f"coeffs[{key!r}]: expected an array")
        polys[k] = Poly([_field_rational(v, f"coeffs[{key!r}][{i}]") for i, v in enumerate(arr)])
    full = {k: polys.get(k, Poly()) for k in range(1, order + 1)}
    if order < 1:
        raise OperatorFormatError(f"order: must be positive, got {order}")
    try:
        return DiffOperator(full)
    except InvalidOperator as exc:
        raise OperatorFormatError(str(exc)) from None


def load_operator(text: str) -> tuple[DiffOperator, dict]:
    """Parse operator JSON text; returns the operator and the raw object for optional fields."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OperatorFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return operator_from_json(data), data


def interval_from_json(data: dict) -> Optional[Interval]:
    iv = data.get("interval") if isinstance(data, dict) else None
    if iv is None:
        return None
    if not isinstance(iv, list) or len(iv) != 2:
        raise OperatorFormatError("interval: expected [lo, hi]")
    try:
        return Interval.of(iv[0], iv[1])
    except (ValueError, TypeError) as exc:
        raise OperatorFormatError(f"interval: {exc}") from None
