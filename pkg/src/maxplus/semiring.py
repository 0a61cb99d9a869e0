"""Exact scalar arithmetic over the max-plus semiring (Q and -inf, max, +).

The additive zero is -inf (written ``BOTTOM``), the multiplicative unit is
the rational 0 (``UNIT``).  All finite values are exact rationals kept in
lowest terms, so structural equality coincides with semantic equality and
no tolerance parameter exists anywhere downstream.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union

RationalLike = Union[int, Fraction, str]


@total_ordering
class MaxPlusScalar:
    """A max-plus scalar: an exact rational, or the semiring zero -inf.

    Instances are immutable values: hashable, totally ordered (with -inf
    strictly below every rational) and safe to share across workers.
    """

    __slots__ = ("value",)

    def __init__(self, value: RationalLike | Fraction | None = None):
        if value is not None and not isinstance(value, Fraction):
            value = Fraction(value)
        self.value: Fraction | None = value

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MaxPlusScalar):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other: "MaxPlusScalar") -> bool:
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"MaxPlusScalar({str(self)!r})"

    def __str__(self) -> str:
        return "-inf" if self.value is None else str(self.value)


BOTTOM = MaxPlusScalar(None)
UNIT = MaxPlusScalar(0)


def as_scalar(x) -> MaxPlusScalar:
    """Coerce ints, Fractions, token strings, None or -inf floats to a scalar."""
    if isinstance(x, MaxPlusScalar):
        return x
    if x is None:
        return BOTTOM
    if isinstance(x, float):
        if x == float("-inf"):
            return BOTTOM
        raise TypeError(f"refusing inexact float entry {x!r}; use Fraction")
    if isinstance(x, str):
        return parse_scalar(x)
    return MaxPlusScalar(x)


def parse_scalar(token: str) -> MaxPlusScalar:
    """Parse a scalar token: 'p/q', 'p', or '-inf' / '*' for the zero."""
    token = token.strip()
    if token in ("-inf", "*"):
        return BOTTOM
    try:
        return MaxPlusScalar(Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar token {token!r}") from exc


def oplus(a: MaxPlusScalar, b: MaxPlusScalar) -> MaxPlusScalar:
    """Semiring addition: max(a, b)."""
    return a if b < a else b


def otimes(a: MaxPlusScalar, b: MaxPlusScalar) -> MaxPlusScalar:
    """Semiring multiplication: a + b, with -inf absorbing."""
    if a.value is None or b.value is None:
        return BOTTOM
    return MaxPlusScalar(a.value + b.value)


def scalar_power(a: MaxPlusScalar, t: int) -> MaxPlusScalar:
    """t-fold product of a with itself, i.e. t*a; the empty product is UNIT."""
    if t < 0:
        raise ValueError(f"scalar_power needs t >= 0, got {t}")
    if t == 0:
        return UNIT
    if a.value is None:
        return BOTTOM
    return MaxPlusScalar(a.value * t)


def negate(a: MaxPlusScalar) -> MaxPlusScalar:
    """Multiplicative inverse -a of a finite scalar."""
    if a.value is None:
        raise ValueError("the semiring zero -inf has no multiplicative inverse")
    return MaxPlusScalar(-a.value)
