"""Exact integer and rational arithmetic with explicit rounding control.

Everything in this package is built on three exact representations:

* ``int`` -- Python's native unbounded integer (aliased ``ExactInt``),
* ``fractions.Fraction`` -- normalized exact rationals (aliased ``ExactRatio``),
* ``ScaledValue`` -- a decimal fixed-point value (mantissa, scale) that
  carries a guaranteed error bound, used where full rational arithmetic
  would blow up denominators.

No floating point is used anywhere; every rounding is an explicit integer
operation.  The two rounding modes are the floor function and
round-half-up, defined as floor(x + 1/2) so that ties always round up.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

ExactInt = int
ExactRatio = Fraction


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class RoundingUndecidableError(DomainError):
    """A tracked error bound straddles a rounding boundary.

    Raised by ScaledValue.round_checked when the interval
    [value - error_bound, value + error_bound] does not round to a single
    integer.  The caller should retry with more fractional digits.
    """


class RoundingMode(enum.Enum):
    FLOOR = "floor"
    NEAREST_HALF_UP = "nearest"


def floor_div(n: int, d: int) -> int:
    """Greatest integer q with q*d <= n, for d > 0 (true floor division)."""
    if d <= 0:
        raise DomainError(f"floor_div requires a positive divisor, got {d}")
    return n // d


def nearest_div(n: int, d: int) -> int:
    """floor(n/d + 1/2) for d > 0, computed exactly as (2n + d) // (2d).

    Ties round up (toward +infinity), never to even.
    """
    if d <= 0:
        raise DomainError(f"nearest_div requires a positive divisor, got {d}")
    return (2 * n + d) // (2 * d)


def rounded_div(n: int, d: int, mode: RoundingMode) -> int:
    """floor_div or nearest_div selected by mode."""
    if mode is RoundingMode.FLOOR:
        return floor_div(n, d)
    return nearest_div(n, d)


def ratio_combine(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Combine two exact rationals; result is always normalized."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError("division by zero ratio")
        return a / b
    raise DomainError(f"unknown ratio operation {op!r}")


def ratio_round(r: Fraction, mode: RoundingMode) -> int:
    """Round an exact rational to an integer under the given mode."""
    if mode is RoundingMode.NEAREST_HALF_UP:
        r = r + Fraction(1, 2)
    return r.numerator // r.denominator


def decimal_string(r: Fraction, places: int) -> str:
    """Exact decimal expansion of r truncated (not rounded) to `places` digits.

    Truncation is toward zero; the sign is rendered as a leading '-'.
    """
    if places < 0:
        raise DomainError("places must be non-negative")
    sign = "-" if r < 0 else ""
    q = abs(r.numerator) * 10**places // r.denominator
    int_part, frac_part = divmod(q, 10**places)
    if places == 0:
        return f"{sign}{int_part}"
    return f"{sign}{int_part}.{frac_part:0{places}d}"


@dataclass(frozen=True)
class ScaledValue:
    """A decimal fixed-point number with a tracked worst-case error bound.

    The represented value is mantissa / 10**scale, and the true quantity it
    stands for is guaranteed to satisfy

        |true - mantissa / 10**scale| <= error_bound.

    Combining operations propagate (and never shrink) the bound, so a chain
    of ScaledValue computations is a rigorous enclosure of the exact result.
    """

    mantissa: int
    scale: int
    error_bound: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.scale < 0:
            raise DomainError("scale must be non-negative")
        if self.error_bound < 0:
            raise DomainError("error bound must be non-negative")

    @classmethod
    def from_int(cls, n: int, scale: int) -> "ScaledValue":
        return cls(n * 10**scale, scale)

    @classmethod
    def from_ratio(cls, numer: int, denom: int, scale: int) -> "ScaledValue":
        """Truncate numer/denom to `scale` fractional digits.

        Exact divisions carry no error; inexact ones at most one ulp.
        """
        if denom <= 0:
            raise DomainError("denominator must be positive")
        unit = 10**scale
        mantissa, rem = divmod(numer * unit, denom)
        return cls(mantissa, scale, Fraction(0) if rem == 0 else Fraction(1, unit))

    @property
    def ulp(self) -> Fraction:
        return Fraction(1, 10**self.scale)

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def _aligned(self, other: "ScaledValue") -> tuple[int, int, int]:
        # Rescaling upward is exact, so alignment never adds error.
        scale = max(self.scale, other.scale)
        return (
            self.mantissa * 10 ** (scale - self.scale),
            other.mantissa * 10 ** (scale - other.scale),
            scale,
        )

    def __add__(self, other: "ScaledValue") -> "ScaledValue":
        a, b, scale = self._aligned(other)
        return ScaledValue(a + b, scale, self.error_bound + other.error_bound)

    def __sub__(self, other: "ScaledValue") -> "ScaledValue":
        a, b, scale = self._aligned(other)
        return ScaledValue(a - b, scale, self.error_bound + other.error_bound)

    def __neg__(self) -> "ScaledValue":
        return ScaledValue(-self.mantissa, self.scale, self.error_bound)

    def div_int(self, d: int) -> "ScaledValue":
        """Divide by a positive integer, truncating the mantissa.

        The inherited error shrinks by d; an inexact truncation adds at
        most one unit in the last place.
        """
        if d <= 0:
            raise DomainError("divisor must be positive")
        mantissa, rem = divmod(self.mantissa, d)
        err = self.error_bound / d
        if rem:
            err += self.ulp
        return ScaledValue(mantissa, self.scale, err)

    def bounds(self) -> tuple[Fraction, Fraction]:
        v = self.as_fraction()
        return v - self.error_bound, v + self.error_bound

    def round_checked(self, mode: RoundingMode) -> int:
        """Round to an integer, verifying the error bound cannot change it."""
        lo, hi = self.bounds()
        r_lo = ratio_round(lo, mode)
        r_hi = ratio_round(hi, mode)
        if r_lo != r_hi:
            raise RoundingUndecidableError(
                f"error bound {self.error_bound} straddles a rounding boundary "
                f"near {decimal_string(self.as_fraction(), min(self.scale, 6))}; "
                "increase the number of fractional digits"
            )
        return r_lo

    def decimal(self, places: int | None = None) -> str:
        if places is None:
            places = self.scale
        return decimal_string(self.as_fraction(), places)
