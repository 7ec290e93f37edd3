"""The root-12 alternating series ledger under three rounding policies.

The computation: seed x1 = sqrt(12 * diameter**2), then repeatedly divide
by 3 to get x2, x3, ...; the k-th term is t_k = x_k / (2k - 1); odd- and
even-position terms are summed separately and the circumference is their
difference, C = O - E.

Three policies control how the inexact square root and divisions are
handled:

* FloorEachOp      -- every operation keeps only the integer part,
* NearestEachOp    -- every operation rounds half-up to the nearest integer,
* ExactFinal       -- values stay exact until a single final rounding;
                      backed either by exact rationals (seeded with the
                      integer floor root) or by ScaledValue fixed-point
                      (seeded with the root truncated to frac_digits
                      decimal places).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .aryabhata_sqrt import isqrt, isqrt_nearest, sqrt_scaled
from .exact_arith import (
    DomainError,
    RoundingMode,
    ScaledValue,
    floor_div,
    nearest_div,
    ratio_round,
)


@dataclass(frozen=True)
class FloorEachOp:
    def __str__(self) -> str:
        return "floor"


@dataclass(frozen=True)
class NearestEachOp:
    def __str__(self) -> str:
        return "nearest"


@dataclass(frozen=True)
class RationalBackend:
    def __str__(self) -> str:
        return "rational"


@dataclass(frozen=True)
class ScaledBackend:
    frac_digits: int = 40

    def __str__(self) -> str:
        return f"scaled({self.frac_digits})"


Backend = Union[RationalBackend, ScaledBackend]


@dataclass(frozen=True)
class ExactFinal:
    final_mode: RoundingMode = RoundingMode.NEAREST_HALF_UP
    backend: Backend = field(default_factory=ScaledBackend)

    def __str__(self) -> str:
        return f"final-{self.final_mode.value}"


Policy = Union[FloorEachOp, NearestEachOp, ExactFinal]

FLOOR_EACH_OP = FloorEachOp()
NEAREST_EACH_OP = NearestEachOp()

TermValue = Union[int, Fraction, ScaledValue]


@dataclass(frozen=True)
class LedgerRow:
    k: int
    x: TermValue
    sign: int  # +1 for odd k, -1 for even k
    t: TermValue


@dataclass(frozen=True)
class SeriesLedger:
    diameter: int
    policy: Policy
    rows: tuple[LedgerRow, ...]
    odd_sum: TermValue
    even_sum: TermValue
    circumference: TermValue  # odd_sum - even_sum, exact under ExactFinal


def _int_divider(policy: Policy):
    return floor_div if isinstance(policy, FloorEachOp) else nearest_div


def build_ledger(
    diameter: int, policy: Policy, max_terms: int | None = None
) -> SeriesLedger:
    """Evaluate the series row by row and return the full ledger.

    Integer policies stop at the first row whose x value is zero (every
    later term is zero as well); max_terms, if given, truncates earlier.
    ExactFinal has no natural stopping point, so max_terms is required and
    exactly that many rows are produced.
    """
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    if max_terms is not None and max_terms < 1:
        raise DomainError("max_terms must be positive")
    radicand = 12 * diameter * diameter
    if isinstance(policy, ExactFinal):
        if max_terms is None:
            raise DomainError("ExactFinal policy needs an explicit max_terms")
        return _build_exact(diameter, policy, radicand, max_terms)
    div = _int_divider(policy)
    x = isqrt(radicand)[0] if isinstance(policy, FloorEachOp) else isqrt_nearest(radicand)
    rows: list[LedgerRow] = []
    odd = even = 0
    k = 1
    while max_terms is None or k <= max_terms:
        sign = 1 if k % 2 else -1
        t = div(x, 2 * k - 1)
        rows.append(LedgerRow(k, x, sign, t))
        if sign > 0:
            odd += t
        else:
            even += t
        if x == 0:
            break
        x = div(x, 3)
        k += 1
    return SeriesLedger(diameter, policy, tuple(rows), odd, even, odd - even)


def _build_exact(
    diameter: int, policy: ExactFinal, radicand: int, max_terms: int
) -> SeriesLedger:
    backend = policy.backend
    if isinstance(backend, RationalBackend):
        x: TermValue = Fraction(isqrt(radicand)[0])
        odd: TermValue = Fraction(0)
        even: TermValue = Fraction(0)

        def div_by(v, d):
            return v / d

    else:
        x = sqrt_scaled(radicand, backend.frac_digits)
        odd = ScaledValue.from_int(0, backend.frac_digits)
        even = ScaledValue.from_int(0, backend.frac_digits)

        def div_by(v, d):
            return v.div_int(d)

    rows: list[LedgerRow] = []
    for k in range(1, max_terms + 1):
        sign = 1 if k % 2 else -1
        t = div_by(x, 2 * k - 1)
        rows.append(LedgerRow(k, x, sign, t))
        if sign > 0:
            odd = odd + t
        else:
            even = even + t
        x = div_by(x, 3)
    return SeriesLedger(diameter, policy, tuple(rows), odd, even, odd - even)


def round_final(value: TermValue, policy: ExactFinal) -> int:
    """Apply an ExactFinal policy's single final rounding to an exact value."""
    if isinstance(value, ScaledValue):
        return value.round_checked(policy.final_mode)
    return ratio_round(value, policy.final_mode)


def varman_circumference(
    diameter: int, policy: Policy, max_terms: int | None = None
) -> int:
    """The circumference of the ledger as an integer.

    Under ExactFinal this is the one final rounding of O - E; the Scaled
    backend verifies its error bound clears the rounding boundary and
    raises RoundingUndecidableError otherwise.
    """
    ledger = build_ledger(diameter, policy, max_terms)
    if isinstance(policy, ExactFinal):
        return round_final(ledger.circumference, policy)
    return ledger.circumference
