"""Ground-truth circumferences from a fixed 20-place reference value of pi.

The reference is the stored digit string, not a computed constant; a guard
check verifies on every use that its truncation error cannot change the
requested rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import DomainError, RoundingMode, ratio_round

PI_DIGIT_STRING = "3.14159265358979323846"
_PI_INT = int(PI_DIGIT_STRING.replace(".", ""))  # pi * 10**20, truncated
_PLACES = 20

MAX_DIAMETER = 10**18


class InsufficientPrecisionError(DomainError):
    """The stored reference digits cannot decide the requested result."""


@dataclass(frozen=True)
class PiReference:
    digits: str = PI_DIGIT_STRING

    def as_ratio(self, places: int) -> Fraction:
        """Truncation of the reference to `places` fractional digits."""
        if not 0 <= places <= _PLACES:
            raise DomainError(f"places must be in 0..{_PLACES}")
        return Fraction(_PI_INT // 10 ** (_PLACES - places), 10**places)

    def truncated_int(self, places: int) -> int:
        """floor(pi * 10**places) for places <= 20."""
        if not 0 <= places <= _PLACES:
            raise DomainError(f"places must be in 0..{_PLACES}")
        return _PI_INT // 10 ** (_PLACES - places)

    def rounded_int(self, places: int) -> int:
        """round-half-up(pi * 10**places); needs the next digit, so places < 20."""
        if not 0 <= places < _PLACES:
            raise DomainError(f"places must be in 0..{_PLACES - 1}")
        trunc = _PI_INT // 10 ** (_PLACES - places)
        next_digit = _PI_INT // 10 ** (_PLACES - places - 1) % 10
        return trunc + (1 if next_digit >= 5 else 0)


PI = PiReference()


def true_circumference(diameter: int, mode: RoundingMode) -> int:
    """pi * diameter rounded per mode, using the 20-place reference.

    The true product lies in [ref*D, ref*D + D/10**20); both ends must
    round identically, otherwise the stored precision is insufficient.
    """
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    if diameter > MAX_DIAMETER:
        raise InsufficientPrecisionError(
            f"diameter {diameter} exceeds the reference precision cap {MAX_DIAMETER}"
        )
    lo = PI.as_ratio(_PLACES) * diameter
    hi = lo + Fraction(diameter, 10**_PLACES)
    r_lo = ratio_round(lo, mode)
    if r_lo != ratio_round(hi, mode):
        raise InsufficientPrecisionError(
            "reference digits cannot decide the rounding for this diameter"
        )
    return r_lo


def matching_decimal_places(candidate: int, diameter: int) -> int:
    """How many decimal places of candidate/diameter agree with the reference.

    The score is the largest k <= 20 such that either both expansions
    truncate to the same k fractional digits, or candidate/diameter equals
    the reference rounded at exactly k digits.  A candidate whose integer
    part is not 3 scores 0.
    """
    if candidate < 0:
        raise DomainError("candidate must be non-negative")
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    if candidate // diameter != 3:
        return 0
    best = 0
    for k in range(1, _PLACES + 1):
        if candidate * 10**k // diameter == PI.truncated_int(k):
            best = k
        else:
            break
    for k in range(_PLACES - 1, best, -1):
        if candidate * 10**k == PI.rounded_int(k) * diameter:
            best = k
            break
    return best
