"""Four attributed circumference formulas, correction terms, and convergence.

The formulas, for a circle of diameter D:

* F1 -- the root-12 series (delegated to the series ledger engine),
* F2 -- 4D/1 - 4D/3 + ... + (-1)^(n-1) 4D/(2n-1), plus an alternating-sign
        correction term 4D*F(n) appended with sign (-1)^n,
* F3 -- 3D + 4D/(3^3-3) - 4D/(5^3-5) + ...,
* F4 -- 16D/(1^5+4*1) - 16D/(3^5+4*3) + ...

Every term is produced by exactly one rounded division: the numerator is
formed exactly as an integer, divided once by the exact denominator, and
the rounded terms are summed with their signs.  Under ExactFinal policies
the terms stay exact and a single rounding is applied to each partial sum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .exact_arith import (
    DomainError,
    ScaledValue,
    floor_div,
    nearest_div,
    ratio_round,
)
from .series_engine import (
    ExactFinal,
    FloorEachOp,
    NearestEachOp,
    Policy,
    RationalBackend,
    build_ledger,
    round_final,
)


class NoConvergenceError(RuntimeError):
    """Raised when no fixed point is detected within the term budget."""


class UnsupportedFormulaError(DomainError):
    """Raised when an operation does not apply to the given formula."""


class CorrectionId(enum.Enum):
    C1 = "c1"  # F(n) = 1/(4n)
    C2 = "c2"  # F(n) = n/(4n^2+1)
    C3 = "c3"  # F(n) = (n^2+1)/(n(4n^2+5))


@dataclass(frozen=True)
class F1:
    pass


@dataclass(frozen=True)
class F2:
    correction: CorrectionId


@dataclass(frozen=True)
class F3:
    pass


@dataclass(frozen=True)
class F4:
    pass


FormulaId = Union[F1, F2, F3, F4]


def formula_code(formula: FormulaId) -> str:
    return {F1: "f1", F2: "f2", F3: "f3", F4: "f4"}[type(formula)]


def correction_code(formula: FormulaId) -> str:
    return formula.correction.value if isinstance(formula, F2) else ""


@dataclass(frozen=True)
class ComputationResult:
    formula: FormulaId
    diameter: int
    n: int
    policy: Policy
    circumference: int

    def record(self) -> dict:
        """Flat record with exact decimal integers, for CSV/JSON output."""
        return {
            "formula": formula_code(self.formula),
            "correction": correction_code(self.formula),
            "diameter": self.diameter,
            "n": self.n,
            "policy": str(self.policy),
            "circumference": self.circumference,
        }


@dataclass(frozen=True)
class AnalyticVanish:
    def __str__(self) -> str:
        return "analytic-vanish"


@dataclass(frozen=True)
class WindowedScan:
    window: int

    def __str__(self) -> str:
        return f"windowed-scan({self.window})"


@dataclass(frozen=True)
class ConvergenceReport:
    formula: FormulaId
    diameter: int
    policy: Policy
    fixed_value: int
    onset: int
    method: AnalyticVanish | WindowedScan
    max_terms_examined: int


def correction_fraction(correction: CorrectionId, n: int) -> Fraction:
    """The correction F(n) as an exact rational."""
    if n < 1:
        raise DomainError("correction index must be positive")
    if correction is CorrectionId.C1:
        return Fraction(1, 4 * n)
    if correction is CorrectionId.C2:
        return Fraction(n, 4 * n * n + 1)
    return Fraction(n * n + 1, n * (4 * n * n + 5))


def correction_value(
    correction: CorrectionId, n: int, diameter: int, policy: Policy
) -> int | Fraction:
    """4*diameter*F(n) as a single division, rounded per policy.

    Integer policies return the rounded integer; ExactFinal returns the
    exact ratio.
    """
    f = correction_fraction(correction, n)
    numer = 4 * diameter * f.numerator
    denom = f.denominator
    if isinstance(policy, FloorEachOp):
        return floor_div(numer, denom)
    if isinstance(policy, NearestEachOp):
        return nearest_div(numer, denom)
    return Fraction(numer, denom)


def _term_ratio(formula: FormulaId, diameter: int, k: int) -> tuple[int, int]:
    """Exact (numerator, denominator) of the k-th series term."""
    if isinstance(formula, F2):
        return 4 * diameter, 2 * k - 1
    if isinstance(formula, F3):
        b = 2 * k + 1
        return 4 * diameter, b**3 - b
    if isinstance(formula, F4):
        b = 2 * k - 1
        return 16 * diameter, b**5 + 4 * b
    raise UnsupportedFormulaError("F1 terms come from the series ledger")


def _leading(formula: FormulaId, diameter: int) -> int:
    # F3's leading 3D is an exact integer product, never rounded.
    return 3 * diameter if isinstance(formula, F3) else 0


def _validate(diameter: int, n: int) -> None:
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    if n < 1:
        raise DomainError("term count must be positive")


def circumference(
    formula: FormulaId, diameter: int, n: int, policy: Policy
) -> ComputationResult:
    """Evaluate the formula with n terms under the given policy."""
    _validate(diameter, n)
    if isinstance(formula, F1):
        value = _f1_value(diameter, n, policy)
    elif isinstance(policy, (FloorEachOp, NearestEachOp)):
        value = _int_sum(formula, diameter, n, policy)
        if isinstance(formula, F2):
            corr = correction_value(formula.correction, n, diameter, policy)
            value += corr if n % 2 == 0 else -corr
    else:
        value = _exact_value(formula, diameter, n, policy)
    return ComputationResult(formula, diameter, n, policy, value)


def _f1_value(diameter: int, n: int, policy: Policy) -> int:
    ledger = build_ledger(diameter, policy, max_terms=n)
    if isinstance(policy, ExactFinal):
        return round_final(ledger.circumference, policy)
    return ledger.circumference


def _int_sum(formula: FormulaId, diameter: int, n: int, policy: Policy) -> int:
    floor_mode = isinstance(policy, FloorEachOp)
    total = _leading(formula, diameter)
    for k in range(1, n + 1):
        nu, de = _term_ratio(formula, diameter, k)
        t = nu // de if floor_mode else (2 * nu + de) // (2 * de)
        total += t if k % 2 == 1 else -t
    return total


def _exact_value(formula: FormulaId, diameter: int, n: int, policy: ExactFinal) -> int:
    if isinstance(policy.backend, RationalBackend):
        total = Fraction(_leading(formula, diameter))
        for k in range(1, n + 1):
            nu, de = _term_ratio(formula, diameter, k)
            total += Fraction(nu, de) if k % 2 == 1 else -Fraction(nu, de)
        if isinstance(formula, F2):
            corr = correction_value(formula.correction, n, diameter, policy)
            total += corr if n % 2 == 0 else -corr
        return ratio_round(total, policy.final_mode)
    scale = policy.backend.frac_digits
    total = ScaledValue.from_int(_leading(formula, diameter), scale)
    for k in range(1, n + 1):
        nu, de = _term_ratio(formula, diameter, k)
        t = ScaledValue.from_ratio(nu, de, scale)
        total = total + t if k % 2 == 1 else total - t
    if isinstance(formula, F2):
        corr = correction_value(formula.correction, n, diameter, policy)
        cv = ScaledValue.from_ratio(corr.numerator, corr.denominator, scale)
        total = total + cv if n % 2 == 0 else total - cv
    return total.round_checked(policy.final_mode)


def _running_values(
    formula: FormulaId, diameter: int, policy: Policy, n_to: int
) -> Iterator[tuple[int, int]]:
    """Yield (n, circumference) for n = 1..n_to, reusing the partial sum."""
    if isinstance(formula, F1):
        yield from _running_f1(diameter, policy, n_to)
        return
    is_f2 = isinstance(formula, F2)
    if isinstance(policy, (FloorEachOp, NearestEachOp)):
        floor_mode = isinstance(policy, FloorEachOp)
        total = _leading(formula, diameter)
        for k in range(1, n_to + 1):
            nu, de = _term_ratio(formula, diameter, k)
            t = nu // de if floor_mode else (2 * nu + de) // (2 * de)
            total += t if k % 2 == 1 else -t
            value = total
            if is_f2:
                corr = correction_value(formula.correction, k, diameter, policy)
                value += corr if k % 2 == 0 else -corr
            yield k, value
        return
    if isinstance(policy.backend, RationalBackend):
        total = Fraction(_leading(formula, diameter))
        for k in range(1, n_to + 1):
            nu, de = _term_ratio(formula, diameter, k)
            total += Fraction(nu, de) if k % 2 == 1 else -Fraction(nu, de)
            value = total
            if is_f2:
                corr = correction_value(formula.correction, k, diameter, policy)
                value = value + corr if k % 2 == 0 else value - corr
            yield k, ratio_round(value, policy.final_mode)
        return
    scale = policy.backend.frac_digits
    total = ScaledValue.from_int(_leading(formula, diameter), scale)
    for k in range(1, n_to + 1):
        nu, de = _term_ratio(formula, diameter, k)
        t = ScaledValue.from_ratio(nu, de, scale)
        total = total + t if k % 2 == 1 else total - t
        value = total
        if is_f2:
            corr = correction_value(formula.correction, k, diameter, policy)
            cv = ScaledValue.from_ratio(corr.numerator, corr.denominator, scale)
            value = value + cv if k % 2 == 0 else value - cv
        yield k, value.round_checked(policy.final_mode)


def _running_f1(diameter: int, policy: Policy, n_to: int) -> Iterator[tuple[int, int]]:
    ledger = build_ledger(diameter, policy, max_terms=n_to)
    if isinstance(policy, ExactFinal):
        total = None
        for row in ledger.rows:
            signed = row.t if row.sign > 0 else -row.t
            total = signed if total is None else total + signed
            yield row.k, round_final(total, policy)
        return
    total = 0
    last_k = 0
    for row in ledger.rows:
        total += row.sign * row.t
        last_k = row.k
        yield row.k, total
    # Natural termination reached: all later terms are zero.
    for n in range(last_k + 1, n_to + 1):
        yield n, total


def scan_range(
    formula: FormulaId, diameter: int, policy: Policy, n_from: int, n_to: int
) -> list[ComputationResult]:
    """One result per n in [n_from, n_to], computed incrementally."""
    _validate(diameter, n_from)
    if n_to < n_from:
        raise DomainError("scan range must satisfy n_from <= n_to")
    results = []
    for n, value in _running_values(formula, diameter, policy, n_to):
        if n >= n_from:
            results.append(ComputationResult(formula, diameter, n, policy, value))
    return results


def vanish_onset(formula: FormulaId, diameter: int, policy: Policy) -> int:
    """Smallest n whose rounded term is zero, by exact integer comparison.

    Only F3 and F4 have monotonically vanishing terms; F1 terminates
    naturally through its ledger and F2's correction never vanishes.
    """
    if not isinstance(formula, (F3, F4)):
        raise UnsupportedFormulaError(
            f"vanish onset is only defined for f3/f4, not {formula_code(formula)}"
        )
    if not isinstance(policy, (FloorEachOp, NearestEachOp)):
        raise UnsupportedFormulaError("vanish onset needs an integer rounding policy")
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    factor = 1 if isinstance(policy, FloorEachOp) else 2

    def vanished(n: int) -> bool:
        nu, de = _term_ratio(formula, diameter, n)
        return factor * nu < de  # term < 1 (floor) or term < 1/2 (nearest)

    hi = 1
    while not vanished(hi):
        hi *= 2
    lo = hi // 2  # lo is known not-vanished (or 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if vanished(mid):
            hi = mid
        else:
            lo = mid
    return hi


def fixed_point(
    formula: FormulaId,
    diameter: int,
    policy: Policy,
    window: int = 50,
    max_terms: int = 10**4,
) -> ConvergenceReport:
    """Detect the value the series settles on, and from which n.

    Integer policies on F1/F3/F4 use the analytic vanish onset: every term
    from the onset on rounds to zero, so the partial sums are provably
    constant.  All other combinations scan for `window` consecutive equal
    values and report the start of the run; if no such run appears within
    max_terms, NoConvergenceError is raised.
    """
    if window < 1:
        raise DomainError("window must be positive")
    if max_terms < 1:
        raise DomainError("max_terms must be positive")
    if isinstance(policy, (FloorEachOp, NearestEachOp)):
        if isinstance(formula, (F3, F4)):
            onset = vanish_onset(formula, diameter, policy)
            value = circumference(formula, diameter, onset, policy).circumference
            return ConvergenceReport(
                formula, diameter, policy, value, onset, AnalyticVanish(), onset
            )
        if isinstance(formula, F1):
            ledger = build_ledger(diameter, policy)
            onset = ledger.rows[-1].k  # first row with x = 0
            return ConvergenceReport(
                formula, diameter, policy, ledger.circumference, onset,
                AnalyticVanish(), onset,
            )
    run_start = None
    prev = None
    examined = 0
    for n, value in _running_values(formula, diameter, policy, max_terms):
        examined = n
        if value != prev:
            run_start = n
            prev = value
        elif n - run_start >= window:
            return ConvergenceReport(
                formula, diameter, policy, value, run_start, WindowedScan(window), n
            )
    raise NoConvergenceError(
        f"no convergence detected within {examined} terms "
        f"(window {window}); the value kept changing"
    )
