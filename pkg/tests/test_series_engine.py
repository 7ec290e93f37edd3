from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paridhi.exact_arith import DomainError, RoundingMode
from paridhi.series_engine import (
    FLOOR_EACH_OP,
    NEAREST_EACH_OP,
    ExactFinal,
    RationalBackend,
    ScaledBackend,
    build_ledger,
    varman_circumference,
)

D17 = 10**17
FLOOR = RoundingMode.FLOOR
NEAREST = RoundingMode.NEAREST_HALF_UP


class TestFloorLedger:
    def test_row_count(self):
        ledger = build_ledger(D17, FLOOR_EACH_OP)
        assert len(ledger.rows) == 38

    def test_first_row(self):
        row = build_ledger(D17, FLOOR_EACH_OP).rows[0]
        assert row.x == row.t == 346410161513775458
        assert row.sign == 1

    def test_row_seven(self):
        row = build_ledger(D17, FLOOR_EACH_OP).rows[6]
        assert row.k == 7
        assert row.t == 36552723595417

    def test_last_row_is_zero(self):
        row = build_ledger(D17, FLOOR_EACH_OP).rows[-1]
        assert (row.k, row.x, row.t) == (38, 0, 0)

    def test_sums(self):
        ledger = build_ledger(D17, FLOOR_EACH_OP)
        assert ledger.odd_sum == 354623317218212158
        assert ledger.even_sum == 40464051859232834
        assert ledger.circumference == 314159265358979324

    def test_unit_diameter(self):
        ledger = build_ledger(1, FLOOR_EACH_OP)
        assert [(r.k, r.x, r.t) for r in ledger.rows] == [(1, 3, 3), (2, 1, 0), (3, 0, 0)]
        assert ledger.circumference == 3

    def test_recurrence_invariants(self):
        ledger = build_ledger(D17, FLOOR_EACH_OP)
        for prev, row in zip(ledger.rows, ledger.rows[1:]):
            assert row.x == prev.x // 3
        for row in ledger.rows:
            assert row.t == row.x // (2 * row.k - 1)
            assert row.sign == (1 if row.k % 2 else -1)

    def test_max_terms_truncates(self):
        ledger = build_ledger(D17, FLOOR_EACH_OP, max_terms=5)
        assert len(ledger.rows) == 5


class TestNearestLedger:
    def test_seed_and_sums(self):
        ledger = build_ledger(D17, NEAREST_EACH_OP)
        assert ledger.rows[0].x == 346410161513775459
        assert ledger.odd_sum == 354623317218212169
        assert ledger.even_sum == 40464051859232844

    def test_circumference(self):
        assert varman_circumference(D17, NEAREST_EACH_OP) == 314159265358979325


class TestExactFinal:
    def test_scaled_floor(self):
        policy = ExactFinal(FLOOR, ScaledBackend(40))
        assert varman_circumference(D17, policy, 38) == 314159265358979323

    def test_scaled_nearest(self):
        policy = ExactFinal(NEAREST, ScaledBackend(40))
        assert varman_circumference(D17, policy, 38) == 314159265358979324

    def test_rational_floor(self):
        policy = ExactFinal(FLOOR, RationalBackend())
        assert varman_circumference(D17, policy, 38) == 314159265358979323

    def test_rational_value_is_not_a_32nd(self):
        # an integer seed divided by 3 and odd numbers can never produce a
        # fraction with even denominator, so .84375 = 27/32 is unreachable
        ledger = build_ledger(D17, ExactFinal(FLOOR, RationalBackend()), 38)
        value = ledger.circumference
        assert isinstance(value, Fraction)
        assert value.denominator % 2 == 1
        assert value - (value.numerator // value.denominator) != Fraction(27, 32)

    def test_requires_max_terms(self):
        with pytest.raises(DomainError):
            build_ledger(D17, ExactFinal(FLOOR, RationalBackend()))

    def test_ledger_invariants(self):
        ledger = build_ledger(D17, ExactFinal(FLOOR, RationalBackend()), 38)
        assert ledger.circumference == ledger.odd_sum - ledger.even_sum
        for prev, row in zip(ledger.rows, ledger.rows[1:]):
            assert row.x == prev.x / 3
        for row in ledger.rows:
            assert row.t == row.x / (2 * row.k - 1)


def test_diameter_must_be_positive():
    with pytest.raises(DomainError):
        build_ledger(0, FLOOR_EACH_OP)


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=10**24))
def test_termination_bound(diameter):
    # x strictly shrinks by ~1/3 per row, so the ledger is short
    ledger = build_ledger(diameter, FLOOR_EACH_OP)
    x1 = ledger.rows[0].x
    bound = 2
    while 3**(bound - 2) <= x1:
        bound += 1
    assert len(ledger.rows) <= bound
    assert ledger.rows[-1].x == 0


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=10**24))
def test_monotone_policy_bound(diameter):
    floor_rows = build_ledger(diameter, FLOOR_EACH_OP).rows
    nearest_rows = build_ledger(diameter, NEAREST_EACH_OP).rows
    for f, n in zip(floor_rows, nearest_rows):
        assert f.t <= n.t <= f.t + f.k


@settings(max_examples=60)
@given(
    st.integers(min_value=1, max_value=10**12),
    st.integers(min_value=3, max_value=30),
)
def test_alternating_bracketing(diameter, terms):
    # proper prefixes ending on an odd row overshoot the full value,
    # prefixes ending on an even row undershoot it
    ledger = build_ledger(diameter, ExactFinal(FLOOR, RationalBackend()), terms)
    full = ledger.circumference
    partial = Fraction(0)
    for row in ledger.rows[:-1]:
        partial += row.sign * row.t
        if row.sign > 0:
            assert partial > full
        else:
            assert partial < full
