from __future__ import annotations

import pytest
from hypothesis import assume, given, settings, strategies as st

from oracles import fgh_direct, term_value
from ordforge import ackermann
from ordforge.ackermann import (AckermannDilator, EvalBudget, ack_apply, ack_eval, ack_nf,
                                ack_supp, fgh_eval, fgh_iter, fgh_le)
from ordforge.ahat import ZERO, Comp, ahat_compare, ahat_valid
from ordforge.errors import EvalOverflow, OutOfDomain
from ordforge.orders import FiniteSegment, FinMap, Naturals

# normal forms computed once with the direct-recursion oracle and frozen here
FROZEN_NF = {
    1: Comp(()),
    2: Comp(((0, ZERO),)),
    3: Comp(((1, ZERO),)),
    6: Comp(((1, ZERO), (0, Comp(((0, ZERO),))))),
    7: Comp(((2, ZERO),)),
    10: Comp(((2, ZERO), (0, Comp(((0, ZERO),))))),
    15: Comp(((2, ZERO), (1, ZERO))),
    100: Comp([(2, ZERO), (1, Comp([(0, ZERO)])),
               (0, Comp([(2, ZERO), (1, Comp([])), (0, Comp([(1, ZERO), (0, ZERO)]))]))]),
}


def test_fgh_examples():
    assert fgh_eval(0, 5) == 6
    assert fgh_eval(3, 1) == 2047
    assert fgh_eval(2, 3) == 63
    assert fgh_eval(1, 10) == 21


@pytest.mark.parametrize("b,n", [(b, n) for b in range(3) for n in range(12)] + [(3, 0), (3, 1)])
def test_fgh_matches_direct_recursion(b, n):
    assert fgh_eval(b, n) == fgh_direct(b, n)


def test_fgh_overflow_is_reported():
    with pytest.raises(EvalOverflow):
        fgh_eval(4, 1)
    with pytest.raises(EvalOverflow):
        fgh_eval(3, 2, EvalBudget(max_bits=20))
    ackermann._memo.clear()  # cached values cost no steps
    with pytest.raises(EvalOverflow):
        fgh_eval(4, 0, EvalBudget(max_steps=1))


def test_fgh_le_and_iter():
    assert fgh_le(3, 1, 2047) == 2047 and fgh_le(3, 1, 2046) is None
    assert fgh_le(5, 1, 10**100) is None
    assert fgh_iter(1, 3, 1) == 15 == fgh_direct(1, fgh_direct(1, fgh_direct(1, 1)))


def test_frozen_normal_forms():
    for m, t in FROZEN_NF.items():
        assert ack_nf(m) == t, m
        assert term_value(t) == m


def test_zero_and_values():
    assert ack_nf(0) == ZERO
    assert ack_eval(Comp([(1, ZERO)])) == 3
    assert ack_eval(Comp([(1, ZERO), (0, ack_nf(2))])) == 6


def test_ack_apply_and_supp_examples():
    assert ack_apply(FinMap((0, 2), 3), 6) == 10
    assert ack_supp(3, 7) == {2}
    assert ack_supp(3, 10) == {0, 2}
    with pytest.raises(OutOfDomain):
        ack_apply(FinMap((0, 1), 2), 7)


def test_large_normal_form_round_trips():
    for m in [10**20, 2**300 + 17, fgh_eval(3, 1) ** 3]:
        assert ack_eval(ack_nf(m)) == m
        assert ahat_valid(Naturals(), ack_nf(m))


@settings(max_examples=300)
@given(st.integers(0, 5000), st.integers(0, 5000))
def test_normal_form_order_is_numeric_order(m, n):
    c = ahat_compare(Naturals(), ack_nf(m), ack_nf(n))
    assert c == (m > n) - (m < n)


@settings(max_examples=200)
@given(st.integers(0, 2046), st.sets(st.integers(0, 5), min_size=3, max_size=3))
def test_ackermann_dilator_is_natural(m, image):
    f = FinMap(tuple(sorted(image)), 6)
    D = AckermannDilator()
    g = FinMap((0, 1, 2, 4, 5, 6), 7)
    try:
        v = D.apply(f, m)
        gv = D.apply(g, v)
    except EvalOverflow:
        assume(False)  # relabelling upwards can leave the bit budget
    assert D.supp(6, v) == {f(i) for i in D.supp(3, m)}
    assert D.apply(g.compose(f), m) == gv


def test_apply_by_empty_map_fixes_zero_and_one():
    D = AckermannDilator()
    assert D.apply(FinMap((), 2), 0) == 0
    assert D.apply(FinMap((), 2), 1) == 1
    assert D.card(0) == 2 and D.card(2) == 7
