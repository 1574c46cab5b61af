from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from ordforge.binary import (BinaryDilator, bin_apply, bin_digits, bin_supp, classic_step,
                             her_format, her_rep, her_value)
from ordforge.errors import BadBase, EvalOverflow, OutOfDomain
from ordforge.orders import FinMap


def test_digits():
    assert bin_digits(2196) == [11, 7, 4, 2]
    assert bin_digits(0) == []


def test_apply_and_supp_examples():
    assert bin_apply(FinMap((1, 2, 3), 4), 5) == 10
    assert bin_supp(4, 10) == {1, 3}
    with pytest.raises(OutOfDomain):
        bin_apply(FinMap((0, 1), 2), 4)


def test_apply_respects_exponent_cap():
    f = FinMap((0, 10**6 + 1), 10**6 + 2)
    with pytest.raises(EvalOverflow):
        bin_apply(f, 2)
    assert bin_apply(f, 1) == 1


def test_hereditary_examples():
    assert her_value(her_rep(2196, 3), 5) == 48828150
    assert her_value(her_rep(8, 2), 3) == 81
    assert classic_step(2196, 3, 5) == 48828149
    assert classic_step(4, 2, 3) == 26
    assert her_format(her_rep(2196, 3), 3) == "3^(3^1*2+1)+3^2"
    with pytest.raises(BadBase):
        her_rep(5, 1)


def test_her_value_budget():
    with pytest.raises(EvalOverflow):
        her_value(her_rep(2**64, 2), 10, max_bits=100)


@given(st.integers(0, 10**6), st.integers(2, 9))
def test_her_round_trip(m, b):
    assert her_value(her_rep(m, b), b) == m


@given(st.integers(0, 255), st.sets(st.integers(0, 11), min_size=8, max_size=8))
def test_binary_functorial_and_natural(m, image):
    f = FinMap(tuple(sorted(image)), 12)
    g = FinMap(tuple(range(1, 13)), 13)
    D = BinaryDilator()
    assert D.apply(g.compose(f), m) == D.apply(g, D.apply(f, m))
    assert D.supp(12, D.apply(f, m)) == {f(i) for i in D.supp(8, m)}


@given(st.integers(0, 255), st.integers(0, 255), st.sets(st.integers(0, 11), min_size=8, max_size=8))
def test_binary_apply_is_monotone(m, n, image):
    f = FinMap(tuple(sorted(image)), 12)
    assert (m < n) == (bin_apply(f, m) < bin_apply(f, n))
