from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ordforge.ackermann import AckermannDilator
from ordforge.binary import BinaryDilator
from ordforge.dilators import (BarElement, Dilator, bar_apply, bar_compare, bar_element,
                               bar_member, brute_min_support, check_support_criterion, eta, mu,
                               preimage)
from ordforge.errors import InvalidElement, TooLarge
from ordforge.orders import DescSeq, FiniteSegment, FinMap, Naturals, Ordering

B = BinaryDilator()
A = AckermannDilator()


class EmptySupportBinary(BinaryDilator):
    """The binary dilator with a deliberately broken support function."""

    def supp(self, b, sigma):
        return frozenset()


class ConstantDilator(Dilator):
    name = "constant"

    def card(self, b):
        return 1

    def apply(self, f, sigma):
        return 0

    def supp(self, b, sigma):
        return frozenset()


def test_brute_min_support_examples():
    assert brute_min_support(B, 3, 5) == {0, 2}
    assert brute_min_support(A, 3, 7) == {2}
    with pytest.raises(TooLarge):
        brute_min_support(B, 13, 0)


def test_support_criterion_examples():
    assert check_support_criterion(B, 6, samples=1000, seed=0)
    assert check_support_criterion(A, 3, samples=1000, seed=0)
    assert check_support_criterion(ConstantDilator(), 5)
    bad = check_support_criterion(EmptySupportBinary(), 5)
    assert not bad.passed
    assert bad.kind == "range" and bad.f == FinMap((), 1) and bad.sigma == 1


def test_bar_compare_examples():
    X = Naturals()
    assert bar_compare(B, X, BarElement((3,), 1), BarElement((5,), 1)) == Ordering.LESS
    assert bar_compare(B, X, BarElement((3, 5), 3), BarElement((5,), 1)) == Ordering.GREATER
    with pytest.raises(InvalidElement):
        bar_compare(B, X, BarElement((3,), 3), BarElement((5,), 1))


def test_eta_mu_examples():
    assert eta(B, 3, BarElement((0, 2), 3)) == 5
    assert mu(B, 4, 2) == BarElement((1,), 1)
    assert mu(A, 3, 10) == BarElement((0, 2), 6)
    assert not bar_member(B, Naturals(), BarElement((0, 2), 1))


def test_preimage_finds_exact_hits_only():
    f = FinMap((1, 3), 4)
    assert preimage(B, f, 10) == 3
    assert preimage(B, f, 4) is None
    assert preimage(A, FinMap((0, 2), 3), 10) == 6


def _binary_desc(el):
    # element (a, 2^k - 1) corresponds to the descending sequence of a
    return tuple(reversed(el.a))


def test_binary_extension_is_lexicographic_descending_sequences():
    X = FiniteSegment(5)
    els = [BarElement(a, 2 ** len(a) - 1) for k in range(6) for a in itertools.combinations(range(5), k)]
    assert all(bar_member(B, X, e) for e in els)
    S = DescSeq(X)
    for p, q in itertools.product(els, repeat=2):
        assert bar_compare(B, X, p, q) == S._cmp(_binary_desc(p), _binary_desc(q))


def test_bar_apply_moves_supports():
    el = bar_element(B, Naturals(), [1, 4], 3)
    moved = bar_apply(B, lambda x: 2 * x, el, Naturals())
    assert moved == BarElement((2, 8), 3)
    with pytest.raises(InvalidElement):
        bar_apply(B, lambda x: 10 - x, el, Naturals())


@settings(max_examples=200)
@given(st.integers(0, 2**12 - 1))
def test_mu_then_eta_is_identity_binary(tau):
    assert eta(B, 12, mu(B, 12, tau)) == tau


@settings(max_examples=100)
@given(st.integers(0, 2**8 - 1), st.sets(st.integers(0, 9), min_size=8, max_size=8))
def test_bar_apply_commutes_with_eta(sigma, image):
    f = FinMap(tuple(sorted(image)), 10)
    el = mu(B, 8, sigma)
    moved = bar_apply(B, f, el, FiniteSegment(10))
    assert eta(B, 10, moved) == B.apply(f, sigma)
