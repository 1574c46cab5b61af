from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from ordforge.errors import InvalidElement, NotIncreasing, TermSyntaxError
from ordforge.orders import (DescSeq, FiniteSegment, FinMap, Lift, Naturals, OnePlus, Ordering,
                             Product, TwoPlus, compare, enum_embedding, induced_morphism,
                             parse_order, sorted_set)


def test_compare_examples():
    assert compare(FiniteSegment(5), 1, 3) == Ordering.LESS
    assert compare(OnePlus(FiniteSegment(3)), 0, 1) == Ordering.LESS
    assert compare(Product(Naturals(), Naturals()), (1, 5), (2, 0)) == Ordering.LESS
    assert compare(DescSeq(Naturals()), (3,), (3, 1)) == Ordering.LESS
    assert compare(DescSeq(Naturals()), (2, 1), (3,)) == Ordering.LESS
    with pytest.raises(InvalidElement):
        compare(FiniteSegment(3), 3, 0)


def test_two_plus_bottoms():
    X = TwoPlus(FiniteSegment(2))
    assert X.elements() == [-1, 0, 1, 2]
    assert not X.contains(3) and not X.contains(-2)
    assert X.embed(1) == 2 and X.project(2) == 1


def test_lifted_encoding_for_general_inner_orders():
    X = OnePlus(Product(FiniteSegment(2), FiniteSegment(2)))
    assert X.contains(0) and X.contains(Lift((1, 0))) and not X.contains((1, 0))
    assert X._cmp(0, Lift((0, 0))) < 0
    assert X._cmp(Lift((1, 0)), Lift((0, 1))) > 0
    Y = TwoPlus(Product(FiniteSegment(2), FiniteSegment(2)))
    assert Y.elements()[:3] == [-1, 0, Lift((0, 0))]


def test_desc_seq_over_fin3_has_8_elements_in_lex_order():
    X = DescSeq(FiniteSegment(3))
    els = X.elements()
    assert len(els) == 8 == X.size()
    assert els[0] == () and els[-1] == (2, 1, 0)
    assert all(X._cmp(a, b) < 0 for a, b in zip(els, els[1:]))


def test_sorted_set_rejects_duplicates():
    assert sorted_set(Naturals(), [5, 1, 3]) == (1, 3, 5)
    with pytest.raises(InvalidElement):
        sorted_set(Naturals(), [1, 1])


def test_enum_embedding_and_induced_morphism():
    assert enum_embedding(Naturals(), {7, 2, 4}) == (2, 4, 7)
    f = induced_morphism(Naturals(), {2, 7}, {2, 4, 7})
    assert f == FinMap((0, 2), 3)
    g = induced_morphism(Naturals(), {0, 1}, {5, 6, 9}, lambda x: {0: 5, 1: 9}[x])
    assert g.values == (0, 2)
    with pytest.raises(NotIncreasing):
        induced_morphism(Naturals(), {0, 1}, {5, 6}, lambda x: 6 - x)


def test_finmap_laws():
    f = FinMap((0, 2), 3)
    g = FinMap((1, 2, 4), 5)
    assert g.compose(f) == FinMap((1, 4), 5)
    assert FinMap.identity(3).compose(f) == f
    assert f.preimage(2) == 1 and f.preimage(1) is None
    with pytest.raises(NotIncreasing):
        FinMap((2, 1), 3)


@pytest.mark.parametrize("text", ["fin:3", "nat", "1+fin:2", "2+nat", "(fin:2)x(nat)",
                                  "desc:fin:3", "2+(fin:1)x(1+nat)"])
def test_parse_order_round_trip(text):
    assert str(parse_order(text)) == text


def test_parse_order_rejects_garbage():
    for bad in ["fin:x", "real", "(fin:2", "(nat)y(nat)"]:
        with pytest.raises(TermSyntaxError):
            parse_order(bad)


orders = st.sampled_from([FiniteSegment(6), Naturals(), OnePlus(FiniteSegment(4)),
                          TwoPlus(Naturals()), Product(FiniteSegment(3), Naturals()),
                          DescSeq(FiniteSegment(4))])


@given(orders, st.data())
def test_compare_is_a_linear_order(X, data):
    els = X.elements(bound=5)
    a, b, c = (data.draw(st.sampled_from(els)) for _ in range(3))
    assert X._cmp(a, b) == -X._cmp(b, a)
    assert (X._cmp(a, b) == 0) == (a == b)
    if X._cmp(a, b) <= 0 and X._cmp(b, c) <= 0:
        assert X._cmp(a, c) <= 0


@given(st.sets(st.integers(0, 30), max_size=8), st.sets(st.integers(0, 30), max_size=8))
def test_induced_inclusions_compose(a, extra):
    b = a | extra
    c = b | {31, 32}
    ab = induced_morphism(Naturals(), a, b)
    bc = induced_morphism(Naturals(), b, c)
    assert bc.compose(ab) == induced_morphism(Naturals(), a, c)
