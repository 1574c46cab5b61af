from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import cnf_cmp, veb_terms_upto, veb_to_cnf
from ordforge.errors import InvalidTerm
from ordforge.orders import FiniteSegment, Ordering
from ordforge.veblen import (VZERO, Phi, Sum, nodes, veb_add, veb_compare, veb_gen, veb_h,
                             veb_valid)

fin = FiniteSegment
Z = VZERO
ONE = Phi(0, Z)
OMEGA = Phi(0, ONE)


def test_validity_examples():
    assert veb_valid(fin(1), Phi(1, Phi(0, Z)))
    assert not veb_valid(fin(1), Phi(0, Phi(1, Z)))  # argument higher than the index
    assert not veb_valid(fin(0), Sum((ONE,)))
    assert not veb_valid(fin(0), Sum((ONE, OMEGA)))  # summands must not increase
    assert veb_valid(fin(0), Sum((OMEGA, ONE, ONE)))


def test_sum_constructor_flattens():
    assert Sum((Sum((OMEGA, ONE)), ONE)) == Sum((OMEGA, ONE, ONE))


def test_compare_examples():
    X = fin(1)
    assert veb_compare(X, Phi(0, Z), Phi(1, Z)) == Ordering.LESS
    # phi_1 0 is epsilon_0, far above omega^omega
    assert veb_compare(X, Phi(0, OMEGA), Phi(1, Z)) == Ordering.LESS
    assert veb_compare(X, Sum((Phi(1, Z), ONE)), Phi(1, Z)) == Ordering.GREATER
    assert veb_compare(X, Sum((OMEGA, ONE)), Phi(1, Z)) == Ordering.LESS
    with pytest.raises(InvalidTerm):
        veb_compare(X, Phi(0, Phi(1, Z)), Z)


def test_add_examples():
    X = fin(0)
    assert veb_add(X, ONE, OMEGA) == OMEGA
    assert veb_add(X, OMEGA, ONE) == Sum((OMEGA, ONE))
    assert veb_add(X, Z, ONE) == ONE and veb_add(X, ONE, Z) == ONE


def test_height():
    assert veb_h(Phi(3, Z)) == 3 and veb_h(Z) == 0 and veb_h(Sum((ONE, ONE))) == 0


def test_compare_matches_cnf_oracle_up_to_ten_nodes():
    X = fin(0)
    terms = [t for t in veb_terms_upto(10, (0,)) if veb_valid(X, t)]
    values = [veb_to_cnf(t) for t in terms]
    assert len(set(values)) == len(terms)  # distinct valid terms, distinct ordinals
    for (s, a), (t, b) in itertools.product(zip(terms, values), repeat=2):
        assert veb_compare(X, s, t, check=False) == cnf_cmp(a, b)


def test_add_matches_cnf_oracle():
    from oracles import cnf_add
    X = fin(0)
    terms = [t for t in veb_terms_upto(8, (0,)) if veb_valid(X, t)]
    for s, t in itertools.product(terms, repeat=2):
        total = veb_add(X, s, t)
        assert veb_valid(X, total)
        assert veb_to_cnf(total) == cnf_add(veb_to_cnf(s), veb_to_cnf(t))


orders = st.sampled_from([fin(n) for n in range(5)])


@settings(max_examples=300)
@given(orders, st.integers(0, 2**32))
def test_generated_terms_are_valid(X, seed):
    t = veb_gen(X, 14, seed)
    assert veb_valid(X, t) and nodes(t) <= 14


@settings(max_examples=300)
@given(orders, st.integers(0, 2**32))
def test_principal_terms_are_additively_closed(X, seed):
    s, t, p = veb_gen(X, 10, seed), veb_gen(X, 10, seed + 1), veb_gen(X, 10, seed + 2)
    if not isinstance(p, Phi):
        return
    if veb_compare(X, s, p) < 0 and veb_compare(X, t, p) < 0:
        assert veb_compare(X, veb_add(X, s, t), p) < 0


@settings(max_examples=300)
@given(orders, st.integers(0, 2**32))
def test_addition_is_associative_and_monotone_on_the_right(X, seed):
    a, b, c = (veb_gen(X, 8, seed + k) for k in range(3))
    assert veb_add(X, veb_add(X, a, b), c) == veb_add(X, a, veb_add(X, b, c))
    if veb_compare(X, b, c) < 0:
        assert veb_compare(X, veb_add(X, a, b), veb_add(X, a, c)) < 0
