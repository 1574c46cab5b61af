"""Iterated-function terms over a linear order X.

A nonzero term is a composition of labelled fast-growing functions applied to
one.  ``Comp(pairs)`` lists ``(index, exponent)`` pairs innermost first, so
``Comp(((2, ZERO), (0, t)))`` is chi_0^t(chi_2^0(1)).  Valid terms have
strictly decreasing indices along the list and each exponent below the term
formed by the pairs before it.  Over the segment {0..b-1} the terms are in
order-preserving bijection with the numbers below F_b(1).
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Callable

from .errors import InvalidTerm, OutOfDomain
from .orders import OrderSpec, Ordering


@dataclass(frozen=True, eq=True)
class Zero:
    def __repr__(self):
        return "Zero"

    def __hash__(self):
        return 0


@dataclass(frozen=True, eq=True)
class Comp:
    pairs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))

    @functools.cached_property
    def _hash(self):
        return hash(self.pairs)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Comp({list(self.pairs)!r})"


ZERO = Zero()
ONE = Comp(())
AhatTerm = Zero | Comp


def nodes(t) -> int:
    if isinstance(t, Zero):
        return 1
    return 1 + sum(1 + nodes(e) for _, e in t.pairs)


def _cmp(X: OrderSpec, s, t) -> int:
    if s is t:
        return 0
    if isinstance(s, Zero):
        return 0 if isinstance(t, Zero) else -1
    if isinstance(t, Zero):
        return 1
    for (x, a), (y, b) in zip(s.pairs, t.pairs):
        c = X._cmp(x, y)
        if c:
            return c
        c = _cmp(X, a, b)
        if c:
            return c
    return (len(s.pairs) > len(t.pairs)) - (len(s.pairs) < len(t.pairs))


def _valid(X: OrderSpec, t) -> bool:
    if isinstance(t, Zero):
        return True
    if not isinstance(t, Comp):
        return False
    prev = None
    for i, pair in enumerate(t.pairs):
        if len(pair) != 2:
            return False
        x, e = pair
        if not X.contains(x):
            return False
        if prev is not None and X._cmp(x, prev) >= 0:
            return False
        if not _valid(X, e) or _cmp(X, e, Comp(t.pairs[:i])) >= 0:
            return False
        prev = x
    return True


def ahat_valid(X: OrderSpec, t) -> bool:
    return _valid(X, t)


def require_valid(X: OrderSpec, t):
    if not _valid(X, t):
        raise InvalidTerm(f"{t!r} is not a valid term over {X}")
    return t


def ahat_compare(X: OrderSpec, s, t, check: bool = True) -> Ordering:
    if check:
        require_valid(X, s)
        require_valid(X, t)
    return Ordering(_cmp(X, s, t))


def ahat_apply(f: Callable, t):
    """Relabel every index of ``t`` through the order embedding ``f``."""
    if isinstance(t, Zero):
        return t
    return Comp(tuple((f(x), ahat_apply(f, e)) for x, e in t.pairs))


def ahat_supp(t) -> frozenset:
    """All indices occurring anywhere in ``t``."""
    if isinstance(t, Zero):
        return frozenset()
    out = set()
    for x, e in t.pairs:
        out.add(x)
        out |= ahat_supp(e)
    return frozenset(out)


def ahat_gen(X: OrderSpec, size_cap: int, seed=None, rng: random.Random | None = None):
    """A random valid term with at most ``size_cap`` nodes.

    Terms are grown from the inside out: pick a decreasing run of indices,
    then for each pair an exponent strictly below the prefix built so far.
    """
    rng = rng or random.Random(seed)
    elems = X.elements(bound=max(size_cap, 1))
    return _gen(X, elems, size_cap, rng)


def _gen(X, elems, cap, rng):
    if cap < 1 or rng.random() < 0.15:
        return ZERO
    budget = cap - 1
    k = rng.randint(0, min(len(elems), budget // 2))
    idx = sorted(rng.sample(range(len(elems)), k), reverse=True)
    pairs: list = []
    for i, j in enumerate(idx):
        avail = budget - 2 * (k - i - 1) - 1
        e = _below(X, elems, Comp(tuple(pairs)), avail, rng)
        budget -= 1 + nodes(e)
        pairs.append((elems[j], e))
    return Comp(tuple(pairs))


def _below(X, elems, prefix, cap, rng):
    for _ in range(3):
        cand = _gen(X, elems, rng.randint(1, cap), rng)
        if _cmp(X, cand, prefix) < 0:
            return cand
    heads = [Comp(prefix.pairs[:j]) for j in range(len(prefix.pairs))]
    heads = [h for h in heads if nodes(h) <= cap]
    return rng.choice(heads) if heads and rng.random() < 0.7 else ZERO


def mu_iso(b: int, t, budget=None) -> int:
    """The number a term over {0..b-1} denotes (its F-composition value)."""
    from .ackermann import DEFAULT_BUDGET, ack_eval
    from .orders import FiniteSegment

    require_valid(FiniteSegment(b), t)
    return ack_eval(t, budget or DEFAULT_BUDGET)


def mu_inv(b: int, m: int):
    """The term over {0..b-1} denoting ``m``."""
    from .ackermann import ack_nf, fgh_le

    if m < 0 or fgh_le(b, 1, m) is not None:
        raise OutOfDomain(f"{m} is not below F_{b}(1)")
    return ack_nf(m)
