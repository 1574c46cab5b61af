"""Dilators on the naturals and their extension to arbitrary linear orders.

A dilator here is an object with ``card``, ``apply`` and ``supp``:

* ``card(b)`` is the size of D(b) (``None`` when D(b) is all of the naturals),
* ``apply(f, sigma)`` is D(f)(sigma) for a ``FinMap`` f,
* ``supp(b, sigma)`` is the support of sigma as a subset of {0..b-1}.

The extension to an order X consists of ``BarElement(a, sigma)`` where ``a``
is a finite suborder of X and sigma has full support in D(|a|).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import (EvalOverflow, InternalInconsistency, InvalidElement,
                     TooLarge)
from .orders import (FinMap, OrderSpec, Ordering, inclusion_positions,
                     merge_sorted, sorted_set)


class Dilator:
    name = "dilator"

    def card(self, b: int) -> int | None:
        raise NotImplementedError

    def apply(self, f: FinMap, sigma: int) -> int:
        raise NotImplementedError

    def supp(self, b: int, sigma: int) -> frozenset:
        raise NotImplementedError

    def with_budget(self, budget) -> "Dilator":
        return self

    def contains(self, b: int, sigma) -> bool:
        if not isinstance(sigma, int) or sigma < 0:
            return False
        n = self.card(b)
        return n is None or sigma < n

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class BarElement:
    """An element of the extended dilator: a support set and a full-support value."""

    a: tuple
    sigma: int


def preimage(D: Dilator, f: FinMap, tau: int):
    """The sigma in D(dom f) with D(f)(sigma) == tau, or None.

    D(f) is strictly increasing from an initial segment of the naturals, so
    D(f)(x) >= x and the search can stop at tau.  Probing gallops up from 0 so
    that dilators with fast-growing values only ever see small arguments.
    """
    try:
        n = D.card(f.dom)
    except EvalOverflow:
        n = None
    top = tau if n is None else min(tau, n - 1)
    if top < 0:
        return None

    def at(x):
        try:
            return D.apply(f, x)
        except EvalOverflow:
            return None  # beyond the budget, so certainly above tau

    def below(x):
        v = at(x)
        return v is not None and v < tau

    lo, step = 0, 1
    if not below(0):
        return 0 if at(0) == tau else None
    # invariant: below(lo) holds
    while lo + step <= top and below(lo + step):
        lo += step
        step *= 2
    hi = min(lo + step, top + 1)  # first candidate not known to be below
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if below(mid):
            lo = mid
        else:
            hi = mid
    if hi <= top and at(hi) == tau:
        return hi
    return None


def in_range(D: Dilator, f: FinMap, tau: int) -> bool:
    return preimage(D, f, tau) is not None


def brute_min_support(D: Dilator, n: int, sigma: int, cap: int = 12) -> frozenset:
    """Least set a such that sigma lies in the range of D(a -> n).

    Uses only ``apply``; this is the reference the ``supp`` functions are
    checked against.
    """
    if n > cap:
        raise TooLarge(f"exhaustive support search is capped at n = {cap}")
    if not D.contains(n, sigma):
        raise InvalidElement(f"{sigma} is not in D({n})")
    for k in range(n + 1):
        for subset in itertools.combinations(range(n), k):
            if in_range(D, FinMap(subset, n), sigma):
                return frozenset(subset)
    raise InternalInconsistency(f"{sigma} is not even in the range of the identity")


@dataclass
class SupportCheck:
    passed: bool
    kind: str = ""
    f: FinMap | None = None
    sigma: int | None = None
    checked: int = 0

    def __bool__(self):
        return self.passed


def _elements(D: Dilator, b: int, cap: int):
    n = D.card(b)
    return range(cap if n is None else min(n, cap))


def check_support_criterion(D: Dilator, max_b: int, samples: int = 1000, seed: int = 0,
                            exhaustive_limit: int = 20000, value_cap: int = 4096) -> SupportCheck:
    """Test naturality of ``supp`` and the range criterion.

    Small cases are enumerated in a fixed order first (so the reported witness
    is the earliest failure), then ``samples`` random cases are drawn.
    Values above ``value_cap`` are never visited.
    """

    def naturality(f, sigma):
        image = D.supp(f.cod, D.apply(f, sigma))
        return image == frozenset(f(i) for i in D.supp(f.dom, sigma))

    def range_ok(f, tau):
        if not D.supp(f.cod, tau) <= f.range:
            return True
        return in_range(D, f, tau)

    checked = 0
    for n in range(max_b + 1):
        for m in range(n + 1):
            for subset in itertools.combinations(range(n), m):
                f = FinMap(subset, n)
                for sigma in _elements(D, m, value_cap):
                    if checked >= exhaustive_limit:
                        break
                    checked += 1
                    if not naturality(f, sigma):
                        return SupportCheck(False, "naturality", f, sigma, checked)
                for tau in _elements(D, n, value_cap):
                    if checked >= exhaustive_limit:
                        break
                    checked += 1
                    if not range_ok(f, tau):
                        return SupportCheck(False, "range", f, tau, checked)

    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(0, max_b)
        m = rng.randint(0, n)
        f = FinMap(tuple(sorted(rng.sample(range(n), m))), n)
        sigma = rng.choice(_elements(D, m, value_cap))
        tau = rng.choice(_elements(D, n, value_cap))
        checked += 2
        if not naturality(f, sigma):
            return SupportCheck(False, "naturality", f, sigma, checked)
        if not range_ok(f, tau):
            return SupportCheck(False, "range", f, tau, checked)
    return SupportCheck(True, checked=checked)


def bar_member(D: Dilator, X: OrderSpec, el: BarElement) -> bool:
    a = el.a
    if not isinstance(a, tuple) or not all(X.contains(x) for x in a):
        return False
    if any(X._cmp(a[i], a[i + 1]) >= 0 for i in range(len(a) - 1)):
        return False
    if not D.contains(len(a), el.sigma):
        return False
    return D.supp(len(a), el.sigma) == frozenset(range(len(a)))


def bar_element(D: Dilator, X: OrderSpec, a: Iterable, sigma: int) -> BarElement:
    el = BarElement(sorted_set(X, a), sigma)
    if not bar_member(D, X, el):
        raise InvalidElement(f"{el} is not an element of the extension over {X}")
    return el


def _bar_cmp(D: Dilator, X: OrderSpec, p: BarElement, q: BarElement) -> int:
    union = merge_sorted(X, p.a, q.a)
    u = D.apply(inclusion_positions(X, p.a, union), p.sigma)
    v = D.apply(inclusion_positions(X, q.a, union), q.sigma)
    return (u > v) - (u < v)


def bar_compare(D: Dilator, X: OrderSpec, p: BarElement, q: BarElement,
                check: bool = True) -> Ordering:
    if check:
        for el in (p, q):
            if not bar_member(D, X, el):
                raise InvalidElement(f"{el} is not an element of the extension over {X}")
    return Ordering(_bar_cmp(D, X, p, q))


def bar_apply(D: Dilator, f: Callable, el: BarElement, Y: OrderSpec) -> BarElement:
    """Push an element along an order embedding ``f`` into ``Y``."""
    a = tuple(f(x) for x in el.a)
    for x in a:
        Y.check(x)
    for x, y in zip(a, a[1:]):
        if Y._cmp(x, y) >= 0:
            raise InvalidElement("the map does not preserve the order of the support")
    return BarElement(a, el.sigma)


def eta(D: Dilator, n: int, el: BarElement) -> int:
    """Collapse an element over the segment {0..n-1} back into D(n)."""
    return D.apply(FinMap(el.a, n), el.sigma)


def mu(D: Dilator, n: int, tau: int) -> BarElement:
    """Inverse of ``eta``: split tau into its support and a full-support value."""
    if not D.contains(n, tau):
        raise InvalidElement(f"{tau} is not in D({n})")
    a = tuple(sorted(D.supp(n, tau)))
    sigma = preimage(D, FinMap(a, n), tau)
    if sigma is None:
        raise InternalInconsistency(f"{tau} is not in the range of its own support in D({n})")
    return BarElement(a, sigma)
