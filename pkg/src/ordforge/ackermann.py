"""The fast-growing hierarchy and the Ackermann dilator.

F_0(n) = n + 1 and F_{b+1}(n) = F_b^{1+n}(n).  Every m below F_b(1) has a
unique normal form as an iterated composition of F_0..F_{b-1} applied to 1,
found greedily.  Relabelling the indices of that form along a morphism of
naturals gives the Ackermann dilator.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .ahat import ZERO, Comp, Zero
from .dilators import Dilator
from .errors import EvalOverflow, OutOfDomain
from .orders import FinMap


@dataclass(frozen=True)
class EvalBudget:
    max_bits: int = 4096
    max_steps: int = 10**6


DEFAULT_BUDGET = EvalBudget()

_memo: dict[tuple[int, int], int] = {}
_MEMO_LIMIT = 200_000


class _Counter:
    __slots__ = ("left",)

    def __init__(self, steps):
        self.left = steps

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise EvalOverflow("step budget exhausted")


def _f2_bits(n: int) -> int:
    return (n + 1) + (n + 1).bit_length()


def _fgh(b: int, n: int, budget: EvalBudget, counter: _Counter) -> int:
    hit = _memo.get((b, n))
    if hit is not None:
        if hit.bit_length() > budget.max_bits:
            raise EvalOverflow(f"F_{b} value exceeds {budget.max_bits} bits")
        return hit
    # closed forms for the bottom three levels; the iteration from level 3 up
    if b == 0:
        v = n + 1
    elif b == 1:
        v = 2 * n + 1
    elif b == 2:
        if _f2_bits(n) > budget.max_bits + 1:
            raise EvalOverflow(f"F_2 of a {n.bit_length()}-bit argument exceeds {budget.max_bits} bits")
        v = ((n + 1) << (n + 1)) - 1
    else:
        v = n
        for _ in range(n + 1):
            counter.tick()
            v = _fgh(b - 1, v, budget, counter)
    if v.bit_length() > budget.max_bits:
        raise EvalOverflow(f"F_{b} of a {n.bit_length()}-bit argument exceeds {budget.max_bits} bits")
    if len(_memo) >= _MEMO_LIMIT:
        _memo.clear()
    _memo[(b, n)] = v
    return v


def fgh_eval(b: int, n: int, budget: EvalBudget = DEFAULT_BUDGET) -> int:
    """F_b(n); raises ``EvalOverflow`` once the bit or step budget is exceeded."""
    if b < 0 or n < 0:
        raise OutOfDomain("F_b(n) needs naturals b and n")
    return _fgh(b, n, budget, _Counter(budget.max_steps))


def fgh_le(b: int, n: int, cap: int):
    """F_b(n) if it is at most ``cap``, else None.

    Never builds numbers much larger than ``cap``: iterates stop as soon as
    they pass it, since F_b is increasing and inflationary.
    """
    if b == 0:
        v = n + 1
    elif b == 1:
        v = 2 * n + 1
    elif b == 2:
        if _f2_bits(n) > cap.bit_length() + 1:
            return None
        v = ((n + 1) << (n + 1)) - 1
    else:
        v = n
        for _ in range(n + 1):
            v = fgh_le(b - 1, v, cap)
            if v is None:
                return None
    return v if v <= cap else None


def fgh_iter(b: int, k: int, n: int, budget: EvalBudget = DEFAULT_BUDGET) -> int:
    """F_b applied k times to n."""
    if b == 0:
        v = n + k
    elif b == 1:
        # F_1^k(n) = 2^k (n + 1) - 1
        if k + (n + 1).bit_length() > budget.max_bits + 1:
            raise EvalOverflow(f"{k}-fold F_1 iterate exceeds {budget.max_bits} bits")
        v = ((n + 1) << k) - 1
    else:
        counter = _Counter(budget.max_steps)
        v = n
        for _ in range(k):
            counter.tick()
            v = _fgh(b, v, budget, counter)
    if v.bit_length() > budget.max_bits:
        raise EvalOverflow(f"value exceeds {budget.max_bits} bits")
    return v


@functools.lru_cache(maxsize=1 << 16)
def ack_nf(m: int):
    """Greedy normal form of m as an ``ahat.Comp`` over the naturals."""
    if m < 0:
        raise OutOfDomain("normal forms are for naturals")
    if m == 0:
        return ZERO
    pairs = []
    cur = 1
    while cur < m:
        b = 0
        while fgh_le(b + 1, cur, m) is not None:
            b += 1
        # largest n with F_b^{1+n}(cur) <= m
        if b == 0:
            n, cur = m - cur - 1, m
        elif b == 1:
            k = ((m + 1) // (cur + 1)).bit_length() - 1
            n, cur = k - 1, ((cur + 1) << k) - 1
        else:
            cur = fgh_le(b, cur, m)
            n = 0
            while (nxt := fgh_le(b, cur, m)) is not None:
                cur, n = nxt, n + 1
        pairs.append((b, ack_nf(n)))
    return Comp(tuple(pairs))


def ack_eval(t, budget: EvalBudget = DEFAULT_BUDGET) -> int:
    """Value of a normal-form term: the composition applied to 1."""
    if isinstance(t, Zero):
        return 0
    v = 1
    for b, e in t.pairs:
        v = fgh_iter(b, 1 + ack_eval(e, budget), v, budget)
    return v


def _relabel(f: FinMap, t):
    if isinstance(t, Zero):
        return t
    return Comp(tuple((f(b), _relabel(f, e)) for b, e in t.pairs))


def _check_domain(b: int, m: int):
    if m < 0 or fgh_le(b, 1, m) is not None:
        raise OutOfDomain(f"{m} is not below F_{b}(1)")


@functools.lru_cache(maxsize=1 << 18)
def _apply_cached(values: tuple, cod: int, m: int, budget: EvalBudget) -> int:
    f = FinMap(values, cod)
    return ack_eval(_relabel(f, ack_nf(m)), budget)


def ack_apply(f: FinMap, m: int, budget: EvalBudget = DEFAULT_BUDGET) -> int:
    _check_domain(f.dom, m)
    return _apply_cached(f.values, f.cod, m, budget)


def ack_supp(b: int, m: int) -> frozenset:
    """Every index occurring in the normal form of m, at any depth."""
    _check_domain(b, m)
    out: set = set()
    stack = [ack_nf(m)]
    while stack:
        t = stack.pop()
        if isinstance(t, Comp):
            for i, e in t.pairs:
                out.add(i)
                stack.append(e)
    return frozenset(out)


class AckermannDilator(Dilator):
    name = "ackermann"

    def __init__(self, budget: EvalBudget = DEFAULT_BUDGET):
        self.budget = budget

    def card(self, b):
        return fgh_eval(b, 1, self.budget)

    def contains(self, b, sigma):
        return isinstance(sigma, int) and sigma >= 0 and fgh_le(b, 1, sigma) is None

    def apply(self, f, sigma):
        return ack_apply(f, sigma, self.budget)

    def supp(self, b, sigma):
        return ack_supp(b, sigma)

    def with_budget(self, budget):
        return AckermannDilator(budget)
