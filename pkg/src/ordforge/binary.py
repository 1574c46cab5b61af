"""The binary dilator and hereditary base-b notation.

The binary dilator sends n to {0..2^n - 1}; a morphism acts on a number by
moving the exponents of its binary expansion.  Hereditary notation is the
representation behind the classical Goodstein sequence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .dilators import Dilator
from .errors import BadBase, EvalOverflow, OutOfDomain
from .orders import FinMap

DEFAULT_MAX_EXPONENT = 10**6


def bin_digits(m: int) -> list[int]:
    """Exponents of the binary expansion of m, largest first."""
    if m < 0:
        raise OutOfDomain("only naturals have binary digits")
    out, e = [], 0
    while m:
        if m & 1:
            out.append(e)
        m >>= 1
        e += 1
    out.reverse()
    return out


def bin_apply(f: FinMap, m: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> int:
    """Rewrite sum 2^(n_i) as sum 2^(f(n_i))."""
    if m < 0 or m.bit_length() > f.dom:
        raise OutOfDomain(f"{m} is not below 2^{f.dom}")
    if f.dom and f.values[-1] > max_exponent:
        top = bin_digits(m)[:1]
        if top and f(top[0]) > max_exponent:
            raise EvalOverflow(f"exponent {f(top[0])} exceeds the cap {max_exponent}")
    total = 0
    for e in bin_digits(m):
        total |= 1 << f(e)
    return total


def bin_supp(n: int, m: int) -> frozenset:
    if m < 0 or m.bit_length() > n:
        raise OutOfDomain(f"{m} is not below 2^{n}")
    return frozenset(bin_digits(m))


class BinaryDilator(Dilator):
    name = "binary"

    def __init__(self, max_exponent: int = DEFAULT_MAX_EXPONENT):
        self.max_exponent = max_exponent

    def card(self, b):
        return 1 << b

    def apply(self, f, sigma):
        return bin_apply(f, sigma, self.max_exponent)

    def supp(self, b, sigma):
        return bin_supp(b, sigma)

    def with_budget(self, budget):
        return BinaryDilator(min(self.max_exponent, budget.max_bits))


# Hereditary notation: a tree is a tuple of (exponent tree, digit) pairs with
# exponents in decreasing order.  The empty tuple stands for zero.
HerTree = tuple


def her_rep(m: int, b: int) -> HerTree:
    if b < 2:
        raise BadBase(f"base must be at least 2, got {b}")
    if m < 0:
        raise OutOfDomain("hereditary notation is for naturals")
    out, e = [], 0
    while m:
        m, d = divmod(m, b)
        if d:
            out.append((her_rep(e, b), d))
        e += 1
    out.reverse()
    return tuple(out)


def her_value(t: HerTree, b: int, max_bits: int | None = None) -> int:
    """Evaluate a hereditary tree with every base replaced by ``b``."""
    if b < 2:
        raise BadBase(f"base must be at least 2, got {b}")
    total = 0
    log_b = math.log2(b)
    for exp_tree, d in t:
        e = her_value(exp_tree, b, max_bits)
        if max_bits is not None and e * log_b > max_bits:
            raise EvalOverflow(f"{b}^{e} exceeds {max_bits} bits")
        total += d * b**e
    if max_bits is not None and total.bit_length() > max_bits:
        raise EvalOverflow(f"value exceeds {max_bits} bits")
    return total


def her_format(t: HerTree, b: int) -> str:
    """Render a tree as nested powers, e.g. ``3^(3^1*2+1)+3^2``."""
    if not t:
        return "0"
    parts = []
    for exp_tree, d in t:
        e = her_format(exp_tree, b)
        if e == "0":
            term = str(d)
        else:
            power = f"{b}^{e}" if e.isdigit() else f"{b}^({e})"
            term = power if d == 1 else f"{power}*{d}"
        parts.append(term)
    return "+".join(parts)


def classic_step(m: int, b: int, b_next: int, max_bits: int | None = None) -> int:
    """Write m in hereditary base b, switch every b to b_next, subtract one."""
    if b_next < b:
        raise BadBase(f"bases must not decrease ({b} -> {b_next})")
    if m == 0:
        return 0
    return her_value(her_rep(m, b), b_next, max_bits) - 1
