"""Reference implementations that share no code paths with the package.

* ``fgh_direct``: the fast-growing hierarchy straight from its recursion.
* CNF ordinals below epsilon_0, used to evaluate Veblen terms whose only
  index is the bottom one (phi_0 s = omega^s).
* Exhaustive enumerators for small term spaces.
"""
from __future__ import annotations

import functools
import itertools

from ordforge.ahat import ZERO, Comp
from ordforge.orders import FiniteSegment
from ordforge.veblen import VZERO, Phi, Sum


@functools.lru_cache(maxsize=None)
def fgh_direct(b: int, n: int) -> int:
    if b == 0:
        return n + 1
    v = n
    for _ in range(n + 1):
        v = fgh_direct(b - 1, v)
    return v


def compose_value(pairs) -> int:
    """Value of an F-composition given as (index, exponent value) pairs, innermost first."""
    v = 1
    for b, k in pairs:
        for _ in range(1 + k):
            v = fgh_direct(b, v)
    return v


def term_value(t) -> int:
    if t == ZERO:
        return 0
    return compose_value([(b, term_value(e)) for b, e in t.pairs])


# ---------------------------------------------------------------- CNF ordinals
# An ordinal is a tuple of (exponent, coefficient) with exponents descending.

CNF_ZERO: tuple = ()


def cnf_cmp(a, b) -> int:
    for (ea, ca), (eb, cb) in zip(a, b):
        c = cnf_cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a) > len(b)) - (len(a) < len(b))


def cnf_omega_pow(e):
    return ((e, 1),)


def cnf_add(a, b):
    if not b:
        return a
    lead, coeff = b[0]
    kept = [t for t in a if cnf_cmp(t[0], lead) > 0]
    same = [t for t in a if cnf_cmp(t[0], lead) == 0]
    head = [(lead, coeff + sum(c for _, c in same))]
    return tuple(kept + head + list(b[1:]))


def veb_to_cnf(t):
    """Value of a Veblen term over 1+fin:0 (every index is 0, phi_0 s = omega^s)."""
    if t == VZERO:
        return CNF_ZERO
    if isinstance(t, Phi):
        assert t.index == 0
        return cnf_omega_pow(veb_to_cnf(t.arg))
    out = CNF_ZERO
    for p in t.summands:
        out = cnf_add(out, veb_to_cnf(p))
    return out


# ---------------------------------------------------------------- enumerators

def _compositions(total, parts, least=2):
    if parts == 1:
        if total >= least:
            yield (total,)
        return
    for first in range(least, total - least * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, least):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def veb_terms_exact(nodes: int, indices: tuple) -> tuple:
    """Every syntactic Veblen term with exactly ``nodes`` nodes (valid or not)."""
    out = []
    if nodes == 1:
        out.append(VZERO)
    if nodes >= 2:
        for x in indices:
            out.extend(Phi(x, a) for a in veb_terms_exact(nodes - 1, indices))
    for k in range(2, nodes):
        for sizes in _compositions(nodes - 1, k):
            pools = [[p for p in veb_terms_exact(s, indices) if isinstance(p, Phi)] for s in sizes]
            out.extend(Sum(tuple(c)) for c in itertools.product(*pools))
    return tuple(out)


def veb_terms_upto(max_nodes: int, indices: tuple):
    for n in range(1, max_nodes + 1):
        yield from veb_terms_exact(n, indices)


def all_ahat_terms(b: int, is_valid) -> list:
    """Every valid term over fin:b, by closing under one-pair extensions.

    Only practical for b <= 2; the result is sorted by ``term_value``.
    """
    X = FiniteSegment(b)
    found = {ZERO, Comp(())}
    while True:
        pool = list(found)
        new = set()
        for t in pool:
            if t == ZERO:
                continue
            last = t.pairs[-1][0] if t.pairs else b
            for x in range(last):
                for e in pool:
                    cand = Comp(t.pairs + ((x, e),))
                    if cand not in found and is_valid(X, cand):
                        new.add(cand)
        if not new:
            return sorted(found, key=term_value)
        found |= new
