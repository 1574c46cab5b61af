"""Terms for the binary Veblen hierarchy indexed by 1+X.

A term is ``VZERO``, a principal term ``Phi(x, s)`` (phi_x applied to s), or
a ``Sum`` of at least two principal terms in weakly decreasing order.
``Phi(x, s)`` is only valid when the height of ``s`` is at most ``x``, which
rules out the fixed-point ambiguity phi_x(phi_y t) = phi_y t for x < y.

Indices are codes of ``OnePlus(X)``; over a segment or the naturals the
index ``0`` is the new bottom and ``x + 1`` stands for ``x`` in X.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .errors import InvalidTerm
from .orders import OnePlus, OrderSpec, Ordering


@dataclass(frozen=True, eq=True)
class VZero:
    def __repr__(self):
        return "VZero"

    def __hash__(self):
        return 1


@dataclass(frozen=True, eq=True)
class Phi:
    index: object
    arg: object

    @functools.cached_property
    def _hash(self):
        return hash((self.index, self.arg))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Phi({self.index!r}, {self.arg!r})"


@dataclass(frozen=True, eq=True)
class Sum:
    summands: tuple

    def __post_init__(self):
        flat = []
        for t in self.summands:
            flat.extend(t.summands if isinstance(t, Sum) else (t,))
        object.__setattr__(self, "summands", tuple(flat))

    @functools.cached_property
    def _hash(self):
        return hash(self.summands)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Sum({list(self.summands)!r})"


VZERO = VZero()
VebTerm = VZero | Phi | Sum


@functools.lru_cache(maxsize=64)
def index_order(X: OrderSpec) -> OnePlus:
    return OnePlus(X)


def nodes(t) -> int:
    if isinstance(t, VZero):
        return 1
    if isinstance(t, Phi):
        return 1 + nodes(t.arg)
    return 1 + sum(nodes(p) for p in t.summands)


def principal_list(t) -> tuple:
    """The summands of ``t``: empty for zero, one entry for a principal term."""
    if isinstance(t, VZero):
        return ()
    if isinstance(t, Phi):
        return (t,)
    return t.summands


def from_list(ps) -> object:
    if not ps:
        return VZERO
    if len(ps) == 1:
        return ps[0]
    return Sum(tuple(ps))


def _cmp(Q: OrderSpec, s, t) -> int:
    if s is t:
        return 0
    ts, tt = type(s), type(t)
    if ts is VZero:
        return 0 if tt is VZero else -1
    if tt is VZero:
        return 1
    if ts is Phi and tt is Phi:
        c = Q._cmp(s.index, t.index)
        if c < 0:
            # phi_x a < phi_y b  iff  a < phi_y b
            return -1 if _cmp(Q, s.arg, t) < 0 else 1
        if c == 0:
            return _cmp(Q, s.arg, t.arg)
        # phi_x a < phi_y b  iff  phi_x a < b
        return -1 if _cmp(Q, s, t.arg) < 0 else 1
    if ts is Sum and tt is Sum:
        for p, q in zip(s.summands, t.summands):
            c = _cmp(Q, p, q)
            if c:
                return c
        return (len(s.summands) > len(t.summands)) - (len(s.summands) < len(t.summands))
    if ts is Sum:
        # principal terms are additively closed: a sum is below p iff its head is
        return -1 if _cmp(Q, s.summands[0], t) < 0 else 1
    return -1 if _cmp(Q, s, t.summands[0]) <= 0 else 1


def _height(Q, t):
    return t.index if isinstance(t, Phi) else Q.bottom


def _valid(Q: OrderSpec, t) -> bool:
    if isinstance(t, VZero):
        return True
    if isinstance(t, Phi):
        if not Q.contains(t.index) or not _valid(Q, t.arg):
            return False
        return Q._cmp(_height(Q, t.arg), t.index) <= 0
    if isinstance(t, Sum):
        ps = t.summands
        if len(ps) < 2 or not all(isinstance(p, Phi) and _valid(Q, p) for p in ps):
            return False
        return all(_cmp(Q, ps[i], ps[i + 1]) >= 0 for i in range(len(ps) - 1))
    return False


def veb_valid(X: OrderSpec, t) -> bool:
    return _valid(index_order(X), t)


def require_valid(X: OrderSpec, t):
    if not veb_valid(X, t):
        raise InvalidTerm(f"{t!r} is not a valid Veblen term over 1+{X}")
    return t


def veb_compare(X: OrderSpec, s, t, check: bool = True) -> Ordering:
    if check:
        require_valid(X, s)
        require_valid(X, t)
    return Ordering(_cmp(index_order(X), s, t))


def veb_h(t):
    """Height: the index of a principal term, the bottom of 1+X otherwise."""
    if isinstance(t, Phi):
        return t.index
    return 0


def veb_add(X: OrderSpec, s, t):
    """Ordinal sum: summands of ``s`` below the head of ``t`` are absorbed."""
    Q = index_order(X)
    u, v = principal_list(s), principal_list(t)
    if not v:
        return s
    if not u:
        return t
    head = v[0]
    keep = 0
    while keep < len(u) and _cmp(Q, u[keep], head) >= 0:
        keep += 1
    return from_list(u[:keep] + v)


def veb_gen(X: OrderSpec, size_cap: int, seed=None, rng: random.Random | None = None):
    """A random valid term with at most ``size_cap`` nodes, built inside out."""
    rng = rng or random.Random(seed)
    Q = index_order(X)
    idx = Q.elements(bound=max(size_cap, 1))
    return _gen(Q, idx, size_cap, rng)


def _gen_principal(Q, idx, cap, rng):
    arg = _gen(Q, idx, cap - 1, rng) if cap > 1 else VZERO
    h = _height(Q, arg)
    choices = [x for x in idx if Q._cmp(h, x) <= 0]
    return Phi(rng.choice(choices), arg)


def _gen(Q, idx, cap, rng):
    if cap < 2 or rng.random() < 0.2:
        return VZERO
    if cap < 5 or rng.random() < 0.6:
        return _gen_principal(Q, idx, cap, rng)
    k = rng.randint(2, max(2, min(4, (cap - 1) // 2)))
    budget = cap - 1
    ps = []
    for i in range(k):
        share = budget - 2 * (k - i - 1)
        p = _gen_principal(Q, idx, rng.randint(2, share), rng)
        budget -= nodes(p)
        ps.append(p)
    ps.sort(key=functools.cmp_to_key(lambda a, b: _cmp(Q, a, b)), reverse=True)
    return Sum(tuple(ps))
