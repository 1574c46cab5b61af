"""Order embeddings between iterated-function terms and Veblen terms.

``o_up`` sends a term over X to a Veblen term indexed by 1+X.  ``o_down``
goes back, landing in iterated-function terms over (2+X) x N: it peels a
Veblen term into its height H, main subterm T and remainder R, then follows
T until the height rises (the "star" step) to organise the result.

Heights live in 2+X: the extra bottom ``-1`` is the height of zero and sums.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from . import ahat, veblen
from .ahat import ONE, ZERO, Comp
from .errors import InvalidTerm
from .orders import Naturals, OrderSpec, Product, TwoPlus
from .veblen import VZERO, Phi, Sum, VZero

_BOTTOM = -1  # least element of 2+X in both integer and lifted encodings


@functools.lru_cache(maxsize=64)
def down_target(X: OrderSpec) -> Product:
    """The order (2+X) x N that ``o_down`` lands in."""
    return Product(TwoPlus(X), Naturals())


def o_up(X: OrderSpec, t, check: bool = True):
    if check:
        ahat.require_valid(X, t)
    return _o_up(X, t)


@functools.lru_cache(maxsize=1 << 16)
def _o_up(X, t):
    Q = veblen.index_order(X)
    if isinstance(t, ahat.Zero):
        return Phi(Q.bottom, VZERO)
    if not t.pairs:
        return Phi(Q.bottom, Phi(Q.bottom, VZERO))
    x, e = t.pairs[-1]
    inner = _o_up(X, Comp(t.pairs[:-1]))
    return Phi(Q.embed(x), veblen.veb_add(X, inner, _o_up(X, e)))


# Subterm functions.  ``H`` returns a code of 2+X; codes of 1+X are reused.

def H(t):
    return t.index if isinstance(t, Phi) else _BOTTOM


def _tail(t: Sum):
    rest = t.summands[1:]
    return rest[0] if len(rest) == 1 else Sum(rest)


def T(X: OrderSpec, t):
    if isinstance(t, VZero):
        return VZERO
    if isinstance(t, Phi):
        return t.arg
    head, rest = t.summands[0], _tail(t)
    return rest if veblen._cmp(veblen.index_order(X), head, rest) <= 0 else head


def R(X: OrderSpec, t):
    if isinstance(t, (VZero, Phi)):
        return VZERO
    head, rest = t.summands[0], _tail(t)
    return head if veblen._cmp(veblen.index_order(X), head, rest) <= 0 else rest


@dataclass(frozen=True)
class SubtermData:
    H: object
    T: object
    R: object


def subterm_data(X: OrderSpec, s, check: bool = True) -> SubtermData:
    if check:
        veblen.require_valid(X, s)
    return SubtermData(H(s), T(X, s), R(X, s))


@dataclass(frozen=True)
class StarData:
    n_s: int
    T_star: object
    H_star: int
    N: int
    slots: tuple  # slots[i - 1] is s[i]; slots[-1] is s itself


def _h_lt(X, a, b) -> bool:
    return TwoPlus(X)._cmp(a, b) < 0


@functools.lru_cache(maxsize=1 << 16)
def _star(X, s):
    """(n(s), T_*(s), H_*(s)): follow T until the height rises or zero is hit."""
    h = H(s)
    n, cur, same = 0, s, 0
    while not (isinstance(cur, VZero) or _h_lt(X, h, H(cur))):
        if H(cur) == h:
            same += 1
        cur = T(X, cur)
        n += 1
    return n, cur, same


def t_star(X: OrderSpec, s):
    return _star(X, s)[1]


def h_star(X: OrderSpec, s) -> int:
    return _star(X, s)[2]


def star_data(X: OrderSpec, s, check: bool = True) -> StarData:
    if check:
        veblen.require_valid(X, s)
    n_s, ts, hs = _star(X, s)
    chain = [s]
    while not isinstance(chain[-1], VZero):
        chain.append(t_star(X, chain[-1]))
    N = len(chain) - 1
    slots = tuple(reversed(chain[:-1]))
    return StarData(n_s, ts, hs, N, slots)


def split_indices(X: OrderSpec, s) -> tuple:
    """The three (height, k) indices used for ``s`` in ``o_down``: H_0, H_1, H_2."""
    h = H(s)
    return (h, 0), (h, 1), (h, 1 + h_star(X, s))


def o_down(X: OrderSpec, s, check: bool = True):
    if check:
        veblen.require_valid(X, s)
    return _o_down(X, s)


@functools.lru_cache(maxsize=1 << 16)
def _o_down(X, s):
    if isinstance(s, VZero):
        return ONE
    pairs = []
    for slot in star_data(X, s, check=False).slots:
        h0, h1, h2 = split_indices(X, slot)
        pairs.append((h2, ZERO))
        pairs.append((h1, _o_down(X, T(X, slot))))
        pairs.append((h0, _o_down(X, R(X, slot))))
    return Comp(tuple(pairs))


def check_down_valid(X: OrderSpec, s) -> bool:
    """Whether ``o_down(s)`` is a valid term over (2+X) x N."""
    try:
        return ahat.ahat_valid(down_target(X), o_down(X, s))
    except InvalidTerm:
        return False
