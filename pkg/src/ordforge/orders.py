"""Linear orders, finite suborders and the category of natural numbers.

Elements are plain Python values interpreted by the order they are used with:
ints for segments and the naturals, 2-tuples for products, descending tuples
for ``DescSeq`` and ``(stage, index)`` tuples for direct limits.

``OnePlus``/``TwoPlus`` over a segment or the naturals use shifted integers:
the new bottom elements are ``0`` (and ``-1``) and ``x`` becomes ``x + 1``.
Over any other order the new bottoms stay ``0``/``-1`` and inner elements are
wrapped in ``Lift``.  Either way 1+X sits inside 2+X with the same codes.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Callable, Iterable, Sequence

from .errors import InvalidElement, NotIncreasing, OutOfDomain, TermSyntaxError

Elem = Any


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name.lower()


def _sign(a, b) -> int:
    return (a > b) - (a < b)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class Lift:
    """An element of X seen inside 1+X or 2+X, for non-integer X."""

    x: Any


class OrderSpec:
    """Base class for the linear orders used as dilator arguments."""

    finite = False

    def contains(self, x) -> bool:
        raise NotImplementedError

    def _cmp(self, a, b) -> int:
        raise NotImplementedError

    def elements(self, bound: int | None = None) -> list:
        """All elements in increasing order, or an initial chunk when infinite."""
        raise NotImplementedError

    def size(self) -> int | None:
        return None

    def key(self):
        return functools.cmp_to_key(self._cmp)

    def check(self, x):
        if not self.contains(x):
            raise InvalidElement(f"{x!r} is not an element of {self}")
        return x


@dataclass(frozen=True)
class FiniteSegment(OrderSpec):
    n: int
    finite = True

    def contains(self, x) -> bool:
        return _is_int(x) and 0 <= x < self.n

    def _cmp(self, a, b) -> int:
        return (a > b) - (a < b)

    def elements(self, bound=None):
        return list(range(self.n))

    def size(self):
        return self.n

    def __str__(self):
        return f"fin:{self.n}"


@dataclass(frozen=True)
class Naturals(OrderSpec):
    def contains(self, x) -> bool:
        return _is_int(x) and x >= 0

    def _cmp(self, a, b) -> int:
        return (a > b) - (a < b)

    def elements(self, bound=None):
        return list(range(8 if bound is None else bound))

    def __str__(self):
        return "nat"


def _int_coded(order: OrderSpec) -> bool:
    return isinstance(order, (FiniteSegment, Naturals))


class _Lifted(OrderSpec):
    """Shared code for 1+X and 2+X; ``bottoms`` are the new least elements."""

    inner: OrderSpec
    bottoms: tuple[int, ...] = ()

    @property
    def finite(self):  # type: ignore[override]
        return self.inner.finite

    def embed(self, x):
        """Code of the inner element ``x``."""
        if _int_coded(self.inner):
            return x + 1
        return Lift(x)

    def project(self, code):
        """Inner element coded by ``code``; bottoms have no preimage."""
        if _int_coded(self.inner):
            if _is_int(code) and code >= 1:
                return code - 1
        elif isinstance(code, Lift):
            return code.x
        raise InvalidElement(f"{code!r} is not a lifted element of {self}")

    @property
    def bottom(self):
        return self.bottoms[0]

    def contains(self, x) -> bool:
        if _is_int(x) and x in self.bottoms:
            return True
        if _int_coded(self.inner):
            return _is_int(x) and x >= 1 and self.inner.contains(x - 1)
        return isinstance(x, Lift) and self.inner.contains(x.x)

    def _cmp(self, a, b) -> int:
        if _int_coded(self.inner):
            return (a > b) - (a < b)
        la, lb = isinstance(a, Lift), isinstance(b, Lift)
        if la and lb:
            return self.inner._cmp(a.x, b.x)
        if la:
            return 1
        if lb:
            return -1
        return (a > b) - (a < b)

    def elements(self, bound=None):
        return list(self.bottoms) + [self.embed(x) for x in self.inner.elements(bound)]

    def size(self):
        n = self.inner.size()
        return None if n is None else n + len(self.bottoms)


@dataclass(frozen=True)
class OnePlus(_Lifted):
    inner: OrderSpec
    bottoms = (0,)

    def __str__(self):
        return f"1+{self.inner}"


@dataclass(frozen=True)
class TwoPlus(_Lifted):
    inner: OrderSpec
    bottoms = (-1, 0)

    def __str__(self):
        return f"2+{self.inner}"


@dataclass(frozen=True)
class Product(OrderSpec):
    """Lexicographic product: the left coordinate is more significant."""

    left: OrderSpec
    right: OrderSpec

    @property
    def finite(self):  # type: ignore[override]
        return self.left.finite and self.right.finite

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == 2
                and self.left.contains(x[0]) and self.right.contains(x[1]))

    def _cmp(self, a, b) -> int:
        return self.left._cmp(a[0], b[0]) or self.right._cmp(a[1], b[1])

    def elements(self, bound=None):
        return [(x, y) for x in self.left.elements(bound) for y in self.right.elements(bound)]

    def size(self):
        n, m = self.left.size(), self.right.size()
        return None if n is None or m is None else n * m

    def __str__(self):
        return f"({self.left})x({self.right})"


@dataclass(frozen=True)
class DescSeq(OrderSpec):
    """Strictly descending finite sequences, lexicographic, prefixes first."""

    inner: OrderSpec

    @property
    def finite(self):  # type: ignore[override]
        return self.inner.finite

    def contains(self, x) -> bool:
        if not isinstance(x, tuple) or not all(self.inner.contains(y) for y in x):
            return False
        return all(self.inner._cmp(x[i], x[i + 1]) > 0 for i in range(len(x) - 1))

    def _cmp(self, a, b) -> int:
        for x, y in zip(a, b):
            c = self.inner._cmp(x, y)
            if c:
                return c
        return (len(a) > len(b)) - (len(a) < len(b))

    def elements(self, bound=None):
        base = self.inner.elements(bound)
        out = []
        for k in range(len(base) + 1):
            for combo in itertools.combinations(reversed(base), k):
                out.append(combo)
        out.sort(key=self.key())
        return out

    def size(self):
        n = self.inner.size()
        return None if n is None else 2 ** n

    def __str__(self):
        return f"desc:{self.inner}"


@dataclass(frozen=True)
class DirectLimit(OrderSpec):
    """Direct limit of a Goodstein system truncated at stage ``depth``.

    The carrier holds ``(0, n)`` for ``n < b(0)`` and ``(i, n)`` for the
    values ``n`` of ``b(i)`` outside the range of ``c(i-1)``.  ``system`` only
    needs ``b(i)`` and ``c(i)`` (a ``FinMap``).
    """

    system: Any
    depth: int
    finite = True

    def contains(self, x) -> bool:
        if not (isinstance(x, tuple) and len(x) == 2 and _is_int(x[0]) and _is_int(x[1])):
            return False
        i, n = x
        if not 0 <= i <= self.depth or not 0 <= n < self.system.b(i):
            return False
        return i == 0 or n not in self.system.c(i - 1).range

    def push(self, i: int, n: int, k: int) -> int:
        """Image of ``n`` under c(k-1) . ... . c(i)."""
        for s in range(i, k):
            n = self.system.c(s)(n)
        return n

    def _cmp(self, a, b) -> int:
        k = max(a[0], b[0])
        return _sign(self.push(a[0], a[1], k), self.push(b[0], b[1], k))

    def embed(self, j: int, n: int):
        """The limit point representing ``n`` in ``b(j)``."""
        if not 0 <= n < self.system.b(j):
            raise OutOfDomain(f"{n} is not below b({j}) = {self.system.b(j)}")
        while j > 0:
            pre = self.system.c(j - 1).preimage(n)
            if pre is None:
                break
            j, n = j - 1, pre
        return (j, n)

    def elements(self, bound=None):
        pts = [(0, n) for n in range(self.system.b(0))]
        for i in range(1, self.depth + 1):
            rng = self.system.c(i - 1).range
            pts.extend((i, n) for n in range(self.system.b(i)) if n not in rng)
        pts.sort(key=self.key())
        return pts

    def size(self):
        return len(self.elements())

    def __str__(self):
        return f"limit(depth={self.depth})"


def compare(order: OrderSpec, a, b) -> Ordering:
    order.check(a)
    order.check(b)
    return Ordering(order._cmp(a, b))


def sorted_set(order: OrderSpec, a: Iterable) -> tuple:
    """Canonical form of a finite suborder: ascending, duplicates rejected."""
    items = sorted(a, key=order.key())
    for x in items:
        order.check(x)
    for x, y in zip(items, items[1:]):
        if order._cmp(x, y) == 0:
            raise InvalidElement(f"duplicate element {x!r}")
    return tuple(items)


def enum_embedding(order: OrderSpec, a: Iterable) -> tuple:
    """The increasing enumeration of ``a``: position i holds its i-th element."""
    return sorted_set(order, a)


@dataclass(frozen=True)
class FinMap:
    """A strictly increasing map from {0..dom-1} to {0..cod-1}."""

    values: tuple
    cod: int

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if any(not _is_int(v) or not 0 <= v < self.cod for v in vals):
            raise OutOfDomain(f"values {vals} do not fit in codomain {self.cod}")
        if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
            raise NotIncreasing(f"{vals} is not strictly increasing")

    @classmethod
    def identity(cls, n: int) -> "FinMap":
        return cls(tuple(range(n)), n)

    @classmethod
    def inclusion(cls, values: Iterable[int], cod: int) -> "FinMap":
        return cls(tuple(sorted(values)), cod)

    @property
    def dom(self) -> int:
        return len(self.values)

    @functools.cached_property
    def range(self) -> frozenset:
        return frozenset(self.values)

    @functools.cached_property
    def _inverse(self) -> dict:
        return {v: i for i, v in enumerate(self.values)}

    def __call__(self, i: int) -> int:
        return self.values[i]

    def preimage(self, n: int):
        return self._inverse.get(n)

    def compose(self, inner: "FinMap") -> "FinMap":
        """``self`` after ``inner``."""
        if inner.cod != self.dom:
            raise OutOfDomain(f"cannot compose {inner.cod}-codomain with {self.dom}-domain")
        return FinMap(tuple(self.values[v] for v in inner.values), self.cod)

    def __str__(self):
        return f"{self.dom}->{self.cod}:{list(self.values)}"


def induced_morphism(order: OrderSpec, a: Iterable, b: Iterable,
                     f: Callable | None = None) -> FinMap:
    """The map |a| -> |b| induced by an embedding ``f`` of ``a`` into ``b``.

    Without ``f`` this is the inclusion of ``a`` in ``b``.
    """
    sa, sb = sorted_set(order, a), sorted_set(order, b)
    pos = {x: i for i, x in enumerate(sb)}
    images = [x if f is None else f(x) for x in sa]
    for x, y in zip(images, images[1:]):
        if order._cmp(x, y) >= 0:
            raise NotIncreasing(f"{f} does not preserve the order of {sa}")
    try:
        return FinMap(tuple(pos[y] for y in images), len(sb))
    except KeyError as exc:
        raise InvalidElement(f"{exc.args[0]!r} is not in the target set") from None


def inclusion_positions(order: OrderSpec, sub: Sequence, sup: Sequence) -> FinMap:
    """Fast inclusion of one sorted tuple in another (both already canonical)."""
    out, j = [], 0
    for x in sub:
        while order._cmp(sup[j], x) < 0:
            j += 1
        out.append(j)
    return FinMap(tuple(out), len(sup))


def merge_sorted(order: OrderSpec, a: Sequence, b: Sequence) -> tuple:
    """Union of two canonical suborders as a canonical suborder."""
    out, i, j = [], 0, 0
    while i < len(a) and j < len(b):
        c = order._cmp(a[i], b[j])
        if c < 0:
            out.append(a[i])
            i += 1
        elif c > 0:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def parse_order(text: str) -> OrderSpec:
    """Parse ``fin:<n>``, ``nat``, ``1+<o>``, ``2+<o>``, ``(<o>)x(<o>)``, ``desc:<o>``."""
    s = text.strip()
    if s == "nat":
        return Naturals()
    if s.startswith("fin:"):
        digits = s[4:]
        if not digits.isdigit():
            raise TermSyntaxError("expected a segment size", text, 4)
        return FiniteSegment(int(digits))
    if s.startswith("1+"):
        return OnePlus(parse_order(s[2:]))
    if s.startswith("2+"):
        return TwoPlus(parse_order(s[2:]))
    if s.startswith("desc:"):
        return DescSeq(parse_order(s[5:]))
    if s.startswith("("):
        depth = 0
        for i, ch in enumerate(s):
            depth += {"(": 1, ")": -1}.get(ch, 0)
            if depth == 0:
                break
        else:
            raise TermSyntaxError("unbalanced parenthesis", text, len(s))
        rest = s[i + 1:]
        if not rest:
            return parse_order(s[1:i])
        if rest.startswith("x(") and rest.endswith(")"):
            return Product(parse_order(s[1:i]), parse_order(rest[2:-1]))
        raise TermSyntaxError("expected 'x(' after a parenthesised order", text, i + 1)
    raise TermSyntaxError("unknown order literal", text, 0)
