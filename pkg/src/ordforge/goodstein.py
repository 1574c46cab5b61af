"""Goodstein systems, their sequences and the direct limits that witness them.

A system is a non-decreasing base function b with b(0) > 0 together with
strictly increasing coefficient maps c(i): b(i) -> b(i+1).  Given a dilator
D, the sequence starts at some m in D(b(0)) and steps by
``v -> D(c(i))(v) - 1`` until it reaches zero.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Sequence

from .binary import classic_step
from .dilators import BarElement, Dilator, _bar_cmp, bar_apply, mu
from .errors import EvalOverflow, InvalidSystem, OrdforgeError, OutOfDomain
from .orders import DirectLimit, FinMap, OrderSpec, parse_order, sorted_set

# ---------------------------------------------------------------- bases


@dataclass(frozen=True)
class ConstantBase:
    value: int

    def __call__(self, i: int) -> int:
        return self.value


@dataclass(frozen=True)
class AffineBase:
    init: int
    slope: int

    def __call__(self, i: int) -> int:
        return self.init + self.slope * i


@dataclass(frozen=True)
class TableBase:
    """Explicit values for the first stages, then a constant tail."""

    prefix: tuple
    tail: int

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))

    def __call__(self, i: int) -> int:
        return self.prefix[i] if i < len(self.prefix) else self.tail


# ---------------------------------------------------------------- coefficients


@dataclass(frozen=True)
class IdentityCoeff:
    def map(self, i, b_i, b_next) -> FinMap:
        return FinMap(tuple(range(b_i)), b_next)


@dataclass(frozen=True)
class ShiftCoeff:
    amount: int

    def map(self, i, b_i, b_next) -> FinMap:
        return FinMap(tuple(range(self.amount, self.amount + b_i)), b_next)


@dataclass(frozen=True)
class TableCoeff:
    """Explicit maps for the first stages, then ``tail`` takes over."""

    maps: tuple
    tail: object = IdentityCoeff()

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(tuple(m) for m in self.maps))

    def map(self, i, b_i, b_next) -> FinMap:
        if i < len(self.maps):
            if len(self.maps[i]) != b_i:
                raise InvalidSystem(f"c_{i} must have {b_i} entries")
            return FinMap(self.maps[i], b_next)
        return self.tail.map(i, b_i, b_next)


@dataclass(frozen=True)
class FromOrderCoeff:
    """Coefficients induced by the growing unions {star} u a_0 u ... u a_i."""

    order: OrderSpec
    sets: tuple
    star: object

    @functools.cached_property
    def stages(self) -> tuple:
        acc = {self.star}
        out = []
        for a in self.sets:
            acc |= set(a)
            out.append(sorted_set(self.order, acc))
        return tuple(out) or (sorted_set(self.order, acc),)

    def element(self, i: int, n: int):
        """The element of the order that position n of stage i stands for."""
        return self.stages[min(i, len(self.stages) - 1)][n]

    def map(self, i, b_i, b_next) -> FinMap:
        if i + 1 >= len(self.stages):
            return FinMap(tuple(range(b_i)), b_next)
        pos = {x: k for k, x in enumerate(self.stages[i + 1])}
        return FinMap(tuple(pos[x] for x in self.stages[i]), b_next)


@dataclass(frozen=True)
class GoodsteinSystem:
    base: object
    coeff: object = IdentityCoeff()
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def b(self, i: int) -> int:
        return self.base(i)

    def c(self, i: int) -> FinMap:
        f = self._cache.get(i)
        if f is None:
            f = self.coeff.map(i, self.b(i), self.b(i + 1))
            self._cache[i] = f
        return f

    def push(self, i: int, n: int, j: int) -> int:
        """c_ij(n): carry n from stage i to stage j."""
        for s in range(i, j):
            n = self.c(s)(n)
        return n


def validate_system(sys: GoodsteinSystem, horizon: int) -> str | None:
    """Reason the system is malformed within ``horizon`` stages, or None."""
    if sys.b(0) <= 0:
        return "b(0) must be positive"
    for i in range(horizon):
        if sys.b(i + 1) < sys.b(i):
            return f"b decreases at stage {i}"
        try:
            f = sys.c(i)
        except OutOfDomain:
            return f"c_{i} codomain overflow"
        except OrdforgeError as exc:
            return f"c_{i} invalid: {exc}"
        if f.dom != sys.b(i) or f.cod != sys.b(i + 1):
            return f"c_{i} has the wrong shape"
    return None


def system_from_order(X: OrderSpec, sets: Sequence, star) -> GoodsteinSystem:
    """The system that tracks a sequence of finite subsets of X."""
    coeff = FromOrderCoeff(X, tuple(tuple(a) for a in sets), star)
    sizes = tuple(len(s) for s in coeff.stages)
    return GoodsteinSystem(TableBase(sizes[:len(sets)], sizes[-1]), coeff)


def system_from_order_minimal(sets: Sequence) -> GoodsteinSystem:
    """Identity-coefficient variant over the naturals: b(i) is the least
    segment containing a_0 u ... u a_i (and at least 1)."""
    sizes, top = [], 0
    for a in sets:
        top = max([top, *[x + 1 for x in a]])
        sizes.append(max(top, 1))
    sizes = sizes or [1]
    return GoodsteinSystem(TableBase(tuple(sizes[:len(sets)]), sizes[-1]), IdentityCoeff())


# ---------------------------------------------------------------- runs


@dataclass(frozen=True)
class Step:
    i: int
    base: int
    value: int


@dataclass
class RunTrace:
    steps: list
    status: str  # "terminated", "budget" or "overflow"
    at: int | None = None

    @property
    def values(self) -> list:
        return [s.value for s in self.steps]

    def to_json(self) -> dict:
        out = {"status": self.status,
               "steps": [{"i": s.i, "base": s.base, "value": str(s.value)} for s in self.steps]}
        if self.at is not None:
            out["at"] = self.at
        return out


def step(D: Dilator, sys: GoodsteinSystem, i: int, v: int, budget=None) -> int:
    if v == 0:
        return 0
    if budget is not None:
        D = D.with_budget(budget)
    return D.apply(sys.c(i), v) - 1


def run(D: Dilator, sys: GoodsteinSystem, m: int, max_steps: int, budget=None) -> RunTrace:
    if budget is not None:
        D = D.with_budget(budget)
    if not D.contains(sys.b(0), m):
        raise OutOfDomain(f"{m} is not in D(b(0)) = D({sys.b(0)})")
    steps = [Step(0, sys.b(0), m)]
    v = m
    for i in range(max_steps):
        if v == 0:
            return RunTrace(steps, "terminated", i)
        try:
            v = step(D, sys, i, v)
        except EvalOverflow:
            return RunTrace(steps, "overflow", i + 1)
        steps.append(Step(i + 1, sys.b(i + 1), v))
    if v == 0:
        return RunTrace(steps, "terminated", max_steps)
    return RunTrace(steps, "budget")


def classic_run(base, m: int, max_steps: int, max_bits: int | None = None) -> RunTrace:
    """The classical hereditary-base sequence with bases ``base(i)``."""
    steps = [Step(0, base(0), m)]
    v = m
    for i in range(max_steps):
        if v == 0:
            return RunTrace(steps, "terminated", i)
        try:
            v = classic_step(v, base(i), base(i + 1), max_bits)
        except EvalOverflow:
            return RunTrace(steps, "overflow", i + 1)
        steps.append(Step(i + 1, base(i + 1), v))
    if v == 0:
        return RunTrace(steps, "terminated", max_steps)
    return RunTrace(steps, "budget")


# ---------------------------------------------------------------- limits


def direct_limit(sys: GoodsteinSystem, depth: int) -> DirectLimit:
    return DirectLimit(sys, depth)


def witness_map(D: Dilator, sys: GoodsteinSystem, trace: RunTrace) -> list[BarElement]:
    """Each value of a run, moved into the extension of D over the direct limit.

    The result is strictly decreasing while the values are nonzero.
    """
    limit = direct_limit(sys, trace.steps[-1].i)
    out = []
    for s in trace.steps:
        el = mu(D, s.base, s.value)
        out.append(bar_apply(D, functools.partial(limit.embed, s.i), el, limit))
    return out


def witness_descends(D: Dilator, sys: GoodsteinSystem, trace: RunTrace) -> bool:
    limit = direct_limit(sys, trace.steps[-1].i)
    g = witness_map(D, sys, trace)
    for k in range(len(g) - 1):
        if trace.steps[k].value == 0:
            break
        if _bar_cmp(D, limit, g[k + 1], g[k]) >= 0:
            return False
    return True


def is_descending_chain(limit: DirectLimit, chain: Sequence) -> bool:
    """Points with strictly increasing stages and strictly decreasing positions."""
    for p, q in zip(chain, chain[1:]):
        if p[0] >= q[0] or limit._cmp(p, q) <= 0:
            return False
    return all(limit.contains(p) for p in chain)


def descend_search(sys: GoodsteinSystem, depth: int, length: int):
    """A descending chain of ``length`` limit points born at increasing stages.

    Returns the chain that is lexicographically first by (stage, index), or
    None when the truncated limit has no such chain.
    """
    limit = direct_limit(sys, depth)
    pts = sorted(limit.elements(), key=lambda p: (p[0], p[1]))
    if length <= 0:
        return []
    longest: dict = {}
    for p in reversed(pts):
        longest[p] = 1 + max((longest[q] for q in pts
                              if q[0] > p[0] and limit._cmp(p, q) > 0), default=0)
    chain: list = []
    for p in pts:
        need = length - len(chain)
        if need == 0:
            break
        if longest[p] >= need and (not chain or (p[0] > chain[-1][0]
                                                 and limit._cmp(chain[-1], p) > 0)):
            chain.append(p)
    return chain if len(chain) == length else None


# ---------------------------------------------------------------- JSON


def base_from_json(d: dict):
    kind = d.get("kind")
    if kind == "constant":
        return ConstantBase(int(d["value"]))
    if kind == "affine":
        return AffineBase(int(d["init"]), int(d["slope"]))
    if kind == "table":
        return TableBase(tuple(int(x) for x in d["prefix"]), int(d["tail"]))
    raise InvalidSystem(f"unknown base kind {kind!r}")


def coeff_from_json(d: dict):
    kind = d.get("kind")
    if kind == "identity":
        return IdentityCoeff()
    if kind == "shift":
        return ShiftCoeff(int(d["amount"]))
    if kind == "table":
        tail = coeff_from_json(d["tail"]) if "tail" in d else IdentityCoeff()
        return TableCoeff(tuple(tuple(m) for m in d["maps"]), tail)
    raise InvalidSystem(f"unknown coefficient kind {kind!r}")


def system_from_json(d: dict) -> GoodsteinSystem:
    try:
        coeff = d.get("coeff", {"kind": "identity"})
        if coeff.get("kind") == "from-order":
            return system_from_order(parse_order(coeff["order"]),
                                     [tuple(a) for a in coeff["sets"]], coeff["star"])
        return GoodsteinSystem(base_from_json(d["base"]), coeff_from_json(coeff))
    except (KeyError, TypeError, AttributeError) as exc:
        raise InvalidSystem(f"malformed system description: {exc!r}") from None


def parse_base(text: str):
    """``constant:V``, ``affine:INIT,SLOPE`` or ``table:A,B,C/TAIL``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "constant":
            return ConstantBase(int(rest))
        if kind == "affine":
            init, slope = rest.split(",")
            return AffineBase(int(init), int(slope))
        if kind == "table":
            prefix, tail = rest.split("/")
            return TableBase(tuple(int(x) for x in prefix.split(",")), int(tail))
    except ValueError:
        pass
    raise InvalidSystem(f"cannot read base {text!r}")
