"""Seeded property suites, shared by ``ordforge check`` and the test-suite.

Each property draws random cases, skips those that miss its guard, and counts
violations.  A suite is a list of such properties.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

from . import ahat, embeddings as emb, veblen
from .ackermann import AckermannDilator
from .binary import BinaryDilator
from .dilators import brute_min_support, check_support_criterion
from .orders import FiniteSegment, Naturals, OrderSpec, TwoPlus
from .syntax import format_aterm, format_vterm, parse_aterm, parse_vterm

EMBED_ORDERS = (FiniteSegment(0), FiniteSegment(1), FiniteSegment(2), FiniteSegment(5))


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: int = 0
    example: object = None
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def record(self, passed: bool, case):
        self.cases += 1
        if not passed:
            self.failures += 1
            if self.example is None:
                self.example = case

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        tail = f" first failure: {self.example!r}" if self.example is not None else ""
        return f"{verdict} {self.name}: {self.cases} cases, {self.failures} failures{tail}"


# ---------------------------------------------------------------- lemma predicates

def star_extend_holds(X: OrderSpec, s) -> bool:
    """N(s) <= N(T(s)) + 1 and s[i] = T(s)[i] for i < N(s)."""
    ds = emb.star_data(X, s, check=False)
    dt = emb.star_data(X, emb.T(X, s), check=False)
    if ds.N > dt.N + 1:
        return False
    # index 0 is zero on both sides; compare the explicit slots 1..N(s)-1
    return all(ds.slots[i - 1] == dt.slots[i - 1] for i in range(1, ds.N))


def indices_monotone_holds(X: OrderSpec, s) -> bool:
    """H(s[1]) > ... > H(s[N]) = H(s) in 2+X."""
    d = emb.star_data(X, s, check=False)
    if d.N and d.slots[-1] != s:
        return False
    hs = [emb.H(t) for t in d.slots]
    two = TwoPlus(X)
    return all(two._cmp(hs[i], hs[i + 1]) > 0 for i in range(len(hs) - 1))


def _h2(X, s):
    return emb.split_indices(X, s)[2]


def subterms_descend_holds(X: OrderSpec, s):
    """None when the guard N(T(s)) >= N(s) > 0 fails."""
    ds = emb.star_data(X, s, check=False)
    dt = emb.star_data(X, emb.T(X, s), check=False)
    if not (dt.N >= ds.N > 0):
        return None
    Y = emb.down_target(X)
    t_slot = dt.slots[ds.N - 1]
    return Y._cmp(_h2(X, t_slot), _h2(X, ds.slots[ds.N - 1])) < 0 and ds.slots[ds.N - 1] == s


def h_star_monotone_holds(X: OrderSpec, s, t):
    """None unless T_*(s) = T_*(t), H(s) = H(t) and s <= t."""
    Q = veblen.index_order(X)
    if veblen._cmp(Q, s, t) > 0:
        s, t = t, s
    if emb.t_star(X, s) != emb.t_star(X, t) or emb.H(s) != emb.H(t):
        return None
    return emb.h_star(X, s) <= emb.h_star(X, t)


def reconstruction_holds(X: OrderSpec, s, t) -> bool:
    if s == t:
        return True
    key = lambda u: (emb.H(u), emb.T(X, u), emb.R(X, u))
    return key(s) != key(t)


# ---------------------------------------------------------------- suites

def _orders(rng):
    return EMBED_ORDERS[rng.randrange(len(EMBED_ORDERS))]


def lemma_suite(seed: int = 0, iters: int = 10_000, size: int = 12) -> list[PropertyResult]:
    rng = random.Random(seed)
    star = PropertyResult("lemma star-extend")
    mono = PropertyResult("lemma indices-monotone")
    desc = PropertyResult("lemma subterms-descend")
    hstar = PropertyResult("lemma H-star-monotone")
    recon = PropertyResult("reconstruction (H,T,R) injective")

    for _ in range(iters):
        X = _orders(rng)
        s = veblen.veb_gen(X, size, rng=rng)
        star.record(star_extend_holds(X, s), (X, s))
        mono.record(indices_monotone_holds(X, s), (X, s))
        t = veblen.veb_gen(X, size, rng=rng)
        recon.record(reconstruction_holds(X, s, t), (X, s, t))

    attempts = 0
    while desc.cases < iters and attempts < 50 * iters:
        attempts += 1
        X = _orders(rng)
        s = veblen.veb_gen(X, size, rng=rng)
        verdict = subterms_descend_holds(X, s)
        if verdict is not None:
            desc.record(verdict, (X, s))

    # pairs meeting the guard are rare, so bucket a pool by (T_*, H) first
    buckets: dict = defaultdict(set)
    pool_rounds = 0
    while hstar.cases < iters and pool_rounds < 20:
        pool_rounds += 1
        for _ in range(max(500, iters // 4)):
            X = _orders(rng)
            s = veblen.veb_gen(X, size, rng=rng)
            buckets[(X, emb.t_star(X, s), emb.H(s))].add(s)
        rich = [(k, sorted(v, key=repr)) for k, v in buckets.items() if len(v) > 1]
        if not rich:
            continue
        weights = [len(v) for _, v in rich]
        while hstar.cases < iters:
            (X, _, _), members = rng.choices(rich, weights)[0]
            s, t = rng.sample(members, 2)
            verdict = h_star_monotone_holds(X, s, t)
            if verdict is not None:
                hstar.record(verdict, (X, s, t))
    return [star, mono, desc, hstar, recon]


def embedding_suite(seed: int = 0, iters: int = 10_000, size: int = 12) -> list[PropertyResult]:
    """Strict monotonicity of both embeddings plus validity of their output."""
    rng = random.Random(seed)
    out = []
    for X in EMBED_ORDERS:
        Q = veblen.index_order(X)
        Y = emb.down_target(X)
        up = PropertyResult(f"o_up monotone over {X}")
        down = PropertyResult(f"o_down monotone over {X}")
        while up.cases < iters:
            s, t = ahat.ahat_gen(X, size, rng=rng), ahat.ahat_gen(X, size, rng=rng)
            c = ahat._cmp(X, s, t)
            if c == 0:
                continue
            u, v = emb.o_up(X, s, check=False), emb.o_up(X, t, check=False)
            ok = veblen._cmp(Q, u, v) == c and veblen._valid(Q, u) and veblen._valid(Q, v)
            up.record(ok, (s, t))
        while down.cases < iters:
            s, t = veblen.veb_gen(X, size, rng=rng), veblen.veb_gen(X, size, rng=rng)
            c = veblen._cmp(Q, s, t)
            if c == 0:
                continue
            u, v = emb.o_down(X, s, check=False), emb.o_down(X, t, check=False)
            ok = ahat._cmp(Y, u, v) == c and ahat._valid(Y, u) and ahat._valid(Y, v)
            down.record(ok, (s, t))
        out += [up, down]
    return out


def order_suite(seed: int = 0, iters: int = 10_000, size: int = 10) -> list[PropertyResult]:
    """Trichotomy, antisymmetry and transitivity of both term orders."""
    rng = random.Random(seed)
    orders = [FiniteSegment(n) for n in range(6)] + [Naturals()]
    results = []
    for label, gen, cmp, extra in (
        ("ahat", ahat.ahat_gen, ahat._cmp, lambda X: X),
        ("veblen", veblen.veb_gen, veblen._cmp, veblen.index_order),
    ):
        prop = PropertyResult(f"{label} order is a strict linear order")
        for _ in range(iters):
            X = orders[rng.randrange(len(orders))]
            O = extra(X)
            a, b, c = (gen(X, size, rng=rng) for _ in range(3))
            ab, ba, bc, ac = cmp(O, a, b), cmp(O, b, a), cmp(O, b, c), cmp(O, a, c)
            ok = ab == -ba and (ab == 0) == (a == b)
            if ab <= 0 and bc <= 0:
                ok = ok and ac <= 0 and (ac < 0 or (ab == 0 and bc == 0))
            if ab >= 0 and bc >= 0:
                ok = ok and ac >= 0 and (ac > 0 or (ab == 0 and bc == 0))
            prop.record(ok, (X, a, b, c))
        results.append(prop)
    return results


def syntax_suite(seed: int = 0, iters: int = 10_000, size: int = 12) -> list[PropertyResult]:
    rng = random.Random(seed)
    pa = PropertyResult("aterm parse/format round trip")
    pv = PropertyResult("vterm parse/format round trip")
    for _ in range(iters):
        X = _orders(rng)
        t = ahat.ahat_gen(X, size, rng=rng)
        pa.record(parse_aterm(format_aterm(t)) == t, t)
        v = veblen.veb_gen(X, size, rng=rng)
        pv.record(parse_vterm(format_vterm(v)) == v, v)
        s = emb.o_down(X, v, check=False)
        pa.record(parse_aterm(format_aterm(s)) == s, s)
    return [pa, pv]


def dilator_suite(seed: int = 0, iters: int = 1000, size: int = 0) -> list[PropertyResult]:
    results = []
    for D, max_b in ((BinaryDilator(), 6), (AckermannDilator(), 3)):
        prop = PropertyResult(f"support criterion for the {D.name} dilator")
        verdict = check_support_criterion(D, max_b, samples=iters, seed=seed)
        prop.cases = verdict.checked
        if not verdict.passed:
            prop.failures = 1
            prop.example = (verdict.kind, str(verdict.f), verdict.sigma)
        results.append(prop)
    rng = random.Random(seed)
    prop = PropertyResult("supp agrees with the brute-force minimal support")
    for _ in range(min(iters, 2000)):
        D, n = (BinaryDilator(), rng.randint(0, 8)) if rng.random() < 0.5 else (AckermannDilator(), rng.randint(0, 3))
        sigma = rng.randrange(D.card(n))
        prop.record(brute_min_support(D, n, sigma) == D.supp(n, sigma), (D.name, n, sigma))
    results.append(prop)
    return results


SUITES: dict[str, Callable[..., list[PropertyResult]]] = {
    "lemmas": lemma_suite,
    "embeddings": embedding_suite,
    "orders": order_suite,
    "syntax": syntax_suite,
    "dilators": dilator_suite,
}


def run_suite(name: str, seed: int = 0, iters: int = 10_000) -> list[PropertyResult]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](seed=seed, iters=iters)]
    return SUITES[name](seed=seed, iters=iters)
