"""Gröbner bases and ideal operations.

The engine is Buchberger's algorithm with the Gebauer–Möller update and the
normal pair-selection strategy.  Internally a basis element is a pair
``(leading monomial, term dict)`` with leading coefficient 1.
"""

from __future__ import annotations

import heapq
import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from operator import add, sub
from typing import Iterable, Sequence

from .polyring import Polynomial, RingSpec, TermOrder, w_degree

__all__ = [
    "Budget",
    "BudgetExceeded",
    "Ideal",
    "GroebnerBasis",
    "groebner",
    "normal_form",
    "ideal_contains",
    "ideals_equal",
    "eliminate",
    "intersect",
    "ideal_quotient",
    "ideal_quotient_ideal",
    "radical_membership",
    "krull_dimension",
    "minimal_generators",
    "is_groebner",
    "s_polynomial",
]


class BudgetExceeded(RuntimeError):
    """A Gröbner computation hit a configured resource limit."""


@dataclass(frozen=True)
class Budget:
    """Hard resource limits for one Gröbner computation (``None`` = unlimited)."""

    max_pairs: int | None = None
    max_basis: int | None = None
    max_seconds: float | None = None

    @staticmethod
    def from_env(var: str = "GRADLOCI_BUDGET") -> "Budget":
        raw = os.environ.get(var)
        return Budget(max_pairs=int(raw)) if raw else Budget()


_default_budget = Budget()


def set_default_budget(budget: Budget) -> None:
    global _default_budget
    _default_budget = budget


def get_default_budget() -> Budget:
    return _default_budget


# ---------------------------------------------------------------------------
# monomial helpers


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _mask(m):
    r = 0
    for i, e in enumerate(m):
        if e:
            r |= 1 << i
    return r


def _negate(k):
    if isinstance(k, tuple):
        return tuple(_negate(x) for x in k)
    return -k


class _Ctx:
    """Per-(ring, order) helpers: sort key and its negation for max-heaps."""

    def __init__(self, ring: RingSpec, order: TermOrder):
        self.ring = ring
        self.order = order
        self.key = order.key(ring.n)
        self._neg: dict = {}
        self.one = ring.domain.one
        # monotonic time after which long reductions give up
        self.deadline: float | None = None

    def negkey(self, m):
        v = self._neg.get(m)
        if v is None:
            v = self._neg[m] = _negate(self.key(m))
        return v

    def lm(self, terms):
        return max(terms, key=self.key)


def _reduce(terms: dict, basis: Sequence, ctx: _Ctx, full: bool = True) -> dict:
    """Remainder of ``terms`` modulo ``basis`` (list of ``(lm, mask, terms)``)."""
    f = dict(terms)
    if not f or not basis:
        return f
    negkey = ctx.negkey
    heap = [(negkey(m), m) for m in f]
    heapq.heapify(heap)
    rem: dict = {}
    deadline = ctx.deadline
    steps = 0
    while heap:
        if deadline is not None:
            steps += 1
            if not steps & 255 and time.monotonic() > deadline:
                raise BudgetExceeded("time limit reached during a reduction")
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        mm = _mask(m)
        red = None
        for g in basis:
            if not (g[1] & ~mm) and _divides(g[0], m):
                red = g
                break
        if red is None:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
            continue
        glm, _, gt = red
        q = tuple(map(sub, m, glm))
        for gm, gc in gt.items():
            if gm == glm:
                continue
            nm = tuple(map(add, gm, q))
            v = f.get(nm)
            if v is None:
                f[nm] = -c * gc
                heapq.heappush(heap, (negkey(nm), nm))
            else:
                v = v - c * gc
                if v:
                    f[nm] = v
                else:
                    del f[nm]
    return rem


def _monic(terms: dict, ctx: _Ctx):
    lm = ctx.lm(terms)
    lc = terms[lm]
    if lc != ctx.one:
        inv = ctx.one / lc
        terms = {m: c * inv for m, c in terms.items()}
    return lm, terms


def _spoly(a, b, ctx: _Ctx) -> dict:
    (la, ta), (lb, tb) = a, b
    l = _lcm(la, lb)
    qa = tuple(map(sub, l, la))
    qb = tuple(map(sub, l, lb))
    out = {tuple(map(add, m, qa)): c for m, c in ta.items() if m != la}
    for m, c in tb.items():
        if m == lb:
            continue
        nm = tuple(map(add, m, qb))
        v = out.get(nm)
        if v is None:
            out[nm] = -c
        else:
            v = v - c
            if v:
                out[nm] = v
            else:
                del out[nm]
    return out


# ---------------------------------------------------------------------------
# Buchberger


@dataclass
class GBStats:
    pairs_processed: int = 0
    zero_reductions: int = 0
    seconds: float = 0.0


def _buchberger(gens: Iterable[dict], ctx: _Ctx, budget: Budget, degree_bound=None, stats=None):
    start = time.monotonic()
    if budget.max_seconds is not None:
        ctx.deadline = start + budget.max_seconds
    order = ctx.order
    polys: list = []  # (lm, terms)
    masks: list = []
    G: list = []  # active indices
    pairs: dict = {}  # (i, j) -> lcm
    heap: list = []
    truncated = False

    deg = order.degree
    graded = order.kind in ("degrevlex", "wdegrevlex")

    def sel_key(l):
        # smallest lcm first; under a graded order its degree leads the key,
        # which is what degree truncation reads
        return (deg(l) if graded else 0, ctx.key(l))

    def basis_view():
        return [(polys[i][0], masks[i], polys[i][1]) for i in G]

    view_cache = [None]

    def current_basis():
        if view_cache[0] is None:
            view_cache[0] = basis_view()
        return view_cache[0]

    def update(ih):
        nonlocal G
        mh = polys[ih][0]
        C = list(G)
        D: list = []
        while C:
            ig = C.pop(0)
            mg = polys[ig][0]
            lhg = _lcm(mh, mg)
            if _coprime(mh, mg):
                D.append(ig)
                continue
            dominated = any(_divides(_lcm(mh, polys[x][0]), lhg) for x in C) or any(
                _divides(_lcm(mh, polys[x][0]), lhg) for x in D
            )
            if not dominated:
                D.append(ig)
        E = [ig for ig in D if not _coprime(mh, polys[ig][0])]
        for key in list(pairs):
            i, j = key
            l12 = pairs[key]
            if _divides(mh, l12) and _lcm(polys[i][0], mh) != l12 and _lcm(polys[j][0], mh) != l12:
                del pairs[key]
        for ig in E:
            l = _lcm(mh, polys[ig][0])
            key = (min(ig, ih), max(ig, ih))
            pairs[key] = l
            heapq.heappush(heap, (sel_key(l), key))
        G = [ig for ig in G if not _divides(mh, polys[ig][0])] + [ih]
        view_cache[0] = None

    def add_poly(lm, terms):
        polys.append((lm, terms))
        masks.append(_mask(lm))
        update(len(polys) - 1)

    # inputs: monic, sorted ascending, each reduced by the previous ones
    items = []
    for t in gens:
        if t:
            items.append(_monic(dict(t), ctx))
    items.sort(key=lambda p: ctx.key(p[0]))
    for lm, t in items:
        r = _reduce(t, current_basis(), ctx)
        if not r:
            continue
        lm, r = _monic(r, ctx)
        if not any(lm):
            return [((0,) * ctx.ring.n, {lm: ctx.one})], False
        add_poly(lm, r)

    while heap:
        skey, key = heapq.heappop(heap)
        if key not in pairs:
            continue
        l = pairs.pop(key)
        if degree_bound is not None and skey[0] > degree_bound:
            truncated = True
            pairs[key] = l  # keep it pending; nothing more below the bound
            break
        if stats is not None:
            stats.pairs_processed += 1
        if budget.max_pairs is not None and (stats.pairs_processed if stats else 0) > budget.max_pairs:
            raise BudgetExceeded(f"more than {budget.max_pairs} S-pairs")
        if budget.max_seconds is not None and time.monotonic() - start > budget.max_seconds:
            raise BudgetExceeded(f"exceeded {budget.max_seconds}s")
        i, j = key
        s = _spoly(polys[i], polys[j], ctx)
        r = _reduce(s, current_basis(), ctx)
        if not r:
            if stats is not None:
                stats.zero_reductions += 1
            continue
        lm, r = _monic(r, ctx)
        if not any(lm):
            return [((0,) * ctx.ring.n, {lm: ctx.one})], False
        add_poly(lm, r)
        if budget.max_basis is not None and len(G) > budget.max_basis:
            raise BudgetExceeded(f"basis grew beyond {budget.max_basis} elements")

    if stats is not None:
        stats.seconds = time.monotonic() - start
    # minimal then reduced
    basis = [polys[i] for i in G]
    basis = [p for p in basis if not any(q is not p and _divides(q[0], p[0]) for q in basis)]
    out = []
    for idx, (lm, t) in enumerate(basis):
        others = [(q[0], _mask(q[0]), q[1]) for k, q in enumerate(basis) if k != idx]
        tail = {m: c for m, c in t.items() if m != lm}
        tail = _reduce(tail, others, ctx)
        tail[lm] = ctx.one
        out.append((lm, tail))
    out.sort(key=lambda p: ctx.key(p[0]))
    return out, truncated


# ---------------------------------------------------------------------------
# public types


@dataclass
class GroebnerBasis:
    """A reduced (possibly degree-truncated) Gröbner basis."""

    ring: RingSpec
    order: TermOrder
    elements: list
    reduced: bool = True
    truncated_at: int | None = None
    stats: GBStats = field(default_factory=GBStats)

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant() and bool(self.elements[0])

    @property
    def is_zero(self) -> bool:
        return not self.elements

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def _view(self):
        return [(lm, _mask(lm), g.terms) for lm, g in zip(self.leading_monomials(), self.elements)]

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("ring mismatch")
        ctx = _Ctx(self.ring, self.order)
        return Polynomial._raw(self.ring, _reduce(f.terms, self._view(), ctx))

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


class Ideal:
    """An ideal of a :class:`RingSpec`, with a per-order Gröbner basis cache."""

    def __init__(self, ring: RingSpec, generators: Iterable = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if g and g not in gens:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._cache: dict = {}

    @classmethod
    def unit(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, [])

    def groebner(self, order: TermOrder | None = None, budget: Budget | None = None) -> GroebnerBasis:
        return groebner(self, order, budget)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner().is_unit

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(other.generators))

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def map(self, fn) -> "Ideal":
        first = [fn(g) for g in self.generators]
        ring = first[0].ring if first else self.ring
        return Ideal(ring, first)

    def to_ring(self, ring: RingSpec) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        body = ", ".join(str(g) for g in self.generators) or "0"
        return f"<{body}>"


def groebner(
    I: Ideal,
    order: TermOrder | None = None,
    budget: Budget | None = None,
    degree_bound: int | None = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of ``I``; cached per order when not truncated.

    With ``degree_bound`` only S-pairs whose lcm has degree at most the bound
    are processed, and the result is flagged via ``truncated_at``.  This is
    only meaningful for ideals homogeneous with respect to the order's grading.
    """
    order = order or I.ring.default_order
    if degree_bound is None and order in I._cache:
        return I._cache[order]
    budget = budget or _default_budget
    ctx = _Ctx(I.ring, order)
    stats = GBStats()
    raw, truncated = _buchberger((g.terms for g in I.generators), ctx, budget, degree_bound, stats)
    elems = [Polynomial._raw(I.ring, t) for _, t in raw]
    gb = GroebnerBasis(I.ring, order, elems, True, degree_bound if truncated else None, stats)
    if degree_bound is None:
        I._cache[order] = gb
    return gb


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.reduce(f)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder | None = None) -> Polynomial:
    order = order or f.ring.default_order
    ctx = _Ctx(f.ring, order)
    a = _monic(dict(f.terms), ctx)
    b = _monic(dict(g.terms), ctx)
    return Polynomial._raw(f.ring, _spoly(a, b, ctx))


def is_groebner(elements: Sequence[Polynomial], order: TermOrder | None = None) -> bool:
    """Buchberger's criterion checked on every pair, without shortcuts."""
    elements = [e for e in elements if e]
    if not elements:
        return True
    ring = elements[0].ring
    order = order or ring.default_order
    ctx = _Ctx(ring, order)
    basis = []
    for e in elements:
        lm, t = _monic(dict(e.terms), ctx)
        basis.append((lm, _mask(lm), t))
    for a, b in combinations(basis, 2):
        s = _spoly((a[0], a[2]), (b[0], b[2]), ctx)
        if _reduce(s, basis, ctx):
            return False
    return True


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff ``J ⊆ I``: every generator of ``J`` reduces to zero modulo ``I``."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    gb = I.groebner()
    return all(gb.contains(g) for g in J.generators)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return ideal_contains(I, J) and ideal_contains(J, I)


def _restricted_order(ring: RingSpec, idx: Sequence[int]) -> TermOrder:
    w = [ring.full_weights[i] for i in idx]
    return TermOrder.weighted(w) if any(w) else TermOrder.degrevlex()


def elimination_order(ring: RingSpec, drop: Sequence[str]) -> TermOrder:
    drop_idx = [ring.index(v) for v in drop]
    keep_idx = [i for i in range(ring.n) if i not in set(drop_idx)]
    return TermOrder.block(
        [drop_idx, keep_idx], [_restricted_order(ring, drop_idx), _restricted_order(ring, keep_idx)]
    )


def eliminate(I: Ideal, drop: Iterable[str], budget: Budget | None = None) -> Ideal:
    """``I ∩ K[remaining variables]``, as an ideal of the smaller ring."""
    drop = [v for v in dict.fromkeys(drop)]
    if not drop:
        return I
    ring = I.ring
    for v in drop:
        ring.index(v)
    target = ring.without(drop)
    order = elimination_order(ring, drop)
    gb = groebner(I, order, budget)
    di = {ring.index(v) for v in drop}
    keep = [g for g in gb.elements if not any(any(m[i] for i in di) for m in g.terms)]
    return Ideal(target, [g.to_ring(target) for g in keep])


def intersect(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t·I + (1 − t)·J``."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    t = ring.fresh_name("t")
    big = ring.extended([t], [0])
    tv = big.gen(t)
    gens = [tv * g.to_ring(big) for g in I.generators]
    gens += [(1 - tv) * g.to_ring(big) for g in J.generators]
    out = eliminate(Ideal(big, gens), [t], budget)
    return out.to_ring(ring)


def ideal_quotient(I: Ideal, f: Polynomial, budget: Budget | None = None) -> Ideal:
    """``(I : f)`` computed as ``(I ∩ ⟨f⟩) / f``."""
    if not f:
        raise ValueError("quotient by zero")
    if f.is_constant():
        return I
    inter = intersect(I, Ideal(I.ring, [f]), budget)
    return Ideal(I.ring, [g.exact_div(f) for g in inter.generators])


def ideal_quotient_ideal(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """``(I : J) = ⋂ (I : g)`` over the generators of ``J``."""
    if J.is_zero():
        return Ideal.unit(I.ring)
    out = None
    for g in J.generators:
        q = ideal_quotient(I, g, budget)
        out = q if out is None else intersect(out, q, budget)
    return out


def radical_membership(f: Polynomial, I: Ideal, budget: Budget | None = None) -> bool:
    """Rabinowitsch: ``f ∈ Rad(I)`` iff ``1 ∈ I + ⟨1 − y f⟩``."""
    if not f:
        return True
    ring = I.ring
    y = ring.fresh_name("y")
    big = ring.extended([y], [1])
    gens = [g.to_ring(big) for g in I.generators] + [1 - big.gen(y) * f.to_ring(big)]
    gb = groebner(Ideal(big, gens), TermOrder.degrevlex(), budget)
    return gb.is_unit


# ---------------------------------------------------------------------------
# dimension


def _min_hitting_set(supports: list, nvars: int) -> int:
    """Smallest set of variables meeting every support (supports as bitmasks)."""
    sups = sorted(set(supports), key=lambda s: bin(s).count("1"))
    minimal = []
    for s in sups:
        if not any((t & s) == t for t in minimal):
            minimal.append(s)
    best = [bin((1 << nvars) - 1).count("1")]

    def search(chosen: int, size: int, rest: list):
        if size >= best[0]:
            return
        open_ = [s for s in rest if not (s & chosen)]
        if not open_:
            best[0] = size
            return
        # lower bound: greedily pick disjoint open supports
        lb = 0
        used = 0
        for s in open_:
            if not (s & used):
                used |= s
                lb += 1
        if size + lb >= best[0]:
            return
        s = min(open_, key=lambda x: bin(x).count("1"))
        bits = [i for i in range(nvars) if s >> i & 1]
        for b in bits:
            search(chosen | (1 << b), size + 1, open_)

    search(0, 0, minimal)
    return best[0]


def dimension_from_leading_monomials(lms: Sequence[tuple], nvars: int) -> int | None:
    """Krull dimension of ``K[x]/⟨lms⟩``; ``None`` for the unit ideal."""
    if any(not any(m) for m in lms):
        return None
    if not lms:
        return nvars
    return nvars - _min_hitting_set([_mask(m) for m in lms], nvars)


def krull_dimension(I: Ideal, budget: Budget | None = None) -> int | None:
    """Krull dimension of ``ring / I``; ``None`` signals the empty scheme (unit ideal)."""
    if I.is_zero():
        return I.ring.n
    order = TermOrder.degrevlex()
    gb = groebner(I, order, budget)
    return dimension_from_leading_monomials(gb.leading_monomials(), I.ring.n)


# ---------------------------------------------------------------------------
# minimal homogeneous generators


def minimal_generators(I: Ideal, budget: Budget | None = None) -> list:
    """A minimal homogeneous generating tuple, sorted by W-degree.

    Greedy filter: walking through the generators in increasing W-degree,
    a generator is dropped when it lies in the ideal of the remaining ones.
    Only remaining generators of degree at most ``deg g`` can contribute to a
    homogeneous representation of ``g``, so membership is decided with a
    Gröbner basis truncated at ``deg g``.
    """
    ring = I.ring
    w = ring.full_weights
    order = TermOrder.weighted(w) if any(w) else TermOrder.degrevlex()
    current = sorted(I.generators, key=w_degree)
    degs = {g: w_degree(g) for g in current}
    i = 0
    while i < len(current):
        g = current[i]
        d = degs[g]
        others = [h for h in current if h is not g and degs[h] <= d]
        if others:
            gb = groebner(Ideal(ring, others), order, budget, degree_bound=d)
            if gb.contains(g):
                del current[i]
                continue
        i += 1
    return current
