"""Singular loci of the structure morphism ``Spec(R) -> A^m``.

Three loci are computed:

* ``sing0``: base points whose zero point is a singular point of ``Spec(R)``;
* ``singv``: base points whose fiber is singular at its vertex (the origin);
* ``sings``: base points whose fiber has a singular point other than the vertex.

Closed loci are returned as ideals of ``A``; the others as constructible
sets, i.e. finite unions of cells ``V(E) \\ V(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ideals import (
    Budget,
    Ideal,
    dimension_from_leading_monomials,
    groebner,
    ideal_contains,
    ideal_quotient_ideal,
    intersect,
    krull_dimension,
    radical_membership,
)
from .matrices import ScalarMatrix, generic_rank, minors_ideal, polynomial_minors
from .polyring import QQ, Polynomial, RingSpec, TermOrder, specialize
from .posalg import (
    PositiveAlgebra,
    coefficient_rank_at,
    fiber_dimension,
    fiber_ideal,
    lin_coeff_matrix,
)

__all__ = [
    "Cell",
    "ConstructibleSet",
    "GroebnerSystem",
    "ComponentData",
    "NotEquidimensional",
    "sing0_equidimensional",
    "sing0_point_test",
    "sing0_general",
    "singv_point_test",
    "comprehensive_gs",
    "singv_set",
    "jacobian_minors",
    "sings_set",
    "fiber_point_singular_test",
    "union",
    "intersection",
    "complement",
    "difference",
    "is_empty",
]


class NotEquidimensional(ValueError):
    """The generic rank of the coefficient matrix exceeds ``n - d``."""


# ---------------------------------------------------------------------------
# constructible sets


@dataclass(frozen=True)
class Cell:
    """``V(E) \\ V(H)`` inside ``Spec(A)``; both ideals live in ``A``."""

    E: Ideal
    H: Ideal

    @classmethod
    def make(cls, ring: RingSpec, eqs: Iterable = (), ineqs: Iterable | None = None) -> "Cell":
        H = Ideal(ring, list(ineqs)) if ineqs is not None else Ideal.unit(ring)
        return cls(Ideal(ring, list(eqs)), H)

    @property
    def ring(self) -> RingSpec:
        return self.E.ring

    def is_empty(self, budget: Budget | None = None) -> bool:
        return all(radical_membership(h, self.E, budget) for h in self.H.generators)

    def contains(self, point: Sequence) -> bool:
        pt = [QQ.convert(p) for p in point]
        if any(e.evaluate(pt) for e in self.E.generators):
            return False
        return any(h.evaluate(pt) for h in self.H.generators)

    def to_json(self) -> dict:
        return {"equations": [str(e) for e in self.E], "inequations": [str(h) for h in self.H]}

    def __str__(self):
        eq = ", ".join(str(e) for e in self.E) or "0"
        ne = " | ".join(str(h) for h in self.H) or "0"
        return f"V({eq}) \\ V({ne})"


@dataclass
class ConstructibleSet:
    ring: RingSpec
    cells: list = field(default_factory=list)

    @classmethod
    def whole(cls, ring: RingSpec) -> "ConstructibleSet":
        return cls(ring, [Cell.make(ring)])

    @classmethod
    def empty(cls, ring: RingSpec) -> "ConstructibleSet":
        return cls(ring, [])

    @classmethod
    def closed(cls, ideal: Ideal) -> "ConstructibleSet":
        return cls(ideal.ring, [Cell(ideal, Ideal.unit(ideal.ring))])

    def contains(self, point: Sequence) -> bool:
        return any(c.contains(point) for c in self.cells)

    def is_empty(self, budget: Budget | None = None) -> bool:
        return all(c.is_empty(budget) for c in self.cells)

    def pruned(self, budget: Budget | None = None) -> "ConstructibleSet":
        return ConstructibleSet(self.ring, [c for c in self.cells if not c.is_empty(budget)])

    def to_json(self) -> list:
        return [c.to_json() for c in self.cells]

    def __str__(self):
        return " ∪ ".join(str(c) for c in self.cells) or "∅"


def union(S: ConstructibleSet, T: ConstructibleSet) -> ConstructibleSet:
    return ConstructibleSet(S.ring, S.cells + T.cells)


def _cell_meet(a: Cell, b: Cell) -> Cell:
    return Cell(a.E + b.E, a.H * b.H)


def intersection(S: ConstructibleSet, T: ConstructibleSet, prune: bool = True) -> ConstructibleSet:
    cells = [_cell_meet(a, b) for a in S.cells for b in T.cells]
    out = ConstructibleSet(S.ring, cells)
    return out.pruned() if prune else out


def _cell_complement(c: Cell) -> ConstructibleSet:
    ring = c.ring
    cells = [Cell(Ideal.zero(ring), Ideal(ring, [e])) for e in c.E.generators]
    cells.append(Cell(c.H, Ideal.unit(ring)))
    return ConstructibleSet(ring, cells)


def complement(S: ConstructibleSet) -> ConstructibleSet:
    out = ConstructibleSet.whole(S.ring)
    for c in S.cells:
        out = intersection(out, _cell_complement(c))
    return out


def difference(S: ConstructibleSet, T: ConstructibleSet) -> ConstructibleSet:
    return intersection(S, complement(T))


def is_empty(S: ConstructibleSet, budget: Budget | None = None) -> bool:
    return S.is_empty(budget)


def same_set(S: ConstructibleSet, T: ConstructibleSet) -> bool:
    return is_empty(difference(S, T)) and is_empty(difference(T, S))


def is_subset(S: ConstructibleSet, T: ConstructibleSet) -> bool:
    return is_empty(difference(S, T))


# ---------------------------------------------------------------------------
# comprehensive Gröbner systems


@dataclass
class GSBranch:
    cell: Cell
    basis: list  # polynomials in the full ring A[X]
    fiber_dim: int | None  # None: the fiber is empty on this cell


@dataclass
class GroebnerSystem:
    branches: list
    covering: bool = True

    def cells(self) -> list:
        return [b.cell for b in self.branches]

    def locate(self, point: Sequence) -> GSBranch:
        hits = [b for b in self.branches if b.cell.contains(point)]
        if len(hits) != 1:
            raise ValueError(f"point lies in {len(hits)} cells")
        return hits[0]


def _x_order(ring: RingSpec) -> TermOrder:
    m = ring.m
    xs = list(range(m, ring.n))
    ps = list(range(m))
    inner_x = TermOrder.weighted(ring.weights) if any(w != 1 for w in ring.weights) else TermOrder.degrevlex()
    return TermOrder.block([xs, ps], [inner_x, TermOrder.degrevlex()])


def _x_leading(g: Polynomial, order: TermOrder):
    """X-part of the leading monomial and its coefficient in ``A``."""
    m = g.ring.m
    lm = g.leading_monomial(order)
    lx = lm[m:]
    base = g.ring.base_ring()
    coeff = {mono[:m]: c for mono, c in g.terms.items() if mono[m:] == lx}
    return lx, Polynomial(base, coeff)


def _cgs(F: list, cell: Cell, ring: RingSpec, order, budget, out: list, depth: int = 0):
    if cell.is_empty(budget):
        return
    base = ring.base_ring()
    gens = list(F) + [e.to_ring(ring) for e in cell.E.generators]
    G = groebner(Ideal(ring, gens), order, budget).elements
    if len(G) == 1 and G[0].is_constant():
        out.append(GSBranch(cell, [ring.one], None))
        return
    GA = [g for g in G if g.is_param_only()]
    Eprime = cell.E + Ideal(base, [g.to_ring(base) for g in GA])
    if GA:
        # wherever some element of G ∩ A is nonzero the fiber is empty
        unit_cell = Cell(cell.E, cell.H * Ideal(base, [g.to_ring(base) for g in GA]))
        if not unit_cell.is_empty(budget):
            out.append(GSBranch(unit_cell, [ring.one], None))
    rest = [g for g in G if not g.is_param_only()]
    if not rest:
        # no fiber equations at all on V(E')
        c = Cell(Eprime, cell.H)
        if not c.is_empty(budget):
            out.append(GSBranch(c, [], ring.k))
        return
    lead = [_x_leading(g, order) for g in rest]
    minimal = []
    for i, (lx, _) in enumerate(lead):
        divisible = any(
            all(a <= b for a, b in zip(lead[j][0], lx)) and (lead[j][0] != lx or j < i)
            for j in range(len(lead))
            if j != i
        )
        if not divisible:
            minimal.append(i)
    hs = [lead[i][1] for i in minimal]
    prod = base.one
    for h in hs:
        prod = prod * h
    good = Cell(Eprime, cell.H * Ideal(base, [prod]))
    if not good.is_empty(budget):
        lxs = [lead[i][0] for i in minimal]
        out.append(GSBranch(good, [rest[i] for i in minimal], dimension_from_leading_monomials(lxs, ring.k)))
    acc = base.one
    for h in hs:
        if h.is_constant():
            acc = acc * h
            continue
        sub = Cell(Eprime + Ideal(base, [h]), cell.H * Ideal(base, [acc]))
        _cgs(rest, sub, ring, order, budget, out, depth + 1)
        acc = acc * h


def comprehensive_gs(PA: PositiveAlgebra, extra: Sequence[Polynomial] = (), budget: Budget | None = None) -> GroebnerSystem:
    """Suzuki–Sato style Gröbner system of ``I + extra`` over ``Spec(A)``.

    The cells are pairwise disjoint and cover the base.  Each branch records
    the dimension of the fibers over its cell, read off from the X-leading
    monomials (these do not change inside a cell).
    """
    ring = PA.ring
    order = _x_order(ring)
    F = list(PA.generators) + list(extra)
    out: list = []
    _cgs(F, Cell.make(ring.base_ring()), ring, order, budget, out)
    return GroebnerSystem(out, True)


def specialize_branch(branch: GSBranch, point: Sequence) -> list:
    return [specialize(g, point) for g in branch.basis]


# ---------------------------------------------------------------------------
# Sing_0


def sing0_equidimensional(PA: PositiveAlgebra, d: int) -> Ideal:
    """Vanishing ideal of ``Sing_0`` for an equidimensional ``R`` of dimension ``d``."""
    M = lin_coeff_matrix(PA)
    r = generic_rank(M)
    if r > PA.n - d:
        raise NotEquidimensional(f"generic rank {r} exceeds n - d = {PA.n - d}")
    return minors_ideal(M, PA.n - d)


def sing0_point_test(PA: PositiveAlgebra, gamma: Sequence, d_zero_point: int) -> bool:
    if d_zero_point is None:
        raise ValueError("the local dimension at the zero point is required")
    return coefficient_rank_at(PA, gamma) < PA.n - d_zero_point


@dataclass
class ComponentData:
    """Minimal primes of ``I`` with their dimensions and, optionally, ``Rad(I)``."""

    primes: list  # list of (Ideal, dim)
    radical: Ideal | None = None

    def verify(self, PA: PositiveAlgebra, budget: Budget | None = None) -> None:
        for p, d in self.primes:
            if not ideal_contains(p, PA.ideal):
                raise ValueError(f"prime {p} does not contain I")
            dim = krull_dimension(p, budget)
            if dim != d:
                raise ValueError(f"prime {p} has dimension {dim}, not {d}")
        if self.radical is not None:
            if not ideal_contains(self.radical, PA.ideal):
                raise ValueError("supplied radical does not contain I")
            for g in self.radical.generators:
                if not radical_membership(g, PA.ideal, budget):
                    raise ValueError(f"{g} is not in Rad(I)")

    def zero_point_dimension(self, PA: PositiveAlgebra, gamma: Sequence) -> int | None:
        """``max dim P/p`` over the primes passing through the zero point."""
        pt = [QQ.convert(g) for g in gamma] + [QQ.zero] * PA.k
        dims = [d for p, d in self.primes if all(not g.evaluate(pt) for g in p.generators)]
        return max(dims) if dims else None


def _at_zero_section(f: Polynomial) -> Polynomial:
    """``f`` with every fiber variable set to 0, as an element of ``A``."""
    m = f.ring.m
    base = f.ring.base_ring()
    return Polynomial(base, {mono[:m]: c for mono, c in f.terms.items() if not any(mono[m:])})


def component_sing0(PA: PositiveAlgebra, prime: Ideal, d: int) -> Ideal:
    """Base points whose zero point lies on ``V(prime)`` and is singular there.

    The Jacobian is taken with respect to all ``n`` variables and evaluated
    on the zero section, so primes containing elements of ``A`` are handled
    as well.
    """
    ring = PA.ring
    base = ring.base_ring()
    r = PA.n - d
    if r <= 0:
        return Ideal.unit(base)
    on = [_at_zero_section(g) for g in prime.generators]
    jac = [[_at_zero_section(g.derivative(v)) for v in ring.names] for g in prime.generators]
    return Ideal(base, on + polynomial_minors(jac, base, r))


def sing0_general(PA: PositiveAlgebra, comp: ComponentData, reduced: bool = False, budget: Budget | None = None) -> Ideal:
    """Vanishing ideal of ``Sing_0`` from component data.

    Combines the zero points that are singular on some component, those on at
    least two components, and (unless ``reduced``) those in the support of
    ``Rad(I)/I``.
    """
    comp.verify(PA, budget)
    ring = PA.ring
    base = ring.base_ring()
    if comp.radical is None and not reduced:
        raise ValueError("Rad(I) is required unless R is declared reduced")
    if comp.radical is not None and not reduced:
        n_ideal = ideal_quotient_ideal(PA.ideal, comp.radical, budget)
    else:
        n_ideal = Ideal.unit(ring)
    q = n_ideal
    primes = [p for p, _ in comp.primes]
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            q = intersect(q, primes[i] + primes[j], budget)
    result = Ideal(base, [_at_zero_section(g) for g in q.generators])
    for p, d in comp.primes:
        result = intersect(result, component_sing0(PA, p, d), budget)
    return result


# ---------------------------------------------------------------------------
# Sing_v


def singv_point_test(PA: PositiveAlgebra, gamma: Sequence, fiber_dim: int | None = None, budget: Budget | None = None) -> bool:
    """``rank L_K(G_Γ) < k - dim F_Γ``.

    ``fiber_dim`` may be supplied to skip the fiber Gröbner basis; an upper
    bound for the fiber dimension is enough when the answer is ``True``.
    """
    r = coefficient_rank_at(PA, gamma)
    d = fiber_dim if fiber_dim is not None else fiber_dimension(PA, gamma, budget)
    return r < PA.k - d


def singv_set(PA: PositiveAlgebra, gs: GroebnerSystem | None = None, budget: Budget | None = None) -> ConstructibleSet:
    """``⋃_d T_d ∩ U_d`` where ``U_d`` is the stratum of fiber dimension ``d``
    and ``T_d = Z(minors of size k-d)``."""
    gs = gs or comprehensive_gs(PA, budget=budget)
    M = lin_coeff_matrix(PA)
    base = PA.base_ring()
    out = ConstructibleSet.empty(base)
    for d in sorted({b.fiber_dim for b in gs.branches if b.fiber_dim is not None}):
        Ud = ConstructibleSet(base, [b.cell for b in gs.branches if b.fiber_dim == d])
        Td = ConstructibleSet.closed(minors_ideal(M, PA.k - d))
        out = union(out, intersection(Td, Ud))
    return out.pruned(budget)


def strata(PA: PositiveAlgebra, gs: GroebnerSystem | None = None) -> dict:
    """``{d: U_d}``: base points whose fiber has dimension exactly ``d``."""
    gs = gs or comprehensive_gs(PA)
    base = PA.base_ring()
    out = {}
    for b in gs.branches:
        if b.fiber_dim is None:
            continue
        out.setdefault(b.fiber_dim, ConstructibleSet.empty(base)).cells.append(b.cell)
    return out


def at_least(PA: PositiveAlgebra, d: int, gs: GroebnerSystem | None = None) -> ConstructibleSet:
    """``S_d``: base points whose fiber dimension is at least ``d``."""
    gs = gs or comprehensive_gs(PA)
    return ConstructibleSet(PA.base_ring(), [b.cell for b in gs.branches if b.fiber_dim is not None and b.fiber_dim >= d])


# ---------------------------------------------------------------------------
# Sing_s


def jacobian(gens: Sequence[Polynomial], ring: RingSpec) -> list:
    return [[g.derivative(v) for v in ring.vars] for g in gens]


def jacobian_minors(I: Ideal, r: int) -> Ideal:
    """Ideal of ``r``-minors of the Jacobian with respect to the fiber variables."""
    if r == 0:
        return Ideal.unit(I.ring)
    if not I.generators:
        return Ideal.zero(I.ring)
    return Ideal(I.ring, polynomial_minors(jacobian(I.generators, I.ring), I.ring, r))


def sings_set(PA: PositiveAlgebra, gs: GroebnerSystem | None = None, budget: Budget | None = None) -> ConstructibleSet:
    """Base points whose fiber has singular points besides the vertex.

    On each stratum ``U_d`` the singular locus of the fiber is cut out by the
    fiber ideal plus the ``(k-d)``-minors of its Jacobian.  It is weighted
    homogeneous, so it contains a point other than the vertex exactly when
    its dimension is at least one.
    """
    gs = gs or comprehensive_gs(PA, budget=budget)
    base = PA.base_ring()
    out = ConstructibleSet.empty(base)
    for d, Ud in sorted(strata(PA, gs).items()):
        if Ud.is_empty(budget):
            continue
        jm = jacobian_minors(PA.ideal, PA.k - d)
        if jm.is_unit():
            continue
        gs_d = comprehensive_gs(PA, extra=jm.generators, budget=budget)
        hits = ConstructibleSet(base, [b.cell for b in gs_d.branches if b.fiber_dim is not None and b.fiber_dim >= 1])
        out = union(out, intersection(hits, Ud))
    return out.pruned(budget)


def fiber_point_singular_test(PA: PositiveAlgebra, gamma: Sequence, point: Sequence, d: int) -> bool:
    """Jacobian criterion at a point of the fiber ``F_Γ`` of dimension ``d``."""
    fid = fiber_ideal(PA, gamma)
    pt = [QQ.convert(p) for p in point]
    if len(pt) != PA.k:
        raise ValueError(f"fiber point has {len(pt)} coordinates, expected {PA.k}")
    for g in fid.generators:
        if g.evaluate(pt):
            raise ValueError(f"point is not on the fiber: {g} does not vanish")
    rows = [[entry.evaluate(pt) for entry in row] for row in jacobian(fid.generators, fid.ring)]
    return ScalarMatrix.of(rows).rank() < PA.k - d if rows else 0 < PA.k - d
