"""Positive A-algebras ``R = A[X]/I``.

Local invariants are derived from ranks of coefficient matrices and Krull
dimensions only; no local ring is ever built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ideals import Budget, Ideal, eliminate, krull_dimension
from .matrices import PolyMatrix, ScalarMatrix, specialize_matrix
from .polyring import QQ, Polynomial, RingSpec, specialize, w_degree, w_degrees

__all__ = [
    "PositiveAlgebra",
    "InvalidAlgebra",
    "LocalInvariants",
    "Segment",
    "ConnectingPath",
    "validate",
    "lin_A",
    "lin_coeff_matrix",
    "lin_A_module",
    "fiber_ideal",
    "generic_fiber_dimension",
    "connecting_curve",
    "connect_points",
    "local_invariants",
    "from_descriptor",
]


class InvalidAlgebra(ValueError):
    """Raised by :func:`validate`; ``reason`` is one of ``weights``,
    ``inhomogeneous`` or ``base``, and ``witness`` shows the offender."""

    def __init__(self, reason: str, witness, message: str):
        super().__init__(message)
        self.reason = reason
        self.witness = witness


@dataclass
class PositiveAlgebra:
    ring: RingSpec
    ideal: Ideal

    @property
    def generators(self) -> tuple:
        return self.ideal.generators

    @property
    def m(self) -> int:
        return self.ring.m

    @property
    def k(self) -> int:
        return self.ring.k

    @property
    def n(self) -> int:
        return self.ring.n

    def base_ring(self) -> RingSpec:
        return self.ring.base_ring()

    def dimension(self, budget: Budget | None = None) -> int | None:
        return krull_dimension(self.ideal, budget)


def validate(
    ring: RingSpec,
    generators: Sequence,
    weights: Sequence[int] | None = None,
    check_elimination: bool = False,
) -> PositiveAlgebra:
    """Build a :class:`PositiveAlgebra`, checking the three defining conditions.

    ``I ∩ A = 0`` is certified by degrees: homogeneous generators of positive
    degree lie in ``⟨X⟩``, which meets ``A`` trivially, while a generator of
    degree zero is itself a nonzero element of ``A``.  With
    ``check_elimination`` the intersection is also computed by elimination.
    """
    if weights is not None:
        ring = RingSpec(ring.params, ring.vars, tuple(weights), ring.domain)
    for v, w in zip(ring.vars, ring.weights):
        if w <= 0:
            raise InvalidAlgebra("weights", v, f"weight of {v} is {w}, must be positive")
    if ring.k < 1:
        raise InvalidAlgebra("weights", None, "need at least one fiber variable")
    ideal = Ideal(ring, generators)
    for g in ideal.generators:
        degs = w_degrees(g)
        if len(degs) != 1:
            raise InvalidAlgebra("inhomogeneous", g, f"{g} is not W-homogeneous (degrees {sorted(degs)})")
        if degs == {0}:
            raise InvalidAlgebra("base", g, f"{g} is a nonzero element of I ∩ A")
    if check_elimination and ideal.generators:
        base = eliminate(ideal, ring.vars)
        if not base.is_zero():
            w = base.generators[0]
            raise InvalidAlgebra("base", w, f"I ∩ A contains {w}")
    return PositiveAlgebra(ring, ideal)


def from_descriptor(desc: Mapping) -> PositiveAlgebra:
    """Build from ``{"params", "vars", "weights", "generators"}``."""
    ring = RingSpec(tuple(desc.get("params", ())), tuple(desc["vars"]), tuple(desc.get("weights") or ()))
    return validate(ring, list(desc.get("generators", ())))


def load_descriptor(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# linear parts


def lin_A(f: Polynomial) -> Polynomial:
    """Part of ``f`` that is A-linear in the fiber variables."""
    m = f.ring.m
    out = {}
    for mono, c in f.terms.items():
        fib = mono[m:]
        if sum(fib) == 1:
            out[mono] = c
    return Polynomial(f.ring, out)


def lin_coefficients(f: Polynomial, base: RingSpec | None = None) -> list:
    """Coefficients of ``lin_A(f)`` in ``x_1..x_k`` as elements of ``A``."""
    ring = f.ring
    base = base or ring.base_ring()
    m, k = ring.m, ring.k
    coeffs = [dict() for _ in range(k)]
    for mono, c in f.terms.items():
        fib = mono[m:]
        if sum(fib) == 1:
            coeffs[fib.index(1)][mono[:m]] = c
    return [Polynomial(base, d) for d in coeffs]


def lin_coeff_matrix(PA: PositiveAlgebra, generators: Sequence[Polynomial] | None = None, sort_by_degree: bool = False) -> PolyMatrix:
    gens = list(generators if generators is not None else PA.generators)
    if sort_by_degree:
        gens.sort(key=w_degree)
    base = PA.base_ring()
    return PolyMatrix(base, [lin_coefficients(g, base) for g in gens])


def lin_A_module(PA: PositiveAlgebra) -> list:
    return [lin_A(g) for g in PA.generators]


def degree_blocks(PA: PositiveAlgebra, generators: Sequence[Polynomial] | None = None) -> dict:
    """``{d: PolyMatrix}`` with rows = generators of degree ``d`` and columns =
    variables of weight ``d``; the coefficient matrix is block diagonal in
    these pieces up to row and column permutations."""
    gens = list(generators if generators is not None else PA.generators)
    base = PA.base_ring()
    out = {}
    for d in sorted({w_degree(g) for g in gens}):
        cols = [j for j, w in enumerate(PA.ring.weights) if w == d]
        rows = [lin_coefficients(g, base) for g in gens if w_degree(g) == d]
        if cols:
            out[d] = PolyMatrix(base, [[r[j] for j in cols] for r in rows])
    return out


# ---------------------------------------------------------------------------
# fibers


def _point(PA, gamma):
    if len(gamma) != PA.m:
        raise ValueError(f"base point has {len(gamma)} coordinates, expected {PA.m}")
    return [QQ.convert(g) for g in gamma]


def fiber_ideal(PA: PositiveAlgebra, gamma: Sequence) -> Ideal:
    gamma = _point(PA, gamma)
    return Ideal(PA.ring.fiber_ring(), [specialize(g, gamma) for g in PA.generators])


def fiber_dimension(PA: PositiveAlgebra, gamma: Sequence, budget: Budget | None = None) -> int | None:
    return krull_dimension(fiber_ideal(PA, gamma), budget)


def generic_fiber_ideal(PA: PositiveAlgebra) -> Ideal:
    L = PA.ring.generic_fiber_ring()
    m = PA.m
    gens = []
    for g in PA.generators:
        acc: dict = {}
        for mono, c in g.terms.items():
            coeff_mono = mono[:m] + (0,) * PA.k
            part = Polynomial(PA.ring, {coeff_mono: c})
            key = mono[m:]
            acc[key] = acc.get(key, L.domain.zero) + L.domain.convert(part)
        gens.append(Polynomial(L, {k: v for k, v in acc.items() if v}))
    return Ideal(L, gens)


def generic_fiber_dimension(PA: PositiveAlgebra, budget: Budget | None = None) -> int:
    if not PA.generators:
        return PA.k
    return krull_dimension(generic_fiber_ideal(PA), budget)


def coefficient_rank_at(PA: PositiveAlgebra, gamma: Sequence) -> int:
    return specialize_matrix(lin_coeff_matrix(PA), _point(PA, gamma)).rank()


def specialized_lin_matrix(PA: PositiveAlgebra, gamma: Sequence) -> ScalarMatrix:
    """Matrix of linear parts of the specialized generators (built directly)."""
    k = PA.k
    rows = []
    for g in PA.generators:
        sg = specialize(g, _point(PA, gamma))
        row = [QQ.zero] * k
        for mono, c in sg.terms.items():
            if sum(mono) == 1:
                row[mono.index(1)] = c
        rows.append(row)
    return ScalarMatrix.of(rows)


# ---------------------------------------------------------------------------
# connecting curves


@dataclass
class Segment:
    """A curve ``t -> point``; ``images`` maps every ring name to ``K[t]``."""

    images: dict
    start: tuple
    end: tuple
    kind: str = "curve"

    def at(self, t) -> tuple:
        return tuple(p.evaluate([t]) for p in self.images.values())


@dataclass
class ConnectingPath:
    segments: list = field(default_factory=list)

    @property
    def start(self):
        return self.segments[0].start

    @property
    def end(self):
        return self.segments[-1].end

    def is_continuous(self) -> bool:
        return all(a.end == b.start for a, b in zip(self.segments, self.segments[1:]))


_T_RING = RingSpec((), ("t",), (1,))


def _on_spec(PA, point):
    full = dict(zip(PA.ring.names, point))
    for g in PA.generators:
        if g.evaluate(full):
            return g
    return None


def annihilates(PA: PositiveAlgebra, seg: Segment) -> bool:
    """Every generator becomes the zero polynomial in ``t`` along ``seg``."""
    return all(not g.substitute(seg.images, _T_RING) for g in PA.generators)


def connecting_curve(PA: PositiveAlgebra, point: Sequence) -> Segment:
    """Curve ``x_i = pi_i t^{w_i}`` over the fixed base point.

    ``t = 0`` gives the zero point (``start``) and ``t = 1`` the point (``end``).
    """
    point = tuple(QQ.convert(p) for p in point)
    if len(point) != PA.n:
        raise ValueError(f"point has {len(point)} coordinates, expected {PA.n}")
    bad = _on_spec(PA, point)
    if bad is not None:
        raise ValueError(f"point is not on Spec(R): {bad} does not vanish")
    t = _T_RING.gen("t")
    images = {}
    for a, g in zip(PA.ring.params, point[: PA.m]):
        images[a] = _T_RING.const(g)
    for x, w, p in zip(PA.ring.vars, PA.ring.weights, point[PA.m :]):
        images[x] = p * t**w
    zero = point[: PA.m] + (QQ.zero,) * PA.k
    seg = Segment(images, zero, point, "curve")
    if not annihilates(PA, seg):
        raise AssertionError("curve leaves Spec(R); the ideal is not W-homogeneous")
    return seg


def _reverse(seg: Segment) -> Segment:
    t = _T_RING.gen("t")
    flip = {"t": 1 - t}
    images = {k: v.substitute(flip, _T_RING) for k, v in seg.images.items()}
    return Segment(images, seg.end, seg.start, seg.kind)


def base_line(PA: PositiveAlgebra, gamma1: Sequence, gamma2: Sequence) -> Segment:
    """Straight segment between two zero points inside the zero section."""
    g1 = [QQ.convert(x) for x in gamma1]
    g2 = [QQ.convert(x) for x in gamma2]
    t = _T_RING.gen("t")
    images = {a: (1 - t) * u + t * v for a, u, v in zip(PA.ring.params, g1, g2)}
    for x in PA.ring.vars:
        images[x] = _T_RING.zero
    zeros = (QQ.zero,) * PA.k
    return Segment(images, tuple(g1) + zeros, tuple(g2) + zeros, "base")


def connect_points(PA: PositiveAlgebra, p1: Sequence, p2: Sequence) -> ConnectingPath:
    """Point -> its zero point -> (inside the zero section) -> other zero point -> point.

    Segments that would be constant are left out.
    """
    p1 = tuple(QQ.convert(x) for x in p1)
    p2 = tuple(QQ.convert(x) for x in p2)
    if p1 == p2:
        images = {nm: _T_RING.const(c) for nm, c in zip(PA.ring.names, p1)}
        return ConnectingPath([Segment(images, p1, p1, "point")])
    c1 = connecting_curve(PA, p1)
    c2 = connecting_curve(PA, p2)
    segs = []
    if any(p1[PA.m :]):
        segs.append(_reverse(c1))
    if p1[: PA.m] != p2[: PA.m]:
        segs.append(base_line(PA, p1[: PA.m], p2[: PA.m]))
    if any(p2[PA.m :]):
        segs.append(c2)
    return ConnectingPath(segs)


# ---------------------------------------------------------------------------
# local invariants


@dataclass
class LocalInvariants:
    gamma: tuple
    rank: int
    cot_dim_zero_point: int
    cot_dim_fiber_origin: int
    fiber_dim: int | None
    d_zero_point: int | None = None

    @property
    def ecod_fiber(self) -> int | None:
        if self.fiber_dim is None:
            return None
        return self.cot_dim_fiber_origin - self.fiber_dim

    @property
    def ecod_zero_point(self) -> int | None:
        if self.d_zero_point is None:
            return None
        return self.cot_dim_zero_point - self.d_zero_point

    def as_dict(self) -> dict:
        return {
            "gamma": [str(g) for g in self.gamma],
            "rank": self.rank,
            "cot_dim_zero_point": self.cot_dim_zero_point,
            "cot_dim_fiber_origin": self.cot_dim_fiber_origin,
            "fiber_dim": self.fiber_dim,
            "d_zero_point": self.d_zero_point,
            "ecod_fiber": self.ecod_fiber,
            "ecod_zero_point": self.ecod_zero_point,
        }


def local_invariants(PA: PositiveAlgebra, gamma: Sequence, d_zero_point: int | None = None, budget: Budget | None = None) -> LocalInvariants:
    gamma = _point(PA, gamma)
    r = coefficient_rank_at(PA, gamma)
    return LocalInvariants(
        tuple(gamma),
        r,
        PA.n - r,
        PA.k - r,
        fiber_dimension(PA, gamma, budget),
        d_zero_point,
    )
