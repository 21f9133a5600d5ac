"""Border basis schemes of order ideals.

Monomials are exponent tuples in ``n`` ambient indeterminates named
``x, y, z`` (or ``x1..xn`` when ``n > 3``), with ``x > y > z``.  Order ideals
and borders are listed increasingly with respect to degrevlex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .ideals import Ideal
from .polyring import Polynomial, RingSpec, TermOrder

__all__ = [
    "OrderIdeal",
    "BorderStructure",
    "BBSchemeData",
    "validate_order_ideal",
    "border",
    "generic_mult_matrices",
    "bbs_ideal",
    "arrow_grading",
    "is_maxdeg",
    "build_scheme",
    "c_name",
    "parse_monomial",
    "format_monomial",
]


class OrderIdealError(ValueError):
    pass


def ambient_names(n: int) -> tuple:
    return ("x", "y", "z")[:n] if n <= 3 else tuple(f"x{i}" for i in range(1, n + 1))


def _drl_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def format_monomial(m, names=None) -> str:
    names = names or ambient_names(len(m))
    parts = [nm if e == 1 else f"{nm}^{e}" for nm, e in zip(names, m) if e]
    return "*".join(parts) or "1"


def parse_monomial(text: str, n: int) -> tuple:
    """Read ``"1"``, ``"x*y^2"`` or ``"xy^2"``-free product notation with ``*``."""
    names = ambient_names(n)
    text = text.replace(" ", "")
    e = [0] * n
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        base, _, exp = factor.partition("^")
        if base not in names:
            raise OrderIdealError(f"unknown indeterminate {base!r} in {text!r}")
        e[names.index(base)] += int(exp) if exp else 1
    return tuple(e)


def c_name(i: int, j: int) -> str:
    return f"c{i}{j}" if i < 10 and j < 10 else f"c[{i},{j}]"


@dataclass(frozen=True)
class OrderIdeal:
    terms: tuple
    n: int

    @property
    def mu(self) -> int:
        return len(self.terms)

    def names(self) -> tuple:
        return ambient_names(self.n)

    def __str__(self):
        return "{" + ", ".join(format_monomial(t, self.names()) for t in self.terms) + "}"


def validate_order_ideal(terms: Sequence, n: int | None = None) -> OrderIdeal:
    """Check divisor closure; return the terms sorted increasingly by degrevlex."""
    if not terms:
        raise OrderIdealError("empty term list")
    if n is None:
        first = terms[0]
        n = len(first) if not isinstance(first, str) else 3
    ts = []
    for t in terms:
        ts.append(parse_monomial(t, n) if isinstance(t, str) else tuple(int(e) for e in t))
    if any(len(t) != n for t in ts) or any(e < 0 for t in ts for e in t):
        raise OrderIdealError("bad exponent vector")
    s = set(ts)
    for t in ts:
        for i in range(n):
            if t[i]:
                d = t[:i] + (t[i] - 1,) + t[i + 1 :]
                if d not in s:
                    raise OrderIdealError(
                        f"not divisor-closed: {format_monomial(d, ambient_names(n))} divides "
                        f"{format_monomial(t, ambient_names(n))} but is missing"
                    )
    return OrderIdeal(tuple(sorted(s, key=_drl_key)), n)


@dataclass(frozen=True)
class BorderStructure:
    order_ideal: OrderIdeal
    terms: tuple
    # products[r][j] = ("t", m) or ("b", m), 0-based indices
    products: tuple

    @property
    def nu(self) -> int:
        return len(self.terms)

    def __str__(self):
        return "{" + ", ".join(format_monomial(b, self.order_ideal.names()) for b in self.terms) + "}"


def border(O: OrderIdeal) -> BorderStructure:
    inside = {t: i for i, t in enumerate(O.terms)}
    out = set()
    for t in O.terms:
        for r in range(O.n):
            u = t[:r] + (t[r] + 1,) + t[r + 1 :]
            if u not in inside:
                out.add(u)
    bterms = tuple(sorted(out, key=_drl_key))
    bindex = {b: i for i, b in enumerate(bterms)}
    prods = []
    for r in range(O.n):
        row = []
        for t in O.terms:
            u = t[:r] + (t[r] + 1,) + t[r + 1 :]
            row.append(("t", inside[u]) if u in inside else ("b", bindex[u]))
        prods.append(tuple(row))
    return BorderStructure(O, bterms, tuple(prods))


def arrow_grading(O: OrderIdeal, B: BorderStructure | None = None) -> dict:
    """``deg c_ij = deg b_j - deg t_i`` keyed by variable name, row-major order."""
    B = B or border(O)
    w = {}
    for i, t in enumerate(O.terms, 1):
        for j, b in enumerate(B.terms, 1):
            w[c_name(i, j)] = sum(b) - sum(t)
    return w


def is_maxdeg(O: OrderIdeal) -> bool:
    return all(v >= 0 for v in arrow_grading(O).values())


def c_ring(O: OrderIdeal, B: BorderStructure | None = None) -> RingSpec:
    """``K[C]`` with every ``c_ij`` a graded variable (weights may be zero)."""
    w = arrow_grading(O, B)
    return RingSpec((), tuple(w), tuple(w.values()))


def generic_mult_matrices(O: OrderIdeal, B: BorderStructure | None = None, ring: RingSpec | None = None) -> list:
    B = B or border(O)
    ring = ring or c_ring(O, B)
    mu = O.mu
    mats = []
    for r in range(O.n):
        A = [[ring.zero] * mu for _ in range(mu)]
        for j, (kind, m) in enumerate(B.products[r]):
            if kind == "t":
                A[m][j] = ring.one
            else:
                for i in range(mu):
                    A[i][j] = ring.gen(c_name(i + 1, m + 1))
        mats.append(A)
    return mats


def _matmul(A, B, ring):
    n = len(A)
    out = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for j in range(n):
            acc = ring.zero
            for k in range(n):
                if Ai[k] and B[k][j]:
                    acc = acc + Ai[k] * B[k][j]
            out[i][j] = acc
    return out


def commutator_entries(O: OrderIdeal, B: BorderStructure | None = None, ring: RingSpec | None = None) -> list:
    """Nonzero commutator entries, deduplicated, in (r, s, row, col) order."""
    B = B or border(O)
    ring = ring or c_ring(O, B)
    mats = generic_mult_matrices(O, B, ring)
    seen = set()
    out = []
    for r in range(O.n):
        for s in range(r + 1, O.n):
            P = _matmul(mats[r], mats[s], ring)
            Q = _matmul(mats[s], mats[r], ring)
            for i, j in product(range(O.mu), repeat=2):
                e = P[i][j] - Q[i][j]
                if e and e not in seen:
                    seen.add(e)
                    out.append(e)
    return out


def bbs_ideal(O: OrderIdeal) -> Ideal:
    ring = c_ring(O)
    return Ideal(ring, commutator_entries(O, ring=ring))


@dataclass
class BBSchemeData:
    order_ideal: OrderIdeal
    border: BorderStructure
    ring: RingSpec
    matrices: list
    ideal: Ideal
    weights: dict = field(default_factory=dict)

    @property
    def c0(self) -> tuple:
        return tuple(v for v, w in self.weights.items() if w == 0)

    @property
    def cplus(self) -> tuple:
        return tuple(v for v, w in self.weights.items() if w > 0)

    @property
    def maxdeg(self) -> bool:
        return all(w >= 0 for w in self.weights.values())

    def positive_ring(self) -> RingSpec:
        """``K[C0][C+]``: weight-zero variables become parameters."""
        if not self.maxdeg:
            raise ValueError("the arrow grading has negative weights")
        cp = self.cplus
        return RingSpec(self.c0, cp, tuple(self.weights[v] for v in cp))

    def summary(self) -> dict:
        return {
            "order_ideal": str(self.order_ideal),
            "border": str(self.border),
            "mu": self.order_ideal.mu,
            "nu": self.border.nu,
            "num_c": len(self.weights),
            "weights": list(self.weights.values()),
            "maxdeg": self.maxdeg,
            "num_generators": len(self.ideal.generators),
            "C0": list(self.c0),
            "C+": list(self.cplus),
        }


def build_scheme(O: OrderIdeal) -> BBSchemeData:
    B = border(O)
    ring = c_ring(O, B)
    mats = generic_mult_matrices(O, B, ring)
    gens = commutator_entries(O, B, ring)
    return BBSchemeData(O, B, ring, mats, Ideal(ring, gens), arrow_grading(O, B))


def load_order_ideal(path_or_text: str) -> OrderIdeal:
    """JSON: a list of exponent vectors, or ``{"n": n, "terms": [...]}``."""
    try:
        with open(path_or_text) as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        data = json.loads(path_or_text)
    if isinstance(data, dict):
        return validate_order_ideal(data["terms"], data.get("n"))
    return validate_order_ideal(data)


# ---------------------------------------------------------------------------
# multigrading and Z-separating re-embedding


def multidegrees(O: OrderIdeal, B: BorderStructure | None = None) -> dict:
    """``mdeg c_ij = exp(b_j) - exp(t_i)`` in ``Z^n``."""
    B = B or border(O)
    return {
        c_name(i, j): tuple(x - y for x, y in zip(b, t))
        for i, t in enumerate(O.terms, 1)
        for j, b in enumerate(B.terms, 1)
    }


def positive_functional(mdegs: dict, search: int = 12) -> tuple:
    """A small integer vector ``lam`` with ``lam . mdeg(c) > 0`` for all ``c``."""
    vals = list(set(mdegs.values()))
    n = len(vals[0])
    best = None
    for lam in product(range(1, search + 1), repeat=n):
        if all(sum(a * b for a, b in zip(lam, v)) > 0 for v in vals):
            s = sum(lam)
            if best is None or s < best[0]:
                best = (s, lam)
    if best is None:
        raise ValueError("no positive functional found in the search box")
    return best[1]


def linear_part(f: Polynomial) -> dict:
    """Degree-one terms of ``f`` as ``{variable index: coefficient}``."""
    return {m.index(1): c for m, c in f.terms.items() if sum(m) == 1}


def linear_span_dimension(gens: Sequence[Polynomial]) -> int:
    """Dimension of the span of the linear parts (cotangent data at the origin)."""
    from .matrices import ScalarMatrix

    if not gens:
        return 0
    n = gens[0].ring.n
    rows = []
    for g in gens:
        lp = linear_part(g)
        if lp:
            rows.append([lp.get(i, 0) for i in range(n)])
    return ScalarMatrix.of(rows).rank() if rows else 0


@dataclass
class Reembedding:
    """``phi: z_i -> h_i(Y)`` with ``J = phi(I)`` in ``K[Y]``."""

    z: tuple
    y_ring: RingSpec
    images: dict
    ideal: Ideal


def z_separating_reembedding(data: BBSchemeData, z: Sequence[str]) -> Reembedding:
    """Solve the generators for the ``z`` variables and substitute.

    Generators are grouped by multidegree; inside one group the linear parts
    are row-reduced with the ``z`` columns first, which yields relations
    ``z_i - h_i`` whose remaining terms only involve variables of strictly
    smaller functional degree.  Substituting recursively eliminates all ``z``.
    Raises ``ValueError`` when the tuple is not separating.
    """
    ring = data.ring
    z = tuple(z)
    zset = set(z)
    mdeg = multidegrees(data.order_ideal, data.border)

    def gen_mdeg(g):
        m = next(iter(g.terms))
        tot = [0] * data.order_ideal.n
        for v, e in zip(ring.names, m):
            if e:
                for k in range(len(tot)):
                    tot[k] += e * mdeg[v][k]
        return tuple(tot)

    groups: dict = {}
    for g in data.ideal.generators:
        groups.setdefault(gen_mdeg(g), []).append(g)

    def unit(v):
        i = ring.index(v)
        return tuple(1 if k == i else 0 for k in range(ring.n))

    relation: dict = {}
    for _, gens in sorted(groups.items()):
        polys = list(gens)
        pivots: list = []
        for v in z:
            e = unit(v)
            taken = [k for k, _ in pivots]
            piv = next((k for k, p in enumerate(polys) if k not in taken and e in p.terms), None)
            if piv is None:
                continue
            p = polys[piv] * (ring.domain.one / polys[piv].terms[e])
            polys[piv] = p
            for k in range(len(polys)):
                if k != piv and e in polys[k].terms:
                    polys[k] = polys[k] - p * polys[k].terms[e]
            pivots.append((piv, v))
        for piv, v in pivots:
            if v in relation:
                raise ValueError(f"{v} is isolated by two independent relations")
            relation[v] = ring.gen(v) - polys[piv]
    missing = [v for v in z if v not in relation]
    if missing:
        raise ValueError(f"no linear relation isolates {missing}")

    # substitution order: each z after the z's its relation mentions
    deps = {v: {w for w in relation[v].used_names() if w in zset} for v in z}
    ordered: list = []
    state: dict = {}

    def visit(v, trail):
        if state.get(v) == 2:
            return
        if state.get(v) == 1:
            raise ValueError(f"cyclic dependency among {trail + [v]}; tuple is not separating")
        state[v] = 1
        for w in sorted(deps[v]):
            visit(w, trail + [v])
        state[v] = 2
        ordered.append(v)

    for v in z:
        visit(v, [])

    y_names = tuple(v for v in ring.names if v not in zset)
    y_ring = RingSpec((), y_names, tuple(ring.weights[ring.index(v)] for v in y_names))
    images: dict = {}
    for v in ordered:
        h = relation[v]
        subs = {w: images[w] for w in h.used_names() if w in zset}
        ident = {w: y_ring.gen(w) for w in h.used_names() if w not in zset}
        images[v] = h.substitute({**subs, **ident}, y_ring)
    full = dict(images)
    for w in y_names:
        full[w] = y_ring.gen(w)
    J = Ideal(y_ring, [g.substitute(full, y_ring) for g in data.ideal.generators])
    return Reembedding(z, y_ring, images, J)


def lift_point(data: BBSchemeData, re: Reembedding, values: dict) -> dict:
    """Full coordinates of the point of the scheme over the given ``Y``-values."""
    out = {k: values[k] for k in re.y_ring.names}
    for v, h in re.images.items():
        out[v] = h.evaluate({k: values[k] for k in re.y_ring.names})
    return out


def degrevlex_order() -> TermOrder:
    return TermOrder.degrevlex()
