"""Sparse exact multivariate polynomials over Q or over Q(a_1, ..., a_m).

A :class:`RingSpec` describes the tower ``A = K[a_1..a_m] ⊂ P = A[x_1..x_k]``:
parameter names come first in every exponent vector, fiber variables after
them.  Parameters always carry weight 0, fiber variables carry the weights
``W``.  Polynomials are immutable maps ``exponent tuple -> coefficient``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from operator import add
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

__all__ = [
    "QQ",
    "FractionField",
    "RingSpec",
    "TermOrder",
    "Polynomial",
    "ParseError",
    "parse_poly",
    "w_degree",
    "partial_derivative",
    "specialize",
]


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# coefficient domains


class _Rationals:
    """Exact rationals backed by ``gmpy2.mpq``."""

    name = "QQ"
    zero = mpq(0)
    one = mpq(1)

    def convert(self, value):
        if isinstance(value, type(self.zero)):
            return value
        if isinstance(value, str):
            return mpq(value.strip())
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return mpq(int(value.numerator), int(value.denominator))
        return mpq(value)

    def to_str(self, c) -> str:
        return str(c)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, _Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = _Rationals()


class FractionField:
    """Rational functions in ``params`` over Q, normalised by sympy's ``field``.

    Elements are sympy ``FracElement`` objects, which keep numerator and
    denominator coprime with a canonical denominator, so structural equality
    is mathematical equality.
    """

    def __init__(self, params: Sequence[str]):
        from sympy import QQ as SQQ
        from sympy.polys.fields import field as sympy_field

        self.params = tuple(params)
        self._field, *gens = sympy_field(",".join(self.params), SQQ)
        if len(self.params) == 1 and gens and isinstance(gens[0], tuple):
            gens = list(gens[0])
        self.gens = dict(zip(self.params, gens))
        self.zero = self._field.zero
        self.one = self._field.one
        self.name = f"QQ({','.join(self.params)})"

    def convert(self, value):
        if isinstance(value, type(self.zero)) and value.field == self._field:
            return value
        if isinstance(value, Polynomial):
            out = self.zero
            for mono, c in value.terms.items():
                t = self._field(int(c.numerator)) / int(c.denominator)
                for name, e in zip(value.ring.names, mono):
                    if e:
                        t *= self.gens[name] ** e
                out += t
            return out
        c = QQ.convert(value)
        return self._field(int(c.numerator)) / int(c.denominator)

    def to_str(self, c) -> str:
        s = str(c.as_expr()).replace("**", "^")
        return f"({s})"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, FractionField) and other.params == self.params

    def __hash__(self):
        return hash(("frac", self.params))


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on exponent tuples of a fixed length.

    ``kind`` is one of ``lex``, ``degrevlex``, ``wdegrevlex`` (weighted degree,
    then degrevlex) or ``block``.  A block order compares the sub-exponents of
    ``blocks[0]`` first with ``inner[0]``, then ``blocks[1]`` with ``inner[1]``
    and so on; the index groups must partition the variables.
    """

    kind: str
    weights: tuple = ()
    blocks: tuple = ()
    inner: tuple = ()

    @staticmethod
    def lex() -> "TermOrder":
        return TermOrder("lex")

    @staticmethod
    def degrevlex() -> "TermOrder":
        return TermOrder("degrevlex")

    @staticmethod
    def weighted(weights: Sequence[int]) -> "TermOrder":
        return TermOrder("wdegrevlex", tuple(int(w) for w in weights))

    @staticmethod
    def block(blocks: Sequence[Sequence[int]], inner: Sequence["TermOrder"] | None = None) -> "TermOrder":
        blocks = tuple(tuple(b) for b in blocks)
        if inner is None:
            inner = tuple(TermOrder.degrevlex() for _ in blocks)
        if len(inner) != len(blocks):
            raise ValueError("one inner order per block")
        return TermOrder("block", (), blocks, tuple(inner))

    def key(self, nvars: int):
        """Return a function mapping a monomial to a sort key (larger is bigger)."""
        return _key_function(self, nvars)

    def degree(self, mono) -> int:
        """Grading used by the pair-selection strategy."""
        if self.kind == "wdegrevlex" and any(self.weights):
            return sum(w * e for w, e in zip(self.weights, mono))
        return sum(mono)


def _raw_key(order: TermOrder, nvars: int):
    kind = order.kind
    if kind == "lex":
        return lambda m: m
    if kind == "degrevlex":
        return lambda m: (sum(m), tuple([-e for e in reversed(m)]))
    if kind == "wdegrevlex":
        w = order.weights
        if len(w) != nvars:
            raise ValueError(f"weight vector has length {len(w)}, ring has {nvars} variables")

        def k(m):
            return (sum([a * b for a, b in zip(w, m)]), sum(m), tuple([-e for e in reversed(m)]))

        return k
    if kind == "block":
        seen = sorted(i for b in order.blocks for i in b)
        if seen != list(range(nvars)):
            raise ValueError("block order must partition the variables")
        parts = [(b, _raw_key(o, len(b))) for b, o in zip(order.blocks, order.inner)]

        def k(m):
            return tuple(f(tuple([m[i] for i in b])) for b, f in parts)

        return k
    raise ValueError(f"unknown order kind {kind!r}")


@lru_cache(maxsize=None)
def _key_function(order: TermOrder, nvars: int):
    raw = _raw_key(order, nvars)
    cache: dict = {}

    def key(m):
        try:
            return cache[m]
        except KeyError:
            v = cache[m] = raw(m)
            return v

    return key


# ---------------------------------------------------------------------------
# rings


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\[\s*\d+(?:\s*,\s*\d+)*\s*\])?")


@dataclass(frozen=True)
class RingSpec:
    """The polynomial ring ``A[X]`` with ``A = K[params]`` and weighted ``X``."""

    params: tuple = ()
    vars: tuple = ()
    weights: tuple = ()
    domain: object = field(default=QQ)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "vars", tuple(self.vars))
        w = tuple(int(x) for x in self.weights) if self.weights else (1,) * len(self.vars)
        object.__setattr__(self, "weights", w)
        if len(w) != len(self.vars):
            raise ValueError("one weight per fiber variable")
        names = self.params + self.vars
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not _NAME_RE.fullmatch(nm):
                raise ValueError(f"bad variable name {nm!r}")

    @property
    def names(self) -> tuple:
        return self.params + self.vars

    @property
    def m(self) -> int:
        return len(self.params)

    @property
    def k(self) -> int:
        return len(self.vars)

    @property
    def n(self) -> int:
        return len(self.params) + len(self.vars)

    @property
    def full_weights(self) -> tuple:
        return (0,) * self.m + self.weights

    @property
    def default_order(self) -> TermOrder:
        if any(self.full_weights):
            return TermOrder.weighted(self.full_weights)
        return TermOrder.degrevlex()

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    # constructors
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.domain.convert(c)
        return Polynomial(self, {(0,) * self.n: c} if c else {})

    def gen(self, name: str) -> "Polynomial":
        e = [0] * self.n
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.domain.one})

    def gens(self) -> list:
        return [self.gen(nm) for nm in self.names]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = self.domain.convert(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    # derived rings
    def base_ring(self) -> "RingSpec":
        """``A = K[params]`` viewed as a ring of its own."""
        return RingSpec(self.params, (), (), self.domain)

    def fiber_ring(self) -> "RingSpec":
        """``K[X]`` with the same weights."""
        return RingSpec((), self.vars, self.weights, self.domain)

    def generic_fiber_ring(self) -> "RingSpec":
        """``L[X]`` with ``L = Frac(A)``."""
        return RingSpec((), self.vars, self.weights, FractionField(self.params))

    def without(self, names: Iterable[str]) -> "RingSpec":
        drop = set(names)
        keep_vars = [(v, w) for v, w in zip(self.vars, self.weights) if v not in drop]
        return RingSpec(
            tuple(p for p in self.params if p not in drop),
            tuple(v for v, _ in keep_vars),
            tuple(w for _, w in keep_vars),
            self.domain,
        )

    def extended(self, names: Sequence[str], weights: Sequence[int] | None = None) -> "RingSpec":
        """Append fresh fiber variables."""
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        return RingSpec(self.params, self.vars + tuple(names), self.weights + weights, self.domain)

    def fresh_name(self, stem: str = "t") -> str:
        i = 0
        while True:
            nm = f"_{stem}{i}"
            if nm not in self.names:
                return nm
            i += 1

    def __str__(self):
        return f"{self.domain}[{','.join(self.params)}][{','.join(self.vars)}] W={self.weights}"


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial; ``terms`` never stores a zero coefficient."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping | None = None):
        self.ring = ring
        self.terms = {}
        self._hash = None
        conv = ring.domain.convert
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != ring.n or min(mono, default=0) < 0:
                raise ValueError(f"bad exponent vector {mono} for {ring.n} variables")
            c = conv(c)
            if c:
                self.terms[mono] = c

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # coercion
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.n, self.ring.domain.zero)

    def __len__(self):
        return len(self.terms)

    def used_names(self) -> set:
        used = set()
        for m in self.terms:
            for nm, e in zip(self.ring.names, m):
                if e:
                    used.add(nm)
        return used

    def is_param_only(self) -> bool:
        m = self.ring.m
        return all(not any(mono[m:]) for mono in self.terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self, order: TermOrder | None = None, reverse: bool = True):
        order = order or self.ring.default_order
        key = order.key(self.ring.n)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def leading_monomial(self, order: TermOrder | None = None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        order = order or self.ring.default_order
        return max(self.terms, key=order.key(self.ring.n))

    def leading_coeff(self, order: TermOrder | None = None):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        if lc == self.ring.domain.one:
            return self
        inv = self.ring.domain.one / lc
        return Polynomial._raw(self.ring, {m: c * inv for m, c in self.terms.items()})

    # arithmetic
    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.domain.convert(other)
            if not c:
                return self.ring.zero
            return Polynomial._raw(self.ring, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = tuple(map(add, m1, m2))
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.is_constant() and other:
                other = other.constant_coeff()
            else:
                return self.exact_div(other)
        c = self.ring.domain.convert(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        inv = self.ring.domain.one / c
        return self * inv

    def divmod(self, g: "Polynomial", order: TermOrder | None = None):
        """Single-divisor multivariate division: ``self = q*g + r``."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        order = order or self.ring.default_order
        key = order.key(self.ring.n)
        lm = max(g.terms, key=key)
        lc = g.terms[lm]
        q: dict = {}
        r: dict = {}
        work = dict(self.terms)
        while work:
            m = max(work, key=key)
            c = work.pop(m)
            if all(a >= b for a, b in zip(m, lm)):
                qm = tuple(a - b for a, b in zip(m, lm))
                qc = c / lc
                q[qm] = q.get(qm, 0) + qc
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    nm = tuple(map(add, gm, qm))
                    v = work.get(nm, 0) - qc * gc
                    if v:
                        work[nm] = v
                    else:
                        work.pop(nm, None)
            else:
                r[m] = c
        return Polynomial._raw(self.ring, {m: c for m, c in q.items() if c}), Polynomial._raw(self.ring, r)

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        q, r = self.divmod(g)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    # comparison
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation
    def derivative(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                nm = m[:i] + (e - 1,) + m[i + 1 :]
                out[nm] = c * e
        return Polynomial._raw(self.ring, out)

    def evaluate(self, values: Mapping[str, object] | Sequence):
        """Evaluate at a full point; returns a coefficient."""
        dom = self.ring.domain
        if isinstance(values, Mapping):
            vals = [dom.convert(values[nm]) for nm in self.ring.names]
        else:
            if len(values) != self.ring.n:
                raise ValueError("point has wrong dimension")
            vals = [dom.convert(v) for v in values]
        total = dom.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = t * v**e
            total = total + t
        return total

    def substitute(self, images: Mapping[str, "Polynomial"], target: RingSpec) -> "Polynomial":
        """Ring homomorphism sending each name to ``images[name]`` (or to the
        same-named generator of ``target`` when absent)."""
        gens = []
        for nm in self.ring.names:
            if nm in images:
                img = images[nm]
                if not isinstance(img, Polynomial):
                    img = target.const(img)
                elif img.ring != target:
                    raise ValueError(f"image of {nm} lives in the wrong ring")
                gens.append(img)
            else:
                gens.append(target.gen(nm) if nm in target.names else None)
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                if gens[i] is None:
                    raise ValueError(f"no image for variable {self.ring.names[i]!r}")
                powers[key] = gens[i] ** e
            return powers[key]

        acc: dict = {}
        for m, c in self.terms.items():
            t = target.const(c) if target.domain == self.ring.domain else target.const(c)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            for tm, tc in t.terms.items():
                v = acc.get(tm)
                acc[tm] = tc if v is None else v + tc
        return Polynomial._raw(target, {m: c for m, c in acc.items() if c})

    def to_ring(self, target: RingSpec) -> "Polynomial":
        """Re-index into ``target`` by variable name; used names must exist there."""
        if target == self.ring:
            return self
        idx = []
        for nm in self.ring.names:
            idx.append(target.names.index(nm) if nm in target.names else None)
        out = {}
        n = target.n
        dom = target.domain
        for m, c in self.terms.items():
            e = [0] * n
            for i, a in enumerate(m):
                if a:
                    j = idx[i]
                    if j is None:
                        raise ValueError(f"variable {self.ring.names[i]!r} not in target ring")
                    e[j] = a
            out[tuple(e)] = c if dom == self.ring.domain else dom.convert(c)
        return Polynomial._raw(target, out)

    # printing
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _fmt_monomial(names, mono) -> str:
    parts = []
    for nm, e in zip(names, mono):
        if e == 1:
            parts.append(nm)
        elif e:
            parts.append(f"{nm}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, order: TermOrder | None = None) -> str:
    if not f.terms:
        return "0"
    dom = f.ring.domain
    out = []
    for m, c in f.sorted_terms(order):
        mono = _fmt_monomial(f.ring.names, m)
        if dom == QQ:
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
        else:
            neg = False
            cs = dom.to_str(c)
            body = (mono if cs == "(1)" else f"{cs}*{mono}") if mono else cs
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\[\s*\d+(?:\s*,\s*\d+)*\s*\])?)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
        pos = mt.end()
        if mt.group("num") is not None:
            tokens.append(("num", int(mt.group("num"))))
        elif mt.group("name") is not None:
            tokens.append(("name", re.sub(r"\s+", "", mt.group("name"))))
        else:
            op = mt.group("op")
            tokens.append(("op", "^" if op == "**" else op))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}, got {t[1]!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        e = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return e

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    raise ParseError("division only by nonzero constants")
                acc = acc / rhs.constant_coeff()
        return acc

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            t = self.peek()
            if t == ("op", "-"):
                raise ParseError("negative exponent")
            if t[0] != "num":
                raise ParseError("exponent must be a non-negative integer literal")
            self.take()
            return base ** t[1]
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring.names:
                raise ParseError(f"unknown name {val!r}")
            return self.ring.gen(val)
        if (kind, val) == ("op", "("):
            e = self.expr()
            self.expect(")")
            return e
        if val is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    Grammar (EBNF)::

        expr   = term { ("+" | "-") term } ;
        term   = unary { ("*" | "/") unary } ;      (* "/" only by constants *)
        unary  = ("-" | "+") unary | power ;
        power  = atom [ ("^" | "**") INT ] ;
        atom   = INT | NAME | "(" expr ")" ;
        NAME   = letter { letter | digit | "_" } [ "[" INT { "," INT } "]" ] ;
    """
    if not isinstance(text, str):
        raise ParseError("expected a string")
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# graded helpers


def w_degree(f: Polynomial):
    """W-degree of ``f`` if homogeneous; raises ``ValueError`` otherwise.

    The error message lists the degrees present; :func:`w_degrees` returns
    them as a set.
    """
    degs = w_degrees(f)
    if len(degs) != 1:
        raise ValueError(f"inhomogeneous polynomial, W-degrees {sorted(degs)}")
    return next(iter(degs))


def w_degrees(f: Polynomial) -> set:
    if not f.terms:
        raise ValueError("the zero polynomial has no degree")
    w = f.ring.full_weights
    return {sum(a * b for a, b in zip(w, m)) for m in f.terms}


def is_w_homogeneous(f: Polynomial) -> bool:
    return not f.terms or len(w_degrees(f)) == 1


def partial_derivative(f: Polynomial, v: str, fiber_only: bool = False) -> Polynomial:
    if fiber_only and v not in f.ring.vars:
        raise ValueError(f"{v!r} is not a fiber variable")
    return f.derivative(v)


def specialize(f: Polynomial, point: Sequence) -> Polynomial:
    """Apply ``a_i -> gamma_i``; the result lives in the fiber ring ``K[X]``."""
    ring = f.ring
    if len(point) != ring.m:
        raise ValueError(f"point has {len(point)} coordinates, base space has {ring.m}")
    vals = [QQ.convert(g) for g in point]
    target = ring.fiber_ring()
    m = ring.m
    out: dict = {}
    for mono, c in f.terms.items():
        t = c
        for v, e in zip(vals, mono[:m]):
            if e:
                t = t * v**e
        if t:
            key = mono[m:]
            s = out.get(key)
            out[key] = t if s is None else s + t
    return Polynomial._raw(target, {k: c for k, c in out.items() if c})


def is_mpq(x) -> bool:
    return isinstance(x, type(QQ.zero)) or isinstance(x, int)


def rational(x):
    return QQ.convert(x)


