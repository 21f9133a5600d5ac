"""Hypothesis strategies shared by the property tests."""

from contextlib import contextmanager

from hypothesis import assume
from hypothesis import strategies as st

from gradloci.ideals import Budget, BudgetExceeded, get_default_budget, set_default_budget
from gradloci.polyring import Polynomial, RingSpec
from gradloci.posalg import validate

small_ints = st.integers(min_value=-4, max_value=4)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def monomials(nvars, max_exp=2):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def polynomials(ring: RingSpec, max_terms=4, max_exp=2, coeffs=small_ints):
    return st.dictionaries(monomials(ring.n, max_exp), coeffs, max_size=max_terms).map(lambda d: Polynomial(ring, d))


def homogeneous_polynomials(ring: RingSpec, degree, max_terms=3, coeffs=small_ints):
    """Standard-graded homogeneous polynomials of a fixed degree."""

    def mons(n, d):
        if n == 1:
            return [(d,)]
        return [(i,) + rest for i in range(d + 1) for rest in mons(n - 1, d - i)]

    pool = mons(ring.n, degree)
    return st.dictionaries(st.sampled_from(pool), coeffs, max_size=max_terms).map(lambda d: Polynomial(ring, d))


def to_sympy(f, symbols):
    import sympy

    expr = sympy.Integer(0)
    for mono, c in f.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, e in zip(symbols, mono):
            term *= s**e
        expr += term
    return expr


# weighted algebras over K[a, b] with fiber weights (1, 1, 2)
ALG_RING = RingSpec(("a", "b"), ("x", "y", "z"), (1, 1, 2))
FIBER_MONOS = {
    1: [(1, 0, 0), (0, 1, 0)],
    2: [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)],
    3: [(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (1, 0, 1), (0, 1, 1)],
}
BASE_MONOS = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]


@st.composite
def homogeneous(draw, degree=None, max_degree=3):
    d = degree or draw(st.sampled_from(range(1, max_degree + 1)))
    terms = draw(
        st.dictionaries(
            st.tuples(st.sampled_from(BASE_MONOS), st.sampled_from(FIBER_MONOS[d])),
            small_ints,
            min_size=1,
            max_size=4,
        )
    )
    return Polynomial(ALG_RING, {a + x: c for (a, x), c in terms.items()})


@st.composite
def algebras(draw, max_gens=3, max_degree=3):
    gens = [g for g in draw(st.lists(homogeneous(max_degree=max_degree), min_size=1, max_size=max_gens)) if g]
    return validate(ALG_RING, gens)


@contextmanager
def bounded(seconds=5.0):
    """Discard examples whose Gröbner computations exceed ``seconds``."""
    old = get_default_budget()
    set_default_budget(Budget(max_seconds=seconds))
    try:
        yield
    except BudgetExceeded:
        assume(False)
    finally:
        set_default_budget(old)
