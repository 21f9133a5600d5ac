from itertools import combinations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gradloci.ideals import (
    Budget,
    BudgetExceeded,
    Ideal,
    eliminate,
    groebner,
    ideal_contains,
    ideal_quotient,
    ideals_equal,
    intersect,
    is_groebner,
    krull_dimension,
    minimal_generators,
    radical_membership,
    s_polynomial,
)
from gradloci.polyring import RingSpec, TermOrder
from strategies import bounded, homogeneous_polynomials, polynomials, to_sympy

R3 = RingSpec((), ("x", "y", "z"))
S3 = sympy.symbols("x y z")
DRL = TermOrder.degrevlex()
LEX = TermOrder.lex()


def sympy_gb(gens, order):
    exprs = [to_sympy(g, S3) for g in gens]
    G = sympy.groebner(exprs, *S3, order=order)
    out = set()
    for g in G.exprs:
        p = sympy.Poly(g, *S3)
        out.add(sympy.expand(p.as_expr() / p.coeffs(order=order)[0]))
    return out


def ours_as_sympy(gb):
    return {sympy.expand(to_sympy(g, S3)) for g in gb.elements}


# ---------------------------------------------------------------------------
# Gröbner bases against sympy


@given(st.lists(polynomials(R3, max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_reduced_gb_matches_sympy_grevlex(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    gb = groebner(Ideal(R3, gens), DRL)
    assert ours_as_sympy(gb) == sympy_gb(gens, "grevlex")


@given(st.lists(polynomials(R3, max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_reduced_gb_matches_sympy_lex(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    gb = groebner(Ideal(R3, gens), LEX)
    assert ours_as_sympy(gb) == sympy_gb(gens, "lex")


@given(st.lists(polynomials(R3, max_terms=3, max_exp=3), min_size=1, max_size=4))
def test_every_s_polynomial_reduces_to_zero(gens):
    I = Ideal(R3, gens)
    with bounded():
        gb = groebner(I, DRL)
    assert is_groebner(gb.elements, DRL)
    for f, g in combinations(gb.elements, 2):
        assert not gb.reduce(s_polynomial(f, g, DRL))
    for g in I.generators:
        assert gb.contains(g)


def test_is_groebner_detects_non_basis():
    assert not is_groebner([R3.parse("x^2 - y"), R3.parse("x*y - 1")], LEX)


def test_weighted_order_with_parameters():
    R = RingSpec(("a",), ("x", "y"), (1, 2))
    I = Ideal(R, ["a*x^2 + y", "x*y"])
    gb = groebner(I)
    assert is_groebner(gb.elements, gb.order)


def test_unit_and_zero():
    assert Ideal(R3, ["x", "x - 1"]).is_unit()
    assert Ideal(R3, []).is_zero()
    assert Ideal.zero(R3).groebner().is_zero


def test_budget_exceeded():
    I = Ideal(R3, ["x^3 - y*z", "y^3 - x*z", "z^3 - x*y", "x*y*z - 1"])
    with pytest.raises(BudgetExceeded):
        groebner(I, DRL, Budget(max_pairs=1))


# ---------------------------------------------------------------------------
# Krull dimension against a brute-force independent-set oracle


def independent_set_dimension(monos, nvars):
    """Largest set of variables containing the support of no generator."""
    if any(not any(m) for m in monos):
        return None
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


@st.composite
def monomial_ideals(draw):
    n = draw(st.integers(1, 10))
    monos = draw(st.lists(st.tuples(*[st.integers(0, 2)] * n), min_size=0, max_size=8))
    return n, monos


@given(monomial_ideals())
def test_krull_dimension_monomial_oracle(data):
    n, monos = data
    ring = RingSpec((), tuple(f"v{i}" for i in range(n)))
    I = Ideal(ring, [ring.monomial(m) for m in monos])
    assert krull_dimension(I) == independent_set_dimension(monos, n)


@given(st.lists(polynomials(R3, max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_krull_dimension_via_sympy_leading_terms(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    G = sympy.groebner([to_sympy(g, S3) for g in gens], *S3, order="grevlex")
    lms = [sympy.Poly(g, *S3).monoms(order="grevlex")[0] for g in G.exprs]
    assert krull_dimension(Ideal(R3, gens)) == independent_set_dimension(lms, 3)


@pytest.mark.parametrize(
    "gens, dim",
    [
        (["x*y", "x*z"], 2),
        (["x^2 - y*z", "y^2 - x*z"], 1),
        (["x - 1", "y - 2", "z"], 0),
        (["x", "x - 1"], None),
        ([], 3),
    ],
)
def test_krull_dimension_examples(gens, dim):
    assert krull_dimension(Ideal(R3, gens)) == dim


# ---------------------------------------------------------------------------
# elimination, intersection, quotients


def test_eliminate_twisted_cubic():
    R = RingSpec((), ("t", "x", "y", "z"))
    I = Ideal(R, ["x - t", "y - t^2", "z - t^3"])
    E = eliminate(I, ["t"])
    want = Ideal(E.ring, ["y - x^2", "z - x*y"])
    assert ideals_equal(E, want)


def test_eliminate_cusp():
    R = RingSpec((), ("t", "x", "y"))
    E = eliminate(Ideal(R, ["x - t^2", "y - t^3"]), ["t"])
    assert ideals_equal(E, Ideal(E.ring, ["x^3 - y^2"]))


@st.composite
def monomial_lists(draw):
    return draw(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3))


@given(monomial_lists(), monomial_lists())
def test_intersection_of_monomial_ideals(a, b):
    I = Ideal(R3, [R3.monomial(m) for m in a])
    J = Ideal(R3, [R3.monomial(m) for m in b])
    lcms = [R3.monomial(tuple(max(p, q) for p, q in zip(u, v))) for u in a for v in b]
    assert ideals_equal(intersect(I, J), Ideal(R3, lcms))


@given(st.lists(homogeneous_polynomials(R3, 2), min_size=1, max_size=2), st.lists(homogeneous_polynomials(R3, 2), min_size=1, max_size=2))
def test_intersection_is_contained_in_both(a, b):
    I, J = Ideal(R3, a), Ideal(R3, b)
    K = intersect(I, J)
    assert ideal_contains(I, K) and ideal_contains(J, K)
    assert ideal_contains(K, I * J)


def test_ideal_quotient_monomial():
    I = Ideal(R3, ["x^2*y", "x*y^2"])
    assert ideals_equal(ideal_quotient(I, R3.parse("x")), Ideal(R3, ["x*y", "y^2"]))


def test_containment_direction():
    big = Ideal(R3, ["x"])
    small = Ideal(R3, ["x^2"])
    assert ideal_contains(big, small)
    assert not ideal_contains(small, big)


# ---------------------------------------------------------------------------
# radical membership against direct power search


def power_in(f, I, top=6):
    gb = I.groebner(DRL)
    p = f.ring.one
    for _ in range(top):
        p = p * f
        if gb.contains(p):
            return True
    return False


@pytest.mark.parametrize(
    "gens, f, expected",
    [
        (["x^2", "y^3"], "x + y", True),
        (["x^2", "y^3"], "x + z", False),
        (["x*y"], "x + y", False),
        (["x^3 - y^2"], "x^3 - y^2", True),
        (["x^2*y", "y^2"], "x*y", True),
        (["(x - y)^3", "z^2"], "x - y + z", True),
    ],
)
def test_radical_membership_matches_power_search(gens, f, expected):
    I = Ideal(R3, gens)
    f = R3.parse(f)
    assert radical_membership(f, I) == expected
    assert power_in(f, I) == expected


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3), st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)))
def test_radical_membership_monomial(monos, m):
    I = Ideal(R3, [R3.monomial(t) for t in monos])
    f = R3.monomial(m)
    # f is in Rad(I) iff supp(g) ⊆ supp(f) for some generator g
    want = any(all(not e or mm for e, mm in zip(t, m)) for t in monos)
    assert radical_membership(f, I) == want


# ---------------------------------------------------------------------------
# minimal homogeneous generators


def test_minimal_generators_drops_redundant():
    I = Ideal(R3, ["x^2", "x*y", "x^2 + x*y", "x^3", "y^3 + x*y*z"])
    F = minimal_generators(I)
    assert len(F) == 3
    assert ideals_equal(Ideal(R3, F), I)


def test_minimal_generators_with_parameters():
    R = RingSpec(("a",), ("x", "y"))
    I = Ideal(R, ["a*x", "x", "a*y^2", "x*y"])
    F = minimal_generators(I)
    assert ideals_equal(Ideal(R, F), I)
    assert len(F) == 2


@given(st.lists(st.one_of(homogeneous_polynomials(R3, 1), homogeneous_polynomials(R3, 2)), min_size=1, max_size=5))
def test_minimal_generators_property(gens):
    I = Ideal(R3, gens)
    if not I.generators:
        return
    F = minimal_generators(I)
    assert ideals_equal(Ideal(R3, F), I)
    for i in range(len(F)):
        rest = Ideal(R3, F[:i] + F[i + 1 :])
        assert not rest.contains(F[i])


def test_time_budget_interrupts_long_reductions():
    import time

    # cyclic-6 needs well over ten seconds unbudgeted
    n = 6
    v = [f"x{i}" for i in range(n)]
    R = RingSpec((), tuple(v))
    gens = [" + ".join("*".join(v[(i + j) % n] for j in range(k)) for i in range(n)) for k in range(1, n)]
    gens.append("*".join(v) + " - 1")
    t = time.monotonic()
    with pytest.raises(BudgetExceeded):
        groebner(Ideal(R, gens), budget=Budget(max_seconds=1.0))
    assert time.monotonic() - t < 5
