import json

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gradloci.ideals import ideals_equal, radical_membership
from gradloci.matrices import (
    PolyMatrix,
    ScalarMatrix,
    block_diag,
    determinant,
    generic_rank,
    generic_rank_by_minors,
    minors,
    minors_ideal,
    specialize_matrix,
)
from gradloci.polyring import RingSpec
from strategies import polynomials, rationals, small_ints, to_sympy

A = RingSpec(("a", "b"), ())
SA = sympy.symbols("a b")


def poly_matrices(max_rows=4, max_cols=4):
    entry = polynomials(A, max_terms=2, max_exp=2, coeffs=st.integers(-2, 2))
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(lambda rows: PolyMatrix(A, rows))


def test_rejects_fiber_variables():
    R = RingSpec(("a",), ("x",))
    with pytest.raises(ValueError):
        PolyMatrix(R, [["x"]])


def test_json_roundtrip():
    M = PolyMatrix(A, [["a + 1", "0"], ["b^2", "a*b"]])
    assert PolyMatrix.from_json(A, M.to_json()) == M
    assert json.loads(M.to_json())[0] == ["a + 1", "0"]


@given(poly_matrices(4, 4))
def test_determinant_matches_sympy(M):
    n = min(M.shape)
    sq = M.submatrix(range(n), range(n))
    ours = determinant(sq, A)
    theirs = sympy.Matrix([[to_sympy(x, SA) for x in r] for r in sq]).det(method="berkowitz")
    assert sympy.expand(to_sympy(ours, SA) - theirs) == 0


@given(poly_matrices(4, 4))
def test_rank_matches_minor_enumeration(M):
    assert generic_rank(M) == generic_rank_by_minors(M)


@given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=1, max_size=4))
def test_scalar_rank_matches_sympy(rows):
    want = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rank()
    assert ScalarMatrix.of(rows).rank() == want


@given(poly_matrices(4, 4), st.tuples(small_ints, small_ints))
def test_specialization_never_raises_rank(M, pt):
    assert specialize_matrix(M, pt).rank() <= generic_rank(M)


@given(poly_matrices(3, 3))
def test_minor_ideals_form_a_chain(M):
    """Every (r+1)-minor lies in the ideal of r-minors (Laplace expansion)."""
    for r in range(1, min(M.shape)):
        Ir = minors_ideal(M, r)
        for g in minors(M, r + 1):
            assert Ir.contains(g)


def test_minor_chain_radicals():
    M = PolyMatrix(A, [["a", "b", "0"], ["0", "a", "b"], ["b", "0", "a"]])
    I2 = minors_ideal(M, 2)
    for g in minors(M, 3):
        assert radical_membership(g, I2)


def test_minors_ideal_zero_size_is_unit():
    M = PolyMatrix(A, [["a"]])
    assert minors_ideal(M, 0).is_unit()


def test_block_diagonal_minors_product():
    M1 = PolyMatrix(A, [["a", "b"], ["b", "a"], ["1", "a"]])
    M2 = PolyMatrix(A, [["a^2", "b"]])
    D = block_diag(M1, M2)
    assert D.shape == (4, 4)
    assert ideals_equal(minors_ideal(D, 3), minors_ideal(M1, 2) * minors_ideal(M2, 1))


def test_bareiss_large_determinant():
    rows = [[f"a^{(i * j) % 3} + {i - j}*b" for j in range(5)] for i in range(5)]
    M = PolyMatrix(A, rows)
    theirs = sympy.Matrix([[to_sympy(x, SA) for x in r] for r in M.rows]).det(method="berkowitz")
    assert sympy.expand(to_sympy(determinant(M.rows, A), SA) - theirs) == 0


def test_specialize_matrix_shape_check():
    M = PolyMatrix(A, [["a", "b"]])
    with pytest.raises(ValueError):
        specialize_matrix(M, (1,))
    assert specialize_matrix(M, (2, 0)).rows == ((2, 0),)
