import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gradloci.fixtures import EX3_2_P1, EX3_2_P2, ex3_2_algebra
from gradloci.matrices import generic_rank
from gradloci.polyring import QQ, RingSpec, w_degree
from gradloci.posalg import (
    InvalidAlgebra,
    annihilates,
    coefficient_rank_at,
    connect_points,
    connecting_curve,
    degree_blocks,
    fiber_dimension,
    generic_fiber_dimension,
    lin_A,
    lin_coeff_matrix,
    lin_coefficients,
    local_invariants,
    specialized_lin_matrix,
    validate,
)
from strategies import ALG_RING, algebras, homogeneous, small_ints, to_sympy

R = ALG_RING
SYMS = sympy.symbols("a b x y z")


points = st.tuples(small_ints, small_ints)


# ---------------------------------------------------------------------------
# validation


def test_rejects_nonpositive_weight():
    with pytest.raises(InvalidAlgebra) as err:
        validate(RingSpec(("a",), ("x", "y"), (1, 0)), ["x"])
    assert err.value.reason == "weights" and err.value.witness == "y"


def test_rejects_inhomogeneous_generator():
    with pytest.raises(InvalidAlgebra) as err:
        validate(RingSpec(("a",), ("x", "y"), (1, 2)), ["x + y"])
    assert err.value.reason == "inhomogeneous"


def test_rejects_base_element():
    with pytest.raises(InvalidAlgebra) as err:
        validate(RingSpec(("a",), ("x",)), ["x^2", "a - 1"])
    assert err.value.reason == "base"


def test_elimination_certificate_agrees():
    PA = validate(RingSpec(("a", "b"), ("x", "y")), ["a*x - b*y", "x*y"], check_elimination=True)
    assert len(PA.generators) == 2


@settings(max_examples=25)
@given(algebras())
def test_random_homogeneous_algebras_validate_by_elimination(PA):
    validate(PA.ring, PA.generators, check_elimination=True)


# ---------------------------------------------------------------------------
# linear parts


@given(homogeneous())
def test_lin_coefficients_reassemble_lin_part(f):
    coeffs = lin_coefficients(f)
    total = R.zero
    for c, v in zip(coeffs, R.vars):
        total = total + c.to_ring(R) * R.gen(v)
    assert total == lin_A(f)
    # the rest of f has no term that is linear in the fiber variables
    rest = f - lin_A(f)
    assert all(sum(m[R.m :]) != 1 for m in rest.terms)


@given(algebras())
def test_coefficient_matrix_is_block_diagonal(PA):
    M = lin_coeff_matrix(PA)
    for i, g in enumerate(PA.generators):
        d = w_degree(g)
        for j, w in enumerate(PA.ring.weights):
            if w != d:
                assert not M.rows[i][j]
    blocks = degree_blocks(PA)
    assert sum(generic_rank(B) for B in blocks.values()) == generic_rank(M)


@given(algebras(), points)
def test_rank_two_routes(PA, gamma):
    """Specialize-then-rank against rank of the specialized generators' linear parts."""
    assert coefficient_rank_at(PA, gamma) == specialized_lin_matrix(PA, gamma).rank()


@given(algebras(), points)
def test_cotangent_dimensions_against_jacobian(PA, gamma):
    exprs = [to_sympy(g, SYMS) for g in PA.generators] or [sympy.Integer(0)]
    J = sympy.Matrix(exprs).jacobian(SYMS)
    at0 = J.subs({SYMS[0]: gamma[0], SYMS[1]: gamma[1], SYMS[2]: 0, SYMS[3]: 0, SYMS[4]: 0})
    inv = local_invariants(PA, gamma)
    assert inv.cot_dim_zero_point == PA.n - at0.rank()
    assert inv.cot_dim_fiber_origin == PA.k - at0[:, 2:].rank()


@settings(max_examples=30)
@given(algebras(), points)
def test_fiber_dimension_bounds(PA, gamma):
    inv = local_invariants(PA, gamma)
    assert inv.fiber_dim is not None
    # the fiber is a cone, so its dimension is bounded by the tangent space at the origin
    assert inv.fiber_dim <= inv.cot_dim_fiber_origin
    assert inv.fiber_dim >= generic_fiber_dimension(PA)


def test_generic_fiber_dimension_example():
    PA = validate(RingSpec(("a",), ("x", "y")), ["a*x", "x*y"])
    assert generic_fiber_dimension(PA) == 1
    assert fiber_dimension(PA, (0,)) == 1
    PA2 = validate(RingSpec(("a",), ("x", "y")), ["a*x^2 + y^2"])
    assert fiber_dimension(PA2, (0,)) == 1
    assert generic_fiber_dimension(PA2) == 1


# ---------------------------------------------------------------------------
# connecting curves


LINE = validate(RingSpec(("a", "b"), ("x", "y")), ["a*x + b*y"])


@given(small_ints, small_ints, small_ints, small_ints, small_ints, small_ints)
def test_connecting_paths_on_a_hyperplane_family(a1, b1, t1, a2, b2, t2):
    p1 = (a1, b1, b1 * t1, -a1 * t1)
    p2 = (a2, b2, b2 * t2, -a2 * t2)
    path = connect_points(LINE, p1, p2)
    assert path.is_continuous()
    assert path.start == tuple(map(QQ.convert, p1))
    assert path.end == tuple(map(QQ.convert, p2))
    for seg in path.segments:
        assert annihilates(LINE, seg)
        assert seg.at(0) == seg.start and seg.at(1) == seg.end


def test_connecting_curve_rejects_points_off_the_scheme():
    with pytest.raises(ValueError, match="not on Spec"):
        connecting_curve(LINE, (1, 1, 1, 1))


def test_weighted_path():
    PA = ex3_2_algebra()
    path = connect_points(PA, EX3_2_P1, EX3_2_P2)
    assert [s.kind for s in path.segments] == ["curve", "base", "curve"]
    assert all(annihilates(PA, s) for s in path.segments)
    c = connecting_curve(PA, EX3_2_P2)
    t = next(iter(c.images.values())).ring.gen("t")
    for v, w in zip(PA.ring.vars, PA.ring.weights):
        img = c.images[v]
        assert not img or img == img.leading_coeff() * t**w
