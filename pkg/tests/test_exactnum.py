"""Field arithmetic in Q(sqrt2) and the exact linear algebra under it."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bigraded import ONE, SQRT2, ZERO, ExactMatrix, Scalar, nullspace, rank, rref, span_dim

rationals = st.fractions(
    min_value=-30, max_value=30, max_denominator=12
)
scalars = st.builds(Scalar, rationals, rationals)


def exact_matrices(rows, cols, elements=scalars):
    return st.lists(
        st.lists(elements, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(lambda grid: ExactMatrix(grid, cols=cols))


# ---------------------------------------------------------------------------
# Scalar


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == Scalar(2)
    assert (ONE + SQRT2) * (ONE - SQRT2) == Scalar(-1)


def test_constructor_accepts_ints_and_fractions():
    assert Scalar(3) == Scalar(Fraction(3))
    assert Scalar(1, Fraction(1, 2)) * Scalar(0, 1) == Scalar(1, 1)
    with pytest.raises(TypeError):
        Scalar(1.5)


@given(scalars, scalars)
def test_multiplication_matches_componentwise_model(a, b):
    prod = a * b
    assert prod.r == a.r * b.r + 2 * a.s * b.s
    assert prod.s == a.r * b.s + a.s * b.r


@given(scalars, scalars, scalars)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(scalars)
def test_additive_structure(a):
    assert a + ZERO == a
    assert a - a == ZERO
    assert -(-a) == a
    assert a * ONE == a


@given(scalars)
def test_inverse_is_two_sided(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    # r^2 - 2 s^2 never vanishes for rational (r, s) != (0, 0)
    assert a * a.inverse() == ONE
    assert ONE / a == a.inverse()


def test_mixed_operand_arithmetic():
    assert 3 - Scalar(1) == Scalar(2)
    assert 2 * SQRT2 == Scalar(0, 2)
    assert SQRT2 / 2 == Scalar(0, Fraction(1, 2))
    assert 1 / SQRT2 == SQRT2 / 2
    assert Scalar(5) == 5
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert Scalar(0, 1) != 1


def test_string_forms():
    assert str(Scalar(0)) == "0"
    assert "v2" in str(SQRT2) or "2" in str(SQRT2)
    assert repr(Scalar(1, 1))


@given(scalars)
def test_json_round_trip(a):
    assert Scalar.from_json(a.to_json()) == a


def test_json_wire_format_uses_fraction_strings():
    assert Scalar(Fraction(1, 2), 3).to_json() == {"r": "1/2", "s": "3/1"}


def test_from_json_rejects_garbage():
    with pytest.raises(ValueError):
        Scalar.from_json({"r": "x/y"})
    with pytest.raises(ValueError):
        Scalar.from_json([1, 2])


# ---------------------------------------------------------------------------
# ExactMatrix


def test_constructors_and_indexing():
    z = ExactMatrix.zeros(2, 3)
    assert z.rows == 2 and z.cols == 3 and z.is_zero()
    eye = ExactMatrix.identity(3)
    assert eye[1, 1] == ONE and eye[0, 1] == ZERO
    u = ExactMatrix.unit(2, 2, 0, 1, SQRT2)
    assert u[0, 1] == SQRT2
    assert u.row(0) == (ZERO, SQRT2)
    assert u.column(1) == (SQRT2, ZERO)


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


def test_matmul_oracle_with_sqrt2_entries():
    a = ExactMatrix([[ONE, SQRT2], [ZERO, ONE]])
    b = ExactMatrix([[SQRT2, ZERO], [ONE, SQRT2]])
    prod = a @ b
    assert prod == ExactMatrix([[Scalar(0, 2), Scalar(2)], [ONE, SQRT2]])


def test_shape_mismatches():
    a = ExactMatrix.zeros(2, 3)
    b = ExactMatrix.zeros(2, 2)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a @ a


def test_transpose_trace_first_nonzero():
    m = ExactMatrix([[0, 2], [3, 4]])
    assert m.transpose() == ExactMatrix([[0, 3], [2, 4]])
    assert m.trace() == Scalar(4)
    assert m.first_nonzero() == (0, 1, Scalar(2))
    assert ExactMatrix.zeros(2, 2).first_nonzero() is None
    assert m.flatten() == (ZERO, Scalar(2), Scalar(3), Scalar(4))


@given(exact_matrices(3, 3), exact_matrices(3, 3))
def test_transpose_reverses_products(a, b):
    assert (a @ b).transpose() == b.transpose() @ a.transpose()


# ---------------------------------------------------------------------------
# row reduction


def test_rref_oracle():
    reduced, pivots = rref(ExactMatrix([[1, 1], [2, 2]]))
    assert reduced == ExactMatrix([[1, 1], [0, 0]])
    assert pivots == (0,)


def test_rref_with_irrational_pivot():
    reduced, pivots = rref(ExactMatrix([[SQRT2, ONE]]))
    assert reduced == ExactMatrix([[ONE, SQRT2 / 2]])
    assert pivots == (0,)


@given(exact_matrices(3, 4))
def test_rref_idempotent(m):
    reduced, pivots = rref(m)
    again, pivots2 = rref(reduced)
    assert again == reduced
    assert pivots2 == pivots
    for row_idx, col in enumerate(pivots):
        assert reduced[row_idx, col] == ONE


def test_nullspace_oracle():
    vecs = nullspace(ExactMatrix([[1, -1]]))
    assert len(vecs) == 1
    assert vecs[0] == ExactMatrix([[1], [1]])


@given(exact_matrices(3, 4, elements=st.builds(Scalar, rationals)))
def test_nullspace_vectors_annihilate(m):
    vecs = nullspace(m)
    assert len(vecs) == m.cols - rank(m)
    for v in vecs:
        assert (m @ v).is_zero()


def test_rank_oracles():
    assert rank(ExactMatrix.identity(4)) == 4
    assert rank(ExactMatrix.zeros(2, 5)) == 0
    assert rank(ExactMatrix([[1, 2], [2, 4], [0, 1]])) == 2


def test_span_dim_counts_independent_matrices():
    a = ExactMatrix([[1, 0], [0, 0]])
    b = ExactMatrix([[0, 1], [0, 0]])
    assert span_dim([a, b, a + b]) == 2
    assert span_dim([]) == 0
    with pytest.raises(ValueError):
        span_dim([a, ExactMatrix.zeros(3, 3)])
