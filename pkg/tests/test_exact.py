"""Tests for exact rational linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from condcompat.dsystem import build_D
from condcompat.errors import DimensionMismatchError
from condcompat.exact import (
    RatMatrix,
    null_space,
    rank,
    row_echelon,
    solve,
    to_rational,
)
from condcompat.model import JointDistribution, derive_conditionals

# ---------------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------------

_entries = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    n_rows = draw(st.integers(1, max_rows))
    n_cols = draw(st.integers(1, max_cols))
    rows = draw(
        st.lists(
            st.lists(_entries, min_size=n_cols, max_size=n_cols),
            min_size=n_rows,
            max_size=n_rows,
        )
    )
    return RatMatrix.from_rows(rows)


def _make_d_incompatible() -> RatMatrix:
    return RatMatrix.from_rows(
        [["-1/6", "1/3"], ["-1/3", "1/6"], ["1/6", "-1/3"], ["1/3", "-1/6"]]
    )


# ---------------------------------------------------------------------------
# Tests
# ---------------------------------------------------------------------------


class TestScalars:
    """Coercion into exact rationals."""

    def test_strings_and_ints(self):
        assert to_rational("1/5") == Fraction(1, 5)
        assert to_rational("0.25") == Fraction(1, 4)
        assert to_rational(3) == Fraction(3)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            to_rational(0.5)

    def test_canonical_form(self):
        x = to_rational("2/6")
        assert (x.numerator, x.denominator) == (1, 3)


class TestRowEchelon:
    """Reduced row echelon form, rank and pivots."""

    def test_zero_matrix(self):
        form = row_echelon(RatMatrix.zeros(3, 3))
        assert form.rank == 0
        assert form.pivot_cols == ()

    def test_identity(self):
        form = row_echelon(RatMatrix.identity(3))
        assert form.rank == 3
        assert form.pivot_cols == (0, 1, 2)
        assert form.reduced == RatMatrix.identity(3)

    def test_proportional_rows(self):
        form = row_echelon(RatMatrix.from_rows([[1, 2], [2, 4]]))
        assert form.rank == 1
        assert form.reduced == RatMatrix.from_rows([[1, 2], [0, 0]])

    def test_incompatible_d_has_full_rank(self):
        assert rank(_make_d_incompatible()) == 2

    def test_first_nonzero_pivot(self):
        m = RatMatrix.from_rows([[0, 0, 2], [0, 3, 1], [0, 6, 2]])
        form = row_echelon(m)
        assert form.pivot_cols == (1, 2)
        assert form.reduced.row(0) == (0, 1, 0)
        assert form.reduced.row(1) == (0, 0, 1)

    @given(matrices())
    def test_idempotent(self, m):
        once = row_echelon(m).reduced
        assert row_echelon(once).reduced == once

    @given(matrices())
    def test_rank_bounded_by_shape(self, m):
        assert rank(m) <= min(m.rows, m.cols)

    @given(matrices(), st.randoms(use_true_random=False))
    def test_rank_invariant_under_row_permutation(self, m, rnd):
        order = list(range(m.rows))
        rnd.shuffle(order)
        assert rank(m.permute_rows(order)) == rank(m)


class TestNullSpace:
    """Kernel bases."""

    def test_identity_has_trivial_kernel(self):
        assert null_space(RatMatrix.identity(2)) == []

    def test_symmetric_row(self):
        assert null_space(RatMatrix.from_rows([[1, -1]])) == [(1, 1)]

    def test_compatible_d_kernel_is_row_marginal(self):
        p = JointDistribution.from_rows([["1/10", "2/10"], ["3/10", "4/10"]])
        d = build_D(*derive_conditionals(p)).d
        (v,) = null_space(d)
        total = sum(v)
        assert tuple(x / total for x in v) == (Fraction(3, 10), Fraction(7, 10))

    @settings(max_examples=60)
    @given(matrices())
    def test_basis_vectors_solve_and_count(self, m):
        basis = null_space(m)
        assert len(basis) == m.cols - rank(m)
        for v in basis:
            assert all(x == 0 for x in m.apply(v))
        if basis:
            assert rank(RatMatrix(tuple(basis))) == len(basis)


class TestSolve:
    """Inhomogeneous systems."""

    def test_unique_solution(self):
        m = RatMatrix.from_rows([[1, 1], [1, -1]])
        solution = solve(m, (Fraction(1), Fraction(0)))
        assert solution.is_unique
        assert solution.particular == (Fraction(1, 2), Fraction(1, 2))

    def test_inconsistent_returns_none(self):
        m = RatMatrix.from_rows([[1, 1], [1, 1]])
        assert solve(m, (Fraction(1), Fraction(2))) is None

    def test_underdetermined_has_kernel(self):
        m = RatMatrix.from_rows([[1, 1, 1]])
        solution = solve(m, (Fraction(1),))
        assert len(solution.kernel) == 2
        assert m.apply(solution.particular) == (1,)

    def test_rhs_length_checked(self):
        with pytest.raises(DimensionMismatchError):
            solve(RatMatrix.identity(2), (Fraction(1),))


class TestMatrixArithmetic:
    def test_matmul_and_identity(self):
        m = RatMatrix.from_rows([["1/2", 2], [3, "-1/3"]])
        assert m @ RatMatrix.identity(2) == m
        assert (m - m).is_zero()

    def test_transpose_apply(self):
        m = RatMatrix.from_rows([[1, 2, 3]])
        assert m.transpose().shape == (3, 1)
        assert m.apply((Fraction(1), Fraction(1), Fraction(1))) == (6,)

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatchError):
            RatMatrix.from_rows([[1, 2], [3]])
