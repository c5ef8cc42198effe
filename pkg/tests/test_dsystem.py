"""Tests for the D and C systems and the solution projector."""

from fractions import Fraction
from unittest.mock import patch

import pytest

from condcompat.dsystem import (
    build_C,
    build_D,
    column_block,
    reduce_D,
    solution_projector,
)
from condcompat.errors import (
    DimensionMismatchError,
    OrientationError,
    UnknownEntriesPresentError,
)
from condcompat.exact import RatMatrix, rank
from condcompat.model import ConditionalMatrix, JointDistribution, derive_conditionals
from condcompat.oracle import Generator, random_joint

# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _make_derived(seed: int, dims: tuple[int, int]):
    p = random_joint(Generator(seed, dims))
    return p, derive_conditionals(p)


def _column_sums_vanish(d) -> bool:
    i_max, j_max = d.dims
    for j in range(j_max):
        block = column_block(d, j)
        for s in range(i_max):
            if sum(block.col(s)) != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Tests
# ---------------------------------------------------------------------------


class TestBuildD:
    """Entry pattern, row order and validation of D."""

    def test_identity_pair_gives_zero(self, identity_pair):
        d = build_D(*identity_pair)
        assert d.d.shape == (4, 2)
        assert d.d.is_zero()
        assert rank(d.d) == 0

    def test_incompatible_rows(self, incompatible_pair):
        d = build_D(*incompatible_pair)
        expected = RatMatrix.from_rows(
            [["-1/6", "1/3"], ["-1/3", "1/6"], ["1/6", "-1/3"], ["1/3", "-1/6"]]
        )
        assert d.d == expected

    def test_row_index_is_i_major(self, incompatible_pair):
        d = build_D(*incompatible_pair)
        assert d.row_index(1, 0) == 2
        assert d.row_cells[3] == (1, 1)

    def test_compatible_marginal_in_kernel(self, compatible_pair):
        d = build_D(*compatible_pair)
        assert d.d.apply((Fraction(3, 10), Fraction(7, 10))) == (0, 0, 0, 0)

    @pytest.mark.parametrize("seed", range(20))
    def test_derived_3x3_kernel(self, seed):
        p, (a, b) = _make_derived(seed, (3, 3))
        d = build_D(a, b)
        assert all(x == 0 for x in d.d.apply(p.row_marginals()))

    def test_rejects_unknowns(self, column_example):
        with pytest.raises(UnknownEntriesPresentError):
            build_D(*column_example)

    def test_rejects_shape_mismatch(self, compatible_pair):
        a, _ = compatible_pair
        b = ConditionalMatrix.given_row([["1/3", "2/3"], ["1/2", "1/2"], [1, 0]])
        with pytest.raises(DimensionMismatchError):
            build_D(a, b)

    def test_rejects_swapped_roles(self, compatible_pair):
        a, b = compatible_pair
        with pytest.raises(OrientationError):
            build_D(b, a)

    @pytest.mark.parametrize("seed", range(30))
    def test_column_collapse_identity(self, seed):
        dims = (2 + seed % 4, 2 + (seed // 4) % 4)
        _, (a, b) = _make_derived(seed, dims)
        assert _column_sums_vanish(build_D(a, b))

    def test_reduce_keeps_rank_rows(self, incompatible_pair):
        d_r = reduce_D(build_D(*incompatible_pair))
        assert d_r == RatMatrix.identity(2)


class TestBuildC:
    """C vec(P) = 0 for compatible joints."""

    def test_coefficient_pattern(self, compatible_pair):
        a, b = compatible_pair
        c = build_C(a, b)
        row = c.c.row(c.position(0, 1))
        # a_12 - b_12 on the diagonal, a_12 at (2,2), -b_12 at (1,1).
        assert row[c.position(0, 1)] == a[0, 1] - b[0, 1]
        assert row[c.position(1, 1)] == a[0, 1]
        assert row[c.position(0, 0)] == -b[0, 1]
        assert row[c.position(1, 0)] == 0

    @pytest.mark.parametrize("seed", range(20))
    def test_joint_solves_c(self, seed):
        dims = (2 + seed % 4, 2 + (seed // 4) % 4)
        p, (a, b) = _make_derived(seed, dims)
        assert all(x == 0 for x in build_C(a, b).c.apply(p.vec()))

    def test_uniform(self):
        p = JointDistribution.uniform(3, 3)
        a, b = derive_conditionals(p)
        assert all(x == 0 for x in build_C(a, b).c.apply(p.vec()))

    def test_incompatible_grid_has_no_solution(self, incompatible_pair):
        c = build_C(*incompatible_pair).c
        steps = 20
        for k11 in range(1, steps):
            for k12 in range(1, steps - k11):
                for k21 in range(1, steps - k11 - k12):
                    k22 = steps - k11 - k12 - k21
                    vec = tuple(Fraction(k, steps) for k in (k11, k12, k21, k22))
                    assert any(x != 0 for x in c.apply(vec))


class TestSolutionProjector:
    """M is idempotent and C (I - M) = 0."""

    def test_identity_pair_projector(self, identity_pair):
        # C for A = B = I is not zero: rows (1,1) and (2,2) carry p12 - p21.
        c = build_C(*identity_pair)
        assert c.c.row(0) == (0, -1, 1, 0)
        assert rank(c.c) == 1
        for k in range(11):
            eta = Fraction(k, 10)
            diagonal = (eta, Fraction(0), Fraction(0), 1 - eta)
            assert c.c.apply(diagonal) == (0, 0, 0, 0)

        m = solution_projector(c)
        complement = RatMatrix.identity(4) - m
        assert m @ m == m
        assert (c.c @ complement).is_zero()
        assert rank(complement) == c.c.cols - rank(c.c) == 3

    def test_zero_matrix_gives_zero_projector(self):
        m = solution_projector(RatMatrix.zeros(4, 4))
        assert (m.rows, m.cols) == (4, 4)
        assert m.is_zero()

    def test_logs_rank_and_nullity(self, identity_pair):
        with patch("condcompat.dsystem.logger") as log:
            solution_projector(build_C(*identity_pair))
        log.debug.assert_called_once_with("Projector for 4x4 C: rank 1, nullity 3")

    def test_full_rank_gives_identity(self):
        m = solution_projector(RatMatrix.identity(3).scale(2))
        assert m == RatMatrix.identity(3)

    @pytest.mark.parametrize("seed", range(10))
    def test_projector_properties(self, seed):
        _, (a, b) = _make_derived(seed, (3, 3))
        c = build_C(a, b)
        m = solution_projector(c)
        n = c.c.cols
        complement = RatMatrix.identity(n) - m
        assert m @ m == m
        assert (c.c @ complement).is_zero()
        assert rank(complement) == n - rank(c.c)

        g = Generator(seed + 1000, (3, 3))
        for _ in range(100):
            z = tuple(Fraction(x) for x in g.integers(-50, 50, n))
            assert all(x == 0 for x in c.c.apply(complement.apply(z)))
