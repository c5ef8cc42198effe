"""Tests for the seeded generator, the perturbation and the grid oracle."""

from fractions import Fraction

import numpy as np
import pytest

from condcompat.dsystem import build_D
from condcompat.errors import (
    DimensionMismatchError,
    EntryOutOfRangeError,
    GridTooLargeError,
)
from condcompat.exact import rank
from condcompat.model import derive_conditionals
from condcompat.oracle import (
    Generator,
    compositions,
    fit_grid_steps,
    grid_min_violation,
    grid_size,
    perturb_to_incompatible,
    random_joint,
    violation,
)

# ---------------------------------------------------------------------------
# Generator
# ---------------------------------------------------------------------------


class TestGenerator:
    """Seeded random joints."""

    def test_same_seed_same_joint(self):
        assert random_joint(Generator(7, (3, 4))) == random_joint(Generator(7, (3, 4)))

    def test_different_seeds_differ(self):
        assert random_joint(Generator(1, (3, 3))) != random_joint(Generator(2, (3, 3)))

    @pytest.mark.parametrize("seed", range(10))
    def test_joint_is_positive_and_sums_to_one(self, seed):
        g = Generator(seed, (4, 5))
        p = random_joint(g)
        assert p.dims == (4, 5)
        assert sum(p.vec()) == 1
        assert all(x >= g.floor for x in p.vec())

    def test_default_floor(self):
        assert Generator(0, (2, 3)).floor == Fraction(1, 600)

    def test_rejects_small_dims(self):
        with pytest.raises(DimensionMismatchError):
            Generator(0, (1, 3))

    def test_rejects_floor_without_mass(self):
        with pytest.raises(ValueError):
            Generator(0, (2, 2), floor=Fraction(1, 4))

    def test_permutation(self):
        assert sorted(Generator(3, (2, 2)).permutation(5)) == [0, 1, 2, 3, 4]


# ---------------------------------------------------------------------------
# Perturbation
# ---------------------------------------------------------------------------


class TestPerturb:
    def test_zero_delta_is_identity(self, compatible_pair):
        assert perturb_to_incompatible(*compatible_pair, 0) == compatible_pair

    def test_moves_mass_within_column(self, compatible_pair):
        a, _ = perturb_to_incompatible(*compatible_pair, Fraction(1, 10))
        assert a[1, 0] == Fraction(3, 4) - Fraction(1, 10)
        assert a[0, 0] == Fraction(1, 4) + Fraction(1, 10)
        assert a[0, 1] == Fraction(1, 3)

    def test_out_of_range(self, compatible_pair):
        with pytest.raises(EntryOutOfRangeError):
            perturb_to_incompatible(*compatible_pair, Fraction(1, 2), rows=(0, 1))

    def test_negative_delta(self, compatible_pair):
        with pytest.raises(ValueError):
            perturb_to_incompatible(*compatible_pair, -1)

    @pytest.mark.parametrize("seed", range(10))
    def test_full_rank_after_perturbation(self, seed):
        dims = (2 + seed % 4, 3)
        a, b = derive_conditionals(random_joint(Generator(seed, dims)))
        a, b = perturb_to_incompatible(a, b, Fraction(1, 100))
        assert rank(build_D(a, b).d) == dims[0]


# ---------------------------------------------------------------------------
# Grid
# ---------------------------------------------------------------------------


class TestCompositions:
    def test_count_and_sums(self):
        grid = compositions(4, 3)
        assert grid.shape == (15, 3)
        assert np.all(grid.sum(axis=1) == 4)
        assert len({tuple(row) for row in grid.tolist()}) == 15

    def test_two_parts(self):
        assert compositions(2, 2).tolist() == [[0, 2], [1, 1], [2, 0]]


class TestGridMinViolation:
    def test_corners_only(self, incompatible_pair):
        assert grid_min_violation(*incompatible_pair, 1) == Fraction(1, 3)

    def test_compatible_eta_on_grid(self, compatible_pair):
        assert grid_min_violation(*compatible_pair, 10) == 0

    def test_violation_at_true_marginal(self, compatible_pair):
        eta = [Fraction(3, 10), Fraction(7, 10)]
        assert violation(*compatible_pair, eta) == 0

    def test_rejects_zero_steps(self, compatible_pair):
        with pytest.raises(ValueError):
            grid_min_violation(*compatible_pair, 0)

    def test_streamed_minimum_matches_full_scan(self):
        a, b = derive_conditionals(random_joint(Generator(41, (3, 3))))
        a, b = perturb_to_incompatible(a, b, Fraction(1, 20))
        steps = 12
        full = min(
            violation(a, b, [Fraction(int(k), steps) for k in row])
            for row in compositions(steps, 3)
        )
        assert grid_min_violation(a, b, steps) == full

    def test_refuses_oversized_grid(self):
        a, b = derive_conditionals(random_joint(Generator(3, (5, 2))))
        with pytest.raises(GridTooLargeError, match="at most 102 steps"):
            grid_min_violation(a, b, 1000)


class TestGridSize:
    def test_matches_compositions(self):
        for steps, parts in ((4, 3), (7, 2), (5, 4), (3, 1)):
            assert grid_size(steps, parts) == len(compositions(steps, parts))

    def test_fit_keeps_small_grids(self):
        assert fit_grid_steps(1000, 2) == 1000
        assert fit_grid_steps(1000, 3) == 1000

    def test_fit_shrinks_to_budget(self):
        assert fit_grid_steps(10, 3, budget=15) == 4
        assert fit_grid_steps(1000, 5) == 102
        assert grid_size(102, 5) <= 5_000_000 < grid_size(103, 5)
