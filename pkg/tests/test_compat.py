"""Tests for compatibility decisions, joint recovery and minimal epsilon."""

from fractions import Fraction

import pytest

from condcompat.compat import (
    Agree,
    Disagree,
    Inapplicable,
    Minor,
    check_lp,
    check_rank,
    cross_product_check,
    feasibility_program,
    min_epsilon,
    recover_joint,
    tau_from_eta,
)
from condcompat.dsystem import (
    build_C,
    build_D,
    column_block,
    reduce_D,
    solution_projector,
)
from condcompat.exact import RatMatrix, null_space, rank
from condcompat.lp import solve
from condcompat.model import (
    CompatibleNonUnique,
    CompatibleUnique,
    ConditionalMatrix,
    Incompatible,
    JointDistribution,
    derive_conditionals,
)
from condcompat.oracle import (
    Generator,
    grid_min_violation,
    perturb_to_incompatible,
    random_joint,
)

# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _dims_for(seed: int) -> tuple[int, int]:
    return 2 + seed % 4, 2 + (seed // 4) % 4


def _make_compatible(seed: int):
    p = random_joint(Generator(seed, _dims_for(seed)))
    return p, derive_conditionals(p)


def _make_perturbed(seed: int):
    _, (a, b) = _make_compatible(10_000 + seed)
    delta = Fraction(1, 10) if seed % 2 == 0 else Fraction(1, 100)
    return perturb_to_incompatible(a, b, delta)


def _normalized(v):
    total = sum(v)
    return tuple(x / total for x in v)


def _collapse_holds(a, b) -> bool:
    d = build_D(a, b)
    i_max, j_max = d.dims
    return all(
        sum(column_block(d, j).col(s)) == 0 for j in range(j_max) for s in range(i_max)
    )


def _projector_holds(a, b, z_seed: int | None = None) -> bool:
    c = build_C(a, b).c
    m = solution_projector(c)
    complement = RatMatrix.identity(c.cols) - m
    if m @ m != m or not (c @ complement).is_zero():
        return False
    if z_seed is not None:
        g = Generator(z_seed, (2, 2))
        for _ in range(100):
            z = tuple(Fraction(x) for x in g.integers(-100, 100, c.cols))
            if any(x != 0 for x in c.apply(complement.apply(z))):
                return False
    return True


# ---------------------------------------------------------------------------
# Worked cases
# ---------------------------------------------------------------------------


class TestCheckRank:
    """Rank criterion on D."""

    def test_compatible_pair(self, compatible_pair, small_joint):
        verdict = check_rank(*compatible_pair)
        assert isinstance(verdict, CompatibleUnique)
        assert verdict.rank == 1
        assert verdict.marginals.eta == (Fraction(3, 10), Fraction(7, 10))
        assert verdict.marginals.tau == (Fraction(2, 5), Fraction(3, 5))
        assert verdict.joint == small_joint

    def test_incompatible_pair(self, incompatible_pair):
        assert check_rank(*incompatible_pair) == Incompatible(2)

    def test_identity_pair_is_non_unique(self, identity_pair):
        verdict = check_rank(*identity_pair)
        assert isinstance(verdict, CompatibleNonUnique)
        assert verdict.rank == 0
        assert len(verdict.kernel_basis) == 2
        assert verdict.marginals is not None
        assert all(x >= 0 for x in verdict.marginals.eta)

    def test_zero_b_entry_forces_null_eta(self):
        # b_21 = 0 with a_21 > 0 forces eta_1 = 0, then column 2 forces eta_2 = 0.
        a = ConditionalMatrix.given_column([["1/2", "1/2"], ["1/2", "1/2"]])
        b = ConditionalMatrix.given_row([["1/2", "1/2"], [0, 1]])
        verdict = check_rank(a, b)
        assert not verdict.is_compatible
        assert verdict.is_compatible == check_lp(a, b).is_compatible

    def test_marginal_equations_hold(self, compatible_pair):
        a, b = compatible_pair
        verdict = check_rank(a, b)
        eta, tau = verdict.marginals.eta, verdict.marginals.tau
        for i in range(2):
            for j in range(2):
                assert a[i, j] * tau[j] == b[i, j] * eta[i]


class TestCheckLP:
    """Feasibility program on D_r."""

    def test_compatible_pair(self, compatible_pair):
        verdict = check_lp(*compatible_pair)
        assert isinstance(verdict, CompatibleUnique)
        assert verdict.marginals.eta == (Fraction(3, 10), Fraction(7, 10))

    def test_incompatible_pair(self, incompatible_pair):
        d_r = reduce_D(build_D(*incompatible_pair))
        assert solve(feasibility_program(d_r)).value == 0
        assert isinstance(check_lp(*incompatible_pair), Incompatible)

    def test_uniform_3x3(self):
        a, b = derive_conditionals(JointDistribution.uniform(3, 3))
        verdict = check_lp(a, b)
        assert verdict.is_compatible
        assert verdict.marginals.eta == (Fraction(1, 3),) * 3


class TestRecoverJoint:
    def test_identity_b(self):
        b = ConditionalMatrix.given_row([[1, 0], [0, 1]])
        p = recover_joint(b, (Fraction(1, 2), Fraction(1, 2)))
        assert p.entries == ((Fraction(1, 2), 0), (0, Fraction(1, 2)))

    def test_small_joint(self, compatible_pair, small_joint):
        _, b = compatible_pair
        assert recover_joint(b, (Fraction(3, 10), Fraction(7, 10))) == small_joint

    def test_uniform(self):
        b = ConditionalMatrix.given_row([["1/3"] * 3] * 2)
        p = recover_joint(b, (Fraction(1, 2), Fraction(1, 2)))
        assert p == JointDistribution.uniform(2, 3)

    def test_tau_from_eta(self, compatible_pair):
        _, b = compatible_pair
        tau = tau_from_eta(b, (Fraction(3, 10), Fraction(7, 10)))
        assert tau == (Fraction(2, 5), Fraction(3, 5))


class TestCrossProduct:
    """Cross-multiplied cross-product ratios."""

    def test_compatible_agrees(self, compatible_pair):
        assert cross_product_check(*compatible_pair) == Agree(1)

    def test_incompatible_disagrees(self, incompatible_pair):
        result = cross_product_check(*incompatible_pair)
        assert result == Disagree(Minor(0, 1, 0, 1))
        assert result.witness.one_based() == (1, 2, 1, 2)

    def test_identity_inapplicable(self, identity_pair):
        result = cross_product_check(*identity_pair)
        assert isinstance(result, Inapplicable)
        assert result.zero_cells == ((0, 1), (1, 0))


class TestMinEpsilon:
    def test_compatible_is_zero(self, compatible_pair):
        result = min_epsilon(*compatible_pair)
        assert result.epsilon_star == 0
        assert result.is_compatible

    def test_incompatible_optimum(self, incompatible_pair):
        result = min_epsilon(*incompatible_pair)
        assert result.epsilon_star == Fraction(1, 12)
        assert result.eta == (Fraction(1, 2), Fraction(1, 2))

    def test_grid_matches_on_even_steps(self, incompatible_pair):
        assert grid_min_violation(*incompatible_pair, 1000) == Fraction(1, 12)

    def test_small_perturbation(self, compatible_pair):
        a, b = perturb_to_incompatible(*compatible_pair, Fraction(1, 100))
        eps = min_epsilon(a, b).epsilon_star
        assert 0 < eps <= Fraction(1, 100)
        assert grid_min_violation(a, b, 1000) >= eps


class TestPermutationInvariance:
    """Reordering X and Y values permutes eta and tau, nothing else."""

    @pytest.mark.parametrize("seed", range(12))
    def test_compatible_pairs(self, seed):
        _, (a, b) = _make_compatible(seed)
        g = Generator(seed + 500, (2, 2))
        rows, cols = g.permutation(a.dims[0]), g.permutation(a.dims[1])
        before = check_rank(a, b)
        after = check_rank(a.permute(rows, cols), b.permute(rows, cols))
        assert type(after) is type(before)
        assert after.marginals.eta == tuple(before.marginals.eta[i] for i in rows)
        assert after.marginals.tau == tuple(before.marginals.tau[j] for j in cols)

    @pytest.mark.parametrize("seed", range(6))
    def test_incompatible_pairs(self, seed):
        a, b = _make_perturbed(seed)
        g = Generator(seed + 700, (2, 2))
        rows, cols = g.permutation(a.dims[0]), g.permutation(a.dims[1])
        verdict = check_rank(a.permute(rows, cols), b.permute(rows, cols))
        assert not verdict.is_compatible


# ---------------------------------------------------------------------------
# Seeded suites
# ---------------------------------------------------------------------------


class TestCompatibleSuite:
    """1000 strictly positive joints: unique marginal, exact round trip."""

    def test_rank_kernel_and_round_trip(self):
        for seed in range(1000):
            p, (a, b) = _make_compatible(seed)
            i_max = p.dims[0]
            d = build_D(a, b).d
            assert rank(d) == i_max - 1, seed
            (v,) = null_space(d)
            assert _normalized(v) == p.row_marginals(), seed

            verdict = check_rank(a, b)
            assert isinstance(verdict, CompatibleUnique), seed
            assert verdict.joint == p, seed
            assert check_lp(a, b).is_compatible, seed
            assert not isinstance(cross_product_check(a, b), Disagree), seed
            assert _collapse_holds(a, b), seed

    def test_projector(self):
        for seed in range(0, 1000, 5):
            _, (a, b) = _make_compatible(seed)
            z_seed = seed if seed % 50 == 0 else None
            assert _projector_holds(a, b, z_seed), seed

    def test_min_epsilon_is_zero(self):
        for seed in range(0, 1000, 5):
            _, (a, b) = _make_compatible(seed)
            assert min_epsilon(a, b).epsilon_star == 0, seed


class TestIncompatibleSuite:
    """200 perturbed pairs: every criterion agrees on incompatibility."""

    def test_all_criteria_agree(self):
        for seed in range(200):
            a, b = _make_perturbed(seed)
            i_max = a.dims[0]
            assert rank(build_D(a, b).d) == i_max, seed
            assert check_rank(a, b) == Incompatible(i_max), seed
            assert isinstance(check_lp(a, b), Incompatible), seed
            d_r = reduce_D(build_D(a, b))
            assert solve(feasibility_program(d_r)).value == 0, seed
            cross = cross_product_check(a, b)
            assert isinstance(cross, (Disagree, Inapplicable)), seed
            assert min_epsilon(a, b).epsilon_star > 0, seed
            assert _collapse_holds(a, b), seed

    def test_projector(self):
        for seed in range(0, 200, 5):
            a, b = _make_perturbed(seed)
            z_seed = seed if seed % 20 == 0 else None
            assert _projector_holds(a, b, z_seed), seed


class TestEpsilonConsistency:
    """Grid oracle bounds the LP optimum from above and converges to it."""

    def test_grid_brackets_min_epsilon(self):
        for seed in range(20):
            dims = (2 + seed % 2, 2 + (seed // 2) % 2)
            p = random_joint(Generator(20_000 + seed, dims))
            a, b = perturb_to_incompatible(*derive_conditionals(p), Fraction(1, 10))
            eps = min_epsilon(a, b).epsilon_star
            grid = grid_min_violation(a, b, 1000)
            assert eps > 0, seed
            assert eps <= grid <= eps + Fraction(1, 100), seed


class TestZeroEntries:
    """Identity conditionals: every diagonal joint is a solution."""

    def test_identity_pair(self, identity_pair):
        assert isinstance(cross_product_check(*identity_pair), Inapplicable)
        assert isinstance(check_rank(*identity_pair), CompatibleNonUnique)
        assert check_lp(*identity_pair).is_compatible

        c = build_C(*identity_pair).c
        for k in range(11):
            eta1 = Fraction(k, 10)
            vec = (eta1, Fraction(0), Fraction(0), 1 - eta1)
            assert all(x == 0 for x in c.apply(vec))
