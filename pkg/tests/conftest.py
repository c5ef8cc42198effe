"""Shared instances: the worked examples and the reference 2x2 pairs."""

import pytest

from condcompat.model import ConditionalMatrix, JointDistribution


def _make_pair(a_rows, b_rows):
    return ConditionalMatrix.given_column(a_rows), ConditionalMatrix.given_row(b_rows)


@pytest.fixture
def small_joint():
    return JointDistribution.from_rows([["1/10", "2/10"], ["3/10", "4/10"]])


@pytest.fixture
def compatible_pair():
    """Conditionals of P = [[1/10, 2/10], [3/10, 4/10]]."""
    return _make_pair(
        [["1/4", "1/3"], ["3/4", "2/3"]],
        [["1/3", "2/3"], ["3/7", "4/7"]],
    )


@pytest.fixture
def incompatible_pair():
    return _make_pair(
        [["1/2", "1/2"], ["1/2", "1/2"]],
        [["1/3", "2/3"], ["2/3", "1/3"]],
    )


@pytest.fixture
def identity_pair():
    return _make_pair(
        [[1, 0], [0, 1]],
        [[1, 0], [0, 1]],
    )


@pytest.fixture
def column_example():
    """2x3, column 2 of A unknown; completes to 2/3, 1/3."""
    return _make_pair(
        [["1/5", "?", "3/4"], ["4/5", "?", "1/4"]],
        [["1/6", "2/6", "3/6"], ["4/6", "1/6", "1/6"]],
    )


@pytest.fixture
def inconsistent_example():
    """3x3, column 2 of A unknown; columns 1 and 3 force different eta."""
    return _make_pair(
        [["1/6", "?", "1/4"], ["1/3", "?", "7/16"], ["1/2", "?", "5/16"]],
        [["1/7", "2/7", "4/7"], ["2/5", "2/5", "1/5"], ["1/4", "1/4", "1/2"]],
    )


@pytest.fixture
def both_unknown_example():
    """2x3 with a[1,2], a[2,2], b[1,2], b[1,3] unknown."""
    return _make_pair(
        [["1/5", "?", "1/2"], ["4/5", "?", "1/2"]],
        [["1/6", "?", "?"], ["2/5", "2/5", "1/5"]],
    )
