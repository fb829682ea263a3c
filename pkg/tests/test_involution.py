import random

import numpy as np
import pytest

import franklin_forge as ff
from franklin_forge.properties import (
    COMPLEMENTARY,
    ONE_OVER_P_COLS,
    ONE_OVER_P_ROWS,
    PANDIAGONAL,
    PXP,
    SEMI_MAGIC,
)

from conftest import random_natural_square, random_toric_window_grid


def test_digit_swap_is_involution():
    for p in (2, 3, 5):
        for i in range(p * p):
            assert ff.digit_swap(ff.digit_swap(i, p), p) == i
    fixed = [i for i in range(9) if ff.digit_swap(i, 3) == i]
    assert fixed == [0, 4, 8]  # equal base-p digits


def test_digit_swap_range_check():
    with pytest.raises(ValueError):
        ff.digit_swap(4, 2)


def test_theta_on_order4_single_cell_blocks():
    square = ff.NaturalSquare.from_rows(
        [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11], [12, 13, 14, 15]]
    )
    out = ff.theta(square, ff.TypeParams(2, 4))
    assert out.to_lists() == [[0, 2, 1, 3], [8, 10, 9, 11], [4, 6, 5, 7], [12, 14, 13, 15]]


def test_theta_requires_p_squared_divisor():
    square = ff.NaturalSquare.from_rows([[0, 1], [2, 3]])
    with pytest.raises(ValueError):
        ff.theta(square, ff.TypeParams(2, 2))


def test_theta_requires_matching_order(mp8):
    square, _ = mp8
    with pytest.raises(ValueError):
        ff.theta(square, ff.TypeParams(2, 16))


class TestInvolutionAlgebra:
    def algebra_holds(self, square, params):
        assert ff.theta(ff.theta(square, params), params) == square
        assert ff.theta_row(ff.theta_row(square, params), params) == square
        assert ff.theta_col(ff.theta_col(square, params), params) == square
        assert ff.theta_col(ff.theta_row(square, params), params) == ff.theta(square, params)

    def test_on_fixtures(self, fixture_map):
        for square, params in fixture_map.values():
            if params.n % (params.p**2) == 0:
                self.algebra_holds(square, params)

    def test_on_random_squares(self):
        rng = random.Random(20240421)
        for _ in range(50):
            p, n = rng.choice([(2, 4), (2, 8), (2, 12), (2, 16), (3, 9), (3, 27)])
            square = random_natural_square(n, rng)
            self.algebra_holds(square, ff.TypeParams(p, n))

    def test_preserves_naturality(self):
        rng = random.Random(7)
        square = random_natural_square(8, rng)
        out = ff.theta(square, ff.TypeParams(2, 8))
        assert isinstance(out, ff.NaturalSquare)
        assert sorted(out.entries.flatten().tolist()) == list(range(64))

    def test_fixed_blocks(self):
        p = 3
        fixed_positions = [
            (i, j)
            for i in range(p * p)
            for j in range(p * p)
            if ff.digit_swap(i, p) == i and ff.digit_swap(j, p) == j
        ]
        assert len(fixed_positions) == p * p  # p^2 of p^4 block positions
        rng = random.Random(11)
        square = random_natural_square(9, rng)  # order 9: blocks are single cells
        out = ff.theta(square, ff.TypeParams(3, 9))
        for i, j in fixed_positions:
            assert int(out.entries[i, j]) == int(square.entries[i, j])


class TestTransport:
    """Properties carried from a most-perfect square to its transform."""

    def test_theta_row_preserves_window_property(self):
        # random square grids with the toric window property, all triply divisible orders
        rng = random.Random(999)
        for _ in range(200):
            p = rng.choice([2, 3])
            n = p**3 * (rng.choice([1, 2]) if p == 2 else 1)
            grid = random_toric_window_grid(n, p, rng)
            params = ff.TypeParams(p, n)
            assert ff.check_pxp(grid, params).passed
            assert ff.check_pxp(ff.theta_row(grid, params), params).passed
            assert ff.check_pxp(ff.theta(grid, params), params).passed

    def test_transform_of_mp8_is_pandiagonal_franklin(self, mp8):
        square, params = mp8
        report = ff.verify_all(ff.theta(square, params), params)
        assert report.classification == "pandiagonal_franklin_type_p"
        for name in (PXP, ONE_OVER_P_ROWS, ONE_OVER_P_COLS, PANDIAGONAL, SEMI_MAGIC):
            assert report.verdict(name).passed

    def test_transform_of_franklin27_is_most_perfect(self, f27):
        # the order-27 square is itself a transform; applying the involution
        # again recovers its most-perfect preimage
        square, params = f27
        report = ff.verify_all(ff.theta(square, params), params)
        assert report.verdict(COMPLEMENTARY).passed
        assert report.classification == "most_perfect_type_p"

    def test_order9_transport_boundary(self, mp9):
        # order 9 is not triply divisible by 3: only semi-magic and the
        # complementary property survive the transform
        square, params = mp9
        report = ff.verify_all(ff.theta(square, params), params)
        assert report.verdict(SEMI_MAGIC).passed
        assert report.verdict(COMPLEMENTARY).passed
        assert not report.verdict(PXP).passed
        assert not report.verdict(PANDIAGONAL).passed
        assert not report.verdict(ONE_OVER_P_ROWS).passed
