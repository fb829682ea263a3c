"""The block involution mapping most-perfect squares to Franklin squares.

A square of order n with p^2 | n is viewed as a p^2 x p^2 array of order-n/p^2
blocks. The involution moves block (i, j) to (swap(i), swap(j)) where swap
exchanges the two base-p digits of a block index. It depends on p: the same
square admits distinct involutions for distinct primes dividing its order.
"""

from __future__ import annotations

import numpy as np

from .core import Grid, NaturalSquare, TypeParams


def digit_swap(index: int, p: int) -> int:
    """Swap the base-p digits of index = l*p + m, giving m*p + l."""
    if not 0 <= index < p * p:
        raise ValueError(f"index {index} outside 0..{p * p - 1}")
    l, m = divmod(index, p)
    return m * p + l


def _entry_permutation(n: int, p: int) -> np.ndarray:
    """Row (equally: column) permutation realizing the block digit swap."""
    if n % (p * p):
        raise ValueError(f"p^2={p * p} does not divide order {n}")
    bs = n // (p * p)
    return np.concatenate([digit_swap(b, p) * bs + np.arange(bs) for b in range(p * p)])


def _apply(obj, params: TypeParams, swap_rows: bool, swap_cols: bool):
    square = isinstance(obj, NaturalSquare)
    grid = obj.grid if square else obj
    if grid.rows != grid.cols:
        raise ValueError("involution requires a square grid")
    if grid.rows != params.n:
        raise ValueError(f"grid order {grid.rows} does not match params order {params.n}")
    perm = _entry_permutation(grid.rows, params.p)
    a = grid.entries
    if swap_rows:
        a = a[perm, :]
    if swap_cols:
        a = a[:, perm]
    out = Grid(a)
    return NaturalSquare(out) if square else out


def theta(square, params: TypeParams):
    """Full block involution: output block (i, j) is input block (swap(i), swap(j))."""
    return _apply(square, params, swap_rows=True, swap_cols=True)


def theta_row(square, params: TypeParams):
    """Row-sided variant: output block (i, j) is input block (swap(i), j)."""
    return _apply(square, params, swap_rows=True, swap_cols=False)


def theta_col(square, params: TypeParams):
    """Column-sided variant: output block (i, j) is input block (i, swap(j))."""
    return _apply(square, params, swap_rows=False, swap_cols=True)
