"""Toroidal integer grids, natural squares, and the arithmetic frame for type-p sums.

Everything here is an immutable value: operations return new objects and are safe
to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# n*(n^2-1)/2 for MAX_ORDER is ~1.3e10, far inside int64; larger orders are rejected.
MAX_ORDER = 3000


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


class Grid:
    """Immutable rectangular integer grid with toroidal index semantics.

    Entries must fit a 64-bit signed integer; dimensions must be at least 1x1.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ValueError("grid entries must form a non-empty 2-D array")
        a.setflags(write=False)
        self._a = a

    @property
    def rows(self) -> int:
        return int(self._a.shape[0])

    @property
    def cols(self) -> int:
        return int(self._a.shape[1])

    @property
    def entries(self) -> np.ndarray:
        """Read-only int64 view of the entries."""
        return self._a

    def to_lists(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return self._a.shape == other._a.shape and bool((self._a == other._a).all())

    def __hash__(self):
        return hash((self._a.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"Grid({self.rows}x{self.cols})"


class NaturalSquare:
    """Order-n square grid whose entries are exactly the symbols 0..n^2-1."""

    __slots__ = ("_grid",)

    def __init__(self, grid: Grid):
        if not isinstance(grid, Grid):
            grid = Grid(grid)
        n = grid.rows
        if grid.cols != n:
            raise ValueError(f"natural square must be square, got {grid.rows}x{grid.cols}")
        if n > MAX_ORDER:
            raise ValueError(f"order {n} exceeds supported maximum {MAX_ORDER}")
        flat = np.sort(grid.entries, axis=None)
        if not (flat == np.arange(n * n)).all():
            raise ValueError(f"entries are not a permutation of 0..{n * n - 1}")
        self._grid = grid

    @classmethod
    def from_rows(cls, rows) -> "NaturalSquare":
        return cls(Grid(rows))

    @property
    def order(self) -> int:
        return self._grid.rows

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def entries(self) -> np.ndarray:
        return self._grid.entries

    def to_lists(self) -> list[list[int]]:
        return self._grid.to_lists()

    def __eq__(self, other) -> bool:
        if not isinstance(other, NaturalSquare):
            return NotImplemented
        return self._grid == other._grid

    def __hash__(self):
        return hash(self._grid)

    def __repr__(self) -> str:
        return f"NaturalSquare(order={self.order})"


@dataclass(frozen=True)
class TypeParams:
    """The arithmetic frame: prime p and order n, with all derived sum targets.

    p must divide n (waived for the degenerate order n=1, where every target
    is 0). A target is accessible only when it is an exact integer; for odd p
    and even n the window and complement targets are half-integers, so no
    square with those properties exists and the corresponding checks do not
    apply. The magic sum is an integer for every order.
    """

    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order n={self.n} outside 1..{MAX_ORDER}")
        if self.n > 1 and self.n % self.p:
            raise ValueError(f"p={self.p} does not divide n={self.n}")

    def _exact(self, label: str, num: int, den: int) -> int:
        if num % den:
            raise ValueError(f"{label} is not an integer for p={self.p}, n={self.n}")
        return num // den

    @classmethod
    def for_franklin(cls, p: int, k: int) -> "TypeParams":
        """Frame for the Franklin context n = k*p^3."""
        if k < 1:
            raise ValueError("k must be positive")
        return cls(p, k * p**3)

    @classmethod
    def for_power(cls, p: int, r: int) -> "TypeParams":
        """Frame for a prime-power order n = p^r."""
        if r < 1:
            raise ValueError("r must be positive")
        return cls(p, p**r)

    @property
    def magic_sum(self) -> int:
        return self.n * (self.n * self.n - 1) // 2  # always an exact integer

    @property
    def segment_sum(self) -> int:
        return self._exact("segment_sum", self.n * (self.n * self.n - 1), 2 * self.p)

    @property
    def pxp_sum(self) -> int:
        return self._exact("pxp_sum", self.p * self.p * (self.n * self.n - 1), 2)

    @property
    def complement_sum(self) -> int:
        return self._exact("complement_sum", self.p * (self.n * self.n - 1), 2)

    @property
    def has_segment_sum(self) -> bool:
        return self.n % self.p == 0 and (self.n * (self.n * self.n - 1)) % (2 * self.p) == 0

    @property
    def has_pxp_sum(self) -> bool:
        return (self.p * self.p * (self.n * self.n - 1)) % 2 == 0

    @property
    def has_complement_sum(self) -> bool:
        return self.n % self.p == 0 and (self.p * (self.n * self.n - 1)) % 2 == 0

    @property
    def franklin_k(self) -> int | None:
        """k with n = k*p^3, or None when the order is not of that form."""
        q = self.p**3
        return self.n // q if self.n % q == 0 else None


@dataclass(frozen=True)
class BlockAddress:
    """A square block of a toroidally-partitioned frame.

    Origins are absolute (already wrapped mod n); the block covers rows
    row_origin..row_origin+block_size-1 and the matching columns, toroidally.
    """

    block_row: int
    block_col: int
    block_size: int
    row_origin: int
    col_origin: int


def magic_sum(params: TypeParams) -> int:
    """Required total of every counted line or pattern: n(n^2-1)/2."""
    return params.magic_sum


def get_toric(grid: Grid, row: int, col: int) -> int:
    """Entry at (row mod rows, col mod cols) using mathematical modulus."""
    return int(grid.entries[row % grid.rows, col % grid.cols])


def rotate_cw(square: NaturalSquare, quarter_turns: int) -> NaturalSquare:
    """Clockwise rotation; one quarter turn sends input (n-1-j, i) to output (i, j)."""
    q = quarter_turns % 4
    return NaturalSquare(Grid(np.rot90(square.entries, -q)))


def block_at(
    params: TypeParams,
    frame_offset: int,
    block_row: int,
    block_col: int,
    block_size: int,
) -> BlockAddress:
    """Address of the block at (block_row, block_col) in a frame starting at row frame_offset."""
    n = params.n
    if block_size < 1 or n % block_size:
        raise ValueError(f"block size {block_size} does not divide order {n}")
    per_side = n // block_size
    if not (0 <= block_row < per_side and 0 <= block_col < per_side):
        raise ValueError(f"block index ({block_row}, {block_col}) outside partition bounds")
    return BlockAddress(
        block_row=block_row,
        block_col=block_col,
        block_size=block_size,
        row_origin=(frame_offset + block_row * block_size) % n,
        col_origin=(block_col * block_size) % n,
    )
