"""Franklin pattern geometry: resolving up/right/down/left patterns to cell sets.

An up pattern of order n = k*p^3 lives in a frame of n/p consecutive rows
(toroidal), partitioned into a p x p^2 array T of kp x kp blocks. The block
columns of T split into p bands of p consecutive block columns each. Outside
the central band, the pattern meets one block per band row, placed on the
band's main diagonal or off diagonal; within a kp x kp block it occupies two
partial rows of each p x p sub-block along the matching sub-block diagonal,
taking the first alpha cells of one row and the last beta = p - alpha of the
other. For odd p the central band is partitioned into p x p subsquares whose
bottom rows carry the pattern, narrowing to a single full-row peak (top) or
valley (bottom) depending on the parity of (p-1)/2; for even k the peak or
valley row holds two adjacent full rows and one frame row is skipped.

Right, down, and left patterns are the images of up patterns under 1, 2, and 3
clockwise quarter turns of the ambient square.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import BlockAddress, TypeParams, block_at

DIRECTIONS = ("up", "right", "down", "left")

SIDE_LEFT = "left"
SIDE_RIGHT = "right"
SIDE_SOLE = "sole"


@dataclass(frozen=True)
class PatternSpec:
    """One Franklin pattern: direction, split alpha (beta = p - alpha), frame offset."""

    direction: str
    alpha: int
    frame_offset: int
    params: TypeParams

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ValueError(f"direction must be one of {DIRECTIONS}")
        p = self.params.p
        if not 1 <= self.alpha < p:
            raise ValueError(f"alpha={self.alpha} outside 1..{p - 1}")
        if self.params.franklin_k is None:
            raise ValueError(f"order {self.params.n} is not of the form k*p^3 for p={p}")
        if not 0 <= self.frame_offset < self.params.n:
            raise ValueError(f"frame offset {self.frame_offset} outside 0..{self.params.n - 1}")

    @property
    def beta(self) -> int:
        return self.params.p - self.alpha


@dataclass(frozen=True)
class CellSet:
    """Resolved pattern cells; always exactly n of them, inside 0..n-1 squared."""

    cells: frozenset
    order: int

    def __post_init__(self):
        if len(self.cells) != self.order:
            raise ValueError(f"pattern resolved to {len(self.cells)} cells, expected {self.order}")

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)


@dataclass(frozen=True)
class BandBlock:
    """A block met by an up pattern: band index, row within the band, and address.

    Non-central blocks are kp x kp and carry side="sole". Central-band blocks
    (odd p only) are p x p subsquares; row_in_band then ranges over 0..kp-1 and
    side distinguishes the left/right member of a pair, or "sole" where the two
    coincide.
    """

    band: int
    row_in_band: int
    side: str
    address: BlockAddress
    params: TypeParams


def _band_kind(band: int, p: int) -> tuple[int, bool]:
    """(j, mirrored): j = distance to the nearer edge band, mirrored = right half."""
    mirrored = 2 * band > p - 1
    return (p - 1 - band if mirrored else band), mirrored


def _central_rows(p: int, k: int) -> list[tuple[int, int | None, int | None]]:
    """Central band layout: (row, left subcolumn, right subcolumn) per row.

    Subcolumns are band-relative in units of p. A None pair marks the skipped
    row (even k only); left == right marks the coincidence row (odd k).
    """
    kp = k * p
    peak = ((p - 1) // 2) % 2 == 1
    rows: list[tuple[int, int | None, int | None]] = []
    for i in range(kp):
        if peak:
            if k % 2 == 1:
                if i == 0:
                    rows.append((i, (kp - 1) // 2, (kp - 1) // 2))
                else:
                    d = (i + 1) // 2
                    rows.append((i, (kp - 1) // 2 - d, (kp - 1) // 2 + d))
            else:
                if i == 0:
                    rows.append((i, kp // 2 - 1, kp // 2))
                elif i == kp - 1:
                    rows.append((i, None, None))
                else:
                    d = (i + 1) // 2
                    rows.append((i, kp // 2 - 1 - d, kp // 2 + d))
        else:
            if k % 2 == 1:
                if i == kp - 1:
                    rows.append((i, (kp - 1) // 2, (kp - 1) // 2))
                else:
                    rows.append((i, i // 2, kp - 1 - i // 2))
            else:
                if i == kp - 1:
                    rows.append((i, kp // 2 - 1, kp // 2))
                elif i == kp - 2:
                    rows.append((i, None, None))
                else:
                    rows.append((i, i // 2, kp - 1 - i // 2))
    return rows


def select_blocks(params: TypeParams, frame_offset: int) -> list[BandBlock]:
    """All blocks of the frame at frame_offset met by the up pattern, band-major order."""
    k = params.franklin_k
    if k is None:
        raise ValueError(f"order {params.n} is not of the form k*p^3 for p={params.p}")
    p = params.p
    bs = k * p
    mid = (p - 1) // 2 if p % 2 == 1 else None
    out: list[BandBlock] = []
    for band in range(p):
        if band == mid:
            base_subcol = mid * p * k  # global subcolumn of the band's left edge
            for i, left, right in _central_rows(p, k):
                if left is None:
                    continue
                addr_l = block_at(params, frame_offset, i, base_subcol + left, p)
                if left == right:
                    out.append(BandBlock(band, i, SIDE_SOLE, addr_l, params))
                    continue
                addr_r = block_at(params, frame_offset, i, base_subcol + right, p)
                out.append(BandBlock(band, i, SIDE_LEFT, addr_l, params))
                out.append(BandBlock(band, i, SIDE_RIGHT, addr_r, params))
        else:
            j, mirrored = _band_kind(band, p)
            main = (j % 2 == 0) != mirrored
            for i in range(p):
                col = band * p + (i if main else p - 1 - i)
                addr = block_at(params, frame_offset, i, col, bs)
                out.append(BandBlock(band, i, SIDE_SOLE, addr, params))
    return out


def block_intersection(block: BandBlock, alpha: int) -> list[tuple[int, int]]:
    """Block-local cells of the up pattern inside this block, row-major order."""
    params = block.params
    p, k = params.p, params.franklin_k
    if not 1 <= alpha < p:
        raise ValueError(f"alpha={alpha} outside 1..{p - 1}")
    beta = p - alpha
    mid = (p - 1) // 2 if p % 2 == 1 else None

    if block.band == mid:
        bottom = p - 1
        if block.side == SIDE_SOLE:
            return [(bottom, c) for c in range(p)]
        kp = k * p
        peak = (mid % 2 == 1)
        adjacency_row = 0 if peak else kp - 1
        if k % 2 == 0 and block.row_in_band == adjacency_row:
            return [(bottom, c) for c in range(p)]
        i_even = block.row_in_band % 2 == 0
        first = (block.side == SIDE_LEFT) == i_even
        cols = range(alpha) if first else range(p - beta, p)
        return [(bottom, c) for c in cols]

    j, mirrored = _band_kind(block.band, p)
    # On-diagonal blocks take the first alpha cells of their top row; the
    # sub-block diagonal orientation follows the same parity rule.
    main = (j % 2 == 0) != mirrored
    cells = []
    for t in range(k):
        r0 = t * p
        c0 = (t if main else k - 1 - t) * p
        top, bot = r0 + 2 * j, r0 + 2 * j + 1
        if main:
            cells.extend((top, c0 + c) for c in range(alpha))
            cells.extend((bot, c0 + c) for c in range(p - beta, p))
        else:
            cells.extend((top, c0 + c) for c in range(p - beta, p))
            cells.extend((bot, c0 + c) for c in range(alpha))
    return cells


def rotate_cells(cells, n: int, quarter_turns: int):
    """Image of a cell set under clockwise quarter turns of the ambient square."""
    out = list(cells)
    for _ in range(quarter_turns % 4):
        out = [(c, n - 1 - r) for (r, c) in out]
    return out


def franklin_cells(spec: PatternSpec) -> CellSet:
    """Resolve a pattern spec to its absolute toroidal cell set."""
    params = spec.params
    n = params.n
    cells = []
    for block in select_blocks(params, spec.frame_offset):
        addr = block.address
        for r, c in block_intersection(block, spec.alpha):
            cells.append(((addr.row_origin + r) % n, (addr.col_origin + c) % n))
    cells = rotate_cells(cells, n, DIRECTIONS.index(spec.direction))
    return CellSet(frozenset(cells), n)


def enumerate_patterns(params: TypeParams, alphas=None) -> Iterator[PatternSpec]:
    """Every pattern spec: 4 directions x selected alphas x n frame offsets.

    alphas=None selects the full partition set 1..p-1 (the strong definition);
    pass an iterable to restrict, e.g. the weakened single-partition mode.
    """
    if params.franklin_k is None:
        raise ValueError(f"order {params.n} is not of the form k*p^3 for p={params.p}")
    chosen = tuple(range(1, params.p)) if alphas is None else tuple(alphas)
    for direction in DIRECTIONS:
        for alpha in chosen:
            for offset in range(params.n):
                yield PatternSpec(direction, alpha, offset, params)
