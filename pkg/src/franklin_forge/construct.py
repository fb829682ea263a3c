"""Seeded structured search for type-p most-perfect squares of order p^r.

Candidates are digit-linear: cell (i, j) with base-p digit vector v (row digits
first, most significant first) receives the symbol whose digit vector is
matrix @ v + offset (mod p). An invertible matrix makes the square natural;
every returned square is additionally screened by the full most-perfect
verifier, so there is no code path handing back an unverified square.

The sweep tries block-patterned matrices [[A, B], [B, A]] first: A supported on
the least significant row digit with nonzero coefficients, B ranging over
matrices with an all-nonzero leading column. Experimentally these are where
most-perfect squares live; candidates the verifier rejects are simply skipped.
A seeded random phase over general invertible matrices follows if the sweep
runs dry.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import fixtures as _fixtures
from .core import Grid, NaturalSquare, TypeParams, is_prime
from .properties import REQUIRED_VERDICTS, verify_all


class GeneratorExhaustedError(RuntimeError):
    """Search budget spent without a verified square; never a silent fallback."""


@dataclass(frozen=True)
class GeneratorConfig:
    p: int
    r: int
    seed: int = 0
    max_attempts: int = 100000
    family: str = "digit_linear"

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.r < 2:
            raise ValueError("most-perfect construction needs r >= 2")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")
        if self.family not in ("digit_linear", "fixtures_only"):
            raise ValueError(f"unknown family {self.family!r}")


@dataclass(frozen=True)
class DigitLinearCandidate:
    """2r x 2r matrix and 2r offset over residues mod p."""

    matrix: tuple
    offset: tuple

    @classmethod
    def of(cls, matrix, offset) -> "DigitLinearCandidate":
        return cls(tuple(tuple(int(x) for x in row) for row in matrix),
                   tuple(int(x) for x in offset))


def _rank_mod(matrix: np.ndarray, p: int) -> int:
    a = matrix.astype(np.int64).copy() % p
    m = a.shape[0]
    rank = 0
    for col in range(a.shape[1]):
        piv = None
        for row in range(rank, m):
            if a[row, col]:
                piv = row
                break
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), p - 2, p)) % p
        for row in range(m):
            if row != rank and a[row, col]:
                a[row] = (a[row] - a[row, col] * a[rank]) % p
        rank += 1
    return rank


def is_invertible_mod(matrix, p: int) -> bool:
    a = np.asarray(matrix)
    return a.shape[0] == a.shape[1] and _rank_mod(a, p) == a.shape[0]


def candidate_to_square(candidate: DigitLinearCandidate, p: int, r: int) -> NaturalSquare:
    """Materialize the digit map; raises on a non-invertible matrix."""
    m = np.asarray(candidate.matrix, dtype=np.int64) % p
    b = np.asarray(candidate.offset, dtype=np.int64) % p
    if m.shape != (2 * r, 2 * r) or b.shape != (2 * r,):
        raise ValueError(f"candidate dimensions {m.shape}/{b.shape} do not fit 2r={2 * r}")
    if not is_invertible_mod(m, p):
        raise ValueError("candidate matrix is singular mod p")
    n = p**r
    idx = np.arange(n)
    digits = np.stack([(idx // p ** (r - 1 - d)) % p for d in range(r)])  # msb first
    a_rows, a_cols = m[:, :r], m[:, r:]
    u = (
        np.einsum("dk,ki->di", a_rows, digits)[:, :, None]
        + np.einsum("dk,kj->dj", a_cols, digits)[:, None, :]
        + b[:, None, None]
    ) % p
    weights = p ** np.arange(2 * r - 1, -1, -1)
    return NaturalSquare(Grid(np.einsum("d,dij->ij", weights, u)))


def _structured_candidates(p: int, r: int):
    """Deterministic lexicographic sweep of the block-patterned family."""
    zero = [[0] * r for _ in range(r)]
    for diag in itertools.product(range(1, p), repeat=r):
        a = [row[:] for row in zero]
        for d in range(r):
            a[d][r - 1] = diag[d]
        for lead in itertools.product(range(1, p), repeat=r):
            for rest in itertools.product(range(p), repeat=r * (r - 1)):
                bmat = [
                    [lead[row]] + list(rest[row * (r - 1) : (row + 1) * (r - 1)])
                    for row in range(r)
                ]
                matrix = [a[row] + bmat[row] for row in range(r)] + [
                    bmat[row] + a[row] for row in range(r)
                ]
                yield DigitLinearCandidate.of(matrix, (0,) * (2 * r))


def _random_candidates(p: int, r: int, rng: random.Random):
    while True:
        matrix = [[rng.randrange(p) for _ in range(2 * r)] for _ in range(2 * r)]
        offset = [rng.randrange(p) for _ in range(2 * r)]
        yield DigitLinearCandidate.of(matrix, offset)


def most_perfect_requirements_met(report) -> bool:
    return REQUIRED_VERDICTS["most_perfect_type_p"] <= report.passed_names()


def generate_most_perfect(config: GeneratorConfig) -> NaturalSquare:
    """First verified most-perfect square in deterministic candidate order.

    Raises GeneratorExhaustedError once max_attempts candidates have been built
    and screened (or the fixtures-only family has nothing for these parameters).
    """
    params = TypeParams.for_power(config.p, config.r)
    if config.family == "fixtures_only":
        wanted = {(2, 3): "figure2_mp8", (3, 2): "figure2_mp9"}.get((config.p, config.r))
        if wanted is None:
            raise GeneratorExhaustedError(
                f"no embedded most-perfect square for p={config.p}, r={config.r}"
            )
        for name, square, _ in builtin_fixtures():
            if name == wanted:
                return square
        raise GeneratorExhaustedError(f"fixture {wanted} missing")  # pragma: no cover

    rng = random.Random(config.seed)
    attempts = 0
    candidates = itertools.chain(
        _structured_candidates(config.p, config.r),
        _random_candidates(config.p, config.r, rng),
    )
    for candidate in candidates:
        if attempts >= config.max_attempts:
            break
        if not is_invertible_mod(np.asarray(candidate.matrix), config.p):
            continue
        attempts += 1
        square = candidate_to_square(candidate, config.p, config.r)
        if most_perfect_requirements_met(verify_all(square, params)):
            return square
    raise GeneratorExhaustedError(
        f"no verified most-perfect square for p={config.p}, r={config.r} "
        f"within {config.max_attempts} attempts"
    )


def builtin_fixtures() -> list[tuple[str, NaturalSquare, TypeParams]]:
    """The embedded reference squares, bit-exact as printed."""
    out = []
    for name, p, rows in _fixtures.FIXTURE_TABLE:
        square = NaturalSquare.from_rows(rows)
        out.append((name, square, TypeParams(p, square.order)))
    return out
