"""Power matrices: the exponent pattern of a monomial in the entries of w in O(N).

A power matrix has R columns (one per column vector of w) and conceptually N
rows.  Only finitely many rows are nonzero, so we store the leading block of
rows up to the last nonzero one; everything below is implicitly zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .errors import InvalidExponent, ShapeError


@dataclass(frozen=True)
class PowerMatrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 1:
            raise ShapeError("a power matrix needs at least one column")
        for row in self.rows:
            if len(row) != self.ncols:
                raise ShapeError(f"row {row} does not have {self.ncols} entries")
            for e in row:
                if e < 0:
                    raise InvalidExponent(f"negative exponent {e}")
        if self.rows and not any(self.rows[-1]):
            raise ShapeError("trailing zero rows must be trimmed; use make_power_matrix")

    @property
    def support(self) -> int:
        """Number of stored rows (r)."""
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.support, self.ncols

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def column_sums(self) -> list[int]:
        return [sum(col) for col in self.columns()]

    @property
    def degree(self) -> int:
        return sum(self.row_sums())

    @property
    def validity_bound(self) -> int:
        """Smallest N for which the symbolic result is claimed: max(R, r)."""
        return max(self.ncols, self.support)

    def transpose(self) -> "PowerMatrix":
        if not self.rows:
            return PowerMatrix((), 1)
        return make_power_matrix(list(zip(*self.rows)))

    def padded(self, nrows: int) -> list[list[int]]:
        """Dense copy with at least ``nrows`` rows (zero-filled)."""
        out = [list(row) for row in self.rows]
        out.extend([0] * self.ncols for _ in range(nrows - len(out)))
        return out

    def __str__(self):
        if not self.rows:
            return "[" + " ".join("0" * self.ncols) + "]"
        return "; ".join(" ".join(str(e) for e in row) for row in self.rows)


def make_power_matrix(rows: Iterable[Sequence[int]], ncols: int | None = None) -> PowerMatrix:
    """Build a PowerMatrix from a rectangular grid, trimming trailing zero rows.

    ``ncols`` is only needed when ``rows`` is empty.
    """
    grid = [tuple(int(e) for e in row) for row in rows]
    if not grid:
        if ncols is None:
            raise ShapeError("cannot infer the column count of an empty matrix")
        width = ncols
    else:
        width = len(grid[0])
        if width == 0:
            raise ShapeError("rows must be nonempty")
        if ncols is not None and ncols != width:
            raise ShapeError(f"expected {ncols} columns, got {width}")
    for i, row in enumerate(grid):
        if len(row) != width:
            raise ShapeError(f"ragged input: row {i} has {len(row)} entries, expected {width}")
        for e in row:
            if e < 0:
                raise InvalidExponent(f"negative exponent {e} in row {i}")
    while grid and not any(grid[-1]):
        grid.pop()
    return PowerMatrix(tuple(grid), width)


def is_vanishing_by_parity(m: PowerMatrix) -> bool:
    """True if some row sum or column sum is odd, in which case <M> = 0."""
    return any(s % 2 for s in m.row_sums()) or any(s % 2 for s in m.column_sums())


def last_column(m: PowerMatrix) -> tuple[int, ...]:
    return m.column(m.ncols - 1)


def drop_last_column(m: PowerMatrix) -> PowerMatrix:
    if m.ncols < 2:
        raise ShapeError("cannot drop the only column")
    return make_power_matrix([row[:-1] for row in m.rows], ncols=m.ncols - 1)


def add_index(m: PowerMatrix, k: Sequence[Sequence[int]]) -> PowerMatrix:
    """Entrywise M + K, where K may have more rows than M's support."""
    k = [tuple(row) for row in k]
    if any(len(row) != m.ncols for row in k):
        raise ShapeError(f"index matrix must have {m.ncols} columns")
    if len(k) < m.support:
        raise ShapeError(f"index matrix has {len(k)} rows, power matrix support is {m.support}")
    base = m.padded(len(k))
    return make_power_matrix(
        [[a + b for a, b in zip(brow, krow)] for brow, krow in zip(base, k)], ncols=m.ncols
    )


def drop_zero_columns(m: PowerMatrix) -> PowerMatrix:
    """Remove all-zero columns; integrating out an unused column vector is free."""
    keep = [j for j, s in enumerate(m.column_sums()) if s]
    if len(keep) == m.ncols:
        return m
    if not keep:
        return PowerMatrix((), 1)
    return make_power_matrix([[row[j] for j in keep] for row in m.rows], ncols=len(keep))


def _sort_to_fixpoint(grid: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    # Alternate row and column sorts (both descending) until nothing moves.
    # Not a complete canonical form, but every step is a permutation.
    for _ in range(4 * (len(grid) + len(grid[0])) + 4):
        rows = sorted(grid, reverse=True)
        cols = sorted(zip(*rows), reverse=True)
        nxt = [tuple(r) for r in zip(*cols)]
        if nxt == grid:
            break
        grid = nxt
    return tuple(grid)


EXHAUSTIVE_COLUMNS = 5


def _canonical_block(grid: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    # With few columns, try every column order and sort rows: an exact
    # canonical form under row and column permutations.
    if len(grid[0]) > EXHAUSTIVE_COLUMNS:
        return _sort_to_fixpoint(grid)
    best = None
    for perm in permutations(range(len(grid[0]))):
        cand = tuple(sorted((tuple(row[j] for j in perm) for row in grid), reverse=True))
        if best is None or cand > best:
            best = cand
    return best


def canonical_form(m: PowerMatrix) -> PowerMatrix:
    """A representative of M under row/column permutations and transposition.

    Zero rows and columns are dropped and the orientation with fewer columns
    is used (both are tried on a tie).  Exact for up to five columns; beyond
    that, matrices that are permutations of each other may still get
    different representatives.
    """
    m = drop_zero_columns(m)
    nonzero = [row for row in m.rows if any(row)]
    if not nonzero:
        return PowerMatrix((), 1)
    blocks = []
    if len(nonzero[0]) <= len(nonzero):
        blocks.append(_canonical_block(nonzero))
    if len(nonzero) <= len(nonzero[0]):
        blocks.append(_canonical_block([tuple(c) for c in zip(*nonzero)]))
    return make_power_matrix(max(blocks))


def canonical_key(m: PowerMatrix) -> tuple:
    """Hashable key, equal for matrices with provably equal integrals."""
    c = canonical_form(m)
    return (c.ncols, c.rows)
