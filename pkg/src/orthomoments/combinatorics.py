"""Index enumerations and binomial/multinomial products used by the integrator."""

from __future__ import annotations

from itertools import product
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import IndexOutOfRange, RowSumMismatch, ShapeError


def vector_binomial(n: Sequence[int], k: Sequence[int]) -> int:
    """prod_i C(n_i, k_i)."""
    if len(n) != len(k):
        raise ShapeError("index vectors differ in length")
    for ni, ki in zip(n, k):
        if ki < 0 or ki > ni:
            raise IndexOutOfRange(f"{ki} is outside 0..{ni}")
    return prod(comb(ni, ki) for ni, ki in zip(n, k))


def matrix_multinomial(n: Sequence[int], k: Sequence[Sequence[int]]) -> int:
    """prod_i n_i! / prod_{i,xi} K_{i,xi}!, the row-wise multinomial product."""
    if len(n) != len(k):
        raise ShapeError("row count of K does not match n")
    out = 1
    for ni, row in zip(n, k):
        if sum(row) != ni:
            raise RowSumMismatch(f"row {tuple(row)} does not sum to {ni}")
        out *= factorial(ni) // prod(factorial(x) for x in row)
    return out


def enumerate_even_kappa(m: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All kappa with 0 <= kappa_i <= m_i and every kappa_i even, lexicographic."""
    return product(*(range(0, mi + 1, 2) for mi in m))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_k_matrices(row_totals: Sequence[int], columns: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Nonnegative matrices with prescribed row sums and all column sums even."""
    if columns < 1:
        raise ShapeError("need at least one column")
    per_row = [list(compositions(t, columns)) for t in row_totals]
    for k in product(*per_row):
        if all(sum(col) % 2 == 0 for col in zip(*k)):
            yield k
