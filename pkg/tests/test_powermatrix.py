import random

import pytest
from hypothesis import given, strategies as st

from orthomoments.errors import InvalidExponent, ShapeError
from orthomoments.powermatrix import (
    PowerMatrix,
    add_index,
    canonical_form,
    canonical_key,
    drop_last_column,
    is_vanishing_by_parity,
    last_column,
    make_power_matrix,
)


def test_make_power_matrix_shapes():
    m = make_power_matrix([[2, 0], [0, 2]])
    assert (m.support, m.ncols) == (2, 2)
    m = make_power_matrix([[2], [0], [0]])
    assert (m.support, m.ncols) == (1, 1)
    assert m.rows == ((2,),)


def test_make_power_matrix_errors():
    with pytest.raises(InvalidExponent):
        make_power_matrix([[-1]])
    with pytest.raises(ShapeError):
        make_power_matrix([[1, 2], [3]])
    with pytest.raises(ShapeError):
        make_power_matrix([])
    with pytest.raises(ShapeError):
        PowerMatrix(((1,), (0,)), 1)


def test_interior_zero_rows_are_kept():
    m = make_power_matrix([[2], [0], [2], [0]])
    assert m.support == 3
    assert m.validity_bound == 3


grids = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 3), min_size=c, max_size=c), min_size=1, max_size=5)
)


@given(grids)
def test_trimming_idempotent(grid):
    m = make_power_matrix(grid)
    assert make_power_matrix(m.rows, ncols=m.ncols) == m


def test_parity_examples():
    assert is_vanishing_by_parity(make_power_matrix([[1], [1]]))
    assert not is_vanishing_by_parity(make_power_matrix([[1, 1], [1, 1]]))
    assert not is_vanishing_by_parity(make_power_matrix([[2]]))
    assert is_vanishing_by_parity(make_power_matrix([[1, 1], [1, 0]]))


def test_canonical_key_examples():
    assert canonical_key(make_power_matrix([[0, 2], [2, 0]])) == canonical_key(make_power_matrix([[2, 0], [0, 2]]))
    a = make_power_matrix([[2, 0], [0, 2], [0, 2]])
    assert canonical_key(a) == canonical_key(make_power_matrix([[2, 0, 0], [0, 2, 2]]))
    assert canonical_key(make_power_matrix([[2]])) != canonical_key(make_power_matrix([[4]]))


def _permute(grid, rng):
    rows = [list(r) for r in grid]
    rng.shuffle(rows)
    perm = list(range(len(rows[0])))
    rng.shuffle(perm)
    rows = [[r[j] for j in perm] for r in rows]
    if rng.random() < 0.5:
        rows = [list(c) for c in zip(*rows)]
    return rows


@given(grids, st.integers(0, 2**32))
def test_canonical_form_is_a_permutation(grid, seed):
    # whatever the key is, it must describe the same multiset of entries
    m = make_power_matrix(grid)
    c = canonical_form(make_power_matrix(_permute(grid, random.Random(seed))))
    assert sorted(e for r in c.rows for e in r if e) == sorted(e for r in m.rows for e in r if e)
    assert c.ncols <= max(1, min(m.ncols, len(grid)))


def test_canonical_key_permutation_invariance_small():
    rng = random.Random(0)
    for _ in range(200):
        grid = [[rng.choice([0, 0, 1, 2]) for _ in range(2)] for _ in range(2)]
        m = make_power_matrix(grid)
        p = make_power_matrix(_permute(grid, rng))
        assert canonical_key(m) == canonical_key(p)


def test_column_helpers():
    m = make_power_matrix([[1, 1], [1, 1]])
    assert last_column(m) == (1, 1)
    assert drop_last_column(m) == make_power_matrix([[1], [1]])
    base = make_power_matrix([[2], [0], [0]])
    assert add_index(base, [[0], [2], [0]]) == make_power_matrix([[2], [2]])
    with pytest.raises(ShapeError):
        add_index(make_power_matrix([[1, 1]]), [[1]])
    with pytest.raises(ShapeError):
        drop_last_column(make_power_matrix([[2]]))
