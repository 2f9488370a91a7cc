from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from orthomoments.errors import DimensionTooSmall, ShapeError
from orthomoments.oracle import (
    exact_o1,
    exact_o2,
    exact_u1,
    haar_sample_batch,
    haar_sample_orthogonal,
    mc_moment,
    wallis_moment,
)
from orthomoments.powermatrix import make_power_matrix as P


def test_wallis_examples():
    assert wallis_moment(0, 0) == 1
    assert wallis_moment(2, 2) == Fraction(1, 8)
    assert wallis_moment(1, 2) == 0


@pytest.mark.parametrize("a,b", list(product(range(7), repeat=2)))
def test_wallis_against_quadrature(a, b):
    # equispaced rule is exact for trigonometric polynomials of degree < K
    t = 2 * np.pi * np.arange(64) / 64
    assert float(wallis_moment(a, b)) == pytest.approx(np.mean(np.cos(t) ** a * np.sin(t) ** b), abs=1e-14)


def test_exact_o1():
    assert [exact_o1(m) for m in (0, 2, 3)] == [1, 1, 0]


def test_exact_u1():
    assert exact_u1(2, 0) == Fraction(1, 2)
    assert exact_u1(2, 2) == Fraction(1, 8)
    assert exact_u1(4, 0) == Fraction(3, 8)


def test_exact_o2_examples():
    assert exact_o2(P([[2]])) == Fraction(1, 2)
    assert exact_o2(P([[1, 1], [1, 1]])) == Fraction(-1, 8)
    assert exact_o2(P([[4]])) == Fraction(3, 8)
    with pytest.raises(ShapeError):
        exact_o2(P([[1], [1], [1]]))


@pytest.mark.parametrize("grid", [[[1, 1], [1, 1]], [[2, 0], [0, 2]], [[3, 1], [1, 1]], [[2, 2]]])
def test_exact_o2_against_quadrature(grid):
    t = 2 * np.pi * np.arange(64) / 64
    c, s = np.cos(t), np.sin(t)
    m = np.array(P(grid).padded(2))
    rot = np.array([[c, -s], [s, c]])
    ref = np.array([[c, s], [s, -c]])
    vals = [np.mean(np.prod(g ** m[:, :, None], axis=(0, 1))) for g in (rot, ref)]
    assert float(exact_o2(P(grid))) == pytest.approx(np.mean(vals), abs=1e-14)


def test_haar_sample_is_orthogonal():
    rng = np.random.default_rng(1)
    for n in (1, 2, 3, 6):
        q = haar_sample_orthogonal(n, rng)
        assert np.max(np.abs(q.T @ q - np.eye(n))) <= 1e-12
        assert abs(abs(np.linalg.det(q)) - 1) <= 1e-10


def test_haar_first_moment_vanishes():
    q = haar_sample_batch(3, 10_000, np.random.default_rng(2))
    x = q[:, 0, 0]
    assert abs(x.mean()) <= 4 * x.std(ddof=1) / np.sqrt(len(x))


def test_haar_both_determinants():
    dets = np.linalg.det(haar_sample_batch(3, 2000, np.random.default_rng(4)))
    frac = np.mean(dets > 0)
    assert 0.45 < frac < 0.55


def test_mc_one_over_n():
    est = mc_moment(P([[2]]), 4, 100_000, seed=9)
    assert est.agrees_with(Fraction(1, 4))
    assert est.samples == 100_000 and est.standard_error > 0


def test_mc_reproducible():
    a = mc_moment(P([[1, 1], [1, 1]]), 5, 70_000, seed=42)
    b = mc_moment(P([[1, 1], [1, 1]]), 5, 70_000, seed=42)
    assert a == b
    assert mc_moment(P([[1, 1], [1, 1]]), 5, 70_000, seed=43) != a


def test_mc_errors():
    with pytest.raises(DimensionTooSmall):
        mc_moment(P([[2, 0, 0]]), 2, 100)
    with pytest.raises(ValueError):
        mc_moment(P([[2]]), 3, 1)
