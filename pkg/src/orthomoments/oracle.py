"""Independent checks for the symbolic integrator.

Exact values for the small groups O(1), O(2) and U(1), where Haar measure is
explicit, and a Monte Carlo estimator over Haar-random orthogonal matrices.
The Monte Carlo path uses numpy's PCG64 generator, so estimates are
reproducible given the seed and sample count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionTooSmall, ShapeError
from .powermatrix import PowerMatrix, make_power_matrix

CHUNK = 1 << 16


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def wallis_moment(a: int, b: int) -> Fraction:
    """(2 pi)^-1 int_0^{2pi} cos^a t sin^b t dt."""
    if a % 2 or b % 2:
        return Fraction(0)
    return Fraction(_double_factorial(a - 1) * _double_factorial(b - 1), _double_factorial(a + b))


def exact_o1(m: int) -> Fraction:
    """Average of x^m over O(1) = {+1, -1}."""
    return Fraction(1 + (-1) ** m, 2)


def exact_u1(m: int, n: int) -> Fraction:
    """Average of Re(w)^m Im(w)^n over the unit circle."""
    return wallis_moment(m, n)


# Entries of the two O(2) components as (cos power, sin power, sign) per position.
_ROTATION = (((1, 0, 1), (0, 1, -1)), ((0, 1, 1), (1, 0, 1)))
_REFLECTION = (((1, 0, 1), (0, 1, 1)), ((0, 1, 1), (1, 0, -1)))


def exact_o2(m: PowerMatrix) -> Fraction:
    """<M> over O(2): half rotations, half reflections, angle uniform."""
    if not isinstance(m, PowerMatrix):
        m = make_power_matrix(m)
    if m.support > 2 or m.ncols > 2:
        raise ShapeError(f"support {m.shape} does not fit in O(2)")
    grid = m.padded(2)
    total = Fraction(0)
    for component in (_ROTATION, _REFLECTION):
        a = b = 0
        sign = 1
        for i, row in enumerate(grid):
            for j, e in enumerate(row):
                ca, sb, sg = component[i][j]
                a += ca * e
                b += sb * e
                sign *= sg ** e
        total += sign * wallis_moment(a, b)
    return total / 2


def haar_sample_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """One Haar-distributed n x n orthogonal matrix."""
    return haar_sample_batch(n, 1, rng)[0]


def haar_sample_batch(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` Haar-random orthogonal matrices, shape (count, n, n).

    QR of a Gaussian matrix, with Q's columns flipped so that R has a positive
    diagonal; without the flip the result is not Haar distributed.
    """
    if n < 1:
        raise ValueError("n must be positive")
    z = rng.standard_normal((count, n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    bad = np.any(d == 0, axis=1)
    while np.any(bad):
        idx = np.flatnonzero(bad)
        q2, r2 = np.linalg.qr(rng.standard_normal((len(idx), n, n)))
        q[idx], r[idx] = q2, r2
        d = np.diagonal(r, axis1=1, axis2=2)
        bad = np.any(d == 0, axis=1)
    return q * np.sign(d)[:, None, :]


@dataclass(frozen=True)
class MomentEstimate:
    mean: float
    standard_error: float
    samples: int
    seed: int

    def z_score(self, exact: float) -> float:
        if self.standard_error == 0:
            return 0.0 if self.mean == exact else float("inf")
        return (self.mean - exact) / self.standard_error

    def agrees_with(self, exact, n_sigma: float = 4.0) -> bool:
        return abs(self.mean - float(exact)) <= n_sigma * self.standard_error


def mc_moment(m: PowerMatrix, n: int, samples: int, seed: int = 0) -> MomentEstimate:
    """Plain Monte Carlo average of prod w_ij^M_ij over Haar samples of O(n)."""
    if not isinstance(m, PowerMatrix):
        m = make_power_matrix(m)
    if n < m.validity_bound:
        raise DimensionTooSmall(f"N={n} is below max(R, r)={m.validity_bound}")
    if samples < 2:
        raise ValueError("need at least two samples for a standard error")
    rng = np.random.default_rng(seed)
    r, c = m.shape
    exps = np.array(m.rows, dtype=np.int64).reshape(r, c)
    values = np.empty(samples)
    done = 0
    while done < samples:
        k = min(CHUNK, samples - done)
        q = haar_sample_batch(n, k, rng)
        values[done:done + k] = np.prod(q[:, :r, :c] ** exps, axis=(1, 2))
        done += k
    return MomentEstimate(
        mean=float(values.mean()),
        standard_error=float(values.std(ddof=1) / np.sqrt(samples)),
        samples=samples,
        seed=seed,
    )
