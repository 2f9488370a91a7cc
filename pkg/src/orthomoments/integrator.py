"""Haar integrals <M> of monomials over O(N) as exact rational functions of N.

R = 1 uses the one-vector closed form, R = 2 the two-vector closed form (or the
corrected Ullah formula), and R >= 3 the column recursion, which rewrites an
R-column integral as a linear combination of (R-1)-column integrals.  Every
step is exact.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Sequence

from .algebra import (
    RationalFunctionN,
    poch_half_constant,
    poch_integer_n,
    poch_shifted_n,
)
from .combinatorics import (
    enumerate_even_kappa,
    enumerate_k_matrices,
    matrix_multinomial,
    vector_binomial,
)
from .errors import GuardExceeded, ShapeError
from .powermatrix import (
    PowerMatrix,
    add_index,
    canonical_form,
    canonical_key,
    drop_last_column,
    is_vanishing_by_parity,
    last_column,
    make_power_matrix,
)

METHODS = ("auto", "recursion-only", "two-vector-closed", "ullah")
_ALIASES = {"recursion": "recursion-only", "two-vector": "two-vector-closed"}


@dataclass(frozen=True)
class IntegratorConfig:
    """How to evaluate <M>.

    ``method`` picks the two-column formula: ``auto`` and ``two-vector-closed``
    use the single-sum closed form, ``ullah`` the corrected double-sum formula,
    and ``recursion-only`` recurses all the way down to one column.
    ``parity_shortcut=False`` disables the early return for odd row/column
    sums, so the parity theorem can be checked against the formulas.
    """

    method: str = "auto"
    degree_guard: int = 64
    column_guard: int = 8
    parity_shortcut: bool = True

    def __post_init__(self):
        object.__setattr__(self, "method", _ALIASES.get(self.method, self.method))
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")
        if self.degree_guard < 1 or self.column_guard < 1:
            raise ValueError("guards must be positive")


class MemoCache:
    """Thread-safe map from canonical keys to computed integrals."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.hits = 0

    def get(self, key):
        with self._lock:
            value = self._data.get(key)
            if value is not None:
                self.hits += 1
            return value

    def put(self, key, value: RationalFunctionN) -> RationalFunctionN:
        # first writer wins; all writers compute the same value anyway
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()
            self.hits = 0

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def items(self):
        with self._lock:
            return list(self._data.items())


DEFAULT_CACHE = MemoCache()
_DEFAULT = object()


def _half_poch_product(values: Sequence[int]) -> Fraction:
    # prod (1/2)_{v/2} over even entries v
    return prod((poch_half_constant(v // 2) for v in values), start=Fraction(1))


def one_vector_orthogonal(m: Sequence[int]) -> RationalFunctionN:
    """<m> for a single column: (N/2)_{|m|/2}^{-1} prod_i (1/2)_{m_i/2}."""
    if any(mi % 2 for mi in m):
        return RationalFunctionN(0)
    return _half_poch_product(m) / poch_shifted_n(0, sum(m) // 2)


def one_vector_unitary(m: Sequence[int], n: Sequence[int]) -> RationalFunctionN:
    """<m:n> over U(N): monomial in real parts (m) and imaginary parts (n) of one column."""
    if len(m) != len(n):
        raise ShapeError("m and n must have equal length")
    if any(x % 2 for x in m) or any(x % 2 for x in n):
        return RationalFunctionN(0)
    total = (sum(m) + sum(n)) // 2
    return (_half_poch_product(m) * _half_poch_product(n)) / poch_integer_n(0, total)


def two_vector_closed(m: Sequence[int], n: Sequence[int]) -> RationalFunctionN:
    """<m, n> via the single sum over even kappa <= n."""
    if len(m) != len(n):
        raise ShapeError("m and n must have equal length")
    nbar = sum(n)
    if nbar % 2:
        return RationalFunctionN(0)
    acc = RationalFunctionN(0)
    for kappa in enumerate_even_kappa(n):
        rest = (nbar - sum(kappa)) // 2
        c = (
            vector_binomial(n, kappa)
            * (-1) ** rest
            * _half_poch_product(kappa)
            * poch_half_constant(rest)
        )
        v = one_vector_orthogonal([a + b - k for a, b, k in zip(m, n, kappa)])
        if v:
            acc = acc + v * c
    return acc / poch_shifted_n(-1, nbar // 2)


def two_vector_ullah(m: Sequence[int], n: Sequence[int]) -> RationalFunctionN:
    """<m, n> via the corrected Ullah double sum over k <= m, l <= n.

    For odd |m| or |n| the prefactor is not rational in N; the integral is
    zero there and the sum is checked to vanish rather than assumed to.
    """
    if len(m) != len(n):
        raise ShapeError("m and n must have equal length")
    acc = RationalFunctionN(0)
    ranges_k = [range(x + 1) for x in m]
    ranges_l = [range(x + 1) for x in n]
    for k in product(*ranges_k):
        for l in product(*ranges_l):
            left = [a + b for a, b in zip(k, l)]
            if any(x % 2 for x in left):
                continue
            right = [a - b + c - d for a, b, c, d in zip(m, k, n, l)]
            if any(x % 2 for x in right):
                continue
            c = vector_binomial(m, k) * vector_binomial(n, l) * (-1) ** sum(l)
            acc = acc + one_vector_orthogonal(left) * one_vector_orthogonal(right) * c
    mbar, nbar = sum(m), sum(n)
    if mbar % 2 or nbar % 2:
        if acc:
            raise ArithmeticError("Ullah sum does not vanish for an odd column sum")
        return acc
    pre = poch_integer_n(-1, (mbar + nbar) // 2) / (
        poch_shifted_n(-1, mbar // 2) * poch_shifted_n(-1, nbar // 2)
    )
    return acc * pre * Fraction(1, 2 ** (mbar + nbar))


def _reduction(m: PowerMatrix) -> tuple[RationalFunctionN, list[tuple[Fraction, PowerMatrix]]]:
    # Split <M> into prefactor * sum_j c_j <M_j> with (R-1)-column M_j.
    ncols = m.ncols
    if ncols < 2:
        raise ShapeError("the column recursion needs at least two columns")
    last = last_column(m)
    mbar = sum(last)
    if mbar % 2:
        return RationalFunctionN(0), []
    head = drop_last_column(m)
    terms: list[tuple[Fraction, PowerMatrix]] = []
    for kappa in enumerate_even_kappa(last):
        rest = [a - k for a, k in zip(last, kappa)]
        outer = (
            vector_binomial(last, kappa)
            * (-1) ** ((mbar - sum(kappa)) // 2)
            * _half_poch_product(kappa)
        )
        for k in enumerate_k_matrices(rest, ncols - 1):
            colsums = [sum(col) for col in zip(*k)] if k else [0] * (ncols - 1)
            c = outer * matrix_multinomial(rest, k) * _half_poch_product(colsums)
            terms.append((c, add_index(head, k) if k else head))
    return 1 / poch_shifted_n(1 - ncols, mbar // 2), terms


def recursion_reduce(m: PowerMatrix, cfg: IntegratorConfig | None = None
                     ) -> list[tuple[RationalFunctionN, PowerMatrix]]:
    """Expand <M> (R >= 2 columns) into coefficient, (R-1)-column matrix pairs.

    Terms come in the deterministic order of the kappa and K enumerations and
    are not merged.
    """
    _check_guards(m, cfg or IntegratorConfig())
    pre, terms = _reduction(m)
    return [(pre * c, child) for c, child in terms]


def _check_guards(m: PowerMatrix, cfg: IntegratorConfig):
    if m.degree > cfg.degree_guard:
        raise GuardExceeded(f"total degree {m.degree} exceeds the guard {cfg.degree_guard}")
    if m.ncols > cfg.column_guard:
        raise GuardExceeded(f"{m.ncols} columns exceed the guard {cfg.column_guard}")


def integrate(m: PowerMatrix | Sequence[Sequence[int]], cfg: IntegratorConfig | None = None,
              cache: MemoCache | None = _DEFAULT) -> RationalFunctionN:
    """<M> = integral over O(N) of prod w_{i,xi}^{M_{i,xi}} against normalized Haar measure.

    With a cache, work happens on the canonical representative of M (fewest
    columns, permuted); with ``cache=None`` the matrix is used as given, which
    is what the symmetry tests rely on.  The result is valid for
    N >= ``m.validity_bound``.
    """
    if not isinstance(m, PowerMatrix):
        m = make_power_matrix(m)
    cfg = cfg or IntegratorConfig()
    if cache is _DEFAULT:
        cache = DEFAULT_CACHE
    if cache is not None:
        m = canonical_form(m)
    _check_guards(m, cfg)
    return _integrate(m, cfg, cache)


def _integrate(m: PowerMatrix, cfg: IntegratorConfig, cache: MemoCache | None) -> RationalFunctionN:
    if cfg.parity_shortcut and is_vanishing_by_parity(m):
        return RationalFunctionN(0)
    key = None
    if cache is not None:
        key = (cfg.method, cfg.parity_shortcut, canonical_key(m))
        hit = cache.get(key)
        if hit is not None:
            return hit
        m = canonical_form(m)

    if m.ncols == 1:
        value = one_vector_orthogonal(m.column(0))
    elif m.ncols == 2 and cfg.method in ("auto", "two-vector-closed"):
        value = two_vector_closed(m.column(0), m.column(1))
    elif m.ncols == 2 and cfg.method == "ullah":
        value = two_vector_ullah(m.column(0), m.column(1))
    else:
        pre, terms = _reduction(m)
        merged: dict[PowerMatrix, Fraction] = {}
        for c, child in terms:
            merged[child] = merged.get(child, Fraction(0)) + c
        acc = RationalFunctionN(0)
        for child, c in merged.items():
            if c:
                acc = acc + _integrate(child, cfg, cache) * c
        value = acc * pre if acc else acc

    if key is not None:
        value = cache.put(key, value)
    return value
