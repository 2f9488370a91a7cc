"""Exact univariate polynomials and rational functions in the dimension N.

Coefficients are ``fractions.Fraction``; nothing in this module touches floats.
A :class:`RationalFunctionN` is always stored fully reduced, with a primitive
integer denominator of positive leading coefficient, so two values are equal
iff their representations are equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DivisionByZero, PoleAtN

Number = int | Fraction


class PolynomialN:
    """Dense polynomial in N, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, c: Number) -> "PolynomialN":
        return cls((c,))

    @classmethod
    def linear(cls, shift: Number) -> "PolynomialN":
        """N + shift."""
        return cls((shift, 1))

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, PolynomialN):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolynomialN.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolynomialN({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return PolynomialN(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PolynomialN([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolynomialN(c * other for c in self.coeffs)
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return PolynomialN()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return PolynomialN(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PolynomialN.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return PolynomialN(), self
        quo = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / other.lc
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] * inv
            quo[k] = q
            if q:
                for j, d in enumerate(other.coeffs):
                    rem[k + j] -= q * d
        return PolynomialN(quo), PolynomialN(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if self.is_zero():
            return Fraction(1)
        den = lcm(*(c.denominator for c in self.coeffs))
        num = reduce(gcd, (abs(c.numerator) * (den // c.denominator) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> "PolynomialN":
        """Integer-coefficient primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return PolynomialN(x / c for x in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]


def _as_poly(x) -> PolynomialN:
    if isinstance(x, PolynomialN):
        return x
    if isinstance(x, (int, Fraction)):
        return PolynomialN.constant(x)
    raise TypeError(f"cannot convert {type(x).__name__} to PolynomialN")


N = PolynomialN((0, 1))


def _prem(a: list[int], b: list[int]) -> list[int]:
    # pseudo-remainder of integer polynomials (ascending coefficients)
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        la = a[-1]
        a = [x * lb for x in a]
        for j, y in enumerate(b):
            a[k + j] -= la * y
        while a and a[-1] == 0:
            a.pop()
    return a


def _prim_int(a: list[int]) -> list[int]:
    g = reduce(gcd, (abs(x) for x in a))
    s = -1 if a[-1] < 0 else 1
    return [s * x // g for x in a]


def poly_gcd(a: PolynomialN, b: PolynomialN) -> PolynomialN:
    """Primitive gcd (integer coefficients, positive leading coefficient).

    Primitive Euclidean remainder sequence; gcd(0, 0) is defined as 1.
    """
    if a.is_zero() and b.is_zero():
        return PolynomialN.constant(1)
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    x = a.primitive().integer_coeffs()
    y = b.primitive().integer_coeffs()
    if len(x) < len(y):
        x, y = y, x
    while y:
        if len(y) == 1:
            return PolynomialN.constant(1)
        r = _prem(x, y)
        x, y = y, (_prim_int(r) if r else [])
    return PolynomialN(_prim_int(x))


class RationalFunctionN:
    """Reduced ratio of two polynomials in N.

    Normal form: gcd(num, den) = 1, den has integer coefficients with content 1
    and a positive leading coefficient.  Zero is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if not _reduced:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: PolynomialN) -> "RationalFunctionN":
        return cls(p, 1, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PolynomialN)):
            other = RationalFunctionN(other)
        if isinstance(other, RationalFunctionN):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunctionN({render_expanded(self)!r})"

    def __str__(self):
        return render_factored(self)

    def __neg__(self):
        return RationalFunctionN(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = _as_rf(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalFunctionN(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        sd, od = self.den // g, other.den // g
        return RationalFunctionN(self.num * od + other.num * sd, self.den * od)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunctionN()
            return RationalFunctionN(self.num * other, self.den, _reduced=True)
        other = _as_rf(other)
        if self.is_zero() or other.is_zero():
            return RationalFunctionN()
        # cross-cancel first to keep degrees down
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        return RationalFunctionN(
            (self.num // g1) * (other.num // g2), (self.den // g2) * (other.den // g1)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * RationalFunctionN(other.den, other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunctionN(1) / self ** (-k)
        out = RationalFunctionN(1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, n: Number) -> Fraction:
        d = self.den(n)
        if d == 0:
            raise PoleAtN(f"denominator vanishes at N={n}")
        return self.num(n) / d

    __call__ = evaluate


def _as_rf(x) -> RationalFunctionN:
    if isinstance(x, RationalFunctionN):
        return x
    return RationalFunctionN(x)


def _normalize(num: PolynomialN, den: PolynomialN) -> tuple[PolynomialN, PolynomialN]:
    if num.is_zero():
        return PolynomialN(), PolynomialN.constant(1)
    g = poly_gcd(num, den)
    if not g.is_constant():
        num, den = num // g, den // g
    c = den.content()
    if den.lc < 0:
        c = -c
    return num * (1 / c), den * (1 / c)


def normalize(f: RationalFunctionN) -> RationalFunctionN:
    return RationalFunctionN(f.num, f.den)


def evaluate_at(f: RationalFunctionN, n: Number) -> Fraction:
    return f.evaluate(n)


# Pochhammer constructors -------------------------------------------------

def poch_half_constant(j: int) -> Fraction:
    """(1/2)_j = (1/2)(3/2)...(j - 1/2)."""
    out = Fraction(1)
    for t in range(j):
        out *= Fraction(2 * t + 1, 2)
    return out


def poch_shifted_n(offset: int, j: int) -> RationalFunctionN:
    """((N + offset)/2)_j as a polynomial in N."""
    p = PolynomialN.constant(1)
    for t in range(j):
        p = p * PolynomialN((Fraction(offset + 2 * t, 2), Fraction(1, 2)))
    return RationalFunctionN.from_poly(p)


def poch_integer_n(offset: int, j: int) -> RationalFunctionN:
    """(N + offset)_j = (N+offset)(N+offset+1)...(N+offset+j-1)."""
    p = PolynomialN.constant(1)
    for t in range(j):
        p = p * PolynomialN.linear(offset + t)
    return RationalFunctionN.from_poly(p)


# Rendering ------------------------------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: PolynomialN, var: str = "N") -> str:
    """Expanded caret notation, highest degree first: ``N^2+3N-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k == 0:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        elif a.denominator == 1:
            body = f"{a.numerator}{mono}"
        else:
            body = f"({_fmt_coeff(a)}){mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _integer_numerator(f: RationalFunctionN) -> tuple[PolynomialN, int]:
    # num = P / L with P integral
    L = lcm(*(c.denominator for c in f.num.coeffs)) if f.num.coeffs else 1
    return f.num * L, L


def _linear_factors(den: PolynomialN) -> list[tuple[int, int]] | None:
    """Factor a primitive integer polynomial as lc * prod (N+a)^e.

    Returns [(a, e), ...] sorted by a, or None if the polynomial is not a
    product of monic integer-shift linear factors.
    """
    coeffs = den.integer_coeffs()
    if coeffs[-1] != 1:
        return None
    factors: dict[int, int] = {}
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        factors[0] = factors.get(0, 0) + 1
    bound = 4 * len(coeffs) + 16
    while len(coeffs) > 1:
        found = False
        for r in sorted(range(-bound, bound + 1), key=abs):
            if r == 0 or coeffs[0] % r:
                continue
            # synthetic division by (N - r)
            acc, quo = 0, []
            for c in reversed(coeffs):
                acc = acc * r + c
                quo.append(acc)
            if acc == 0:
                coeffs = list(reversed(quo[:-1]))
                factors[-r] = factors.get(-r, 0) + 1
                found = True
                break
        if not found:
            return None
    return sorted(factors.items())


def _fmt_factor(a: int, e: int) -> str:
    if a == 0:
        base = "N"
    else:
        base = f"(N{'+' if a > 0 else '-'}{abs(a)})"
    return base if e == 1 else f"{base}^{e}"


def render_expanded(f: RationalFunctionN) -> str:
    num = format_poly(f.num)
    if f.den == 1:
        return num
    if len([c for c in f.num.coeffs if c]) > 1:
        num = f"({num})"
    den = format_poly(f.den)
    if f.den.degree > 0:
        den = f"({den})"
    return f"{num}/{den}"


def render_factored(f: RationalFunctionN) -> str:
    """Expanded numerator over a product of linear factors (N+a).

    Falls back to :func:`render_expanded` when the denominator has a factor
    that is not of that form.
    """
    if f.is_zero():
        return "0"
    factors = _linear_factors(f.den)
    if factors is None:
        return render_expanded(f)
    p, scale = _integer_numerator(f)
    num = format_poly(p)
    if len([c for c in p.coeffs if c]) > 1:
        num = f"({num})"
    parts = ([str(scale)] if scale != 1 else []) + [_fmt_factor(a, e) for a, e in factors]
    if not parts:
        return num
    if len(parts) == 1:
        return f"{num}/{parts[0]}"
    return f"{num}/({''.join(parts)})"
