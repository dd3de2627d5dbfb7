"""Exact rational scalars and real algebraic field elements.

Rationals are stdlib ``fractions.Fraction`` values, which are kept in
canonical form (gcd-reduced, positive denominator) by construction.
Algebraic numbers live in Q[t]/(t^e - k) for e in {2, 3} and a positive
integer k that is not a perfect e-th power, with t standing for the real
positive e-th root of k.  All arithmetic is exact; sign determination
refines a dyadic enclosure of t until the value's interval excludes zero.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction]


def parse_rat(text: str) -> Fraction:
    """Parse "num/den", "num", or a decimal literal into an exact Fraction."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    return Fraction(s)


def format_rat(q: RatLike) -> str:
    """Canonical "num/den" string, denominator always explicit."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _ceil_log2(x: int) -> int:
    # ceil(log2(x)) for x >= 1
    return (x - 1).bit_length()


def encoding_size(q: RatLike) -> int:
    """Bit size of a rational: 1 + ceil(log2(|num|+1)) + ceil(log2(den+1))."""
    q = Fraction(q)
    return 1 + _ceil_log2(abs(q.numerator) + 1) + _ceil_log2(q.denominator + 1)


def encoding_size_vec(values: Iterable[RatLike]) -> int:
    """Total bit size of a rational vector (sum of coordinate sizes)."""
    return sum(encoding_size(v) for v in values)


def rational_sqrt(q: RatLike) -> Fraction | None:
    """Exact square root of q >= 0 when it is rational, else None."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("rational_sqrt of a negative value")
    rn = math.isqrt(q.numerator)
    if rn * rn != q.numerator:
        return None
    rd = math.isqrt(q.denominator)
    if rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def integer_nth_root(x: int, e: int) -> int:
    """floor(x ** (1/e)) for x >= 0, e >= 1, by Newton iteration on integers."""
    if x < 0:
        raise ValueError("integer_nth_root of a negative value")
    if e < 1:
        raise ValueError("root order must be >= 1")
    if e == 1 or x in (0, 1):
        return x
    if e == 2:
        return math.isqrt(x)
    r = 1 << ((x.bit_length() + e - 1) // e)
    while True:
        nr = ((e - 1) * r + x // r ** (e - 1)) // e
        if nr >= r:
            break
        r = nr
    while r ** e > x:
        r -= 1
    return r


def _is_perfect_power(k: int, e: int) -> bool:
    r = integer_nth_root(k, e)
    return r ** e == k


def theta_enclosure(e: int, k: int, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic interval [lo, hi] with lo <= k^(1/e) <= hi and hi - lo = 2^-bits."""
    l = integer_nth_root(k << (e * bits), e)
    return Fraction(l, 1 << bits), Fraction(l + 1, 1 << bits)


def squarefree_split(m: int) -> tuple[int, int]:
    """m = outer^2 * inner with inner squarefree; returns (outer, inner)."""
    if m < 1:
        raise ValueError("need a positive integer")
    outer, inner = 1, 1
    p = 2
    mm = m
    while p * p <= mm:
        if mm % p == 0:
            e = 0
            while mm % p == 0:
                mm //= p
                e += 1
            outer *= p ** (e // 2)
            inner *= p ** (e % 2)
        p += 1 if p == 2 else 2
    inner *= mm
    return outer, inner


PRECISION_CAP_ENV = "POLYCERT_PRECISION_CAP"


class PrecisionCapError(RuntimeError):
    """A dyadic refinement loop hit its precision cap before meeting its target."""


def precision_cap(default: int) -> int:
    """Bit budget for dyadic refinement loops; POLYCERT_PRECISION_CAP overrides."""
    raw = os.environ.get(PRECISION_CAP_ENV)
    return int(raw) if raw else default


# -- dense univariate polynomials over Q, ascending coefficients, for the
#    extended Euclid behind field inversion --

def _ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and _ptrim(a):
        shift = len(a) - len(b)
        c = a[-1] * inv
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        _ptrim(a)
    return _ptrim(q), a


def _pmul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ptrim(out)


def _psub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _ptrim(out)


@dataclass(frozen=True)
class AlgebraicElement:
    """Element c0 + c1*t + ... + c_{e-1}*t^(e-1) of Q[t]/(t^e - k), t = k^(1/e) > 0."""

    e: int
    k: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.e not in (2, 3):
            raise ValueError("extension degree must be 2 or 3")
        if not (isinstance(self.k, int) and self.k >= 2):
            raise ValueError("radicand must be an integer >= 2")
        if _is_perfect_power(self.k, self.e):
            raise ValueError(f"{self.k} is a perfect power; extension would not be a field")
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) > self.e:
            raise ValueError("too many coefficients")
        cs = cs + (Fraction(0),) * (self.e - len(cs))
        object.__setattr__(self, "coeffs", cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, e: int, k: int, q: RatLike) -> "AlgebraicElement":
        return cls(e, k, (Fraction(q),))

    @classmethod
    def root(cls, e: int, k: int) -> "AlgebraicElement":
        """The generator t = k^(1/e) itself."""
        return cls(e, k, (Fraction(0), Fraction(1)))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction | None:
        return self.coeffs[0] if self.is_rational() else None

    def _coerce(self, other: "AlgebraicElement | RatLike") -> "AlgebraicElement":
        if isinstance(other, AlgebraicElement):
            if (other.e, other.k) != (self.e, self.k):
                raise ValueError("mixed algebraic fields")
            return other
        return AlgebraicElement.from_rational(self.e, self.k, other)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "AlgebraicElement | RatLike") -> "AlgebraicElement":
        o = self._coerce(other)
        return AlgebraicElement(self.e, self.k, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "AlgebraicElement":
        return AlgebraicElement(self.e, self.k, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "AlgebraicElement | RatLike") -> "AlgebraicElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: RatLike) -> "AlgebraicElement":
        return self._coerce(other) - self

    def __mul__(self, other: "AlgebraicElement | RatLike") -> "AlgebraicElement":
        o = self._coerce(other)
        e, k = self.e, self.k
        prod = [Fraction(0)] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        # reduce t^(e+j) = k * t^j
        for idx in range(2 * e - 2, e - 1, -1):
            if prod[idx]:
                prod[idx - e] += k * prod[idx]
                prod[idx] = Fraction(0)
        return AlgebraicElement(e, k, tuple(prod[:e]))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero algebraic element")
        e, k = self.e, self.k
        modulus = [Fraction(-k)] + [Fraction(0)] * (e - 1) + [Fraction(1)]
        # extended Euclid: find s with s*self = gcd (a nonzero constant) mod modulus
        r0, r1 = modulus, _ptrim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if len(r0) != 1:
            raise ArithmeticError("modulus not irreducible over the inputs")
        inv_c = 1 / r0[0]
        coeffs = [c * inv_c for c in s0]
        return AlgebraicElement(e, k, tuple(coeffs[:e]))

    def __truediv__(self, other: "AlgebraicElement | RatLike") -> "AlgebraicElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: RatLike) -> "AlgebraicElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "AlgebraicElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgebraicElement.from_rational(self.e, self.k, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order -------------------------------------------------------------

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational enclosure of the real value at roughly 2^-bits width."""
        lo, hi = theta_enclosure(self.e, self.k, bits)
        plo = [lo ** j for j in range(self.e)]
        phi = [hi ** j for j in range(self.e)]
        tot_lo = Fraction(0)
        tot_hi = Fraction(0)
        for j, c in enumerate(self.coeffs):
            if c > 0:
                tot_lo += c * plo[j]
                tot_hi += c * phi[j]
            elif c < 0:
                tot_lo += c * phi[j]
                tot_hi += c * plo[j]
        return tot_lo, tot_hi

    def sign(self) -> int:
        """Exact sign of the real value: -1, 0, or +1."""
        if self.is_zero():
            return 0
        if self.is_rational():
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        bits = 64
        while True:
            lo, hi = self.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def compare(self, other: "AlgebraicElement | RatLike") -> int:
        return (self - other).sign()

    def __lt__(self, other): return self.compare(other) < 0
    def __le__(self, other): return self.compare(other) <= 0
    def __gt__(self, other): return self.compare(other) > 0
    def __ge__(self, other): return self.compare(other) >= 0

    def floor_scaled(self, bits: int) -> int:
        """floor(value * 2^bits), exact."""
        if self.is_rational():
            q = self.coeffs[0] * (1 << bits)
            return q.numerator // q.denominator
        prec = max(64, bits + 16)
        while True:
            lo, hi = self.interval(prec)
            flo = math.floor(lo * (1 << bits))
            fhi = math.floor(hi * (1 << bits))
            if flo == fhi:
                return flo
            prec *= 2

    def __str__(self) -> str:
        return " + ".join(f"({format_rat(c)})*t^{j}" for j, c in enumerate(self.coeffs))


def alg_add(a: AlgebraicElement, b: AlgebraicElement | RatLike) -> AlgebraicElement:
    return a + b


def alg_mul(a: AlgebraicElement, b: AlgebraicElement | RatLike) -> AlgebraicElement:
    return a * b


def alg_neg(a: AlgebraicElement) -> AlgebraicElement:
    return -a


def alg_sign(a: AlgebraicElement) -> int:
    return a.sign()
