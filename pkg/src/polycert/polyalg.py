"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial over variables x1..xn is a map from exponent tuples to nonzero
Fractions.  Term order everywhere (printing, serialization) is graded
lexicographic, highest first, so equal polynomials always serialize to
identical bytes.  Univariate restrictions are dense coefficient lists in
ascending degree order; their entries are Fractions or AlgebraicElements
depending on the data of the ray.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .ratcore import AlgebraicElement, RatLike, format_rat, parse_rat

Monomial = tuple[int, ...]
UniPoly = list  # dense, ascending; entries Fraction (UniPoly) or AlgebraicElement (UniPolyAlg)
Scalar = Union[int, Fraction, AlgebraicElement]


def _term_key(item: tuple[Monomial, Fraction]) -> tuple:
    exps, _ = item
    return (sum(exps), exps)


class Polynomial:
    """Immutable-by-convention sparse polynomial over Q."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        clean: dict[Monomial, Fraction] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars:
                raise ValueError("exponent tuple length does not match num_vars")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = Fraction(coef)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.num_vars = num_vars
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, c: RatLike) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: Fraction(c)})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "Polynomial":
        """The monomial x_{index}, 0-based."""
        if not 0 <= index < num_vars:
            raise ValueError("variable index out of range")
        exps = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls(num_vars, {exps: Fraction(1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=_term_key, reverse=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, tuple(self.sorted_terms())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial | RatLike") -> "Polynomial":
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial | RatLike") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: RatLike) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | RatLike") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.num_vars, {e: c * v for e, v in self.terms.items()})
        o = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other: "Polynomial | RatLike") -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise ValueError("mixed variable counts")
            return other
        return Polynomial.constant(self.num_vars, other)

    # -- evaluation --------------------------------------------------------

    def eval(self, point: Sequence[RatLike]) -> Fraction:
        if len(point) != self.num_vars:
            raise ValueError("point dimension mismatch")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, coef in self.terms.items():
            v = coef
            for x, e in zip(pt, exps):
                if e:
                    v *= x ** e
            total += v
        return total

    def eval_alg(self, point: Sequence[Scalar]) -> AlgebraicElement:
        """Evaluate at a point with AlgebraicElement coordinates (rationals allowed)."""
        if len(point) != self.num_vars:
            raise ValueError("point dimension mismatch")
        field = None
        for x in point:
            if isinstance(x, AlgebraicElement):
                if field is not None and (x.e, x.k) != field:
                    raise ValueError("mixed algebraic fields in point")
                field = (x.e, x.k)
        if field is None:
            raise ValueError("no algebraic coordinate; use eval for rational points")
        e_, k_ = field
        one = AlgebraicElement.from_rational(e_, k_, 1)
        pt = [x if isinstance(x, AlgebraicElement) else one * Fraction(x) for x in point]
        total = AlgebraicElement.from_rational(e_, k_, 0)
        for exps, coef in self.terms.items():
            v = one * coef
            for x, e in zip(pt, exps):
                if e:
                    v = v * x ** e
            total = total + v
        return total

    # -- calculus and structure maps ----------------------------------------

    def gradient(self) -> tuple["Polynomial", ...]:
        grads = []
        for i in range(self.num_vars):
            terms: dict[Monomial, Fraction] = {}
            for exps, coef in self.terms.items():
                if exps[i]:
                    ne = list(exps)
                    ne[i] -= 1
                    key = tuple(ne)
                    terms[key] = terms.get(key, Fraction(0)) + coef * exps[i]
            grads.append(Polynomial(self.num_vars, terms))
        return tuple(grads)

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(
            self.num_vars, {e: c for e, c in self.terms.items() if sum(e) == d}
        )

    def affine_substitute(self, A: Sequence[Sequence[RatLike]], b: Sequence[RatLike]) -> "Polynomial":
        """p(A y + b): row i of A gives the expansion of old x_i over the new variables."""
        if len(A) != self.num_vars or len(b) != self.num_vars:
            raise ValueError("substitution shape mismatch")
        m = len(A[0]) if self.num_vars else 0
        if any(len(row) != m for row in A):
            raise ValueError("ragged substitution matrix")
        images = []
        for i in range(self.num_vars):
            terms: dict[Monomial, Fraction] = {}
            const = Fraction(b[i])
            if const:
                terms[(0,) * m] = const
            for j, a in enumerate(A[i]):
                a = Fraction(a)
                if a:
                    key = tuple(1 if t == j else 0 for t in range(m))
                    terms[key] = terms.get(key, Fraction(0)) + a
            images.append(Polynomial(m, terms))
        powers: list[dict[int, Polynomial]] = [dict() for _ in range(self.num_vars)]
        out = Polynomial.zero(m)
        for exps, coef in self.terms.items():
            term = Polynomial.constant(m, coef)
            for i, e in enumerate(exps):
                if e:
                    if e not in powers[i]:
                        powers[i][e] = images[i] ** e
                    term = term * powers[i][e]
            out = out + term
        return out

    def restrict_to_ray(self, x0: Sequence[RatLike], v: Sequence[RatLike]) -> UniPoly:
        """Dense coefficients of lambda -> p(x0 + lambda v), ascending degree."""
        return self._restrict(
            [Fraction(x) for x in x0], [Fraction(x) for x in v], Fraction(0), Fraction(1)
        )

    def restrict_to_ray_alg(self, x0: Sequence[Scalar], v: Sequence[Scalar]) -> UniPoly:
        """Ray restriction with algebraic base point or direction."""
        field = None
        for x in list(x0) + list(v):
            if isinstance(x, AlgebraicElement):
                if field is not None and (x.e, x.k) != field:
                    raise ValueError("mixed algebraic fields in ray data")
                field = (x.e, x.k)
        if field is None:
            return self.restrict_to_ray(x0, v)
        e_, k_ = field
        zero = AlgebraicElement.from_rational(e_, k_, 0)
        one = AlgebraicElement.from_rational(e_, k_, 1)

        def lift(x):
            return x if isinstance(x, AlgebraicElement) else one * Fraction(x)

        return self._restrict([lift(x) for x in x0], [lift(x) for x in v], zero, one)

    def _restrict(self, x0, v, zero, one) -> UniPoly:
        if len(x0) != self.num_vars or len(v) != self.num_vars:
            raise ValueError("ray dimension mismatch")
        out = [zero]
        for exps, coef in self.terms.items():
            dense = [one * coef]
            for x, dr, e in zip(x0, v, exps):
                for _ in range(e):
                    dense = _dense_mul(dense, [x, dr], zero)
            if len(dense) > len(out):
                out = out + [zero] * (len(dense) - len(out))
            for i, c in enumerate(dense):
                out[i] = out[i] + c
        return _uni_trim(out)

    # -- integer height ------------------------------------------------------

    def height_and_degree(self) -> tuple[int, int, int]:
        """(H, d, D): clear denominators by D = lcm(dens); H = max |coef| of D*p; d = total degree."""
        if not self.terms:
            return 0, 0, 1
        D = 1
        for c in self.terms.values():
            D = D * c.denominator // math.gcd(D, c.denominator)
        H = max(abs(c.numerator) * (D // c.denominator) for c in self.terms.values())
        return H, self.degree(), D

    # -- text and JSON -------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            factors = [format_rat(coef)]
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.num_vars,
            "terms": [
                {"exps": list(e), "coef": format_rat(c)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        n = int(data["n"])
        terms: dict[Monomial, Fraction] = {}
        for t in data["terms"]:
            exps = tuple(int(e) for e in t["exps"])
            coef = parse_rat(t["coef"])
            if exps in terms:
                raise ValueError("duplicate monomial in polynomial JSON")
            terms[exps] = coef
        return cls(n, terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


# -- dense univariate helpers -------------------------------------------------

def _dense_mul(a: list, b: list, zero) -> list:
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def _is_zero_entry(c) -> bool:
    return c.is_zero() if isinstance(c, AlgebraicElement) else c == 0


def _uni_trim(p: UniPoly) -> UniPoly:
    while len(p) > 1 and _is_zero_entry(p[-1]):
        p.pop()
    if len(p) == 1 and _is_zero_entry(p[0]):
        return p
    return p


def uni_degree(p: UniPoly) -> int:
    """Degree after stripping exactly-zero leading coefficients (zero poly -> 0)."""
    d = len(p) - 1
    while d > 0 and _is_zero_entry(p[d]):
        d -= 1
    return d


def uni_eval(p: UniPoly, x):
    """Horner evaluation; x may be rational or a field element."""
    if not isinstance(x, AlgebraicElement):
        x = Fraction(x)
    total = x * 0
    for c in reversed(p):
        total = total * x + c
    return total


def uni_derivative(p: UniPoly) -> UniPoly:
    if len(p) <= 1:
        return [Fraction(0)]
    return _uni_trim([c * i for i, c in enumerate(p)][1:])
