"""Growth classification of polynomials along rays, cubic growth directions,
and rationalization of cubically-unbounded rays inside polyhedra."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratcore import AlgebraicElement, PrecisionCapError, precision_cap
from .polyalg import Polynomial, uni_degree
from .systems import PolySystem
from .linear import linear_rows, project_to_nullspace, satisfies

DEFAULT_RAY_CAP = 1 << 16

TO_PLUS_INFINITY = "to_plus_infinity"
TO_MINUS_INFINITY = "to_minus_infinity"
BOUNDED_CONSTANT = "bounded_constant"


def _sign(v) -> int:
    if isinstance(v, AlgebraicElement):
        return v.sign()
    return (v > 0) - (v < 0)


def _is_zero_vec(v: Sequence) -> bool:
    return all(_sign(c) == 0 for c in v)


@dataclass(frozen=True)
class RayClass:
    """Growth order (degree of the restriction's leading nonzero term) and
    direction of f(x0 + t v) as t -> +infinity; order 0 is always
    bounded_constant regardless of the constant's sign."""

    growth_order: int
    direction: str
    leading: object = None

    def to_json(self) -> dict:
        out = {"growth_order": self.growth_order, "direction": self.direction}
        if isinstance(self.leading, AlgebraicElement):
            out["leading"] = {
                "e": self.leading.e,
                "k": self.leading.k,
                "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.leading.coeffs],
            }
        elif self.leading is not None:
            q = Fraction(self.leading)
            out["leading"] = f"{q.numerator}/{q.denominator}"
        return out


def classify_ray(f: Polynomial, x0: Sequence, v: Sequence) -> RayClass:
    """Exact growth class of t -> f(x0 + t v); coordinates may be rational
    or share one algebraic extension field."""
    if len(x0) != f.num_vars or len(v) != f.num_vars:
        raise ValueError("dimension mismatch")
    if _is_zero_vec(v):
        raise ValueError("direction must be nonzero")
    algebraic = any(isinstance(c, AlgebraicElement) for c in list(x0) + list(v))
    if algebraic:
        rest = f.restrict_to_ray_alg(list(x0), list(v))
    else:
        rest = f.restrict_to_ray(list(x0), list(v))
    order = uni_degree(rest)
    lead = rest[order] if order < len(rest) else Fraction(0)
    if order == 0:
        return RayClass(0, BOUNDED_CONSTANT, rest[0] if rest else Fraction(0))
    s = _sign(lead)
    return RayClass(order, TO_PLUS_INFINITY if s > 0 else TO_MINUS_INFINITY, lead)


def cubic_growth_direction(f: Polynomial) -> list[Fraction]:
    """First point of the integer grid {-4..4}^n (lexicographic scan) where
    the cubic homogeneous part is nonzero, sign-corrected to make it positive.
    A nonzero degree-3 form cannot vanish on the whole grid."""
    f3 = f.homogeneous_component(3)
    if f3.is_zero():
        raise ValueError("polynomial has no cubic part")
    n = f.num_vars
    for grid in itertools.product(range(-4, 5), repeat=n):
        v = [Fraction(c) for c in grid]
        val = f3.eval(v)
        if val > 0:
            return v
        if val < 0:
            return [-c for c in v]
    raise AssertionError("nonzero cubic form vanished on the whole grid")


def _floor_coord(value, bits: int) -> Fraction:
    if isinstance(value, AlgebraicElement):
        return Fraction(value.floor_scaled(bits), 1 << bits)
    scaled = Fraction(value) * (1 << bits)
    return Fraction(math.floor(scaled), 1 << bits)


def _row_dot(a: Sequence[Fraction], v: Sequence):
    total = None
    for ai, vi in zip(a, v):
        term = vi * ai
        total = term if total is None else total + term
    return total


def rationalize_unbounded_ray(
    f: Polynomial,
    x_bar: Sequence,
    v_bar: Sequence,
    polytope: PolySystem | None = None,
    eps: Fraction = Fraction(1, 10),
) -> tuple[list[Fraction], list[Fraction]]:
    """Rational (x, v) close to (x_bar, v_bar) keeping cubic growth to
    +infinity: dyadic floor at doubling precision until both points are
    within eps and f3(v) > 0 exactly; with a polytope, x must satisfy it and
    v must stay in the recession cone (projecting onto the active rows at
    v_bar when rounding exits, and re-checking f3 > 0)."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    cls = classify_ray(f, x_bar, v_bar)
    if cls.growth_order != 3 or cls.direction != TO_PLUS_INFINITY:
        raise ValueError(
            f"ray must grow cubically to +infinity (got order {cls.growth_order}, {cls.direction})"
        )
    f3 = f.homogeneous_component(3)
    rows = None
    if polytope is not None:
        rows = linear_rows(polytope)
        for a, b in rows:
            if _sign(_row_dot(a, x_bar) - b) > 0:
                raise ValueError("base point does not satisfy the polytope")
            if _sign(_row_dot(a, v_bar)) > 0:
                raise ValueError("direction is not in the recession cone")

    if all(not isinstance(c, AlgebraicElement) for c in list(x_bar) + list(v_bar)):
        return [Fraction(c) for c in x_bar], [Fraction(c) for c in v_bar]

    cap = precision_cap(DEFAULT_RAY_CAP)
    k = 8
    while k <= cap:
        step = Fraction(1, 1 << k)
        if step <= eps:
            x_t = [_floor_coord(c, k) for c in x_bar]
            v_t = [_floor_coord(c, k) for c in v_bar]
            if f3.eval(v_t) > 0:
                if rows is None:
                    return x_t, v_t
                if satisfies(rows, x_t):
                    if all(_row_dot(a, v_t) <= 0 for a, _ in rows):
                        return x_t, v_t
                    active = [a for a, _ in rows if _sign(_row_dot(a, v_bar)) == 0]
                    v_p = project_to_nullspace(v_t, active)
                    if (
                        not _is_zero_vec(v_p)
                        and all(_row_dot(a, v_p) <= 0 for a, _ in rows)
                    ):
                        if f3.eval(v_p) > 0:
                            return x_t, v_p
                        raise ValueError(
                            "projection onto the recession cone lost cubic growth (f3 <= 0)"
                        )
        k *= 2
    raise PrecisionCapError(f"no qualifying dyadic pair within {cap} bits")


def quartic_counterexample() -> Polynomial:
    """y2 - (y2 - y1^2)^2 expanded: bounded along every ray of the plane yet
    unbounded above over the plane (take the parabola points (k, k^2))."""
    return Polynomial(
        2,
        {
            (4, 0): Fraction(-1),
            (2, 1): Fraction(2),
            (0, 2): Fraction(-1),
            (0, 1): Fraction(1),
        },
    )
