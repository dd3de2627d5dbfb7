"""Small standalone example systems, each bundled with exact landmark points.

Every bundle validates its landmarks at construction time: the stated
verdict, worst violation, violated rows, spot residuals, and objective
value are all recomputed exactly and construction fails on any mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .ratcore import AlgebraicElement, Rat, squarefree_split
from .polyalg import Polynomial
from .systems import EQ0, LE0, PolySystem, Verdict, point_to_json, verify, verify_alg

Point = Sequence


def _mono(nv: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    e = [0] * nv
    for idx, exp in pairs:
        e[idx] += exp
    return tuple(e)


def _scalar_equals(value, target: Fraction) -> bool:
    if isinstance(value, AlgebraicElement):
        return (value - AlgebraicElement.from_rational(value.e, value.k, target)).is_zero()
    return value == target


@dataclass(frozen=True)
class Landmark:
    """A named point with its exact expected verification outcome."""

    name: str
    point: tuple
    expect_feasible: bool
    expect_worst: Fraction = Fraction(0)
    expect_violated: tuple[int, ...] | None = None
    expect_residuals: dict[int, Fraction] | None = None
    expect_objective: object | None = None

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "point": point_to_json(list(self.point)),
            "expect_feasible": self.expect_feasible,
            "expect_worst": f"{self.expect_worst.numerator}/{self.expect_worst.denominator}",
        }
        if self.expect_violated is not None:
            out["expect_violated"] = list(self.expect_violated)
        return out


@dataclass(frozen=True)
class GadgetBundle:
    system: PolySystem
    landmarks: tuple[Landmark, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for lm in self.landmarks:
            v = self.check(lm)
            if v.feasible != lm.expect_feasible:
                raise AssertionError(
                    f"landmark {lm.name!r}: feasible={v.feasible}, expected {lm.expect_feasible}"
                )
            worst = v.worst_violation
            if isinstance(worst, AlgebraicElement):
                ok = _scalar_equals(worst, lm.expect_worst)
            else:
                ok = worst == lm.expect_worst
            if not ok:
                raise AssertionError(
                    f"landmark {lm.name!r}: worst violation {worst}, expected {lm.expect_worst}"
                )
            if lm.expect_violated is not None and tuple(v.violated) != lm.expect_violated:
                raise AssertionError(
                    f"landmark {lm.name!r}: violated rows {v.violated}, expected {lm.expect_violated}"
                )
            if lm.expect_residuals:
                for idx, target in lm.expect_residuals.items():
                    if not _scalar_equals(v.residuals[idx], target):
                        raise AssertionError(
                            f"landmark {lm.name!r}: residual[{idx}] = {v.residuals[idx]}, expected {target}"
                        )
            if lm.expect_objective is not None:
                if self.system.objective is None:
                    raise AssertionError(f"landmark {lm.name!r} expects an objective value but the system has no objective")
                val = self._objective_at(lm.point)
                if isinstance(lm.expect_objective, AlgebraicElement) or isinstance(val, AlgebraicElement):
                    diff = val - lm.expect_objective
                    ok = diff.is_zero() if isinstance(diff, AlgebraicElement) else diff == 0
                else:
                    ok = val == lm.expect_objective
                if not ok:
                    raise AssertionError(
                        f"landmark {lm.name!r}: objective {val}, expected {lm.expect_objective}"
                    )

    def _objective_at(self, point: Point):
        if any(isinstance(c, AlgebraicElement) for c in point):
            return self.system.objective.eval_alg(list(point))
        return self.system.objective.eval(list(point))

    def check(self, lm: Landmark) -> Verdict:
        if any(isinstance(c, AlgebraicElement) for c in lm.point):
            return verify_alg(self.system, list(lm.point))
        return verify(self.system, list(lm.point))

    def to_json(self) -> dict:
        return {
            "system": self.system.to_json(),
            "landmarks": [lm.to_json() for lm in self.landmarks],
            "notes": list(self.notes),
        }


def _h_terms(nv: int, iy1: int, iy2: int) -> dict:
    return {
        _mono(nv, (iy1, 3)): Fraction(2),
        _mono(nv, (iy2, 3)): Fraction(1),
        _mono(nv, (iy1, 1), (iy2, 1)): Fraction(-6),
        _mono(nv): Fraction(4),
    }


def h_polynomial() -> Polynomial:
    """h(y1, y2) = 2 y1^3 + y2^3 - 6 y1 y2 + 4, minimized at (2^(1/3), 2^(2/3))."""
    return Polynomial(2, _h_terms(2, 0, 1))


def gadget_h(gamma: Rat) -> GadgetBundle:
    """Box [1.259 - gamma, 1.26] x [1.587, 1.59] intersected with h(y) <= 0.

    At gamma = 0 the only point of the region is the irrational minimizer
    (2^(1/3), 2^(2/3)); once gamma >= 3999/1000 the rational point
    (-137/50, 397/250) with h < -7 enters the box.
    """
    gamma = Fraction(gamma)
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    nv = 2
    lo1 = Fraction(1259, 1000) - gamma
    rows = [
        (Polynomial(nv, {_mono(nv, (0, 1)): -1, _mono(nv): lo1}), LE0),
        (Polynomial(nv, {_mono(nv, (0, 1)): 1, _mono(nv): Fraction(-1260, 1000)}), LE0),
        (Polynomial(nv, {_mono(nv, (1, 1)): -1, _mono(nv): Fraction(1587, 1000)}), LE0),
        (Polynomial(nv, {_mono(nv, (1, 1)): 1, _mono(nv): Fraction(-1590, 1000)}), LE0),
        (Polynomial(nv, _h_terms(nv, 0, 1)), LE0),
    ]
    t = AlgebraicElement.root(3, 2)
    ystar = (t, t * t)
    ybar = (Fraction(-137, 50), Fraction(397, 250))
    entry = Fraction(3999, 1000)
    ybar_feasible = gamma >= entry
    landmarks = (
        Landmark("ystar", ystar, True, expect_residuals={4: Fraction(0)}),
        Landmark(
            "ybar",
            ybar,
            ybar_feasible,
            expect_worst=Fraction(0) if ybar_feasible else entry - gamma,
            expect_violated=() if ybar_feasible else (0,),
        ),
    )
    notes = (
        "the irrational point ystar is the unique feasible point at gamma = 0 (grid evidence, not a proof here)",
        f"ybar enters the box exactly at gamma = {entry}",
    )
    return GadgetBundle(PolySystem(nv, rows, ["y1", "y2"]), landmarks, notes)


def gadget_tiny(n: int) -> GadgetBundle:
    """Doubly-shrinking chain over (s, d_1..d_n): 0 <= d_1 <= 1/2,
    0 <= d_k <= d_{k-1}^2, 0 <= s <= d_n^2.  The largest attainable s is
    2^(-2^n), so every feasible s needs at least 2^n bits unless it is 0."""
    if n < 1:
        raise ValueError("need n >= 1")
    nv = n + 1
    rows: list[tuple] = [
        (Polynomial(nv, {_mono(nv, (1, 1)): -1}), LE0),
        (Polynomial(nv, {_mono(nv, (1, 1)): 1, _mono(nv): Fraction(-1, 2)}), LE0),
    ]
    for k in range(2, n + 1):
        rows.append((Polynomial(nv, {_mono(nv, (k, 1)): -1}), LE0))
        rows.append(
            (Polynomial(nv, {_mono(nv, (k, 1)): 1, _mono(nv, (k - 1, 2)): -1}), LE0)
        )
    rows.append((Polynomial(nv, {_mono(nv, (0, 1)): -1}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (0, 1)): 1, _mono(nv, (n, 2)): -1}), LE0))
    names = ["s"] + [f"d{k}" for k in range(1, n + 1)]
    max_point = tuple(
        [Fraction(1, 2 ** (2 ** n))] + [Fraction(1, 2 ** (2 ** (k - 1))) for k in range(1, n + 1)]
    )
    landmarks = (
        Landmark("max_s", max_point, True),
        Landmark("origin", tuple([Fraction(0)] * nv), True),
    )
    return GadgetBundle(PolySystem(nv, rows, names), landmarks)


def gadget_khachiyan(n: int) -> GadgetBundle:
    """Doubly-growing chain y_1 >= 2, y_{i+1} >= y_i^2; every feasible point
    has y_n >= 2^(2^(n-1)), so feasible points need exponentially many bits."""
    if n < 1:
        raise ValueError("need n >= 1")
    nv = n
    rows: list[tuple] = [
        (Polynomial(nv, {_mono(nv, (0, 1)): -1, _mono(nv): 2}), LE0)
    ]
    for i in range(n - 1):
        rows.append(
            (Polynomial(nv, {_mono(nv, (i, 2)): 1, _mono(nv, (i + 1, 1)): -1}), LE0)
        )
    chain = tuple(Fraction(2 ** (2 ** i)) for i in range(n))
    landmarks = (
        Landmark(
            "min_chain",
            chain,
            True,
            expect_residuals={i: Fraction(0) for i in range(n)},
        ),
    )
    names = [f"y{i}" for i in range(1, n + 1)]
    return GadgetBundle(PolySystem(nv, rows, names), landmarks)


def gadget_badboy(N: int) -> GadgetBundle:
    """Bounded QCQP (max x_2) whose near-feasible points wildly overshoot the
    true optimum.  Variables (x_1, x_2, d_1..d_N).

    The bundled near-feasible point attains objective sqrt(2) with a single
    violation of exactly 2^(-2^N) (at the first row), while every truly
    feasible point has x_2 <= 1.228; that bound is recorded as documentation
    and spot-checked by tests, not proved here.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    nv = N + 2
    ix1, ix2, id0 = 0, 1, 2
    rows: list[tuple] = [
        # (x1 - 1)^2 + x2^2 - d_N^2 >= 3
        (
            Polynomial(
                nv,
                {
                    _mono(nv, (ix1, 2)): -1,
                    _mono(nv, (ix1, 1)): 2,
                    _mono(nv, (ix2, 2)): -1,
                    _mono(nv, (id0 + N - 1, 2)): 1,
                    _mono(nv): 2,
                },
            ),
            LE0,
        ),
        # (x1 + 1)^2 + x2^2 >= 3
        (
            Polynomial(
                nv,
                {
                    _mono(nv, (ix1, 2)): -1,
                    _mono(nv, (ix1, 1)): -2,
                    _mono(nv, (ix2, 2)): -1,
                    _mono(nv): 2,
                },
            ),
            LE0,
        ),
        # x1^2/10 + x2^2 <= 2
        (
            Polynomial(
                nv,
                {_mono(nv, (ix1, 2)): Fraction(1, 10), _mono(nv, (ix2, 2)): 1, _mono(nv): -2},
            ),
            LE0,
        ),
        # d_1 + d_N = 1/2
        (
            Polynomial(
                nv,
                {
                    _mono(nv, (id0, 1)): 1,
                    _mono(nv, (id0 + N - 1, 1)): 1,
                    _mono(nv): Fraction(-1, 2),
                },
            ),
            EQ0,
        ),
        (Polynomial(nv, {_mono(nv, (id0, 1)): -1}), LE0),
    ]
    for i in range(N - 1):
        rows.append(
            (Polynomial(nv, {_mono(nv, (id0 + i, 2)): 1, _mono(nv, (id0 + i + 1, 1)): -1}), LE0)
        )
    names = ["x1", "x2"] + [f"d{i}" for i in range(1, N + 1)]
    objective = Polynomial.variable(nv, ix2)
    system = PolySystem(nv, rows, names, objective=objective)

    sqrt2 = AlgebraicElement.root(2, 2)
    tail = Fraction(1, 2 ** (2 ** (N - 1)))
    near = [Fraction(0), sqrt2, Fraction(1, 2) - tail]
    near += [Fraction(1, 2 ** (2 ** (i - 1))) for i in range(2, N + 1)]
    violation = Fraction(1, 2 ** (2 ** N))
    landmarks = [
        Landmark(
            "near_feasible",
            tuple(near),
            False,
            expect_worst=violation,
            expect_violated=(0,),
            expect_residuals={0: violation},
            expect_objective=sqrt2,
        )
    ]
    if N >= 3:
        # zero-tail variant: chain start left at 1/2, middle entries squared
        # once more, last entry 0; violates two chain rows, worst 3/16
        zt = [Fraction(0), sqrt2, Fraction(1, 2)]
        zt += [Fraction(1, 2 ** (2 ** i)) for i in range(2, N)]
        zt += [Fraction(0)]
        landmarks.append(
            Landmark(
                "zero_tail",
                tuple(zt),
                False,
                expect_worst=Fraction(3, 16),
                expect_violated=(5, 3 + N),
                expect_residuals={5: Fraction(3, 16), 3 + N: violation},
                expect_objective=sqrt2,
            )
        )
    notes = (
        "true optimum is below 1.23 even though the near-feasible landmark attains sqrt(2)",
        "third row's right-hand side is 2 here; the otherwise-parallel two-circle system uses 4",
        "the zero-tail landmark keeps the last chain violation 2^(-2^N) but also breaks the first chain row by 3/16; near_feasible repairs that by shifting d_1",
    )
    return GadgetBundle(system, tuple(landmarks), notes)


def gadget_socp(a: int, b: int, c: int, d: int) -> GadgetBundle:
    """Squared second-order-cone system whose feasible points are all
    irrational: x_1^2 + x_2^2 <= x_0^2, x_0^2 + x_3^2 <= d^2, a <= x_1,
    b <= x_2, c <= x_3, x_0 >= 0, for a Pythagorean quadruple a^2+b^2+c^2 = d^2.
    The landmark pins x_0 = sqrt(a^2 + b^2)."""
    for v in (a, b, c, d):
        if not isinstance(v, int) or v < 1:
            raise ValueError("a, b, c, d must be positive integers")
    if a * a + b * b + c * c != d * d:
        raise ValueError(f"not a Pythagorean quadruple: {a}^2+{b}^2+{c}^2 != {d}^2")
    nv = 4
    rows = [
        (
            Polynomial(
                nv,
                {_mono(nv, (1, 2)): 1, _mono(nv, (2, 2)): 1, _mono(nv, (0, 2)): -1},
            ),
            LE0,
        ),
        (
            Polynomial(
                nv,
                {_mono(nv, (0, 2)): 1, _mono(nv, (3, 2)): 1, _mono(nv): -d * d},
            ),
            LE0,
        ),
        (Polynomial(nv, {_mono(nv, (1, 1)): -1, _mono(nv): a}), LE0),
        (Polynomial(nv, {_mono(nv, (2, 1)): -1, _mono(nv): b}), LE0),
        (Polynomial(nv, {_mono(nv, (3, 1)): -1, _mono(nv): c}), LE0),
        (Polynomial(nv, {_mono(nv, (0, 1)): -1}), LE0),
    ]
    outer, inner = squarefree_split(a * a + b * b)
    if inner == 1:
        x0 = Fraction(outer)
    else:
        x0 = AlgebraicElement(2, inner, (Fraction(0), Fraction(outer)))
    point = (x0, Fraction(a), Fraction(b), Fraction(c))
    landmarks = (
        Landmark(
            "corner",
            point,
            True,
            expect_residuals={i: Fraction(0) for i in range(5)},
        ),
    )
    names = ["x0", "x1", "x2", "x3"]
    return GadgetBundle(PolySystem(nv, rows, names), landmarks)


def gadget_unlucky(sigma: Rat) -> GadgetBundle:
    """Two-circle gap system over (z_1, z_2): (z_1-1)^2 + z_2^2 >= 5 + sigma,
    (z_1+1)^2 + z_2^2 >= 5, z_1^2/10 + z_2^2 <= 4, z_2 >= 0.

    At sigma = 0 the point (0, 2) is feasible and tight on the first three
    rows; for sigma > 0 the strip -2 < z_1 < 2 empties out and z_2^2 <= 18/5.
    """
    sigma = Fraction(sigma)
    if not 0 <= sigma <= 1:
        raise ValueError("sigma must lie in [0, 1]")
    nv = 2
    rows = [
        (
            Polynomial(
                nv,
                {
                    _mono(nv, (0, 2)): -1,
                    _mono(nv, (0, 1)): 2,
                    _mono(nv, (1, 2)): -1,
                    _mono(nv): 4 + sigma,
                },
            ),
            LE0,
        ),
        (
            Polynomial(
                nv,
                {
                    _mono(nv, (0, 2)): -1,
                    _mono(nv, (0, 1)): -2,
                    _mono(nv, (1, 2)): -1,
                    _mono(nv): 4,
                },
            ),
            LE0,
        ),
        (
            Polynomial(
                nv,
                {_mono(nv, (0, 2)): Fraction(1, 10), _mono(nv, (1, 2)): 1, _mono(nv): -4},
            ),
            LE0,
        ),
        (Polynomial(nv, {_mono(nv, (1, 1)): -1}), LE0),
    ]
    feasible = sigma == 0
    landmarks = (
        Landmark(
            "z_star",
            (Fraction(0), Fraction(2)),
            feasible,
            expect_worst=sigma,
            expect_violated=() if feasible else (0,),
        ),
    )
    notes = ("no feasible point has 0 < |z_1| < 2",)
    return GadgetBundle(PolySystem(nv, rows, ["z1", "z2"]), landmarks, notes)


GADGET_BUILDERS = {
    "h": gadget_h,
    "tiny": gadget_tiny,
    "khachiyan": gadget_khachiyan,
    "badboy": gadget_badboy,
    "socp": gadget_socp,
    "unlucky": gadget_unlucky,
}
