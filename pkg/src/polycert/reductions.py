"""3-SAT parsing, the hardness-instance constructions, and witness builders.

Every generated system uses a fixed, documented variable order so witness
vectors are position-stable:

  quadratic / cubic-constraint system ("np-hard"):
      x_1..x_{2n}, gamma, Delta, y_1, y_2, d_1..d_n, s        (3n + 5)
      quadratized: append y_12, y_22                          (3n + 7)
  cubic single-constraint system:
      x_1..x_{2n}, gamma, Delta, y_1, y_2                     (2n + 4)
  superoptimal problem:
      np-hard variables, then z_1, z_2                        (3n + 7)
  unbounded cone K:
      x_1..x_{2n}, y_1, y_2, y_3, Delta, gamma                (2n + 5)

Literal u maps to coordinate u-1 (positive) or n + |u| - 1 (negated).
Decimal interval endpoints are exact rationals with power-of-ten
denominators (1.259 -> 1259/1000, etc.).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratcore import (
    PRECISION_CAP_ENV,
    AlgebraicElement,
    PrecisionCapError,
    integer_nth_root,
    precision_cap,
)
from .polyalg import Polynomial
from .systems import EQ0, GE0, LE0, PolySystem

Y1_LO = Fraction(1259, 1000)
Y1_HI = Fraction(1260, 1000)
Y2_LO = Fraction(1587, 1000)
Y2_HI = Fraction(1590, 1000)
Y_BAR = (Fraction(-274, 100), Fraction(1588, 1000))

DEFAULT_PRECISION_CAP = 1 << 20


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF formula in DIMACS literal convention (+j for w_j, -j for not w_j)."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError("formula needs at least one variable")
        for cl in self.clauses:
            if len(cl) != 3:
                raise ValueError("clause arity must be exactly 3")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.num_vars:
            raise ValueError("assignment length mismatch")
        return all(
            any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in cl)
            for cl in self.clauses
        )


Assignment = tuple  # booleans b_1..b_n


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF with exactly-3-literal clauses; comments skipped."""
    num_vars = None
    tokens: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) < 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars = int(parts[2])
            continue
        tokens.extend(int(t) for t in line.split())
    clauses: list[tuple[int, int, int]] = []
    cur: list[int] = []
    for t in tokens:
        if t == 0:
            if cur:
                if len(cur) != 3:
                    raise ValueError(f"clause arity {len(cur)} != 3: {cur}")
                clauses.append(tuple(cur))
                cur = []
        else:
            cur.append(t)
    if cur:
        if len(cur) != 3:
            raise ValueError(f"clause arity {len(cur)} != 3: {cur}")
        clauses.append(tuple(cur))
    if num_vars is None:
        num_vars = max((abs(l) for cl in clauses for l in cl), default=1)
    return CnfFormula(num_vars, tuple(clauses))


def _lit_coord(lit: int, n: int) -> int:
    return lit - 1 if lit > 0 else n + (-lit) - 1


def _mono(nv: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    e = [0] * nv
    for idx, exp in pairs:
        e[idx] += exp
    return tuple(e)


def _check_n(cnf: CnfFormula) -> None:
    if cnf.num_vars < 1:
        raise ValueError("need n >= 1")
    if cnf.num_vars < 3:
        warnings.warn("constructions are stated for n >= 3; smaller n is well-defined but outside the stated hypothesis")


def _np_hard_names(n: int, quadratize: bool) -> list[str]:
    names = [f"x{j}" for j in range(1, 2 * n + 1)] + ["gamma", "Delta", "y1", "y2"]
    names += [f"d{k}" for k in range(1, n + 1)] + ["s"]
    if quadratize:
        names += ["y12", "y22"]
    return names


def _common_linear_rows(nv: int, n: int, clauses, ix, igamma, idelta, iy1, iy2):
    """The shared linear constraints: variable boxes, literal pairing, clause
    rows, the (gamma, Delta) region, and y in R_gamma."""
    rows: list[tuple] = []
    for j in range(2 * n):
        rows.append((Polynomial(nv, {_mono(nv, (ix + j, 1)): -1, _mono(nv): -1}), LE0))
        rows.append((Polynomial(nv, {_mono(nv, (ix + j, 1)): 1, _mono(nv): -1}), LE0))
    for j in range(n):
        rows.append(
            (Polynomial(nv, {_mono(nv, (ix + j, 1)): 1, _mono(nv, (ix + n + j, 1)): 1}), EQ0)
        )
    for cl in clauses:
        terms = {_mono(nv): Fraction(-1), _mono(nv, (idelta, 1)): Fraction(-1)}
        for lit in cl:
            key = _mono(nv, (ix + _lit_coord(lit, n), 1))
            terms[key] = terms.get(key, Fraction(0)) - 1
        rows.append((Polynomial(nv, terms), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (igamma, 1)): -1}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (idelta, 1)): -1}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (idelta, 1)): 1, _mono(nv): -2}), LE0))
    rows.append(
        (Polynomial(nv, {_mono(nv, (idelta, 1)): 1, _mono(nv, (igamma, 1)): Fraction(1, 2), _mono(nv): -2}), LE0)
    )
    rows.append(
        (Polynomial(nv, {_mono(nv, (iy1, 1)): -1, _mono(nv, (igamma, 1)): -1, _mono(nv): Y1_LO}), LE0)
    )
    rows.append((Polynomial(nv, {_mono(nv, (iy1, 1)): 1, _mono(nv): -Y1_HI}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (iy2, 1)): -1, _mono(nv): Y2_LO}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (iy2, 1)): 1, _mono(nv): -Y2_HI}), LE0))
    return rows


def _d_chain_rows(nv: int, n: int, id0: int, is_: int):
    """0 <= d_1 <= 1/2; 0 <= d_k <= d_{k-1}^2; 0 <= s <= d_n^2."""
    rows: list[tuple] = []
    rows.append((Polynomial(nv, {_mono(nv, (id0, 1)): -1}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (id0, 1)): 1, _mono(nv): Fraction(-1, 2)}), LE0))
    for k in range(1, n):
        rows.append((Polynomial(nv, {_mono(nv, (id0 + k, 1)): -1}), LE0))
        rows.append(
            (Polynomial(nv, {_mono(nv, (id0 + k, 1)): 1, _mono(nv, (id0 + k - 1, 2)): -1}), LE0)
        )
    rows.append((Polynomial(nv, {_mono(nv, (is_, 1)): -1}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (is_, 1)): 1, _mono(nv, (id0 + n - 1, 2)): -1}), LE0))
    return rows


def build_np_hard_system(cnf: CnfFormula, quadratize: bool = False) -> PolySystem:
    """Quadratic-constraint feasibility system over 3n+5 variables (3n+7 when
    quadratized).  Feasible iff the formula is not always falsifiable in the
    sense of the construction; see the witness builders."""
    _check_n(cnf)
    n = cnf.num_vars
    nv = 3 * n + 5 + (2 if quadratize else 0)
    ix, igamma, idelta, iy1, iy2 = 0, 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3
    id0, is_ = 2 * n + 4, 3 * n + 4
    rows = _common_linear_rows(nv, n, cnf.clauses, ix, igamma, idelta, iy1, iy2)
    rows += _d_chain_rows(nv, n, id0, is_)
    n5 = Fraction(n) ** 5
    n6 = Fraction(n) ** 6
    if quadratize:
        iy12, iy22 = 3 * n + 5, 3 * n + 6
        rows.append(
            (Polynomial(nv, {_mono(nv, (iy12, 1)): 1, _mono(nv, (iy1, 2)): -1}), EQ0, "nonlinear")
        )
        rows.append(
            (Polynomial(nv, {_mono(nv, (iy22, 1)): 1, _mono(nv, (iy2, 2)): -1}), EQ0, "nonlinear")
        )
        nasty_terms = {
            _mono(nv, (iy12, 1), (iy1, 1)): Fraction(2),
            _mono(nv, (iy22, 1), (iy2, 1)): Fraction(1),
            _mono(nv, (iy1, 1), (iy2, 1)): Fraction(-6),
            _mono(nv): Fraction(4) + n6,
            _mono(nv, (is_, 1)): Fraction(-1),
        }
    else:
        nasty_terms = {
            _mono(nv, (iy1, 3)): Fraction(2),
            _mono(nv, (iy2, 3)): Fraction(1),
            _mono(nv, (iy1, 1), (iy2, 1)): Fraction(-6),
            _mono(nv): Fraction(4) + n6,
            _mono(nv, (is_, 1)): Fraction(-1),
        }
    for j in range(n):
        nasty_terms[_mono(nv, (ix + j, 2))] = -n5
    rows.append((Polynomial(nv, nasty_terms), LE0))
    return PolySystem(nv, rows, _np_hard_names(n, quadratize))


def build_cubic_system(cnf: CnfFormula) -> PolySystem:
    """Variant with one degree-3 constraint and no (d, s) chain: 2n+4 variables."""
    _check_n(cnf)
    n = cnf.num_vars
    nv = 2 * n + 4
    ix, igamma, idelta, iy1, iy2 = 0, 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3
    rows = _common_linear_rows(nv, n, cnf.clauses, ix, igamma, idelta, iy1, iy2)
    n5 = Fraction(n) ** 5
    n6 = Fraction(n) ** 6
    terms = {
        _mono(nv, (iy1, 3)): Fraction(2),
        _mono(nv, (iy2, 3)): Fraction(1),
        _mono(nv, (iy1, 1), (iy2, 1)): Fraction(-6),
        _mono(nv): Fraction(4) + n6,
    }
    for j in range(n):
        terms[_mono(nv, (ix + j, 2))] = -n5
    rows.append((Polynomial(nv, terms), LE0))
    names = [f"x{j}" for j in range(1, 2 * n + 1)] + ["gamma", "Delta", "y1", "y2"]
    return PolySystem(nv, rows, names)


def build_superopt_problem(cnf: CnfFormula) -> tuple[PolySystem, Polynomial]:
    """Maximize z_2 subject to the quadratic system plus the z-circle rows.

    Returns (system, objective).  The shared variable s couples the circle
    row (z_1-1)^2 + z_2^2 >= 5 + s to the chain; the objective z_2 is also
    stored on the system itself.
    """
    _check_n(cnf)
    n = cnf.num_vars
    base = build_np_hard_system(cnf)
    nv = base.num_vars + 2
    iz1, iz2 = base.num_vars, base.num_vars + 1
    is_ = 3 * n + 4
    grow = [[Fraction(1) if c == r else Fraction(0) for c in range(nv)] for r in range(base.num_vars)]
    zero = [Fraction(0)] * base.num_vars
    rows: list[tuple] = [
        (c.poly.affine_substitute(grow, zero), c.rel, c.tag) for c in base.constraints
    ]
    # (z1 - 1)^2 + z2^2 >= 5 + s
    rows.append(
        (
            Polynomial(
                nv,
                {
                    _mono(nv, (iz1, 2)): -1,
                    _mono(nv, (iz1, 1)): 2,
                    _mono(nv, (iz2, 2)): -1,
                    _mono(nv): 4,
                    _mono(nv, (is_, 1)): 1,
                },
            ),
            LE0,
            "nonlinear",
        )
    )
    # (z1 + 1)^2 + z2^2 >= 5
    rows.append(
        (
            Polynomial(
                nv,
                {
                    _mono(nv, (iz1, 2)): -1,
                    _mono(nv, (iz1, 1)): -2,
                    _mono(nv, (iz2, 2)): -1,
                    _mono(nv): 4,
                },
            ),
            LE0,
            "nonlinear",
        )
    )
    # z1^2/10 + z2^2 <= 4
    rows.append(
        (
            Polynomial(
                nv,
                {_mono(nv, (iz1, 2)): Fraction(1, 10), _mono(nv, (iz2, 2)): 1, _mono(nv): -4},
            ),
            LE0,
            "nonlinear",
        )
    )
    rows.append((Polynomial(nv, {_mono(nv, (iz2, 1)): -1}), LE0))
    objective = Polynomial.variable(nv, iz2)
    names = list(_np_hard_names(n, False)) + ["z1", "z2"]
    return PolySystem(nv, rows, names, objective=objective), objective


def build_unbounded_instance(cnf: CnfFormula) -> tuple[PolySystem, Polynomial]:
    """Homogeneous cone K over x_1..x_{2n}, y_1, y_2, y_3, Delta, gamma, and
    the cubic objective pi = -n^6 y_3^3 + n^5 y_3 sum_j x_j^2 + c(y) + q(y)
    with c(y) = -2y_1^3 - y_2^3 + 6 y_1 y_2 y_3 - 4 y_3^3 and q(y) = y_1 y_3."""
    _check_n(cnf)
    n = cnf.num_vars
    nv = 2 * n + 5
    ix, iy1, iy2, iy3, idelta, igamma = 0, 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3, 2 * n + 4
    rows: list[tuple] = []
    for j in range(2 * n):
        rows.append(
            (Polynomial(nv, {_mono(nv, (ix + j, 1)): -1, _mono(nv, (iy3, 1)): -1}), LE0)
        )
        rows.append(
            (Polynomial(nv, {_mono(nv, (ix + j, 1)): 1, _mono(nv, (iy3, 1)): -1}), LE0)
        )
    for j in range(n):
        rows.append(
            (Polynomial(nv, {_mono(nv, (ix + j, 1)): 1, _mono(nv, (ix + n + j, 1)): 1}), EQ0)
        )
    rows.append((Polynomial(nv, {_mono(nv, (iy3, 1)): -1}), LE0))
    for cl in cnf.clauses:
        terms = {
            _mono(nv, (iy3, 1)): Fraction(-1),
            _mono(nv, (idelta, 1)): Fraction(-1),
        }
        for lit in cl:
            key = _mono(nv, (ix + _lit_coord(lit, n), 1))
            terms[key] = terms.get(key, Fraction(0)) - 1
        rows.append((Polynomial(nv, terms), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (igamma, 1)): -1}), LE0))
    rows.append((Polynomial(nv, {_mono(nv, (idelta, 1)): -1}), LE0))
    rows.append(
        (Polynomial(nv, {_mono(nv, (idelta, 1)): 1, _mono(nv, (iy3, 1)): -2}), LE0)
    )
    rows.append(
        (
            Polynomial(
                nv,
                {_mono(nv, (idelta, 1)): 1, _mono(nv, (igamma, 1)): Fraction(1, 2), _mono(nv, (iy3, 1)): -2},
            ),
            LE0,
        )
    )
    rows.append(
        (
            Polynomial(
                nv,
                {_mono(nv, (iy3, 1)): Y1_LO, _mono(nv, (igamma, 1)): -1, _mono(nv, (iy1, 1)): -1},
            ),
            LE0,
        )
    )
    rows.append(
        (Polynomial(nv, {_mono(nv, (iy1, 1)): 1, _mono(nv, (iy3, 1)): -Y1_HI}), LE0)
    )
    rows.append(
        (Polynomial(nv, {_mono(nv, (iy3, 1)): Y2_LO, _mono(nv, (iy2, 1)): -1}), LE0)
    )
    rows.append(
        (Polynomial(nv, {_mono(nv, (iy2, 1)): 1, _mono(nv, (iy3, 1)): -Y2_HI}), LE0)
    )
    n5 = Fraction(n) ** 5
    n6 = Fraction(n) ** 6
    pi_terms = {
        _mono(nv, (iy3, 3)): -n6 - 4,
        _mono(nv, (iy1, 3)): Fraction(-2),
        _mono(nv, (iy2, 3)): Fraction(-1),
        _mono(nv, (iy1, 1), (iy2, 1), (iy3, 1)): Fraction(6),
        _mono(nv, (iy1, 1), (iy3, 1)): Fraction(1),
    }
    for j in range(n):
        pi_terms[_mono(nv, (ix + j, 2), (iy3, 1))] = n5
    pi = Polynomial(nv, pi_terms)
    names = [f"x{j}" for j in range(1, 2 * n + 1)] + ["y1", "y2", "y3", "Delta", "gamma"]
    return PolySystem(nv, rows, names, objective=pi), pi


# -- witnesses ----------------------------------------------------------------


def assignment_vector(cnf: CnfFormula, assignment: Sequence[bool]) -> list[Fraction]:
    """The canonical satisfiable-case vector for an arbitrary assignment
    (feasible iff the assignment satisfies every clause): x_j = +-1 by truth
    value, x_{n+j} = -x_j, Delta=0, gamma=4, y = (-2.74, 1.588), d = s = 0."""
    n = cnf.num_vars
    if len(assignment) != n:
        raise ValueError("assignment length mismatch")
    x = [Fraction(1) if b else Fraction(-1) for b in assignment]
    vec = x + [-v for v in x]
    vec += [Fraction(4), Fraction(0), Y_BAR[0], Y_BAR[1]]
    vec += [Fraction(0)] * n + [Fraction(0)]
    return vec


def witness_satisfiable(cnf: CnfFormula, assignment: Sequence[bool]) -> list[Fraction]:
    """Feasible point of build_np_hard_system(cnf) from a satisfying assignment."""
    if not cnf.satisfied_by(assignment):
        raise ValueError("assignment does not satisfy the formula")
    return assignment_vector(cnf, assignment)


def _h_value(y1: Fraction, y2: Fraction) -> Fraction:
    return 2 * y1 ** 3 + y2 ** 3 - 6 * y1 * y2 + 4


def find_y_hat(bound: Fraction) -> tuple[Fraction, Fraction]:
    """Rational point of R_0 with h(y) <= bound, by truncating the exact
    minimizer (2^(1/3), 2^(2/3)) to k fractional bits, doubling k until the
    exact evaluation passes.  Raises PrecisionCapError past the cap."""
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    cap = precision_cap(DEFAULT_PRECISION_CAP)
    k = 8
    while True:
        scale = Fraction(1, 1 << k)
        y1 = integer_nth_root(2 << (3 * k), 3) * scale
        y2 = integer_nth_root(4 << (3 * k), 3) * scale
        if (
            Y1_LO <= y1 <= Y1_HI
            and Y2_LO <= y2 <= Y2_HI
            and _h_value(y1, y2) <= bound
        ):
            return y1, y2
        if k >= cap:
            raise PrecisionCapError(
                f"no dyadic point met h <= {bound} within {cap} fractional bits"
            )
        k *= 2


def witness_always(cnf: CnfFormula) -> list[Fraction]:
    """Feasible point of build_np_hard_system(cnf) that exists for every
    formula: tight doubly-exponential chain d_k = 2^(-2^(k-1)), s = 2^(-2^n),
    y a dyadic point with h(y) <= s."""
    n = cnf.num_vars
    s = Fraction(1, 2 ** (2 ** n))
    y1, y2 = find_y_hat(s)
    vec = [Fraction(1)] * n + [Fraction(-1)] * n
    vec += [Fraction(0), Fraction(2), y1, y2]
    vec += [Fraction(1, 2 ** (2 ** (k - 1))) for k in range(1, n + 1)]
    vec += [s]
    return vec


def cubic_algebraic_witness(cnf: CnfFormula) -> list:
    """Feasible point of build_cubic_system(cnf) that exists for every
    formula: x_j = 1 = -x_{n+j}, gamma = 0, Delta = 2, and y the exact cubic
    minimizer (2^(1/3), 2^(2/3)) in Q[t]/(t^3 - 2).  The degree-3 row holds
    with residual exactly zero; with gamma = 0 no rational y can do that, so
    coordinates of this witness are necessarily irrational."""
    n = cnf.num_vars
    t = AlgebraicElement(3, 2, (Fraction(0), Fraction(1), Fraction(0)))
    vec: list = [Fraction(1)] * n + [Fraction(-1)] * n
    vec += [Fraction(0), Fraction(2), t, t * t]
    return vec


def witness_epsilon(cnf: CnfFormula, eps: Fraction) -> list[Fraction]:
    """Near-feasible point of the superoptimal system: all violation is
    confined to the single coupling row and bounded by eps, while z = (0, 2)
    is exactly feasible with objective value 2."""
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    n = cnf.num_vars
    y1, y2 = find_y_hat(eps)
    vec = [Fraction(1)] * n + [Fraction(-1)] * n
    vec += [Fraction(0), Fraction(2), y1, y2]
    vec += [Fraction(0)] * n + [Fraction(0)]
    vec += [Fraction(0), Fraction(2)]
    return vec


def unbounded_ray_witness(cnf: CnfFormula, assignment: Sequence[bool]) -> list[Fraction]:
    """Rational ray direction of the cone K along which the objective grows
    cubically, from a satisfying assignment: x_j = +-1, x_{n+j} = -x_j,
    y = (-2.74, 1.588, 1), Delta = 0, gamma = 4.

    The pairing rows force x_{n+j} = -x_j; a variant with x_{n+j} = 0 would
    leave the pairing equations unsatisfied, so it is not generated.
    """
    if not cnf.satisfied_by(assignment):
        raise ValueError("assignment does not satisfy the formula")
    x = [Fraction(1) if b else Fraction(-1) for b in assignment]
    return x + [-v for v in x] + [Y_BAR[0], Y_BAR[1], Fraction(1), Fraction(0), Fraction(4)]


def extract_assignment(point: Sequence[Fraction], n: int | None = None) -> tuple[bool, ...]:
    """Sign-rounded assignment from the x-prefix: w_j true iff x_j > 0
    (zero maps to false).  n is inferred for the 3n+5 layout when omitted."""
    if n is None:
        if (len(point) - 5) % 3 != 0 or len(point) < 8:
            raise ValueError("cannot infer n from point length; pass n explicitly")
        n = (len(point) - 5) // 3
    if len(point) < n:
        raise ValueError("point too short")
    return tuple(Fraction(point[j]) > 0 for j in range(n))


def brute_force_sat(cnf: CnfFormula) -> tuple[bool, ...] | None:
    """Lex-first satisfying assignment (False < True, variable index order)
    via DPLL with unit propagation, or None; desk-scale (n <= 25)."""
    n = cnf.num_vars
    if n > 25:
        raise ValueError("brute_force_sat is desk-scale only (n <= 25)")
    clauses = [tuple(cl) for cl in cnf.clauses]

    def propagate(values: dict[int, bool]) -> dict[int, bool] | None:
        values = dict(values)
        changed = True
        while changed:
            changed = False
            for cl in clauses:
                unassigned = []
                satisfied = False
                for lit in cl:
                    v = values.get(abs(lit))
                    if v is None:
                        unassigned.append(lit)
                    elif (lit > 0) == v:
                        satisfied = True
                        break
                if satisfied:
                    continue
                if not unassigned:
                    return None
                if len(unassigned) == 1:
                    lit = unassigned[0]
                    values[abs(lit)] = lit > 0
                    changed = True
        return values

    def search(values: dict[int, bool]) -> dict[int, bool] | None:
        values = propagate(values)
        if values is None:
            return None
        var = next((j for j in range(1, n + 1) if j not in values), None)
        if var is None:
            return values
        for b in (False, True):
            trial = dict(values)
            trial[var] = b
            found = search(trial)
            if found is not None:
                return found
        return None

    result = search({})
    if result is None:
        return None
    return tuple(result[j] for j in range(1, n + 1))
