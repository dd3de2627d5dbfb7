"""Short feasibility certificates for relaxed polynomial systems.

A certificate is a vertex of the polytope intersected with one implicit
grid cell around a known feasible point.  The grid granularity phi is chosen
so that moving within a cell changes each nonlinear constraint by at most
1/(ell*delta), which is exactly the slack the relaxed system grants.  The
grid itself is never materialized; only the one cell index is computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratcore import encoding_size_vec
from .polyalg import Polynomial
from .systems import LE0, PolySystem, Verdict, relax, verify
from .linear import enumerate_vertices, linear_rows, recession_ray, row_polynomial
from .bounds import lipschitz_constant


@dataclass(frozen=True)
class Certificate:
    point: tuple[Fraction, ...]
    delta_used: int
    phi: int
    box_index: tuple[int, ...]
    size_bits: int

    def to_json(self) -> dict:
        return {
            "point": {"values": [f"{v.numerator}/{v.denominator}" for v in self.point]},
            "delta_used": str(self.delta_used),
            "phi": str(self.phi),
            "box_index": list(self.box_index),
            "size_bits": self.size_bits,
        }


def _combined_system(P: PolySystem, g_list: Sequence[Polynomial]) -> PolySystem:
    rows = [(c.poly, c.rel, c.tag) for c in P.constraints]
    rows += [(g, LE0, "nonlinear") for g in g_list]
    return PolySystem(P.num_vars, rows, P.var_names)


def grid_certificate(
    P: PolySystem,
    g_list: Sequence[Polynomial],
    delta: int,
    x_tilde: Sequence[Fraction],
    M: Fraction | None = None,
    L: Fraction | None = None,
) -> Certificate:
    """Vertex certificate for the delta-relaxed system, built from a feasible
    point of the exact system.  M and L can be overridden with exact values
    (they must still bound the box and the Lipschitz constant for the
    certificate to verify; verification is always re-run here)."""
    n = P.num_vars
    if n > 3:
        raise ValueError("vertex enumeration is desk-scale (n <= 3)")
    if P.num_nonlinear:
        raise ValueError("P must be purely linear; pass nonlinear rows in g_list")
    if not g_list:
        raise ValueError("need at least one nonlinear constraint to certify")
    delta = int(delta)
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    x_tilde = [Fraction(c) for c in x_tilde]
    exact = _combined_system(P, g_list)
    v0 = verify(exact, x_tilde)
    if not v0.feasible:
        raise ValueError(
            f"x_tilde does not satisfy the exact system (worst violation {v0.worst_violation})"
        )
    rows = linear_rows(P)
    if recession_ray(rows, n) is not None:
        raise ValueError("polytope is unbounded")
    if M is None:
        verts = enumerate_vertices(rows, n)
        if not verts:
            raise ValueError("polytope has no vertices")
        M = max(
            (abs(c) for v in verts for c in v),
            default=Fraction(0),
        )
        M = max(M, Fraction(1))
    else:
        M = Fraction(M)
        if M < 1:
            raise ValueError("M must be >= 1")
    ell = len(g_list)
    if L is None:
        d = max(g.degree() for g in g_list)
        H = max(g.height_and_degree()[0] for g in g_list)
        L = lipschitz_constant(n, max(d, 1), max(H, 1), M)
    else:
        L = Fraction(L)
        if L < 1:
            raise ValueError("L must be >= 1")
    phi = math.ceil(L * M * ell * delta)
    width = Fraction(M, phi)
    box_index = []
    cell_rows = list(rows)
    for i, xi in enumerate(x_tilde):
        j = math.floor(xi * phi / M)
        j = max(-phi, min(phi - 1, j))
        box_index.append(j)
        lo = width * j
        hi = width * (j + 1)
        a_lo = tuple(Fraction(-1) if t == i else Fraction(0) for t in range(n))
        a_hi = tuple(Fraction(1) if t == i else Fraction(0) for t in range(n))
        cell_rows.append((a_lo, -lo))
        cell_rows.append((a_hi, hi))
    verts = enumerate_vertices(cell_rows, n)
    if not verts:
        raise AssertionError("P intersected with the containing cell has no vertex")
    x_bar = verts[0]
    relaxed = relax(exact, delta)
    vr = verify(relaxed, list(x_bar))
    if not vr.feasible:
        raise AssertionError(
            f"certificate failed relaxed verification (worst {vr.worst_violation}); "
            "M or L override too small?"
        )
    return Certificate(
        tuple(x_bar),
        delta,
        phi,
        tuple(box_index),
        encoding_size_vec(x_bar),
    )


def check_certificate(system: PolySystem, delta: int, x_bar: Sequence[Fraction]) -> Verdict:
    """The checking direction: exact verification of x_bar against the
    delta-relaxed system.  Polynomial time in certificate and system size."""
    return verify(relax(system, int(delta)), [Fraction(c) for c in x_bar])


def sos_combine(
    g_list: Sequence[Polynomial], x_bar: Sequence[Fraction]
) -> tuple[list[int], Polynomial]:
    """Aggregates the constraints violated at x_bar into one sum of squares:
    J = 1-based indices with g_j(x_bar) > 0, g = sum_{j in J} g_j^2.
    Degree at most doubles; height grows by at most a factor of len(g_list)
    times the squared input height."""
    if not g_list:
        return [], Polynomial.zero(1)
    n = g_list[0].num_vars
    point = [Fraction(c) for c in x_bar]
    J: list[int] = []
    total = Polynomial.zero(n)
    for j, g in enumerate(g_list, start=1):
        if g.num_vars != n:
            raise ValueError("mixed dimensions in g_list")
        if g.eval(point) > 0:
            J.append(j)
            total = total + g * g
    return J, total
