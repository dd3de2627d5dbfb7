"""Explicit numeric bounds: Lipschitz constants, bounding boxes, separation
bounds, and Cauchy root bounds.

The separation bound delta(n, m, d, H) involves 2^(4 - n/2), irrational for
odd n; it is computed exactly in Q(sqrt 2) and the ceiling taken by exact
sign comparisons.  A "loose" mode rounds that factor up to the next integer
power of two, which only enlarges delta and stays safe for every use here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratcore import AlgebraicElement, RatLike, format_rat

from .polyalg import UniPoly, uni_degree, uni_eval


def lipschitz_constant(n: int, d: int, H: RatLike, M: RatLike) -> Fraction:
    """n*d*H*M^(d-1)*(n+d)^(d-1): Lipschitz bound in the sup norm on [-M, M]^n
    for any polynomial of total degree <= d whose coefficients are bounded by H."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    H = Fraction(H)
    M = Fraction(M)
    if H < 0 or M < 0:
        raise ValueError("H and M must be >= 0")
    return n * d * H * M ** (d - 1) * Fraction(n + d) ** (d - 1)


def box_bound(n: int, H: int) -> int:
    """(nH)^n: any bounded polyhedron with integer data of height H and n
    variables lies inside [-M, M]^n for M = (nH)^n."""
    if n < 1 or H < 1:
        raise ValueError("n and H must be >= 1")
    return (n * H) ** n


def _one_over_eps(n: int, m: int, d: int, H: int, loose: bool):
    """(2^(4-n/2) * max(H, 2n+2m) * d^n) ^ (n * 2^n * d^n), exact.

    Returns a Fraction when the power is rational, else an AlgebraicElement
    of Q(sqrt 2).  The exponent n*2^n*d^n is even for n >= 1, so the exact
    value always lands back in Q; the algebraic path is kept for safety.
    """
    if n < 2 or m < 1 or H < 1:
        raise ValueError("need n >= 2, m >= 1, H >= 1")
    if d < 2 or d % 2 != 0:
        raise ValueError("degree bound d must be an even integer >= 2")
    C = max(H, 2 * n + 2 * m) * d ** n
    E = n * 2 ** n * d ** n
    q2, r2 = divmod(8 - n, 2)  # 2^(4-n/2) = 2^q2 * sqrt(2)^r2
    if loose and r2:
        q2, r2 = q2 + 1, 0
    pow2 = Fraction(2) ** q2
    if r2 == 0:
        return (pow2 * C) ** E
    base = AlgebraicElement(2, 2, (Fraction(0), pow2 * C))
    value = base ** E
    return value.to_rational() if value.is_rational() else value


def _exact_ceil(x) -> int:
    if isinstance(x, AlgebraicElement):
        # ceil(x) = -floor(-x); floor via exact interval refinement
        return -((-x).floor_scaled(0))
    x = Fraction(x)
    return -((-x).numerator // x.denominator)


def epsilon_inverse(n: int, m: int, d: int, H: int, loose: bool = False) -> int:
    """Ceiling of 1/eps(n, m, d, H)."""
    return _exact_ceil(_one_over_eps(n, m, d, H, loose))


def delta_bound(n: int, m: int, d: int, H: int, loose: bool = False) -> int:
    """delta(n,m,d,H) = ceil(2 * (2^(4-n/2) * max(H, 2n+2m) * d^n)^(n*2^n*d^n))."""
    return _exact_ceil(2 * _one_over_eps(n, m, d, H, loose))


def phi_bound(L: RatLike, M: RatLike, ell: int, delta: int) -> int:
    """phi = ceil(L*M*ell*delta), the per-axis grid half-count."""
    if ell < 1 or delta < 1:
        raise ValueError("ell and delta must be >= 1")
    return _exact_ceil(Fraction(L) * Fraction(M) * ell * delta)


def cauchy_bounds(p: UniPoly) -> tuple[Fraction, Fraction]:
    """(M, delta) with 1/delta <= |root| <= M for every real root of p.

    Requires nonzero leading and constant coefficients (deflate zero roots
    first); M = 1 + max_{i<n} |a_i/a_n| and delta = 1 + max_{i>=1} |a_i/a_0|.
    """
    coeffs = list(p)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise ValueError("polynomial must have degree >= 1")
    if coeffs[0] == 0:
        raise ValueError("constant coefficient is zero; deflate zero roots first")
    an = abs(coeffs[-1])
    a0 = abs(coeffs[0])
    M = 1 + max(abs(c) / an for c in coeffs[:-1])
    delta = 1 + max(abs(c) / a0 for c in coeffs[1:])
    return M, delta


def locate_roots_bisection(
    p: UniPoly, depth: int = 60, scan: int = 64
) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (a, b) with sign(p(a)) != sign(p(b)), found by a
    dyadic scan of the Cauchy bracket followed by bisection to width 2^-depth.

    Locates simple (sign-changing) real roots; an exact root hit during the
    scan is returned as a degenerate interval (r, r).
    """
    if uni_degree(p) < 1:
        return []
    coeffs = list(p)
    while coeffs[-1] == 0:
        coeffs.pop()
    shift = 0
    while coeffs[0] == 0:  # deflate roots at zero, remember to report them
        coeffs.pop(0)
        shift += 1
    out: list[tuple[Fraction, Fraction]] = []
    if shift:
        out.append((Fraction(0), Fraction(0)))
    if len(coeffs) >= 2:
        M, _ = cauchy_bounds(coeffs)
        step = 2 * M / scan
        prev_x, prev_s = -M, _sign(uni_eval(coeffs, -M))
        for i in range(1, scan + 1):
            x = -M + i * step
            s = _sign(uni_eval(coeffs, x))
            if s == 0:
                # exact hit; resetting prev below keeps the next bracket
                # from re-finding this root
                out.append((x, x))
            elif prev_s != 0 and s != prev_s:
                lo, hi = prev_x, x
                for _ in range(depth):
                    if hi - lo <= Fraction(1, 1 << depth):
                        break
                    mid = (lo + hi) / 2
                    sm = _sign(uni_eval(coeffs, mid))
                    if sm == 0:
                        lo = hi = mid
                        break
                    if sm == prev_s:
                        lo = mid
                    else:
                        hi = mid
                out.append((lo, hi))
            prev_x, prev_s = x, s
    return sorted(set(out))


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class BoundReport:
    """The numeric bound bundle for one (n, m, ell, d, H) instance shape."""

    M: int
    L: int
    epsilon_inverse: int
    delta: int
    phi: int
    mode: str = "exact"

    def __post_init__(self) -> None:
        if min(self.M, self.L, self.delta, self.phi) < 1:
            raise ValueError("bounds must all be >= 1")
        if self.mode not in ("exact", "loose"):
            raise ValueError("mode must be 'exact' or 'loose'")

    def to_json(self) -> dict:
        return {
            "M": str(self.M),
            "L": str(self.L),
            "epsilon_inverse": str(self.epsilon_inverse),
            "delta": str(self.delta),
            "phi": str(self.phi),
            "delta_bits": self.delta.bit_length(),
            "phi_bits": self.phi.bit_length(),
            "mode": self.mode,
        }


def bound_report(n: int, m: int, ell: int, d: int, H: int, loose: bool = False) -> BoundReport:
    """Assemble the full report for a system shape: m linear rows, ell
    nonlinear rows of degree <= d, all heights <= H, n variables."""
    M = box_bound(n, H)
    L = lipschitz_constant(n, d, H, M)
    inv_eps = epsilon_inverse(n, m, d, H, loose)
    delta = delta_bound(n, m, d, H, loose)
    phi = phi_bound(L, M, ell, delta)
    assert L.denominator == 1
    return BoundReport(
        M=M,
        L=L.numerator,
        epsilon_inverse=inv_eps,
        delta=delta,
        phi=phi,
        mode="loose" if loose else "exact",
    )
