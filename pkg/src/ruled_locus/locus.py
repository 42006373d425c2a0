"""The quadratic form and the curve of meeting pairs of a ruled surface.

``phi`` sends a surface to the quadratic form A Q A^T on S_d.  The curve of
pairs of parameters whose lines meet is computed twice, independently:

* ``psi_biform`` pairs the Pluecker vectors at two parameters, divides
  the resulting biform by (sv - tu)^2 and descends it to P(S2);
* ``psi_determinantal`` takes the determinant of multiplication by the
  universal quadric, S_(a-2) + S_(d-a-2) -> (S_a + S_(d-a)) / V.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Poly, det, mat_kernel, mat_rank
from .forms import (BiForm, PlaneCurve, conic_divisibility, descend_biform,
                    divide_diagonal_sq, linear_factors, restrict_to_conic, tangent_line)
from .lines import (_PARTNER, _SIGN, boundary_compose, pairing_matrix, split_quotient)

__all__ = [
    "phi", "phi_rank", "psi_biform", "psi_determinantal", "check_main_theorem",
    "pinch_points", "boundary_factorization_check", "is_developable",
    "DegenerateSurface", "TheoremCheck",
]


class DegenerateSurface(ArithmeticError):
    """The surface (or its dual) is a cone, or a construction degenerated."""


def phi(psi):
    """Symmetric (d+1) x (d+1) matrix A Q6 A^T."""
    if psi.is_zero():
        raise ValueError("zero surface map")
    A = psi.coefficient_matrix()
    n = len(A)
    F = psi.field
    # (A Q6)[i][c] = sign(c') A[i][c'] with c' the partner of c
    AQ = [[A[i][_PARTNER[c]] * _SIGN[_PARTNER[c]] for c in range(6)] for i in range(n)]
    M = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = F.zero
            for c in range(6):
                if AQ[i][c] and A[j][c]:
                    x = x + AQ[i][c] * A[j][c]
            M[i][j] = x
            M[j][i] = x
    return M


def phi_rank(psi):
    return mat_rank(phi(psi), psi.field)


def pairing_biform(psi):
    """F(s,t; u,v) = <w(s,t), w(u,v)>, a symmetric biform of bidegree (d, d)."""
    F = psi.field
    d = psi.d
    out = [[F.zero] * (d + 1) for _ in range(d + 1)]
    w = [f.coeffs for f in psi.forms]
    for c in range(6):
        pc = _PARTNER[c]
        sgn = _SIGN[c]
        a, b = w[c], w[pc]
        for i, x in enumerate(a):
            if not x:
                continue
            xs = x if sgn > 0 else -x
            row = out[i]
            for j, y in enumerate(b):
                if y:
                    row[j] = row[j] + xs * y
    return BiForm(out, F)


def psi_biform(psi):
    """Curve of meeting pairs via the pairing biform."""
    Fb = pairing_biform(psi)
    if Fb.is_zero():
        raise DegenerateSurface("all lines meet: the surface or its dual is a cone")
    try:
        q = divide_diagonal_sq(Fb)
    except ValueError as exc:
        raise DegenerateSurface(str(exc)) from exc
    G = descend_biform(q)
    if G.is_zero():
        raise DegenerateSurface("empty curve of meeting pairs")
    return G


def _linear(field, c0, c1, c2):
    return Poly.from_dict({(1, 0, 0): c0, (0, 1, 0): c1, (0, 0, 1): c2}, 3, field)


def psi_determinantal(psi, split=None):
    """Curve of meeting pairs as the determinant of the resolution map."""
    d = psi.d
    F = psi.field
    sq = split if split is not None else split_quotient(psi)
    a = sq.a
    b = d - a
    # phi(e_i) in S_a + S_b, as coordinate vectors of length d + 2
    B = [[c for c in sq.g1[i].coeffs] + [c for c in sq.g2[i].coeffs] for i in range(4)]
    if mat_rank(B, F) != 4:
        raise DegenerateSurface("V does not embed in the sections of the quotient")
    # rows of P span the annihilator of the image of V
    P = mat_kernel(B, F, ncols=d + 2)
    if len(P) != d - 2:
        raise DegenerateSurface("unexpected quotient dimension")
    if d == 2:
        return PlaneCurve.constant(1, F)
    # source basis: monomials of S_(a-2) in the first summand, S_(b-2) in the second
    cols = []
    for off, deg in ((0, a), (a + 1, b)):
        for r in range(deg - 1):
            # Q_e * s^(deg-2-r) t^r = e2 s^(deg-r) t^r - e1 s^(deg-1-r) t^(r+1) + e0 s^(deg-2-r) t^(r+2)
            cols.append({off + r: 2, off + r + 1: 1, off + r + 2: 0})
    sign = {0: 1, 1: -1, 2: 1}
    M = []
    for row in P:
        entries = []
        for col in cols:
            co = [F.zero, F.zero, F.zero]
            for pos, var in col.items():
                x = row[pos]
                if x:
                    co[var] = co[var] + (x if sign[var] > 0 else -x)
            entries.append(_linear(F, *co))
        M.append(entries)
    D = det(M)
    if not D:
        raise DegenerateSurface("determinant vanishes identically")
    return PlaneCurve.from_poly(D, d - 2)


@dataclass(frozen=True)
class TheoremCheck:
    holds: bool
    scalar: object
    biform: PlaneCurve
    determinantal: PlaneCurve


def check_main_theorem(psi):
    """Compare the two constructions; the scalar satisfies det = scalar * biform."""
    G1 = psi_biform(psi)
    G2 = psi_determinantal(psi)
    lam = G2.proportionality(G1)
    return TheoremCheck(lam is not None and lam != 0, lam, G1, G2)


def is_developable(G):
    return conic_divisibility(G) is not None


def pinch_points(psi, curve=None):
    """Restriction of the curve to the conic of double points."""
    G = curve if curve is not None else psi_biform(psi)
    f = restrict_to_conic(G)
    if f.is_zero():
        raise DegenerateSurface("developable surface: the conic is contained in the curve")
    return f


def boundary_factorization_check(base, xi):
    """psi(base * xi) is psi(base) times the tangent lines at the roots of xi."""
    G = psi_biform(boundary_compose(base, xi))
    expected = psi_biform(base)
    for p in linear_factors(xi):
        expected = expected * tangent_line(p, base.field)
    return G.is_proportional(expected)
