"""Poncelet curves of pencils and Poncelet triangles of plane cubics.

The Poncelet curve of a pencil <f, g> of forms of degree n+1 is the degree
n curve of pairs {p, q} killed by a common member of the pencil.  It is
the descent of the Bezoutian (f(s,t) g(u,v) - f(u,v) g(s,t)) / (sv - tu).

A Poncelet triangle of a cubic X is a triple of distinct points of P1 any
two of which form a pair on X.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import Poly, det, mat_rank
from .forms import (BiForm, BinaryForm, PlaneCurve, descend_biform, eval_curve_at_pair,
                    lift_curve, rational_roots, tangent_line)
from .locus import phi_rank, psi_biform

__all__ = [
    "poncelet_curve", "cone_factorization_check", "rank3_factorization_check",
    "find_triangles_bruteforce", "count_triangles_exact", "TriangleCount",
    "quintic_fiber_probe", "FiberReport", "projective_line", "rational_triangles",
    "normalize_point",
]


def poncelet_curve(f, g):
    """Curve of degree n attached to the pencil <f, g> of forms of degree n+1."""
    if f.degree != g.degree:
        raise ValueError("pencil members must share a degree")
    if mat_rank([list(f.coeffs), list(g.coeffs)], f.field) != 2:
        raise ValueError("pencil members are linearly dependent")
    B = BiForm.outer(f, g) - BiForm.outer(g, f)
    q = B.divide_by_diagonal()
    if q is None:
        raise ArithmeticError("Bezoutian division is not exact")
    return descend_biform(q)


def cone_factorization_check(psi):
    """For a gen_cone surface: the curve splits as two Poncelet curves.

    The first factor comes from the pencil phi1(V) in S_a, the second from
    phi2 restricted to the kernel of phi1 (the pencil phi2(e3), phi2(e4)).
    """
    meta = psi.meta
    if meta.get("kind") != "cone":
        raise ValueError("surface was not built by gen_cone")
    phi1, phi2 = meta["phi1"], meta["phi2"]
    G = psi_biform(psi)
    first = poncelet_curve(phi1[0], phi1[1])
    second = poncelet_curve(phi2[2], phi2[3])
    return G.is_proportional(first * second)


def rank3_factorization_check(psi):
    """For a gen_rank3 surface: tangent lines at the roots of e times P(u, v)^2."""
    meta = psi.meta
    if meta.get("kind") != "rank3":
        raise ValueError("surface was not built by gen_rank3")
    if "e_roots" not in meta:
        raise ValueError("the form e was not recorded as split")
    F = psi.field
    G = psi_biform(psi)
    expected = poncelet_curve(meta["u"], meta["v"]) ** 2
    for p in meta["e_roots"]:
        expected = expected * tangent_line(p, F)
    return G.is_proportional(expected)


# ---------------------------------------------------------------------------
# triangles by enumeration
# ---------------------------------------------------------------------------

def projective_line(field):
    """The p + 1 points of P1 over a prime field, (1 : x) then (0 : 1)."""
    pts = [(field.one, field(x)) for x in range(field.p)]
    pts.append((field.zero, field.one))
    return pts


def normalize_point(p):
    """Representative with first nonzero coordinate equal to one."""
    a, b = p
    if a:
        return (a / a, b / a)
    if not b:
        raise ValueError("(0 : 0) is not a point")
    return (a, b / b)


def find_triangles_bruteforce(X, max_p=257):
    """All Poncelet triangles of a cubic over a small prime field."""
    F = X.field
    if X.degree != 3:
        raise ValueError("triangles are defined for cubics")
    if not F.characteristic or F.p > max_p:
        raise ValueError("brute force needs a prime field with p <= %d" % max_p)
    pts = projective_line(F)
    n = len(pts)
    p = F.p
    grid = [[int(c) for c in row] for row in lift_curve(X).grid]
    # monomial vectors (s^3, s^2 t, s t^2, t^3) of every point, as plain ints mod p
    mono = [[pow(int(a), 3 - i, p) * pow(int(b), i, p) % p for i in range(4)] for a, b in pts]
    # incidence table on distinct points, B(x, y) = mono(x)^T grid mono(y)
    gv = [[sum(grid[i][j] * m[j] for j in range(4)) % p for i in range(4)] for m in mono]
    nbrs = [set() for _ in range(n)]
    for i in range(n):
        mi = mono[i]
        for j in range(i + 1, n):
            g = gv[j]
            if (mi[0] * g[0] + mi[1] * g[1] + mi[2] * g[2] + mi[3] * g[3]) % p == 0:
                nbrs[i].add(j)
                nbrs[j].add(i)
    out = []
    for i in range(n):
        for j in nbrs[i]:
            if j <= i:
                continue
            for k in nbrs[i] & nbrs[j]:
                if k > j:
                    out.append((pts[i], pts[j], pts[k]))
    return out


# ---------------------------------------------------------------------------
# triangles by elimination
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleCount:
    """Outcome of the elimination counter.

    ``status`` is "finite", "infinite" or "indeterminate"; ``count`` is the
    number of triangles over the algebraic closure when finite, and
    ``vertices`` the squarefree binary form whose roots are their vertices.
    """

    status: str
    count: int = None
    vertices: BinaryForm = None
    reason: str = ""
    # when the eliminant is V^(2m) with m > 1: distinct triangles and m
    reduced_count: int = None
    multiplicity: int = None


def _univariate(f):
    # binary form -> polynomial in t (s = 1), one variable
    return Poly.from_dict({(i,): c for i, c in enumerate(f.coeffs) if c}, 1, f.field)


def _form_from_univariate(P, n, field):
    co = [field.zero] * (n + 1)
    for (i,), c in P.items():
        if i > n:
            raise ArithmeticError("degree exceeds the homogeneous bound")
        co[i] = c
    return BinaryForm(co, field)


def _sylvester(a, b):
    """Sylvester matrix of two coefficient lists (highest power first)."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = a[0] * 0
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(a) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(b) + [zero] * (size - n - 1 - i))
    return rows


def _pair_resultant(B):
    """Res_z(B(x; z), B(y; z)) as a biform in (x; y).

    B is a symmetric biform of bidegree (k, k); the result has bidegree
    (k^2, k^2).  Computed on the chart s = u = 1 and rehomogenised.
    """
    k = B.bidegree[0]
    F = B.field
    # coefficient of z-monomial j (u^(k-j) v^j) as a polynomial in x (var 0) or y (var 1)
    ax, ay = [], []
    for j in range(k + 1):
        ax.append(Poly.from_dict({(i, 0): B.grid[i][j] for i in range(k + 1) if B.grid[i][j]}, 2, F))
        ay.append(Poly.from_dict({(0, i): B.grid[i][j] for i in range(k + 1) if B.grid[i][j]}, 2, F))
    R = det(_sylvester(ax, ay))
    return BiForm.from_poly(R, k * k, k * k)


def _x_resultant(B, R):
    """Res_y(B(x; y), R(x; y)) as a binary form in x."""
    F = B.field
    kb = B.bidegree
    kr = R.bidegree
    cb = [_univariate(BinaryForm([B.grid[i][j] for i in range(kb[0] + 1)], F)) for j in range(kb[1] + 1)]
    cr = [_univariate(BinaryForm([R.grid[i][j] for i in range(kr[0] + 1)], F)) for j in range(kr[1] + 1)]
    D = det(_sylvester(cb, cr))
    n = kb[0] * kr[1] + kr[0] * kb[1]
    return _form_from_univariate(D, n, F)


def _squarefree_part(f):
    g = f.gcd(f.diff_s()).gcd(f.diff_t())
    return f.divide(g)


def count_triangles_exact(X):
    """Count Poncelet triangles of a cubic by resultant elimination.

    Let B be the symmetric (3,3) biform of X.  With R(x, y) =
    Res_z(B(x,z), B(y,z)) stripped of its diagonal factor (sv - tu)^3,
    E(x) = Res_y(B(x,y), R(x,y)) has degree 36.  Besides the triangle
    vertices (each twice, once per orientation) it picks up solutions
    where two vertices coincide, which sit over the double points: with
    r(x) = B(x,x) and N(x) = Res_y(B(x,y), r(y)) = r(x) M(x), generically

        E = const * r^2 * M * V^2,

    V being the squarefree form of degree 3 * (number of triangles).
    The degenerate part r * N is divided out exactly, so a genuine vertex
    that happens to lie over a double point is kept.  Anything that does
    not fit this shape is reported as indeterminate.
    """
    if X.degree != 3:
        raise ValueError("triangles are defined for cubics")
    F = X.field
    B = lift_curve(X)
    R = _pair_resultant(B)
    if R.is_zero():
        return TriangleCount("infinite", reason="pair resultant vanishes identically")
    while True:
        q = R.divide_by_diagonal()
        if q is None:
            break
        R = q
    E = _x_resultant(B, R)
    if E.is_zero():
        return TriangleCount("infinite", reason="vertex eliminant vanishes identically")
    r = B.diagonal()
    if r.is_zero():
        return TriangleCount("indeterminate", reason="cubic contains the conic of double points")
    rb = BiForm([[c] for c in r.coeffs], F).transpose()  # r(y) as a (0, 6) biform
    N = _x_resultant(B, rb)
    if N.is_zero():
        return TriangleCount("indeterminate", reason="degenerate double-point eliminant")
    core = E.divide(r * N)
    if core is None:
        return TriangleCount("indeterminate", reason="degenerate factors do not divide the eliminant")
    if core.degree == 0:
        return TriangleCount("finite", 0, core.normalized())
    sf = _squarefree_part(core)
    m, rem = core.degree // (2 * sf.degree), core.degree % (2 * sf.degree)
    if rem or m == 0 or (sf ** (2 * m)).normalized() != core.normalized():
        return TriangleCount("indeterminate", reason="vertex eliminant is not a power of a squarefree square")
    if sf.degree % 3:
        return TriangleCount("indeterminate", reason="vertex count not divisible by three")
    if m > 1:
        return TriangleCount("indeterminate", vertices=sf.normalized(),
                             reason="triangles coincide (vertex eliminant not squarefree)",
                             reduced_count=sf.degree // 3, multiplicity=m)
    return TriangleCount("finite", sf.degree // 3, sf.normalized())


def rational_triangles(X, count):
    """Triangles with all vertices rational, read off the eliminant's roots."""
    if count.vertices is None or count.vertices.degree == 0:
        return []
    pts = [normalize_point(p) for p in rational_roots(count.vertices)]
    out = []
    for a, b, c in combinations(pts, 3):
        if (eval_curve_at_pair(X, a, b) == 0 and eval_curve_at_pair(X, b, c) == 0
                and eval_curve_at_pair(X, a, c) == 0):
            out.append((a, b, c))
    return out


# ---------------------------------------------------------------------------
# degree five
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiberReport:
    curve: PlaneCurve
    phi_rank: int
    triangles: TriangleCount


def quintic_fiber_probe(psi):
    """Triangle data of the cubic attached to a quintic surface."""
    if psi.d != 5:
        raise ValueError("the fibre probe is for degree five surfaces")
    X = psi_biform(psi)
    return FiberReport(X, phi_rank(psi), count_triangles_exact(X))
