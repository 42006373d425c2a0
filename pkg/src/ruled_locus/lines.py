"""Lines of P3 in Pluecker coordinates and parametrized ruled surfaces.

A surface is a morphism P1 -> G(1,3) given by six binary forms of degree
d, the Pluecker coordinates (w12, w13, w14, w23, w24, w34) of the line
K_t at each parameter t.  For surfaces built from a map
phi = (phi1, phi2): V -> S_a + S_(d-a), the line is the kernel of phi_t, so
its coordinates are the Hodge star of the 2x2 minors of phi.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from enum import Enum

from .exact import QQ, det, mat_kernel, mat_rank, poly_gcd
from .forms import BinaryForm

__all__ = [
    "PLUCKER_PAIRS", "SurfaceMap", "ValidityReport", "SplittingType", "SplitQuotient",
    "Stability", "StabilityClass", "plucker_pairing", "isotropy", "hodge_star",
    "validate", "generator_line", "lines_meet", "lines_meet_by_determinant",
    "splitting_type", "split_quotient", "dual_surface", "act_pgl4", "act_pgl2",
    "stability", "surface_from_phi", "gen_type_a", "gen_cone", "gen_rank5",
    "gen_rank3", "gen_developable", "gen_point_cone", "boundary_compose",
    "GenerationError", "random_split_form", "wedge", "pairing_matrix",
]

PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_INDEX = {pair: n for n, pair in enumerate(PLUCKER_PAIRS)}
# the pairing matches coordinate c with _PARTNER[c] with sign _SIGN[c]
_PARTNER = (5, 4, 3, 2, 1, 0)
_SIGN = (1, -1, 1, 1, -1, 1)


class GenerationError(RuntimeError):
    """Random generator exhausted its retry budget."""


def plucker_pairing(x, y):
    """Symmetric pairing of bivectors induced by the wedge product."""
    return (x[0] * y[5] + x[5] * y[0] - x[1] * y[4] - x[4] * y[1]
            + x[2] * y[3] + x[3] * y[2])


def pairing_matrix(field=QQ):
    M = [[field.zero] * 6 for _ in range(6)]
    for c in range(6):
        M[c][_PARTNER[c]] = field(_SIGN[c])
    return M


def hodge_star(x):
    """(p12, p13, p14, p23, p24, p34) -> (p34, -p24, p23, p14, -p13, p12)."""
    return (x[5], -x[4], x[3], x[2], -x[1], x[0])


def wedge(v, w):
    """Pluecker coordinates of v ^ w for 4-vectors (any ring elements)."""
    return tuple(v[i] * w[j] - v[j] * w[i] for i, j in PLUCKER_PAIRS)


def bivector_matrix(x):
    """Antisymmetric 4x4 matrix of a bivector."""
    z = x[0] * 0
    M = [[z] * 4 for _ in range(4)]
    for c, (i, j) in enumerate(PLUCKER_PAIRS):
        M[i][j] = x[c]
        M[j][i] = -x[c]
    return M


# ---------------------------------------------------------------------------
# surfaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SurfaceMap:
    """Six binary forms of a common degree d (Pluecker coordinates of K_t)."""

    forms: tuple
    meta: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        forms = tuple(self.forms)
        if len(forms) != 6:
            raise ValueError("a surface map needs exactly six forms")
        degs = {f.degree for f in forms}
        if len(degs) != 1:
            raise ValueError("the six forms must share one degree")
        fields = {f.field for f in forms}
        if len(fields) != 1:
            raise ValueError("the six forms must share one field")
        object.__setattr__(self, "forms", forms)

    @classmethod
    def from_coeffs(cls, rows, field=QQ, meta=None):
        return cls(tuple(BinaryForm(r, field) for r in rows), meta or {})

    @property
    def d(self):
        return self.forms[0].degree

    @property
    def field(self):
        return self.forms[0].field

    def __eq__(self, other):
        return isinstance(other, SurfaceMap) and self.forms == other.forms

    def __hash__(self):
        return hash(self.forms)

    def __repr__(self):
        return f"SurfaceMap(d={self.d}, field={self.field!r})"

    def is_zero(self):
        return all(f.is_zero() for f in self.forms)

    def coefficient_matrix(self):
        """(d+1) x 6 matrix: column c holds the coefficients of form c."""
        return [list(row) for row in zip(*(f.coeffs for f in self.forms))]

    def at(self, p):
        """Pluecker vector of the line at p = (p0 : p1)."""
        F = self.field
        p0, p1 = F(p[0]), F(p[1])
        return tuple(f(p0, p1) for f in self.forms)

    def scaled(self, c):
        return SurfaceMap(tuple(f * c for f in self.forms), dict(self.meta))


def isotropy(psi):
    """w12 w34 - w13 w24 + w14 w23 as a form of degree 2d."""
    w = psi.forms
    return w[0] * w[5] - w[1] * w[4] + w[2] * w[3]


def surface_from_phi(phi1, phi2, meta=None):
    """Surface whose line at t is the kernel of (phi1_t, phi2_t): V -> k^2.

    ``phi1`` and ``phi2`` are 4-tuples of binary forms (the images of the
    basis e1..e4).  The minors give the values of the map on Lambda^2 V;
    the Pluecker coordinates of the kernel line are their Hodge star.
    """
    minors = wedge(phi1, phi2)
    return SurfaceMap(hodge_star(minors), meta or {})


@dataclass(frozen=True)
class ValidityReport:
    decomposable: bool
    base_point_free: bool
    in_R_d: bool
    boundary_factor: object = None


def validate(psi):
    """Decomposability, base points and the semistable open set."""
    if psi.is_zero():
        raise ValueError("zero surface map")
    decomposable = isotropy(psi).is_zero()
    nonzero = [f for f in psi.forms if not f.is_zero()]
    g = nonzero[0].coeffs
    for f in nonzero[1:]:
        g = poly_gcd(g, f.coeffs)
    gform = BinaryForm(g, psi.field)
    bpf = gform.degree == 0
    in_R = False
    if decomposable and bpf:
        in_R = stability(psi).kind is not Stability.UNSTABLE
    return ValidityReport(decomposable, bpf, in_R, None if bpf else gform)


# ---------------------------------------------------------------------------
# generator lines
# ---------------------------------------------------------------------------

def generator_line(psi, t0):
    """Two vectors spanning the line K_t0, from contractions u -> u _| w(t0)."""
    w = psi.at(t0)
    if not any(w):
        raise ValueError("base point: the line is undefined")
    M = bivector_matrix(w)
    cols = [[M[i][j] for i in range(4)] for j in range(4)]
    basis = []
    for c in cols:
        if mat_rank(basis + [c], psi.field) > len(basis):
            basis.append(c)
    if len(basis) != 2:
        raise ValueError("coordinates are not decomposable at this parameter")
    return basis[0], basis[1]


def lines_meet(psi, s0, t0):
    """Whether the lines at s0 and t0 meet (pairing of their coordinates)."""
    a, b = psi.at(s0), psi.at(t0)
    if not any(a) or not any(b):
        raise ValueError("base point: the line is undefined")
    return plucker_pairing(a, b) == 0


def lines_meet_by_determinant(psi, s0, t0):
    """Independent check: the four spanning vectors are coplanar."""
    a1, a2 = generator_line(psi, s0)
    b1, b2 = generator_line(psi, t0)
    return det([list(a1), list(a2), list(b1), list(b2)]) == 0


# ---------------------------------------------------------------------------
# graded linear systems over P1
# ---------------------------------------------------------------------------

def _contraction_rule():
    # (u _| w)_i = sum_j u_j w_ji
    rule = []
    for i in range(4):
        terms = []
        for j in range(4):
            if i == j:
                continue
            if j < i:
                terms.append((1, j, _INDEX[(j, i)]))
            else:
                terms.append((-1, j, _INDEX[(i, j)]))
        rule.append(terms)
    return rule


def _wedge_rule():
    # (v ^ w)_ijk = v_i w_jk - v_j w_ik + v_k w_ij
    rule = []
    for i, j, k in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        rule.append([(1, i, _INDEX[(j, k)]), (-1, j, _INDEX[(i, k)]), (1, k, _INDEX[(i, j)])])
    return rule


_CONTRACT = _contraction_rule()
_WEDGE = _wedge_rule()


def _system(psi, m, rule):
    """Matrix of x in k^4 (x) S_m -> outputs in S_(d+m), by the given rule."""
    d = psi.d
    F = psi.field
    w = [f.coeffs for f in psi.forms]
    nrows = len(rule) * (d + m + 1)
    M = [[F.zero] * (4 * (m + 1)) for _ in range(nrows)]
    for out, terms in enumerate(rule):
        base = out * (d + m + 1)
        for sgn, j, c in terms:
            wc = w[c]
            for r in range(m + 1):
                col = j * (m + 1) + r
                for q, x in enumerate(wc):
                    if x:
                        row = M[base + q + r]
                        row[col] = row[col] + (x if sgn > 0 else -x)
    return M


def _to_forms(vec, m, field):
    return tuple(BinaryForm(vec[j * (m + 1):(j + 1) * (m + 1)], field) for j in range(4))


def _kernel_at(psi, m, rule):
    M = _system(psi, m, rule)
    return mat_kernel(M, psi.field, ncols=4 * (m + 1))


def _kernel_dim(psi, m, rule):
    M = _system(psi, m, rule)
    return 4 * (m + 1) - mat_rank(M, psi.field)


def _least_degree(psi, rule):
    for m in range(psi.d + 1):
        if _kernel_dim(psi, m, rule) > 0:
            return m
    raise ArithmeticError("no nonzero section up to degree d")


def _expected_dim(m, a, d):
    return max(0, m - a + 1) + max(0, m - (d - a) + 1)


@dataclass(frozen=True)
class SplittingType:
    a_Q: int
    b_K: int


def splitting_type(psi, check=True):
    """Splitting types (a, d-a) of the quotient bundle and of the dual.

    a_Q is the least degree of a nonzero u in V* (x) S_m with u _| w == 0;
    b_K the least degree of a nonzero v in V (x) S_m with v ^ w == 0.  With
    ``check`` the whole Hilbert function up to degree d is compared with
    the two-summand model.
    """
    d = psi.d
    a = _least_degree(psi, _CONTRACT)
    b = _least_degree(psi, _WEDGE)
    if check:
        for rule, x in ((_CONTRACT, a), (_WEDGE, b)):
            for m in range(d + 1):
                if _kernel_dim(psi, m, rule) != _expected_dim(m, x, d):
                    raise ArithmeticError("Hilbert function does not match a rank-2 split module")
    return SplittingType(a, b)


@dataclass(frozen=True)
class SplitQuotient:
    a: int
    g1: tuple
    g2: tuple

    def phi(self):
        """phi(e_i) = (<g1, e_i>, <g2, e_i>) in S_a + S_(d-a)."""
        return [(self.g1[i], self.g2[i]) for i in range(4)]

    def reconstruct(self):
        """Surface rebuilt from the 2x2 minors of (g1, g2)."""
        return surface_from_phi(self.g1, self.g2)


def split_quotient(psi):
    """Minimal generators g1 (degree a), g2 (degree d-a) of the sections of Q*."""
    d = psi.d
    F = psi.field
    a = _least_degree(psi, _CONTRACT)
    if 2 * a > d:
        raise ArithmeticError("generator not found at the expected degree")
    K = _kernel_at(psi, a, _CONTRACT)
    g1v = K[0]
    if 2 * a == d:
        if len(K) < 2:
            raise ArithmeticError("balanced type needs two generators in one degree")
        g2v = K[1]
        return SplitQuotient(a, _to_forms(g1v, a, F), _to_forms(g2v, a, F))
    b = d - a
    K2 = _kernel_at(psi, b, _CONTRACT)
    g1 = _to_forms(g1v, a, F)
    mults = []
    for r in range(b - a + 1):
        mono = BinaryForm.monomial(b - a, r, F)
        mults.append([c for f in g1 for c in (f * mono).coeffs])
    base_rank = mat_rank(mults, F)
    for v in K2:
        if mat_rank(mults + [v], F) > base_rank:
            return SplitQuotient(a, g1, _to_forms(v, b, F))
    raise ArithmeticError("generator not found at the expected degree")


# ---------------------------------------------------------------------------
# group actions and duality
# ---------------------------------------------------------------------------

def dual_surface(psi):
    return SurfaceMap(hodge_star(psi.forms), dict(psi.meta))


def act_pgl4(psi, g):
    """Apply Lambda^2 g to the coefficient vectors."""
    F = psi.field
    g = [[F(x) for x in row] for row in g]
    if det(g) == 0:
        raise ValueError("singular 4x4 matrix")
    out = [BinaryForm.zero(psi.d, F) for _ in range(6)]
    for c, (i, j) in enumerate(PLUCKER_PAIRS):
        # g e_i ^ g e_j
        col_i = [g[r][i] for r in range(4)]
        col_j = [g[r][j] for r in range(4)]
        image = wedge(col_i, col_j)
        for c2, x in enumerate(image):
            if x:
                out[c2] = out[c2] + psi.forms[c] * x
    return SurfaceMap(tuple(out), {})


def act_pgl2(psi, h):
    """Substitute (s, t) -> h(s, t) in all six forms."""
    F = psi.field
    h = [[F(x) for x in row] for row in h]
    if h[0][0] * h[1][1] - h[0][1] * h[1][0] == 0:
        raise ValueError("singular 2x2 matrix")
    return SurfaceMap(tuple(f.substitute(h) for f in psi.forms), {})


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------

class Stability(Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class StabilityClass:
    kind: Stability
    witness: tuple = None
    witness_type: str = None
    kernel_dim: int = 0


def _plane_witness(psi):
    # constant u with u _| w(t) == 0: every line lies in the plane u = 0
    K = _kernel_at(psi, 0, _CONTRACT)
    return tuple(K[0]) if K else None


def stability(psi):
    """Stable / strictly semistable / unstable classification.

    Unstable when all lines lie in a plane or all pass through a point.
    Otherwise, with k the dimension of the space of linear relations among
    the six forms: strictly semistable if k >= 2 (the relations contain an
    isotropic vector over the algebraic closure) or k = 1 with an
    isotropic relation; stable otherwise.
    """
    w = _plane_witness(psi)
    if w is not None:
        return StabilityClass(Stability.UNSTABLE, w, "plane")
    w = _plane_witness(dual_surface(psi))
    if w is not None:
        return StabilityClass(Stability.UNSTABLE, w, "point")
    K = mat_kernel(psi.coefficient_matrix(), psi.field, ncols=6)
    k = len(K)
    if k >= 2:
        iso = next((tuple(z) for z in K if plucker_pairing(z, z) == 0), None)
        return StabilityClass(Stability.STRICTLY_SEMISTABLE, iso, "kernel" if iso else None, k)
    if k == 1:
        z = tuple(K[0])
        if plucker_pairing(z, z) == 0:
            return StabilityClass(Stability.STRICTLY_SEMISTABLE, z, "kernel", 1)
        return StabilityClass(Stability.STABLE, z, "kernel", 1)
    return StabilityClass(Stability.STABLE, None, None, 0)


# ---------------------------------------------------------------------------
# random generators for the strata
# ---------------------------------------------------------------------------

BUDGET = 32


def _rng(seed, tag):
    return random.Random(f"{tag}:{seed}")


def _rand_forms(rng, n, field, count=4):
    return tuple(BinaryForm.random(n, rng, field) for _ in range(count))


def _random_split_form(rng, n, field):
    """Product of n random linear forms, with the roots recorded."""
    f = BinaryForm([1], field)
    roots = []
    for _ in range(n):
        while True:
            p = (field.random(rng), field.random(rng))
            if p[0] or p[1]:
                break
        roots.append(p)
        f = f * BinaryForm.vanishing_at(p, field)
    return f, roots


def _valid(psi):
    if psi.is_zero():
        return False
    rep = validate(psi)
    return rep.decomposable and rep.base_point_free and rep.in_R_d


def _check_type(d, a):
    if not (1 <= a and 2 * a <= d):
        raise ValueError(f"need 1 <= a <= d/2, got d={d}, a={a}")


def gen_type_a(d, a, seed=0, field=QQ, budget=BUDGET):
    """Random surface of splitting type a from phi: V -> S_a + S_(d-a)."""
    _check_type(d, a)
    rng = _rng(seed, f"type-a:{d}:{a}")
    for _ in range(budget):
        phi1 = _rand_forms(rng, a, field)
        phi2 = _rand_forms(rng, d - a, field)
        psi = surface_from_phi(phi1, phi2, {"kind": "type-a", "phi1": phi1, "phi2": phi2, "a": a})
        if _valid(psi) and _least_degree(psi, _CONTRACT) == a:
            return psi
    raise GenerationError("gen_type_a: retry budget exhausted")


def gen_cone(d, a, seed=0, field=QQ, budget=BUDGET):
    """Type-a surface whose lines all meet the line P(span(e3, e4))."""
    _check_type(d, a)
    rng = _rng(seed, f"cone:{d}:{a}")
    z = BinaryForm.zero(a, field)
    for _ in range(budget):
        phi1 = _rand_forms(rng, a, field, 2) + (z, z)
        phi2 = _rand_forms(rng, d - a, field)
        psi = surface_from_phi(phi1, phi2, {"kind": "cone", "phi1": phi1, "phi2": phi2, "a": a})
        if _valid(psi) and _least_degree(psi, _CONTRACT) == a:
            return psi
    raise GenerationError("gen_cone: retry budget exhausted")


def _symplectic(v, w):
    # standard form e1*^e2* + e3*^e4*
    return v[0] * w[1] - v[1] * w[0] + v[2] * w[3] - v[3] * w[2]


def gen_rank5(d, seed=0, field=QQ, budget=BUDGET, k=None):
    """Surface inside the linear complex of the standard symplectic form."""
    if d < 2:
        raise ValueError("need d >= 2")
    if k is None:
        k = d // 2
    rng = _rng(seed, f"rank5:{d}:{k}")
    n = d - k
    for _ in range(budget):
        v = _rand_forms(rng, k, field)
        # linear system sigma(v, w) == 0 for w in V (x) S_n
        cols = []
        for j in range(4):
            for r in range(n + 1):
                w = [BinaryForm.zero(n, field)] * 4
                w[j] = BinaryForm.monomial(n, r, field)
                cols.append(_symplectic(v, w).coeffs)
        M = [list(row) for row in zip(*cols)]
        K = mat_kernel(M, field, ncols=4 * (n + 1))
        if not K:
            continue
        vec = [field.zero] * (4 * (n + 1))
        for b in K:
            c = field.random(rng)
            vec = [x + c * y for x, y in zip(vec, b)]
        w = tuple(BinaryForm(vec[j * (n + 1):(j + 1) * (n + 1)], field) for j in range(4))
        psi = SurfaceMap(wedge(v, w), {"kind": "rank5", "v": v, "w": w})
        if _valid(psi):
            return psi
    raise GenerationError("gen_rank5: retry budget exhausted")


def gen_rank3(d, a, seed=0, field=QQ, budget=BUDGET):
    """alpha e12 + e (u^2 e13 + v^2 e24 + u v (e14 + e23)), deg e = d - 2a."""
    _check_type(d, a)
    rng = _rng(seed, f"rank3:{d}:{a}")
    for _ in range(budget):
        alpha = BinaryForm.random(d, rng, field)
        e, roots = _random_split_form(rng, d - 2 * a, field)
        u = BinaryForm.random(a, rng, field)
        v = BinaryForm.random(a, rng, field)
        uv = e * u * v
        forms = (alpha, e * u * u, uv, uv, e * v * v, BinaryForm.zero(d, field))
        psi = SurfaceMap(forms, {"kind": "rank3", "alpha": alpha, "e": e, "e_roots": roots,
                                 "u": u, "v": v, "a": a})
        if _valid(psi):
            return psi
    raise GenerationError("gen_rank3: retry budget exhausted")


def gen_developable(e, seed=0, field=QQ, budget=BUDGET):
    """Tangent lines of a random rational curve of degree e (d = 2e - 2)."""
    if e < 2:
        raise ValueError("need e >= 2")
    rng = _rng(seed, f"developable:{e}")
    for _ in range(budget):
        c = _rand_forms(rng, e, field)
        cs = tuple(f.diff_s() for f in c)
        ct = tuple(f.diff_t() for f in c)
        psi = SurfaceMap(wedge(cs, ct), {"kind": "developable", "curve": c})
        if psi.is_zero():
            continue
        rep = validate(psi)
        if rep.base_point_free and rep.decomposable and rep.in_R_d:
            return psi
    raise GenerationError("gen_developable: retry budget exhausted")


def gen_point_cone(d, seed=0, field=QQ, budget=BUDGET):
    """All lines through a fixed point v0: w(t) = v0 ^ w(t)."""
    rng = _rng(seed, f"point-cone:{d}")
    for _ in range(budget):
        v0 = tuple(field.random(rng) for _ in range(4))
        if not any(v0):
            continue
        w = _rand_forms(rng, d, field)
        v0f = tuple(BinaryForm([c], field) for c in v0)
        psi = SurfaceMap(wedge(v0f, w), {"kind": "point-cone", "v0": v0})
        if psi.is_zero():
            continue
        rep = validate(psi)
        if rep.decomposable and rep.base_point_free:
            return psi
    raise GenerationError("gen_point_cone: retry budget exhausted")


def boundary_compose(psi, xi):
    """Multiply all six forms by xi."""
    meta = {"kind": "boundary", "base": psi, "xi": xi}
    return SurfaceMap(tuple(f * xi for f in psi.forms), meta)


def random_split_form(n, seed=0, field=QQ):
    """Product of n random linear forms; returns (form, roots)."""
    return _random_split_form(_rng(seed, f"split:{n}"), n, field)
