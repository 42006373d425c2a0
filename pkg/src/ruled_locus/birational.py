"""Even degree: surfaces of balanced type n from 2 x 2 matrices of forms.

An extension datum is a 2 x 2 matrix (a_ij) of forms of degree 2n - 2.
Contraction against it gives maps S_k + S_k -> S_(2n-2-k) + S_(2n-2-k);
when the one at k = n - 1 is invertible, the kernel at k = n is a
4-dimensional space V and evaluating it gives a surface of degree 2n.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exact import QQ, Poly, det, mat_kernel, mat_rank
from .forms import BinaryForm, PlaneCurve, apolar_contract
from .lines import GenerationError, surface_from_phi

__all__ = [
    "ExtensionDatum", "extension_is_trivializable", "extension_to_surface",
    "calcexp_curve", "random_extension", "DegenerateExtension",
]


class DegenerateExtension(ArithmeticError):
    """The datum does not produce a 4-dimensional space of sections."""


@dataclass(frozen=True)
class ExtensionDatum:
    n: int
    a: tuple  # ((a11, a12), (a21, a22)), forms of degree 2n - 2

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")
        for row in self.a:
            for f in row:
                if f.degree != 2 * self.n - 2:
                    raise ValueError("entries must have degree 2n - 2")
        if all(f.is_zero() for row in self.a for f in row):
            raise ValueError("zero extension datum")

    @property
    def d(self):
        return 2 * self.n

    @property
    def field(self):
        return self.a[0][0].field

    @classmethod
    def from_rows(cls, n, rows, field=QQ):
        return cls(n, tuple(tuple(BinaryForm(c, field) for c in r) for r in rows))

    def change_basis(self, g_u, g_w):
        """(g_u) a (g_w)^T, for invertible 2 x 2 scalar matrices."""
        a = self.a
        F = self.field
        out = []
        for i in range(2):
            row = []
            for j in range(2):
                f = BinaryForm.zero(2 * self.n - 2, F)
                for k in range(2):
                    for l in range(2):
                        c = F(g_u[i][k]) * F(g_w[j][l])
                        if c:
                            f = f + a[k][l] * c
                row.append(f)
            out.append(tuple(row))
        return ExtensionDatum(self.n, tuple(out))


def random_extension(n, seed=0, field=QQ):
    rng = random.Random(f"extension:{n}:{seed}")
    return ExtensionDatum(n, tuple(tuple(BinaryForm.random(2 * n - 2, rng, field)
                                         for _ in range(2)) for _ in range(2)))


def _contraction_matrix(E, k):
    """Matrix of S_k + S_k -> S_(|2n-2-k|)^2, (h1, h2) -> (sum_j a_ij . h_j)_i.

    Rows index the target coordinates.  When k exceeds 2n - 2 (only for
    n = 1) the form h is contracted by a_ij instead.
    """
    F = E.field
    cols = []
    for j in range(2):
        for r in range(k + 1):
            h = BinaryForm.monomial(k, r, F)
            col = []
            for i in range(2):
                f = E.a[i][j]
                if k >= f.degree:
                    col.extend(apolar_contract(h, f).coeffs)
                else:
                    col.extend(apolar_contract(f, h).coeffs)
            cols.append(col)
    return [list(row) for row in zip(*cols)]


def extension_is_trivializable(E):
    """Whether the contraction S_(n-1)^2 -> S_(n-1)^2 is invertible."""
    M = _contraction_matrix(E, E.n - 1)
    return mat_rank(M, E.field) == 2 * E.n


def _sections(E):
    n, F = E.n, E.field
    M = _contraction_matrix(E, n)
    K = mat_kernel(M, F, ncols=2 * (n + 1))
    if len(K) != 4:
        raise DegenerateExtension(f"kernel has dimension {len(K)}, expected 4")
    return [(BinaryForm(v[:n + 1], F), BinaryForm(v[n + 1:], F)) for v in K]


def extension_to_surface(E):
    """Surface of degree 2n given by evaluating the 4 sections."""
    if not extension_is_trivializable(E):
        raise DegenerateExtension("extension is not trivializable")
    V = _sections(E)
    phi1 = tuple(h1 for h1, _ in V)
    phi2 = tuple(h2 for _, h2 in V)
    psi = surface_from_phi(phi1, phi2, {"kind": "extension", "phi1": phi1, "phi2": phi2,
                                        "a": E.n, "extension": E})
    if psi.is_zero():
        raise GenerationError("sections give the zero surface")
    return psi


def calcexp_curve(E):
    """Determinant of multiplication by the universal quadric, then contraction.

    The composite S_(n-2)^2 --(Q_e)--> S_n^2 --(a)--> S_(n-2)^2 is a square
    matrix of size 2(n-1) whose entries are linear in e = (e0, e1, e2),
    with Q_e = e2 s^2 - e1 s t + e0 t^2.
    """
    n, F = E.n, E.field
    if n < 2:
        raise ValueError("need n >= 2")
    quad = (BinaryForm([0, 0, 1], F), -BinaryForm([0, 1, 0], F), BinaryForm([1, 0, 0], F))
    cols = []
    for j in range(2):
        for l in range(n - 1):
            mono = BinaryForm.monomial(n - 2, l, F)
            # image of q * mono for q the coefficient of e0, e1, e2 in Q_e
            imgs = []
            for q in quad:
                h = q * mono
                imgs.append([c for i in range(2) for c in apolar_contract(E.a[i][j], h).coeffs])
            cols.append(imgs)
    size = 2 * (n - 1)
    M = []
    for r in range(size):
        row = []
        for c in range(size):
            e0, e1, e2 = (cols[c][v][r] for v in range(3))
            row.append(Poly.from_dict({(1, 0, 0): e0, (0, 1, 0): e1, (0, 0, 1): e2}, 3, F))
        M.append(row)
    D = det(M)
    if not D:
        raise DegenerateExtension("determinant vanishes identically")
    return PlaneCurve.from_poly(D, size)
