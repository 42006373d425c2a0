"""Degrees of the images of the rank strata, in exact integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

__all__ = [
    "harris_tu_symmetric", "paper_degrees", "DegreeTable", "poncelet_degree",
    "m_degree", "rank3_degree", "boundary_degree", "catalan",
]


def _exact(q, what):
    if q.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {q}")
    return q.numerator


def harris_tu_symmetric(n, r):
    """Degree of the locus of symmetric n x n matrices of rank <= r."""
    if not 0 < r <= n:
        raise ValueError("need 0 < r <= n")
    q = Fraction(1)
    for j in range(n - r):
        q *= Fraction(comb(n + j, n - r - j), comb(2 * j + 1, j))
    return _exact(q, f"HT({n},{r})")


def _stratum_product(d, shift):
    # prod_{k=0}^{d-shift-1} C(d+1+k, d-shift-k) / C(2k+1, k), as printed
    q = Fraction(1)
    for k in range(d - shift):
        q *= Fraction(comb(d + 1 + k, d - shift - k), comb(2 * k + 1, k))
    return _exact(q, f"degree product (d={d}, shift={shift})")


@dataclass(frozen=True)
class DegreeTable:
    """Degrees of the images of R_d, R_d^5, R_d^4, R_d^3."""

    d: int
    i: int
    j: int
    k: int
    p: int

    def as_dict(self):
        return {"d": self.d, "i": self.i, "j": self.j, "k": self.k, "p": self.p}


def paper_degrees(d):
    if d < 3:
        raise ValueError("need d >= 3")
    return DegreeTable(d, _stratum_product(d, 5), _stratum_product(d, 4),
                       _stratum_product(d, 3), _stratum_product(d, 2))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def poncelet_degree(n):
    """Degree l(n) of the variety of Poncelet curves of degree n."""
    if n < 0:
        raise ValueError("need n >= 0")
    l = _exact(Fraction(comb(2 * n + 1, n + 1), 2 * n + 1), f"l({n})")
    assert l == catalan(n)
    return l


def m_degree(a, d):
    """Degree of the image of the cone stratum of type a."""
    if not 1 <= a <= d - 1:
        raise ValueError("need 1 <= a <= d - 1")
    val = comb(2 * d - 4, 2 * a - 2) * poncelet_degree(a - 1) * poncelet_degree(d - a - 1)
    if 2 * a == d:
        # each union was counted twice
        return _exact(Fraction(val, 2), f"m({a},{d})")
    return val


def rank3_degree(a, d):
    """Degree of the reduced image of the rank-3 stratum of type a."""
    if not 1 <= a <= d // 2:
        raise ValueError("need 1 <= a <= d/2")
    return 2 ** (d - 2 * a) * poncelet_degree(a - 1)


def boundary_degree(d, d2=None):
    """Degree of the image of R_d2 x P(S_(d-d2)) in the curves of degree d-2.

    Defaults to d2 = d - 1.  Valid for d >= 5 and 4 <= d2 < d; for d = 4
    the boundary image has degree 6.
    """
    if d2 is None:
        d2 = d - 1
    if d == 4 and d2 == 3:
        return 6
    if d < 5:
        raise ValueError("the boundary formula needs d >= 5")
    if not 4 <= d2 < d:
        raise ValueError("need 4 <= d2 < d")
    i2 = _stratum_product(d2, 5) if d2 >= 5 else 1
    return 2 ** (d - d2) * comb(d + 3 * d2 - 11, d - d2) * i2
