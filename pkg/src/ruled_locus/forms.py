"""Binary forms, biforms and plane curves in P(S2).

Conventions
-----------
* A binary form of degree n is stored as coefficients ``c[i]`` of
  ``s^(n-i) t^i`` (plain monomial basis, no binomial weights).
* A biform of bidegree (m, n) is a grid ``F[i][j]``, the coefficient of
  ``s^(m-i) t^i u^(n-j) v^j``.
* A plane curve of degree k lives in the coordinates (e0, e1, e2) of
  P(S2); coefficients are listed in graded-lex order
  e0^k, e0^(k-1) e1, e0^(k-1) e2, e0^(k-2) e1^2, ...

A point e of P(S2) stands for the unordered pair {p, q} of points of P1
with e = (p0 q0, p0 q1 + p1 q0, p1 q1).  The quadric vanishing on that
pair is ``e2 s^2 - e1 s t + e0 t^2`` (see :func:`pair_quadric`).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .exact import QQ, Poly, field_of, poly_gcd, upoly_divmod, _trim

__all__ = [
    "BinaryForm", "BiForm", "PlaneCurve", "veronese_conic", "descend_biform",
    "lift_curve", "divide_diagonal_sq", "apolar_contract", "eval_curve_at_pair",
    "tangent_line", "conic_divisibility", "restrict_to_conic", "pair_quadric",
    "curve_act_pgl2", "linear_factors", "rational_roots",
]


def _falling(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------

class BinaryForm:
    """Binary form sum c[i] s^(n-i) t^i over a field."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        if field is None:
            field = next((field_of(c) for c in coeffs if c), QQ)
        self.field = field
        self.coeffs = tuple(field(c) for c in coeffs)

    @classmethod
    def zero(cls, n, field=QQ):
        return cls([0] * (n + 1), field)

    @classmethod
    def monomial(cls, n, i, field=QQ, c=1):
        co = [0] * (n + 1)
        co[i] = c
        return cls(co, field)

    @classmethod
    def linear(cls, a, b, field=QQ):
        """The form a s + b t."""
        return cls([a, b], field)

    @classmethod
    def vanishing_at(cls, point, field=QQ):
        """Linear form with root ``point`` = (p0 : p1), i.e. p1 s - p0 t."""
        p0, p1 = point
        return cls([p1, -p0], field)

    @classmethod
    def random(cls, n, rng, field=QQ):
        return cls([field.random(rng) for _ in range(n + 1)], field)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BinaryForm({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        if other.degree != self.degree:
            raise ValueError("adding forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __sub__(self, other):
        if other.degree != self.degree:
            raise ValueError("subtracting forms of different degrees")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __neg__(self):
        return BinaryForm([-a for a in self.coeffs], self.field)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            a, b = self.coeffs, other.coeffs
            out = [self.field.zero] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] = out[i + j] + x * y
            return BinaryForm(out, self.field)
        c = self.field(other)
        return BinaryForm([a * c for a in self.coeffs], self.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = BinaryForm([1], self.field)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, p0, p1):
        n = self.degree
        total = self.field.zero
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + c * p0 ** (n - i) * p1 ** i
        return total

    def diff_s(self):
        n = self.degree
        if n == 0:
            return BinaryForm([0], self.field)
        return BinaryForm([c * (n - i) for i, c in enumerate(self.coeffs[:-1])], self.field)

    def diff_t(self):
        if self.degree == 0:
            return BinaryForm([0], self.field)
        return BinaryForm([c * i for i, c in enumerate(self.coeffs) if i > 0], self.field)

    def substitute(self, h):
        """f(h11 s + h12 t, h21 s + h22 t)."""
        F = self.field
        (a, b), (c, d) = [[F(x) for x in row] for row in h]
        x = BinaryForm([a, b], F)
        y = BinaryForm([c, d], F)
        n = self.degree
        xp = [BinaryForm([1], F)]
        yp = [BinaryForm([1], F)]
        for _ in range(n):
            xp.append(xp[-1] * x)
            yp.append(yp[-1] * y)
        out = BinaryForm.zero(n, F)
        for i, co in enumerate(self.coeffs):
            if co:
                out = out + (xp[n - i] * yp[i]) * co
        return out

    def gcd(self, other):
        return BinaryForm(poly_gcd(self.coeffs, other.coeffs), self.field)

    def divide(self, other):
        """Exact quotient self / other, or None when other does not divide."""
        a, b = list(self.coeffs), list(other.coeffs)
        if not any(b):
            raise ZeroDivisionError("division by the zero form")
        # strip the power of s from the divisor first
        ks = len(b) - len(_trim(b))
        ka = len(a) - len(_trim(a))
        if ka < ks:
            return None
        q, r = upoly_divmod(_trim(a), _trim(b))
        if r:
            return None
        deg = self.degree - other.degree
        q = list(q) + [self.field.zero] * (deg + 1 - len(q))
        return BinaryForm(q, self.field)

    def normalized(self):
        for c in self.coeffs:
            if c:
                inv = 1 / c
                return BinaryForm([x * inv for x in self.coeffs], self.field)
        return self

    def is_squarefree(self):
        if self.degree <= 1:
            return bool(self)
        g = self.gcd(self.diff_s()).gcd(self.diff_t())
        return g.degree == 0


def _divisors(n):
    n = abs(int(n))
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def linear_factors(f):
    """Roots of a binary form as points (a, b), with multiplicity.

    Raises ValueError if the form does not split into linear factors
    over its field.
    """
    roots, rest = _peel_roots(f)
    if rest.degree != 0:
        raise ValueError("form does not split over the base field")
    return roots


def rational_roots(f):
    """Distinct roots of f defined over its field, split or not."""
    return list(dict.fromkeys(_peel_roots(f)[0]))


def _peel_roots(f):
    F = f.field
    if f.is_zero():
        raise ValueError("roots of the zero form")
    roots = []
    g = f
    # t | f  <=>  root (1 : 0);  s | f  <=>  root (0 : 1)
    while g.degree > 0 and not g.coeffs[0]:
        roots.append((F.one, F.zero))
        g = BinaryForm(g.coeffs[1:], F)
    while g.degree > 0 and not g.coeffs[-1]:
        roots.append((F.zero, F.one))
        g = BinaryForm(g.coeffs[:-1], F)
    n = g.degree
    if n == 0:
        return roots, g
    if F.characteristic:
        cands = [F(x) for x in range(1, F.p)]
    else:
        from gmpy2 import mpq
        den = 1
        for c in g.coeffs:
            den = den * int(mpq(c).denominator)
        ints = [int(mpq(c) * den) for c in g.coeffs]
        # g(x, 1) has leading coefficient ints[0] and constant term ints[n]
        cands = []
        for a in _divisors(ints[n]):
            for b in _divisors(ints[0]):
                cands.append(F(mpq(a, b)))
                cands.append(F(mpq(-a, b)))
    for x in cands:
        # point (x : 1) is a root of f iff (s - x t) divides f
        lin = BinaryForm([1, -x], F)
        while g.degree > 0:
            q = g.divide(lin)
            if q is None:
                break
            roots.append((x, F.one))
            g = q
        if g.degree == 0:
            break
    return roots, g


# ---------------------------------------------------------------------------
# biforms
# ---------------------------------------------------------------------------

class BiForm:
    """Bihomogeneous form in (s, t; u, v)."""

    __slots__ = ("grid", "field")

    def __init__(self, grid, field=None):
        grid = [list(r) for r in grid]
        if not grid or not grid[0]:
            raise ValueError("empty biform grid")
        if any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("ragged biform grid")
        if field is None:
            field = next((field_of(c) for r in grid for c in r if c), QQ)
        self.field = field
        self.grid = tuple(tuple(field(c) for c in r) for r in grid)

    @classmethod
    def zero(cls, m, n, field=QQ):
        return cls([[0] * (n + 1) for _ in range(m + 1)], field)

    @classmethod
    def outer(cls, f, g):
        """f(s, t) g(u, v)."""
        return cls([[a * b for b in g.coeffs] for a in f.coeffs], f.field)

    @classmethod
    def diagonal_form(cls, field=QQ):
        """sv - tu."""
        return cls([[0, 1], [-1, 0]], field)

    @property
    def bidegree(self):
        return len(self.grid) - 1, len(self.grid[0]) - 1

    def is_zero(self):
        return not any(any(r) for r in self.grid)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return isinstance(other, BiForm) and self.grid == other.grid and self.field == other.field

    def __hash__(self):
        return hash(self.grid)

    def __repr__(self):
        return f"BiForm{self.bidegree}"

    def __add__(self, other):
        if other.bidegree != self.bidegree:
            raise ValueError("bidegree mismatch")
        return BiForm([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.grid, other.grid)], self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BiForm([[-a for a in r] for r in self.grid], self.field)

    def __mul__(self, other):
        if not isinstance(other, BiForm):
            c = self.field(other)
            return BiForm([[a * c for a in r] for r in self.grid], self.field)
        m1, n1 = self.bidegree
        m2, n2 = other.bidegree
        out = [[self.field.zero] * (n1 + n2 + 1) for _ in range(m1 + m2 + 1)]
        for i, r in enumerate(self.grid):
            for j, a in enumerate(r):
                if not a:
                    continue
                for k, r2 in enumerate(other.grid):
                    row = out[i + k]
                    for l, b in enumerate(r2):
                        if b:
                            row[j + l] = row[j + l] + a * b
        return BiForm(out, self.field)

    __rmul__ = __mul__

    def transpose(self):
        """F(u, v; s, t)."""
        return BiForm([list(c) for c in zip(*self.grid)], self.field)

    def is_symmetric(self):
        m, n = self.bidegree
        return m == n and self.grid == self.transpose().grid

    def __call__(self, p, q):
        m, n = self.bidegree
        total = self.field.zero
        for i, r in enumerate(self.grid):
            for j, c in enumerate(r):
                if c:
                    total = total + c * p[0] ** (m - i) * p[1] ** i * q[0] ** (n - j) * q[1] ** j
        return total

    def diagonal(self):
        """F(s, t; s, t) as a binary form of degree m + n."""
        m, n = self.bidegree
        out = [self.field.zero] * (m + n + 1)
        for i, r in enumerate(self.grid):
            for j, c in enumerate(r):
                out[i + j] = out[i + j] + c
        return BinaryForm(out, self.field)

    def substitute(self, h):
        """Apply the same substitution (s,t) -> h(s,t), (u,v) -> h(u,v)."""
        m, n = self.bidegree
        F = self.field
        rows = [BinaryForm.monomial(m, i, F).substitute(h) for i in range(m + 1)]
        cols = [BinaryForm.monomial(n, j, F).substitute(h) for j in range(n + 1)]
        out = BiForm.zero(m, n, F)
        for i, r in enumerate(self.grid):
            for j, c in enumerate(r):
                if c:
                    out = out + BiForm.outer(rows[i], cols[j]) * c
        return out

    def divide_by_diagonal(self):
        """Exact quotient by (sv - tu), or None if it does not divide."""
        m, n = self.bidegree
        if m == 0 or n == 0:
            return None if not self.is_zero() else None
        F = self.field
        G = self.grid
        # F[i][j] = Q[i][j-1] - Q[i-1][j]
        Q = [[F.zero] * n for _ in range(m)]
        for i in range(m):
            for j in range(1, n + 1):
                up = Q[i - 1][j] if i > 0 and j < n else F.zero
                Q[i][j - 1] = G[i][j] + up
        quo = BiForm(Q, F)
        if quo * BiForm.diagonal_form(F) != self:
            return None
        return quo

    def as_poly(self):
        """Dehomogenised polynomial in (t, v) (s = u = 1)."""
        d = {}
        for i, r in enumerate(self.grid):
            for j, c in enumerate(r):
                if c:
                    d[(i, j)] = c
        return Poly.from_dict(d, 2, self.field)

    @classmethod
    def from_poly(cls, P, m, n):
        out = [[P.field.zero] * (n + 1) for _ in range(m + 1)]
        for (i, j), c in P.items():
            if i > m or j > n:
                raise ValueError("polynomial exceeds the requested bidegree")
            out[i][j] = c
        return cls(out, P.field)


# ---------------------------------------------------------------------------
# plane curves
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def curve_monomials(k):
    """Exponents (a, b, c) of e0^a e1^b e2^c, a + b + c = k, graded-lex."""
    return tuple((a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


@lru_cache(maxsize=None)
def _monomial_index(k):
    return {m: i for i, m in enumerate(curve_monomials(k))}


class PlaneCurve:
    """Ternary form of degree k in (e0, e1, e2)."""

    __slots__ = ("degree", "coeffs", "field")

    def __init__(self, degree, coeffs, field=None):
        coeffs = list(coeffs)
        if len(coeffs) != (degree + 1) * (degree + 2) // 2:
            raise ValueError("wrong number of curve coefficients")
        if field is None:
            field = next((field_of(c) for c in coeffs if c), QQ)
        self.degree = degree
        self.field = field
        self.coeffs = tuple(field(c) for c in coeffs)

    @classmethod
    def from_dict(cls, degree, d, field=QQ):
        idx = _monomial_index(degree)
        co = [0] * len(idx)
        for m, c in d.items():
            co[idx[tuple(m)]] = c
        return cls(degree, co, field)

    @classmethod
    def from_poly(cls, P, degree=None):
        if degree is None:
            degree = P.total_degree()
            if degree < 0:
                raise ValueError("zero polynomial has no curve degree")
        idx = _monomial_index(degree)
        co = [P.field.zero] * len(idx)
        for m, c in P.items():
            if sum(m) != degree:
                raise ValueError("polynomial is not homogeneous of the given degree")
            co[idx[m]] = c
        return cls(degree, co, P.field)

    @classmethod
    def variable(cls, i, field=QQ):
        co = [0, 0, 0]
        co[i] = 1
        return cls(1, co, field)

    @classmethod
    def constant(cls, c, field=QQ):
        return cls(0, [c], field)

    def as_dict(self):
        return {m: c for m, c in zip(curve_monomials(self.degree), self.coeffs) if c}

    def as_poly(self):
        return Poly.from_dict(self.as_dict(), 3, self.field)

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, PlaneCurve) and other.degree == self.degree
                and other.coeffs == self.coeffs and other.field == self.field)

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        terms = []
        for (a, b, c), x in zip(curve_monomials(self.degree), self.coeffs):
            if x:
                mono = "*".join(f"e{i}^{e}" if e > 1 else f"e{i}" for i, e in enumerate((a, b, c)) if e)
                terms.append(f"({x})" + ("*" + mono if mono else ""))
        return "PlaneCurve(" + (" + ".join(terms) or "0") + ")"

    def __mul__(self, other):
        if isinstance(other, PlaneCurve):
            return PlaneCurve.from_poly(self.as_poly() * other.as_poly(), self.degree + other.degree)
        c = self.field(other)
        return PlaneCurve(self.degree, [x * c for x in self.coeffs], self.field)

    __rmul__ = __mul__

    def __add__(self, other):
        if other.degree != self.degree:
            raise ValueError("adding curves of different degrees")
        return PlaneCurve(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __sub__(self, other):
        return self + other * (-1)

    def __pow__(self, k):
        out = PlaneCurve.constant(1, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, e0, e1, e2):
        total = self.field.zero
        for (a, b, c), x in zip(curve_monomials(self.degree), self.coeffs):
            if x:
                total = total + x * e0 ** a * e1 ** b * e2 ** c
        return total

    def normalized(self):
        """Scale so the first nonzero coefficient is 1."""
        for c in self.coeffs:
            if c:
                inv = 1 / c
                return PlaneCurve(self.degree, [x * inv for x in self.coeffs], self.field)
        return self

    def proportionality(self, other):
        """The scalar lam with self = lam * other, or None."""
        if other.degree != self.degree or other.is_zero() or self.is_zero():
            return None
        i = next(i for i, c in enumerate(other.coeffs) if c)
        lam = self.coeffs[i] / other.coeffs[i]
        if all(a == lam * b for a, b in zip(self.coeffs, other.coeffs)):
            return lam
        return None

    def is_proportional(self, other):
        return self.proportionality(other) is not None


def veronese_conic(field=QQ):
    """The conic of double points, e1^2 - 4 e0 e2."""
    return PlaneCurve.from_dict(2, {(0, 2, 0): 1, (1, 0, 1): -4}, field)


# ---------------------------------------------------------------------------
# descent of symmetric biforms (Hermite reciprocity, computationally)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _lift_table(k):
    # monomial index -> list of (i, j, binomial) with
    # e0^a e1^b e2^c -> (su)^a (sv + tu)^b (tv)^c
    table = []
    for (a, b, c) in curve_monomials(k):
        entries = []
        for r in range(b + 1):
            entries.append((c + r, c + b - r, comb(b, r)))
        table.append(entries)
    return tuple(table)


@lru_cache(maxsize=None)
def _descent_inverse(k):
    # square system: rows are the grid positions i <= j, columns monomials
    from gmpy2 import mpq
    mons = curve_monomials(k)
    rows = [(i, j) for i in range(k + 1) for j in range(i, k + 1)]
    ridx = {r: n for n, r in enumerate(rows)}
    N = len(mons)
    T = [[mpq(0)] * N for _ in range(N)]
    for col, entries in enumerate(_lift_table(k)):
        for i, j, b in entries:
            if i <= j:
                T[ridx[(i, j)]][col] += b
    # Gauss-Jordan inverse over Q
    A = [row + [mpq(int(r == c)) for c in range(N)] for r, row in enumerate(T)]
    for c in range(N):
        piv = next(r for r in range(c, N) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(N):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return tuple(rows), tuple(tuple(r[N:]) for r in A)


@lru_cache(maxsize=None)
def _descent_inverse_in(k, field):
    rows, inv = _descent_inverse(k)
    return rows, tuple(tuple(field(x) for x in r) for r in inv)


def lift_curve(G):
    """The biform G(su, sv + tu, tv) of bidegree (k, k)."""
    k = G.degree
    F = G.field
    out = [[F.zero] * (k + 1) for _ in range(k + 1)]
    for c, entries in zip(G.coeffs, _lift_table(k)):
        if c:
            for i, j, b in entries:
                out[i][j] = out[i][j] + c * b
    return BiForm(out, F)


def descend_biform(Fb):
    """The plane curve G with G(su, sv + tu, tv) = F for symmetric F."""
    m, n = Fb.bidegree
    if m != n or not Fb.is_symmetric():
        raise ValueError("descent needs a symmetric biform")
    k = m
    F = Fb.field
    try:
        rows, inv = _descent_inverse_in(k, F)
    except ZeroDivisionError:
        return _descend_by_solve(Fb)
    rhs = [Fb.grid[i][j] for i, j in rows]
    co = []
    for r in inv:
        acc = F.zero
        for x, y in zip(r, rhs):
            if x and y:
                acc = acc + x * y
        co.append(acc)
    G = PlaneCurve(k, co, F)
    if lift_curve(G) != Fb:
        raise ArithmeticError("descent system inconsistent for a symmetric biform")
    return G


def _descend_by_solve(Fb):
    # fallback when the cached rational inverse has a denominator divisible by p
    from .exact import rref
    k = Fb.bidegree[0]
    F = Fb.field
    mons = curve_monomials(k)
    N = len(mons)
    A = [[F.zero] * (N + 1) for _ in range((k + 1) ** 2)]
    for col, entries in enumerate(_lift_table(k)):
        for i, j, b in entries:
            A[i * (k + 1) + j][col] = A[i * (k + 1) + j][col] + b
    for i in range(k + 1):
        for j in range(k + 1):
            A[i * (k + 1) + j][N] = Fb.grid[i][j]
    R, piv = rref(A, F)
    if N in piv:
        raise ArithmeticError("descent system inconsistent")
    co = [F.zero] * N
    for row, c in zip(R, piv):
        co[c] = row[N]
    return PlaneCurve(k, co, F)


def divide_diagonal_sq(Fb):
    """Exact quotient of a symmetric biform by (sv - tu)^2."""
    q = Fb.divide_by_diagonal()
    if q is not None:
        q = q.divide_by_diagonal()
    if q is None:
        raise ValueError("biform is not divisible by (sv - tu)^2")
    return q


# ---------------------------------------------------------------------------
# apolarity and the geometry of P(S2)
# ---------------------------------------------------------------------------

def apolar_contract(a, h):
    """SL2-equivariant contraction S_(m+k) x S_k -> S_m.

    Computed as h(d/dt, -d/ds) applied to a, i.e.
    sum_j (-1)^j h_j d^k a / (ds^j dt^(k-j)).  This normalisation is fixed
    once for the whole package; only scalar-free statements depend on it.
    """
    N, k = a.degree, h.degree
    if k > N:
        raise ValueError("contraction needs deg a >= deg h")
    m = N - k
    F = a.field
    out = [F.zero] * (m + 1)
    for j, hj in enumerate(h.coeffs):
        if not hj:
            continue
        sgn = -hj if j % 2 else hj
        # operator d^j/ds^j d^(k-j)/dt^(k-j) on s^(N-i) t^i
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            ps, pt = N - i, i
            if ps < j or pt < k - j:
                continue
            c = _falling(ps, j) * _falling(pt, k - j)
            # result s^(ps - j) t^(pt - k + j): t-index pt - k + j
            idx = pt - k + j
            out[idx] = out[idx] + sgn * ai * c
    return BinaryForm(out, F)


def pair_quadric(field=QQ):
    """The universal quadric e2 s^2 - e1 s t + e0 t^2, as three forms.

    Returned as the binary forms multiplying e0, e1 and e2.
    """
    return (BinaryForm([0, 0, 1], field), BinaryForm([0, -1, 0], field),
            BinaryForm([1, 0, 0], field))


def eval_curve_at_pair(G, p, q):
    """G(p0 q0, p0 q1 + p1 q0, p1 q1)."""
    F = G.field
    p0, p1 = F(p[0]), F(p[1])
    q0, q1 = F(q[0]), F(q[1])
    if not (p0 or p1) or not (q0 or q1):
        raise ValueError("zero representative of a point of P1")
    return G(p0 * q0, p0 * q1 + p1 * q0, p1 * q1)


def tangent_line(p, field=None):
    """Line of quadrics vanishing at p = (a : b): a^2 e2 - a b e1 + b^2 e0."""
    if field is None:
        field = field_of(p[0]) if p[0] else field_of(p[1])
    a, b = field(p[0]), field(p[1])
    if not (a or b):
        raise ValueError("zero representative of a point of P1")
    return PlaneCurve(1, [b * b, -a * b, a * a], field)


def conic_divisibility(G):
    """G / C0 when the Veronese conic divides G, else None."""
    k = G.degree
    F = G.field
    if G.is_zero():
        return PlaneCurve(max(k - 2, 0), [0] * ((max(k - 2, 0) + 1) * (max(k - 2, 0) + 2) // 2), F)
    if k < 2:
        return None
    # G = sum_b g_b(e0, e2) e1^b; divide by e1^2 - 4 e0 e2 as a polynomial in e1
    coeff = {}
    for (a, b, c), x in G.as_dict().items():
        coeff.setdefault(b, {})[(a, c)] = x
    quo = {}
    for b in range(k, 1, -1):
        g = coeff.pop(b, None)
        if not g:
            continue
        quo[b - 2] = g
        low = coeff.setdefault(b - 2, {})
        for (a, c), x in g.items():
            key = (a + 1, c + 1)
            v = low.get(key, F.zero) + 4 * x
            if v:
                low[key] = v
            else:
                low.pop(key, None)
    if any(coeff.get(b) for b in (0, 1)):
        return None
    out = {}
    for b, g in quo.items():
        for (a, c), x in g.items():
            out[(a, b, c)] = x
    return PlaneCurve.from_dict(k - 2, out, F)


def restrict_to_conic(G):
    """G(p0^2, 2 p0 p1, p1^2) as a binary form of degree 2k."""
    k = G.degree
    F = G.field
    out = [F.zero] * (2 * k + 1)
    for (a, b, c), x in G.as_dict().items():
        # p0^(2a+b) p1^(b+2c) with factor 2^b
        idx = b + 2 * c
        out[idx] = out[idx] + x * (2 ** b)
    return BinaryForm(out, F)


def curve_act_pgl2(G, h):
    """Transport a curve along the substitution h applied to both points."""
    return descend_biform(lift_curve(G).substitute(h))
