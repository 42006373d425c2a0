"""Exact fields, dense linear algebra and sparse polynomials.

Two kinds of base field are supported: the rationals (elements are
``gmpy2.mpq``) and prime fields (elements are :class:`Residue`).  All the
higher level modules are written against the ordinary arithmetic
operators, so the same code runs over either field.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from gmpy2 import mpq, mpz, is_prime

__all__ = [
    "Residue", "RationalField", "PrimeField", "QQ", "GF", "field_of",
    "FieldMismatch", "mat_rank", "mat_kernel", "rref", "mat_mul",
    "Poly", "det", "poly_gcd",
]


class FieldMismatch(TypeError):
    """Raised when elements of two different fields are combined."""


# ---------------------------------------------------------------------------
# prime field elements
# ---------------------------------------------------------------------------

class Residue:
    """Residue class modulo a prime, stored as an int in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if type(o) is Residue:
            if o.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({o.p})")
            return o.v
        if isinstance(o, int) and not isinstance(o, bool):
            return o
        if type(o) is type(mpz(0)):
            return int(o)
        raise FieldMismatch(f"cannot combine GF({self.p}) with {type(o).__name__}")

    def __add__(self, o):
        return Residue(self.v + self._other(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Residue(self.v - self._other(o), self.p)

    def __rsub__(self, o):
        return Residue(self._other(o) - self.v, self.p)

    def __mul__(self, o):
        return Residue(self.v * self._other(o), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        w = self._other(o) % self.p
        if w == 0:
            raise ZeroDivisionError("division by 0 in GF(%d)" % self.p)
        return Residue(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        return Residue(self._other(o), self.p) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Residue(pow(self.v, n, self.p), self.p)

    def __eq__(self, o):
        if type(o) is Residue:
            return o.p == self.p and o.v == self.v
        if isinstance(o, int):
            return (o - self.v) % self.p == 0
        return NotImplemented

    def __ne__(self, o):
        r = self.__eq__(o)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __str__(self):
        return str(self.v)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class RationalField:
    """The field of rational numbers (elements are ``mpq``)."""

    characteristic = 0
    name = "Q"

    def __call__(self, x):
        if isinstance(x, str):
            return mpq(x.strip())
        if isinstance(x, Residue):
            raise FieldMismatch("cannot coerce a residue into Q")
        return mpq(x)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def contains(self, x):
        return type(x) is type(mpq(0))

    def random(self, rng, bound=30):
        return mpq(rng.randint(-bound, bound))

    def to_str(self, x):
        return str(mpq(x))

    def to_json(self):
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field with ``p`` elements."""

    name = "Fp"

    def __init__(self, p):
        p = int(p)
        if p < 2 or not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        p = self.p
        if isinstance(x, Residue):
            if x.p != p:
                raise FieldMismatch(f"GF({x.p}) element in GF({p})")
            return x
        if isinstance(x, str):
            x = mpq(x.strip())
        if isinstance(x, int) or type(x) is type(mpz(0)):
            return Residue(int(x), p)
        q = mpq(x)
        num, den = int(q.numerator), int(q.denominator)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        return Residue(num * pow(den, -1, p), p)

    @property
    def zero(self):
        return Residue(0, self.p)

    @property
    def one(self):
        return Residue(1, self.p)

    def contains(self, x):
        return type(x) is Residue and x.p == self.p

    def random(self, rng, bound=None):
        return Residue(rng.randrange(self.p), self.p)

    def to_str(self, x):
        return str(self(x).v)

    def to_json(self):
        return {"type": "Fp", "p": self.p}

    def elements(self):
        return [Residue(i, self.p) for i in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_of(x):
    """The field an element lives in (ints and mpq map to QQ)."""
    if type(x) is Residue:
        return GF(x.p)
    return QQ


# ---------------------------------------------------------------------------
# dense linear algebra
# ---------------------------------------------------------------------------

def _infer_field(M, field):
    if field is not None:
        return field
    for row in M:
        for x in row:
            return field_of(x)
    return QQ


def _integer_rows(M):
    # clear denominators row by row (rank preserving)
    out = []
    for row in M:
        q = [mpq(x) for x in row]
        den = mpz(1)
        for x in q:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in q])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _residue_rows(M, p):
    return [[int(x) % p if type(x) is Residue else int(GF(p)(x)) for x in row] for row in M]


def _rank_bareiss(A):
    # fraction-free forward elimination on integer rows, first nonzero pivot
    A = [list(r) for r in A]
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    prev = mpz(1)
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            Ai = A[i]
            Ar = A[r]
            for j in range(c + 1, n):
                Ai[j] = (pv * Ai[j] - a * Ar[j]) // prev
            Ai[c] = 0
        prev = pv
        r += 1
        if r == m:
            break
    return r


def _rref_mod(A, p):
    A = [list(r) for r in A]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        Ar = [(x * inv) % p for x in A[r]]
        A[r] = Ar
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                Ai = A[i]
                A[i] = [(x - f * y) % p for x, y in zip(Ai, Ar)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def _rref_rational(A):
    A = [[mpq(x) for x in row] for row in A]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        Ar = [x * inv for x in A[r]]
        A[r] = Ar
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], Ar)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def mat_rank(M, field=None):
    """Rank of a dense matrix (list of rows) over its entry field."""
    if not M or not M[0]:
        return 0
    F = _infer_field(M, field)
    if F.characteristic == 0:
        return _rank_bareiss(_integer_rows(M))
    p = F.p
    return len(_rref_mod(_residue_rows(M, p), p)[1])


def rref(M, field=None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    F = _infer_field(M, field)
    if not M:
        return [], []
    if F.characteristic == 0:
        return _rref_rational(_integer_rows(M))
    p = F.p
    R, piv = _rref_mod(_residue_rows(M, p), p)
    return [[Residue(x, p) for x in row] for row in R], piv


def mat_kernel(M, field=None, ncols=None):
    """Basis of the right null space, one vector per free column.

    The vectors are read off the reduced echelon form, so the output is
    deterministic: the free coordinate is 1 and the other free
    coordinates are 0.
    """
    F = _infer_field(M, field)
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        return [[F.one if i == j else F.zero for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(M, F)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, c in zip(R, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis


def mat_mul(A, B):
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), 0 * row[0]) for col in Bt] for row in A]


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------

_BITS = 16
_MASK = (1 << _BITS) - 1


def _pack(exps):
    key = 0
    for e in exps:
        key = (key << _BITS) | e
    return key


def _unpack(key, n):
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & _MASK
        key >>= _BITS
    return tuple(out)


class Poly:
    """Sparse polynomial in ``nvars`` variables over a field.

    Monomials are packed into single integers (first variable most
    significant), so comparing keys is the lexicographic order.
    """

    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms, nvars, field):
        self.terms = terms
        self.nvars = nvars
        self.field = field

    @classmethod
    def from_dict(cls, d, nvars, field):
        terms = {}
        for exps, c in d.items():
            c = field(c)
            if c:
                k = _pack(exps)
                terms[k] = terms.get(k, field.zero) + c
        return cls({k: c for k, c in terms.items() if c}, nvars, field)

    @classmethod
    def constant(cls, c, nvars, field):
        c = field(c)
        return cls({0: c} if c else {}, nvars, field)

    @classmethod
    def variable(cls, i, nvars, field):
        exps = [0] * nvars
        exps[i] = 1
        return cls({_pack(exps): field.one}, nvars, field)

    def items(self):
        for k, c in self.terms.items():
            yield _unpack(k, self.nvars), c

    def as_dict(self):
        return dict(self.items())

    def coeff(self, exps):
        return self.terms.get(_pack(exps), self.field.zero)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def _lift(self, o):
        if isinstance(o, Poly):
            return o
        return Poly.constant(o, self.nvars, self.field)

    def __add__(self, o):
        o = self._lift(o)
        t = dict(self.terms)
        for k, c in o.terms.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v = v + c
                if v:
                    t[k] = v
                else:
                    del t[k]
        return Poly(t, self.nvars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -c for k, c in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        if not isinstance(o, Poly):
            o = self.field(o)
            if not o:
                return Poly({}, self.nvars, self.field)
            return Poly({k: c * o for k, c in self.terms.items()}, self.nvars, self.field)
        t = {}
        get = t.get
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                k = k1 + k2
                v = get(k)
                t[k] = c1 * c2 if v is None else v + c1 * c2
        return Poly({k: c for k, c in t.items() if c}, self.nvars, self.field)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly.constant(1, self.nvars, self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        if not isinstance(o, Poly):
            o = self._lift(o)
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def leading(self):
        k = max(self.terms)
        return k, self.terms[k]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(_unpack(k, self.nvars)) for k in self.terms)

    def exact_div(self, g):
        """Quotient self / g, raising ValueError if g does not divide."""
        if not g.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        n = self.nvars
        lk, lc = g.leading()
        lexp = _unpack(lk, n)
        inv = 1 / lc
        r = dict(self.terms)
        q = {}
        gt = list(g.terms.items())
        while r:
            k = max(r)
            kexp = _unpack(k, n)
            if any(a < b for a, b in zip(kexp, lexp)):
                raise ValueError("inexact polynomial division")
            c = r[k] * inv
            dk = k - lk
            q[dk] = c
            for gk, gc in gt:
                kk = gk + dk
                v = r.get(kk)
                if v is None:
                    r[kk] = -c * gc
                else:
                    v = v - c * gc
                    if v:
                        r[kk] = v
                    else:
                        del r[kk]
        return Poly(q, n, self.field)

    def evaluate(self, point):
        total = self.field.zero
        for exps, c in self.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * x ** e
            total = total + term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.items(), reverse=True):
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps) if e)
            parts.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def _ediv(a, b):
    if isinstance(a, Poly):
        return a.exact_div(b)
    return a / b


def _cofactor_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(n):
        a = M[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = a * _cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return M[0][0] * 0
    return total


def _bareiss_det(M):
    A = [list(r) for r in M]
    n = len(A)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return A[0][0] * 0
        pk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                x = pk * A[i][j] - aik * A[k][j]
                if prev is not None:
                    x = _ediv(x, prev)
                A[i][j] = x
        prev = pk
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def det(M):
    """Determinant of a square matrix of field elements or :class:`Poly`.

    Cofactor expansion up to size 4, fraction-free Bareiss elimination
    (with exact polynomial division) above that.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        raise ValueError("determinant of an empty matrix")
    if n <= 4:
        return _cofactor_det(M)
    return _bareiss_det(M)


def det_by_permutations(M):
    """Leibniz expansion, kept as an independent check for small sizes."""
    n = len(M)
    total = M[0][0] * 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = M[0][perm[0]]
        for i in range(1, n):
            term = term * M[i][perm[i]]
        total = total - term if inv % 2 else total + term
    return total


# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists, ascending powers)
# ---------------------------------------------------------------------------

def _trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def upoly_divmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    inv = 1 / b[-1]
    q = [b[-1] * 0] * (len(a) - len(b) + 1)
    r = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * inv
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                r[i + j] = r[i + j] - c * bj
    return _trim(q), _trim(r[:len(b) - 1])


def upoly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if a:
        inv = 1 / a[-1]
        a = [x * inv for x in a]
    return a


def poly_gcd(f, g):
    """Gcd of two binary forms given by coefficient sequences.

    ``f[i]`` is the coefficient of s^(n-i) t^i.  The result uses the same
    convention and is normalised so its first nonzero coefficient is 1.
    """
    f, g = list(f), list(g)
    if not any(f) and not any(g):
        raise ValueError("gcd of two zero forms")
    F = field_of(next(x for x in f + g if x))
    f, g = [F(x) for x in f], [F(x) for x in g]
    if not any(f):
        f, g = g, f
    if not any(g):
        h = f
    else:
        # s divides a form exactly when its last coefficients vanish
        mf = len(f) - len(_trim(f))
        mg = len(g) - len(_trim(g))
        h = upoly_gcd(f, g) + [f[0] * 0] * min(mf, mg)
    for x in h:
        if x:
            inv = 1 / x
            return [y * inv for y in h]
    raise AssertionError("unreachable")
