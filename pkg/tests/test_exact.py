from fractions import Fraction
from itertools import combinations, permutations
import random

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from ruled_locus.exact import (GF, QQ, FieldMismatch, Poly, Residue, det, det_by_permutations,
                               mat_kernel, mat_mul, mat_rank, poly_gcd, rref)


def fraction_rank(M):
    # plain Gauss-Jordan over Fraction, kept separate from the package code
    A = [[Fraction(int(x.numerator), int(x.denominator)) if hasattr(x, "numerator") else Fraction(x)
          for x in row] for row in M]
    r = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


small_ints = st.integers(-6, 6)
matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m)))


def test_residue_canonical_and_mixing():
    F = GF(7)
    assert F(10) == F(3)
    assert F(-1).v == 6
    assert F("1/2") * 2 == F(1)
    assert F(3) + 5 == F(1)
    with pytest.raises(FieldMismatch):
        F(1) + GF(11)(1)
    with pytest.raises(FieldMismatch):
        QQ(Residue(2, 7))
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    with pytest.raises(ValueError):
        GF(12)


def test_rational_canonical_form():
    x = QQ("-6/4")
    assert x == mpq(-3, 2)
    assert x.denominator == 2
    assert QQ.to_str(x) == "-3/2"


def test_rank_examples():
    I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert mat_rank(I3, QQ) == 3
    assert mat_rank([[0] * 6 for _ in range(4)], QQ) == 0
    assert mat_rank([[1, 2], [2, 4]], QQ) == 1


def test_kernel_examples():
    assert mat_kernel([[1, 0], [0, 1]], QQ) == []
    K = mat_kernel([[1, -1]], QQ)
    assert len(K) == 1 and K[0][0] == K[0][1] != 0
    F = GF(5)
    M = [[1, 2, 3]]
    K = mat_kernel(M, F)
    assert len(K) == 2
    for v in K:
        assert sum(F(a) * b for a, b in zip(M[0], v)) == 0


@given(matrices)
def test_rank_matches_fraction_oracle(M):
    assert mat_rank(M, QQ) == fraction_rank(M)


@given(matrices)
def test_kernel_is_kernel_of_full_dimension(M):
    K = mat_kernel(M, QQ, ncols=len(M[0]))
    assert len(K) == len(M[0]) - fraction_rank(M)
    for v in K:
        for row in M:
            assert sum(QQ(a) * b for a, b in zip(row, v)) == 0


@given(matrices, st.sampled_from([5, 7, 101]))
def test_kernel_mod_p(M, p):
    F = GF(p)
    K = mat_kernel(M, F, ncols=len(M[0]))
    assert len(K) + mat_rank(M, F) == len(M[0])
    for v in K:
        for row in M:
            assert sum(F(a) * b for a, b in zip(row, v)) == 0


def test_rank_mod_p_rarely_drops():
    rng = random.Random(5)
    F = GF(10007)
    same = 0
    for _ in range(100):
        M = [[QQ(mpq(rng.randint(-50, 50), rng.randint(1, 9))) for _ in range(6)] for _ in range(5)]
        rq, rp = mat_rank(M, QQ), mat_rank([[F(x) for x in r] for r in M], F)
        assert rq >= rp
        same += rq == rp
    assert same >= 95


def test_rref_pivots():
    R, piv = rref([[0, 2, 4], [1, 1, 1]], QQ)
    assert piv == [0, 1]
    assert R[0][0] == 1 and R[1][1] == 1


def test_det_examples():
    s, t = Poly.variable(0, 2, QQ), Poly.variable(1, 2, QQ)
    assert det([[s]]) == s
    assert det([[s, t], [t, s]]) == s * s - t * t
    zero = Poly.constant(0, 2, QQ)
    assert not det([[s, t, s], [zero, zero, zero], [t, s, t]])


@given(st.integers(1, 6), st.integers(0, 10 ** 6))
def test_det_commutes_with_evaluation(n, seed):
    rng = random.Random(seed)
    x, y = Poly.variable(0, 2, QQ), Poly.variable(1, 2, QQ)
    M = [[x * rng.randint(-3, 3) + y * rng.randint(-3, 3) + rng.randint(-3, 3) for _ in range(n)]
         for _ in range(n)]
    D = det(M)
    assert D == det_by_permutations(M)
    for _ in range(5):
        pt = (QQ(rng.randint(-9, 9)), QQ(rng.randint(-9, 9)))
        N = [[e.evaluate(pt) for e in row] for row in M]
        want = QQ(0)
        for perm in permutations(range(n)):
            sign = 1
            for i, j in combinations(range(n), 2):
                if perm[i] > perm[j]:
                    sign = -sign
            term = QQ(sign)
            for i in range(n):
                term *= N[i][perm[i]]
            want += term
        assert D.evaluate(pt) == want


def test_poly_exact_div():
    x, y = Poly.variable(0, 2, QQ), Poly.variable(1, 2, QQ)
    f = (x + y) * (x - y * 3) + 1
    g = x * y - 2
    assert (f * g).exact_div(g) == f


def test_poly_gcd_examples():
    assert poly_gcd([1, 0, 0], [0, 1, 0]) == [1, 0]
    assert poly_gcd([1, 0, 0, 0], [0, 0, 0, 1]) == [1]
    # (s - t)^2 (s + t) and (s - t) t
    assert poly_gcd([1, -1, -1, 1], [0, 1, -1]) == [1, -1]


def test_mat_mul():
    assert mat_mul([[1, 2]], [[3], [4]]) == [[11]]
