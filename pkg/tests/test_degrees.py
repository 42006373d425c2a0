from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from ruled_locus.degrees import (boundary_degree, catalan, harris_tu_symmetric, m_degree,
                                 paper_degrees, poncelet_degree, rank3_degree)


def test_harris_tu_examples():
    assert harris_tu_symmetric(3, 2) == 3
    assert harris_tu_symmetric(4, 3) == 4
    for n in range(1, 8):
        assert harris_tu_symmetric(n, n) == 1
        if n > 1:
            # the symmetric determinant has degree n
            assert harris_tu_symmetric(n, n - 1) == n
    # rank one symmetric matrices: Veronese of P^(n-1), degree 2^(n-1)
    for n in range(1, 8):
        assert harris_tu_symmetric(n, 1) == 2 ** (n - 1)
    with pytest.raises(ValueError):
        harris_tu_symmetric(3, 0)


def test_table_examples():
    assert paper_degrees(6).i == 7
    assert paper_degrees(5).j == 6
    assert paper_degrees(3).p == 4
    assert paper_degrees(5).i == 1
    assert paper_degrees(6).as_dict() == {"d": 6, "i": 7, "j": 56, "k": 294, "p": 672}
    with pytest.raises(ValueError):
        paper_degrees(2)


@pytest.mark.parametrize("d", range(3, 31))
def test_table_matches_harris_tu(d):
    t = paper_degrees(d)
    assert t.p == harris_tu_symmetric(d + 1, 3)
    if d >= 4:
        assert t.k == harris_tu_symmetric(d + 1, 4)
    if d >= 5:
        assert t.j == harris_tu_symmetric(d + 1, 5)
    if d >= 6:
        assert t.i == harris_tu_symmetric(d + 1, 6)


def test_poncelet_degree():
    assert [poncelet_degree(n) for n in (0, 1, 2, 3, 4)] == [1, 1, 2, 5, 14]
    c = [1]
    for n in range(1, 21):
        c.append(sum(c[i] * c[n - 1 - i] for i in range(n)))
    assert [poncelet_degree(n) for n in range(21)] == c == [catalan(n) for n in range(21)]
    assert all(Fraction(comb(2 * n + 1, n + 1), 2 * n + 1) == c[n] for n in range(21))


def test_m_degree():
    assert m_degree(2, 5) == 30
    assert m_degree(1, 4) == comb(4, 0) * 1 * 2
    assert m_degree(2, 4) == comb(4, 2) // 2
    with pytest.raises(ValueError):
        m_degree(0, 5)


@given(st.integers(3, 20), st.data())
def test_m_symmetry(d, data):
    a = data.draw(st.integers(1, d - 1))
    assert m_degree(a, d) == m_degree(d - a, d)


def test_rank3_degree():
    assert rank3_degree(2, 5) == 2
    assert rank3_degree(2, 4) == 1
    assert rank3_degree(1, 5) == 8


def test_boundary_degree():
    assert boundary_degree(4) == 6
    assert boundary_degree(5) == 12
    assert boundary_degree(6, 5) == 2 * comb(10, 1) * 1
    assert boundary_degree(7, 6) == 2 * comb(14, 1) * 7
    with pytest.raises(ValueError):
        boundary_degree(3)
    with pytest.raises(ValueError):
        boundary_degree(6, 6)


def test_degree_five_triple():
    assert (poncelet_degree(3), m_degree(2, 5), boundary_degree(5)) == (5, 30, 12)
