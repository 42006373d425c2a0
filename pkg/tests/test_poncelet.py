import random

import pytest
from hypothesis import given, strategies as st

from ruled_locus.exact import GF, QQ, mat_kernel
from ruled_locus.forms import BinaryForm, PlaneCurve, eval_curve_at_pair, tangent_line, veronese_conic
from ruled_locus.lines import SurfaceMap, gen_cone, gen_rank3, gen_rank5, gen_type_a
from ruled_locus.locus import psi_biform
from ruled_locus.poncelet import (cone_factorization_check, count_triangles_exact,
                                  find_triangles_bruteforce, poncelet_curve, quintic_fiber_probe,
                                  rank3_factorization_check, rational_triangles)
from ruled_locus.selftest import calibrate_triangles

e0, e1, e2 = (PlaneCurve.variable(i, QQ) for i in range(3))


def bf(*c, F=QQ):
    return BinaryForm([F(x) for x in c], F)


def test_pencil_examples():
    assert poncelet_curve(bf(1, 0, 0), bf(0, 0, 1)) == e1
    G = poncelet_curve(bf(1, 0, 0), bf(0, 1, 0))
    assert G == e0
    assert G.is_proportional(tangent_line((QQ(0), QQ(1))))


def test_dependent_pencil_rejected():
    with pytest.raises(ValueError):
        poncelet_curve(bf(1, 2, 3), bf(2, 4, 6))
    with pytest.raises(ValueError):
        poncelet_curve(bf(1, 2, 3), bf(1, 0))


@given(st.integers(1, 5), st.integers(0, 10 ** 6))
def test_pencil_alternating_and_basis_free(n, seed):
    rng = random.Random(seed)
    f, g = BinaryForm.random(n + 1, rng, QQ), BinaryForm.random(n + 1, rng, QQ)
    try:
        G = poncelet_curve(f, g)
    except ValueError:
        return
    assert poncelet_curve(g, f) == G * QQ(-1)
    lam = QQ(rng.randint(-5, 5))
    assert poncelet_curve(f, g + f * lam) == G
    assert poncelet_curve(f * QQ(3), g).is_proportional(G)


@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_pencil_member_roots(n, seed):
    # two roots of one member of the pencil form a pair on the curve
    rng = random.Random(seed)
    F = GF(101)
    roots = [(F(1), F(rng.randrange(101))) for _ in range(n + 1)]
    f = BinaryForm([F(1)], F)
    for a, b in roots:
        f = f * BinaryForm([-b, a], F)
    g = BinaryForm.random(n + 1, rng, F)
    try:
        G = poncelet_curve(f, g)
    except ValueError:
        return
    assert eval_curve_at_pair(G, roots[0], roots[-1]) == 0


@pytest.mark.parametrize("d,a", [(5, 2), (6, 1), (6, 3)])
def test_cone_examples(d, a):
    for seed in range(3):
        assert cone_factorization_check(gen_cone(d, a, seed=seed))


def test_cone_a1_is_single_poncelet_curve():
    psi = gen_cone(6, 1, seed=0)
    phi2 = psi.meta["phi2"]
    assert psi_biform(psi).is_proportional(poncelet_curve(phi2[2], phi2[3]))


def _rank3_with(e, a, seed):
    rng = random.Random(seed)
    d = e.degree + 2 * a
    alpha = BinaryForm.random(d, rng, QQ)
    u, v = BinaryForm.random(a, rng, QQ), BinaryForm.random(a, rng, QQ)
    uv = e * u * v
    psi = SurfaceMap((alpha, e * u * u, uv, uv, e * v * v, BinaryForm.zero(d, QQ)))
    return psi, poncelet_curve(u, v)


@pytest.mark.parametrize("e,tangents", [
    (bf(0, 1, 0), e0 * e2),
    (bf(1), PlaneCurve.constant(QQ(1), QQ)),
    (bf(1, 0), e0),
])
def test_rank3_examples(e, tangents):
    psi, P = _rank3_with(e, 2, seed=3)
    assert psi_biform(psi).is_proportional(tangents * P * P)


def test_rank3_generated():
    for d, a in [(5, 2), (6, 2), (7, 3), (6, 1)]:
        assert rank3_factorization_check(gen_rank3(d, a, seed=0))
    with pytest.raises(ValueError):
        rank3_factorization_check(gen_type_a(5, 2))


@pytest.mark.parametrize("d", [4, 5, 6, 7])
def test_type_one_lies_in_poncelet_family(d):
    psi = gen_type_a(d, 1, seed=d)
    phi1, phi2 = psi.meta["phi1"], psi.meta["phi2"]
    rows = [[f.coeffs[i] for f in phi1] for i in range(2)]
    N = mat_kernel(rows, QQ, ncols=4)
    assert len(N) == 2
    pencil = []
    for n in N:
        h = BinaryForm.zero(d - 1, QQ)
        for c, f in zip(n, phi2):
            h = h + f * c
        pencil.append(h)
    assert psi_biform(psi).is_proportional(poncelet_curve(*pencil))


def _tangent_triangle(F, pts):
    X = PlaneCurve.constant(F(1), F)
    for p in pts:
        X = X * tangent_line(p, F)
    return X


def test_bruteforce_tangent_triangle():
    F = GF(31)
    pts = [(F(1), F(2)), (F(1), F(7)), (F(0), F(1))]
    tris = find_triangles_bruteforce(_tangent_triangle(F, pts))
    key = lambda t: sorted((int(a), int(b)) for a, b in t)
    assert any(key(t) == key(pts) for t in tris)


@given(st.integers(0, 10 ** 6))
def test_bruteforce_triples_reverify(seed):
    rng = random.Random(seed)
    F = GF(31)
    X = PlaneCurve(3, [F(rng.randrange(31)) for _ in range(10)], F)
    if X.is_zero():
        return
    for a, b, c in find_triangles_bruteforce(X):
        assert len({(int(p[0]), int(p[1])) for p in (a, b, c)}) == 3
        for p, q in ((a, b), (b, c), (a, c)):
            assert eval_curve_at_pair(X, p, q) == 0


def test_bruteforce_conic_times_line():
    F = GF(23)
    X = veronese_conic(F) * PlaneCurve(1, [F(1), F(2), F(5)], F)
    for a, b, c in find_triangles_bruteforce(X):
        for p, q in ((a, b), (b, c), (a, c)):
            assert eval_curve_at_pair(X, p, q) == 0


def test_bruteforce_rejects():
    with pytest.raises(ValueError):
        find_triangles_bruteforce(e0 * e1)
    with pytest.raises(ValueError):
        find_triangles_bruteforce(e0 * e1 * e2)
    with pytest.raises(ValueError):
        find_triangles_bruteforce(PlaneCurve.variable(0, GF(263)) ** 3)


def test_exact_counter_calibration():
    compared, agree, _ = calibrate_triangles(n=20, p=101, seed=1)
    assert compared == 20 and agree == 20


def test_exact_counter_on_tangent_triangle():
    F = GF(101)
    pts = [(F(1), F(3)), (F(1), F(10)), (F(1), F(50))]
    X = _tangent_triangle(F, pts)
    c = count_triangles_exact(X)
    assert c.status == "infinite"


def test_poncelet_cubic_has_infinitely_many():
    rng = random.Random(5)
    X = poncelet_curve(BinaryForm.random(4, rng, QQ), BinaryForm.random(4, rng, QQ))
    assert count_triangles_exact(X).status in ("infinite", "indeterminate")


def test_quintic_probe():
    for seed in range(3):
        r = quintic_fiber_probe(gen_type_a(5, 2, seed=seed))
        assert r.phi_rank == 6
        assert r.triangles.status == "finite" and r.triangles.count == 2
    r = quintic_fiber_probe(gen_rank5(5, seed=0))
    assert r.phi_rank == 5
    assert r.triangles.reduced_count == 1 and r.triangles.multiplicity == 2
    assert quintic_fiber_probe(gen_cone(5, 2, seed=0)).triangles.status == "infinite"
    with pytest.raises(ValueError):
        quintic_fiber_probe(gen_type_a(6, 2))


def test_rational_triangles_match_bruteforce_mod_p():
    F = GF(101)
    psi = gen_type_a(5, 2, seed=14, field=F)
    X = psi_biform(psi)
    c = count_triangles_exact(X)
    assert c.status == "finite" and c.count == 2
    key = lambda ts: sorted(sorted((int(a), int(b)) for a, b in t) for t in ts)
    found = find_triangles_bruteforce(X)
    assert len(found) == 1
    assert key(rational_triangles(X, c)) == key(found)
