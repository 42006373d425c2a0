import random

import pytest
from hypothesis import given, strategies as st

from ruled_locus.exact import GF, QQ, mat_mul
from ruled_locus.forms import BinaryForm, PlaneCurve
from ruled_locus.forms import (curve_act_pgl2, eval_curve_at_pair, restrict_to_conic, tangent_line,
                               veronese_conic)
from ruled_locus.lines import (act_pgl2, act_pgl4, boundary_compose, dual_surface, gen_cone,
                               gen_developable, gen_point_cone, gen_rank3, gen_rank5, gen_type_a,
                               lines_meet)
from ruled_locus.locus import (DegenerateSurface, boundary_factorization_check, check_main_theorem,
                               is_developable, phi, phi_rank, pinch_points, psi_biform,
                               psi_determinantal)
from ruled_locus.selftest import worked_example

e0, e1, e2 = (PlaneCurve.variable(i, QQ) for i in range(3))
seeds = st.integers(0, 10 ** 6)
fields = st.sampled_from([QQ, GF(10007)])


def test_worked_phi():
    M = phi(worked_example())
    want = [[0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 2, 0], [0, -1, 0, 0]]
    assert [[int(x) for x in row] for row in M] == want
    assert phi_rank(worked_example()) == 3


def test_worked_psi_both_routes():
    psi = worked_example()
    assert psi_biform(psi) == e2 * QQ(-1)
    assert psi_determinantal(psi) == e2
    chk = check_main_theorem(psi)
    assert chk.holds and chk.scalar == -1


def test_worked_pinch_form():
    assert pinch_points(worked_example()) == BinaryForm([0, 0, -1], QQ)


def test_phi_contains_rational_normal_curve():
    psi = gen_type_a(6, 3, seed=1)
    M = phi(psi)
    d = psi.d
    # Q(x^d) vanishes identically: sum over i + j = k of M[i][j] is zero for each k
    for k in range(2 * d + 1):
        assert sum(M[i][k - i] for i in range(max(0, k - d), min(d, k) + 1)) == 0


def _rep_matrix(h, d, F):
    cols = [BinaryForm.monomial(d, i, F).substitute(h).coeffs for i in range(d + 1)]
    return [[cols[j][i] for j in range(d + 1)] for i in range(d + 1)]


@given(st.integers(3, 7), seeds)
def test_phi_congruence_under_pgl2(d, seed):
    rng = random.Random(seed)
    psi = gen_type_a(d, 1 + seed % (d // 2), seed=seed)
    h = [[QQ(rng.randint(-3, 3)), QQ(rng.randint(-3, 3))], [QQ(rng.randint(-3, 3)), QQ(rng.randint(-3, 3))]]
    if h[0][0] * h[1][1] == h[0][1] * h[1][0]:
        return
    R = _rep_matrix(h, d, QQ)
    Rt = [list(r) for r in zip(*R)]
    assert phi(act_pgl2(psi, h)) == mat_mul(mat_mul(R, phi(psi)), Rt)


def test_stratum_ranks_examples():
    assert phi_rank(gen_type_a(5, 2, seed=0)) == 6
    assert phi_rank(gen_rank5(5, seed=0)) == 5
    assert phi_rank(gen_cone(5, 2, seed=0)) == 4
    assert phi_rank(gen_rank3(5, 2, seed=0)) == 3


def test_developable_psi_is_conic():
    G = psi_biform(gen_developable(3, seed=0))
    assert G.is_proportional(veronese_conic(QQ))
    assert is_developable(G)
    with pytest.raises(DegenerateSurface):
        pinch_points(gen_developable(3, seed=0))


def test_point_cone_is_degenerate():
    with pytest.raises(DegenerateSurface):
        psi_biform(gen_point_cone(4, seed=0))


@given(st.integers(3, 8), seeds, fields)
def test_main_theorem(d, seed, F):
    psi = gen_type_a(d, 1 + seed % (d // 2), seed=seed, field=F)
    chk = check_main_theorem(psi)
    assert chk.holds
    assert chk.biform.degree == d - 2


@given(st.integers(4, 7), seeds)
def test_main_theorem_other_strata(d, seed):
    a = 1 + seed % (d // 2)
    for psi in (gen_cone(d, a, seed=seed), gen_rank5(d, seed=seed), gen_rank3(d, a, seed=seed)):
        assert check_main_theorem(psi).holds


@given(st.integers(3, 6), seeds)
def test_dual_gives_same_curve(d, seed):
    psi = gen_type_a(d, 1 + seed % (d // 2), seed=seed)
    G = psi_biform(psi)
    assert psi_biform(dual_surface(psi)).is_proportional(G)
    assert psi_determinantal(dual_surface(psi)).is_proportional(G)


@given(st.integers(3, 6), seeds)
def test_pgl_invariance(d, seed):
    rng = random.Random(seed)
    psi = gen_type_a(d, 1 + seed % (d // 2), seed=seed)
    G = psi_biform(psi)
    g = [[int(i == j) * rng.randint(1, 4) + (rng.randint(-2, 2) if j > i else 0) for j in range(4)]
         for i in range(4)]
    assert psi_biform(act_pgl4(psi, g)).is_proportional(G)
    h = [[1, rng.randint(-3, 3)], [rng.randint(-3, 3), 0]]
    if h[0][1] * h[1][0] == 0:
        return
    assert psi_biform(act_pgl2(psi, h)).is_proportional(curve_act_pgl2(G, h))
    assert phi_rank(act_pgl2(psi, h)) == phi_rank(psi) == phi_rank(act_pgl4(psi, g))


@given(st.integers(3, 6), seeds)
def test_meeting_pairs_on_curve(d, seed):
    rng = random.Random(seed)
    F = GF(101)
    psi = gen_type_a(d, 1 + seed % (d // 2), seed=seed, field=F)
    G = psi_biform(psi)
    for _ in range(20):
        p = (F(rng.randrange(101)), F(1))
        q = (F(1), F(rng.randrange(101)))
        if p[0] * q[1] == p[1] * q[0] or not any(psi.at(p)) or not any(psi.at(q)):
            continue
        assert lines_meet(psi, p, q) == (eval_curve_at_pair(G, p, q) == 0)


def test_boundary_examples():
    base = worked_example()
    s = BinaryForm([1, 0], QQ)
    assert boundary_factorization_check(base, s)
    # xi = s contributes the tangent line at its root (0:1), which is e0
    G = psi_biform(boundary_compose(base, s))
    assert G.is_proportional(e2 * tangent_line((QQ(0), QQ(1))))
    assert G.is_proportional(e2 * e0)
    st_ = BinaryForm([0, 1, 0], QQ)
    assert psi_biform(boundary_compose(base, st_)).is_proportional(e2 * e0 * e2)
    assert boundary_factorization_check(base, BinaryForm([3], QQ))


def test_generic_quintic_pinch_squarefree():
    f = pinch_points(gen_type_a(5, 2, seed=0))
    assert f.degree == 6 and f.is_squarefree()
