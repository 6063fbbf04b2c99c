import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hsorbits.checks import involutions_of, run_suite
from hsorbits.involutions import (
    Involution,
    OrthogonalSet,
    circle,
    exact_rank,
    inv_length_L,
    phi_sigma_split,
    sigma_of,
)
from hsorbits.rootsys import InputError, build_root_system, context
from hsorbits.weyl import WeylElement, bruhat_leq, enumerate_WP

from oracles import all_group_matrices


def W(rs, *letters):
    return WeylElement.from_word(rs, [i - 1 for i in letters])


def idx(rs, *roots):
    return [rs.root_index(r) for r in roots]


def test_sigma_examples(c2_rs):
    rs = c2_rs
    top = sigma_of(rs, idx(rs, (0, 1), (2, 1)))
    assert top.element.matrix == ((-1, 0), (0, -1))
    assert (top.length, top.L) == (4, 3)
    e = sigma_of(rs, [])
    assert e.element == W(rs) and e.L == 0
    s_eta = sigma_of(rs, idx(rs, (1, 1)))
    assert s_eta.element == W(rs, 2, 1, 2)
    assert (s_eta.length, s_eta.lam, s_eta.L) == (3, 1, 2)


def test_sigma_rejects_non_orthogonal(c2_rs):
    with pytest.raises(InputError):
        sigma_of(c2_rs, idx(c2_rs, (0, 1), (1, 1)))


def test_orthogonal_set_validation(c2):
    rs = c2.rs
    assert OrthogonalSet.of(rs, idx(rs, (2, 1), (0, 1)), c2).roots == (0, 3)
    with pytest.raises(InputError):
        OrthogonalSet.of(rs, idx(rs, (1, 0)), c2)


def test_circle_examples(c2_rs):
    rs = c2_rs
    s_theta = sigma_of(rs, idx(rs, (2, 1)))
    assert circle(1, s_theta).element == enumerate_WP(context("C", 2, 2)).w0
    assert circle(0, Involution(W(rs))).element == W(rs, 1)
    assert circle(0, Involution(W(rs, 2))).element == W(rs, 1, 2, 1) == s_theta.element


def test_L_examples(c2_rs):
    rs = c2_rs
    assert inv_length_L(sigma_of(rs, idx(rs, (2, 1)))) == 2
    assert inv_length_L(Involution(W(rs))) == 0
    assert inv_length_L(Involution(W(rs, 1, 2, 1, 2))) == 3


def test_non_involution_rejected(c2_rs):
    with pytest.raises(InputError):
        Involution(W(c2_rs, 1, 2))


def test_phi_sigma_split_examples(c2_rs):
    rs = c2_rs
    top = phi_sigma_split(Involution(W(rs, 1, 2, 1, 2)))
    assert len(top.phi_sigma) == 8
    assert {rs.roots[k] for k in top.long} == {(0, 1), (2, 1), (0, -1), (-2, -1)}
    assert top.short == ()
    assert {rs.roots[k] for k in top.negative_selection} == {(0, -1), (-2, -1)}
    assert phi_sigma_split(Involution(W(rs))).phi_sigma == ()
    eta = phi_sigma_split(sigma_of(rs, idx(rs, (1, 1))))
    assert {rs.roots[k] for k in eta.phi_sigma} == {(1, 1), (-1, -1)}
    assert [rs.roots[k] for k in eta.negative_selection] == [(-1, -1)]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_exact_rank_matches_numpy(rows):
    assert exact_rank(rows) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@pytest.mark.parametrize("tn", [("A", 3), ("B", 3), ("D", 4), ("F", 4)])
def test_lambda_equals_trace_formula(tn):
    rs = build_root_system(*tn)
    from hsorbits.weyl import enumerate_W

    for w in enumerate_W(rs)[:600]:
        if w.is_involution():
            inv = Involution(w)
            trace = sum(w.matrix[i][i] for i in range(rs.rank))
            assert inv.lam == (rs.rank - trace) // 2


@pytest.mark.parametrize("tn", [("A", 3), ("B", 2), ("B", 3), ("D", 4)])
def test_involution_lemmas_exhaustive(tn):
    rs = build_root_system(*tn)
    node = {"A": 1, "B": 1, "D": 1}[tn[0]]
    assert run_suite("inv", context(tn[0], tn[1], node)) == []


@pytest.mark.parametrize("tn", [("A", 3), ("B", 3), ("D", 4), ("G", 2)])
def test_involution_counts(tn):
    rs = build_root_system(*tn)
    mats = all_group_matrices(rs.cartan_matrix).values()
    brute = sum(1 for m in mats if np.array_equal(m @ m, np.eye(rs.rank, dtype=m.dtype)))
    assert len(involutions_of(rs)) == brute
    if tn == ("A", 3):
        assert brute == 10


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([("E", 6, 1), ("E", 7, 7), ("D", 6, 6), ("C", 5, 5), ("B", 5, 1)]), st.data())
def test_sigma_of_orthogonal_sets(spec, data):
    ctx = context(*spec)
    from hsorbits.orbits import enumerate_nilradical

    S = data.draw(st.sampled_from(enumerate_nilradical(ctx)))
    sigma = sigma_of(ctx.rs, S.roots)
    assert sigma.lam == len(S)
    assert 2 * sigma.L == sigma.length + len(S)
    split = phi_sigma_split(sigma, ctx)
    assert set(split.negative_selection) == {ctx.rs.neg(k) for k in S.roots}


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([("B", 3), ("D", 4), ("E", 6)]), st.data())
def test_circle_is_involutive_and_shifts_L(tn, data):
    rs = build_root_system(*tn)
    word = data.draw(st.lists(st.integers(0, rs.rank - 1), max_size=10))
    sigma = Involution(WeylElement.identity(rs))
    for i in word:
        sigma = circle(i, sigma)
    i = data.draw(st.integers(0, rs.rank - 1))
    c = circle(i, sigma)
    assert circle(i, c) == sigma
    up = c.length > sigma.length
    assert c.L == sigma.L + (1 if up else -1)
    assert bruhat_leq(sigma.element, c.element) == up
