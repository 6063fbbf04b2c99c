"""Spec invariants as exhaustive or hypothesis-driven property tests."""

import pytest
from hypothesis import given, settings, strategies as st

from conftest import CRITERION_CONTEXTS
from hsorbits.checks import run_suite
from hsorbits.orbits import enumerate_hermitian, hermitian_poset, m_alpha
from hsorbits.rootsys import build_root_system, cominuscule_nodes, context
from hsorbits.weyl import enumerate_WP, in_WP, min_coset_rep

# contexts beyond the acceptance list, small enough to run every suite
EXTRA = [("B", 4, 1), ("C", 4, 4), ("D", 5, 5), ("A", 5, 3), ("D", 6, 1)]


@pytest.mark.parametrize("kind,n", [("A", 6), ("B", 5), ("C", 4), ("D", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])
def test_height_is_coefficient_sum_and_theta_is_unique_top(kind, n):
    rs = build_root_system(kind, n)
    heights = [sum(b) for b in rs.positive_roots]
    assert heights == sorted(heights)
    assert heights.count(max(heights)) == 1
    assert rs.positive_roots[-1] == rs.highest_root


@pytest.mark.parametrize("spec", CRITERION_CONTEXTS + EXTRA, ids=lambda s: f"{s[0]}{s[1]}_{s[2]}")
def test_extremal_orbits(spec):
    ctx = context(*spec)
    poset = hermitian_poset(ctx)
    npsi = len(ctx.psi)
    mins = set(poset.minimal())
    empty = {n for n, p in enumerate(poset.nodes) if len(p.S) == 0}
    assert mins == empty
    assert all(poset.nodes[n].dim == npsi for n in empty)
    (top,) = poset.maximal()
    assert poset.nodes[top].dim == 2 * npsi


@pytest.mark.parametrize("suite", ["gp1", "structure", "dim", "malpha", "order-eq"])
@pytest.mark.parametrize("spec", EXTRA, ids=lambda s: f"{s[0]}{s[1]}_{s[2]}")
def test_suites_beyond_acceptance_contexts(spec, suite):
    assert run_suite(suite, context(*spec)) == []


ALL_HERMITIAN = [
    (k, n, i + 1)
    for k, n in [("A", 5), ("B", 5), ("C", 5), ("D", 6), ("E", 6), ("E", 7)]
    for i in sorted(cominuscule_nodes(build_root_system(k, n)))
]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_HERMITIAN), st.data())
def test_descent_splits_inversions(spec, data):
    ctx = context(*spec)
    rs = ctx.rs
    v = data.draw(st.sampled_from(enumerate_WP(ctx).elements))
    for i in range(rs.rank):
        sv = v.lmul(i)
        if v.left_descent(i) and in_WP(sv, ctx):
            beta = rs.neg(v.inverse.perm[rs.simple(i)])
            assert set(v.inversion_set()) == set(sv.inversion_set()) | {beta}
            assert beta not in sv.inversion_set()
        assert in_WP(min_coset_rep(sv, ctx), ctx)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("A", 5, 3), ("D", 5, 1), ("C", 4, 4), ("B", 4, 1)]), st.data())
def test_m_alpha_raises_or_fixes(spec, data):
    ctx = context(*spec)
    pairs = enumerate_hermitian(ctx)
    p = data.draw(st.sampled_from(pairs))
    i = data.draw(st.integers(0, ctx.rs.rank - 1))
    q = m_alpha(p, i)
    assert q == p or (q.dim == p.dim + 1 and q.L == p.L + 1)
    assert m_alpha(q, i) == q
