import numpy as np
import pytest

from hsorbits.checks import run_suite
from hsorbits.involutions import OrthogonalSet
from hsorbits.orbits import (
    AdmissiblePair,
    E_alpha,
    check_partial_order,
    enumerate_fiber,
    enumerate_fiber_inductive,
    enumerate_hermitian,
    enumerate_nilradical,
    fiber_leq,
    hermitian_poset,
    m_alpha,
    nilradical_dim,
    nilradical_poset,
    orbit_weight_lattice,
    pair_invariants,
    pan_leq,
    rr_leq,
    rr_matrix,
    standard_order,
)
from hsorbits.rootsys import InputError, context
from hsorbits.weyl import WeylElement, enumerate_WP, wp_leq

from oracles import gram, orthogonal_subsets


def W(rs, *letters):
    return WeylElement.from_word(rs, [i - 1 for i in letters])


def S_(rs, *roots):
    return OrthogonalSet(tuple(sorted(rs.root_index(r) for r in roots)))


def P(ctx, word, *roots):
    return AdmissiblePair.checked(ctx, W(ctx.rs, *word), S_(ctx.rs, *roots))


A2, TH, ETA = (0, 1), (2, 1), (1, 1)
WP = (2, 1, 2)


def test_nilradical_c2(c2):
    rs = c2.rs
    sets = enumerate_nilradical(c2)
    assert [tuple(rs.roots[k] for k in S) for S in sets] == [(), (A2,), (ETA,), (TH,), (A2, TH)]


@pytest.mark.parametrize("spec", [("A", 3, 2), ("A", 1, 1), ("B", 4, 1), ("C", 3, 3), ("D", 5, 1), ("E", 6, 1)])
def test_nilradical_matches_bruteforce(spec):
    ctx = context(*spec)
    rs = ctx.rs
    g = gram(rs.cartan_matrix, rs.symmetrizer)
    want = {tuple(sorted(c)) for c in orthogonal_subsets(g, [rs.roots[k] for k in ctx.psi])}
    got = {tuple(sorted(rs.roots[k] for k in S)) for S in enumerate_nilradical(ctx)}
    assert got == want
    if spec == ("A", 3, 2):
        assert len(got) == 7
    if spec == ("A", 1, 1):
        assert len(got) == 2


def test_hermitian_counts(c2):
    assert len(enumerate_hermitian(c2)) == 11
    a1 = context("A", 1, 1)
    rs = a1.rs
    assert [p.key for p in enumerate_hermitian(a1)] == [
        (W(rs).key, ()), (W(rs, 1).key, ()), (W(rs, 1).key, (0,))
    ]


@pytest.mark.parametrize("spec", [("A", 2, 1), ("A", 4, 2), ("C", 3, 3), ("D", 4, 3)])
def test_hermitian_count_bruteforce(spec):
    ctx = context(*spec)
    rs = ctx.rs
    g = gram(rs.cartan_matrix, rs.symmetrizer)
    total = 0
    for v in enumerate_WP(ctx):
        total += len(orthogonal_subsets(g, [rs.roots[k] for k in v.inversion_set()]))
    assert len(enumerate_hermitian(ctx)) == total


def test_hermitian_order_is_deterministic(c2):
    pairs = enumerate_hermitian(c2)
    assert pairs == sorted(pairs, key=AdmissiblePair.sort_key)


def test_fiber_inductive_examples(c2):
    rs = c2.rs
    got = enumerate_fiber_inductive(W(rs, 1, 2), c2)
    assert [tuple(rs.roots[k] for k in S) for S in got] == [(), (A2,), (ETA,)]
    assert enumerate_fiber_inductive(W(rs), c2) == [OrthogonalSet(())]
    assert enumerate_fiber_inductive(W(rs, *WP), c2) == enumerate_nilradical(c2)
    with pytest.raises(InputError):
        enumerate_fiber_inductive(W(rs, 1), c2)


@pytest.mark.parametrize("spec", [("A", 4, 2), ("B", 3, 1), ("C", 4, 4), ("D", 5, 5), ("E", 6, 6)])
def test_fiber_inductive_equals_filter(spec):
    ctx = context(*spec)
    for v in enumerate_WP(ctx):
        assert enumerate_fiber_inductive(v, ctx) == enumerate_fiber(v, ctx)


def test_pair_invariants_examples(c2):
    rs = c2.rs
    sigma, nu, dim, L = pair_invariants(P(c2, WP, ETA))
    assert sigma.element == W(rs, 2, 1, 2) and nu == W(rs) and dim == 5
    for v in enumerate_WP(c2):
        sigma, nu, dim, L = pair_invariants(AdmissiblePair(c2, v, OrthogonalSet(())))
        assert sigma.element == W(rs) and nu == v and dim == 3
    sigma, nu, dim, L = pair_invariants(P(c2, WP, A2, TH))
    assert sigma.element == enumerate_WP(c2).w0 and dim == 6


def test_nilradical_dim_examples(c2):
    rs = c2.rs
    assert nilradical_dim(S_(rs, A2), c2) == 2
    assert nilradical_dim(S_(rs), c2) == 0
    assert nilradical_dim(S_(rs, A2, TH), c2) == 3


def test_m_alpha_examples(c2):
    assert m_alpha(P(c2, (2,), A2), 0) == P(c2, (1, 2), A2)
    assert m_alpha(P(c2, (2,), A2), 1) == P(c2, (2,), A2)
    assert m_alpha(P(c2, WP), 1) == P(c2, WP, TH)
    assert m_alpha(P(c2, WP), 0) == P(c2, WP)


def test_E_alpha_examples(c2):
    assert set(E_alpha(P(c2, (2,), A2), 1)) == {P(c2, ()), P(c2, (2,))}
    assert E_alpha(P(c2, WP, TH, A2), 0) == [P(c2, WP, ETA)]
    # raising direction gives an empty fiber
    assert E_alpha(P(c2, (2,)), 0) == []


def test_rr_leq_examples(c2):
    assert rr_leq(P(c2, (2,), A2), P(c2, WP, ETA))
    for p in enumerate_hermitian(c2):
        assert rr_leq(p, p)
    assert rr_leq(P(c2, WP, TH), P(c2, WP, ETA))


def test_rr_leq_rejects_mixed_contexts(c2):
    other = context("A", 1, 1)
    with pytest.raises(InputError):
        rr_leq(enumerate_hermitian(c2)[0], enumerate_hermitian(other)[0])


def test_pan_leq_examples(c2):
    rs = c2.rs
    assert pan_leq(S_(rs, TH), S_(rs, A2), c2)
    assert all(pan_leq(S_(rs), S, c2) for S in enumerate_nilradical(c2))
    assert not pan_leq(S_(rs, A2), S_(rs, ETA), c2) and not pan_leq(S_(rs, ETA), S_(rs, A2), c2)


def test_fiber_leq_examples(c2):
    rs = c2.rs
    w = W(rs, *WP)
    assert fiber_leq(w, S_(rs, TH), S_(rs, A2, TH), c2)
    assert fiber_leq(w, S_(rs, ETA), S_(rs, ETA), c2)
    assert not fiber_leq(w, S_(rs, A2), S_(rs, ETA), c2)
    assert not fiber_leq(w, S_(rs, ETA), S_(rs, A2), c2)
    with pytest.raises(InputError):
        fiber_leq(W(rs, 2), S_(rs, ETA), S_(rs), c2)


def test_standard_order_c2(c2):
    std = standard_order(c2)
    assert np.array_equal(std.leq, rr_matrix(c2, prune=False))
    mins = [std.nodes[n] for n in std.minimal()]
    assert len(mins) == 4 and all(len(p.S) == 0 and p.dim == 3 for p in mins)
    assert [std.nodes[n] for n in std.maximal()] == [P(c2, WP, A2, TH)]


def test_standard_order_a1():
    ctx = context("A", 1, 1)
    std = standard_order(ctx)
    assert std.leq.tolist() == [[True, False, True], [False, True, True], [False, False, True]]


def test_standard_order_a1_chain_through_m():
    # the (e, {}) and (s1, {}) orbits both rise to the open orbit
    ctx = context("A", 1, 1)
    pairs = enumerate_hermitian(ctx)
    assert m_alpha(pairs[0], 0) == pairs[2] and m_alpha(pairs[1], 0) == pairs[2]


def test_hasse_nilradical_diamond(c2):
    rs = c2.rs
    pu = nilradical_poset(c2)
    name = {n: tuple(rs.roots[k] for k in S) for n, S in enumerate(pu.nodes)}
    edges = {(name[a], name[b]) for a, b in pu.covers}
    assert edges == {((), (TH,)), ((TH,), (A2,)), ((TH,), (ETA,)), ((A2,), (A2, TH)), ((ETA,), (A2, TH))}
    assert sorted(pu.dims) == [0, 1, 2, 2, 3]


def test_hasse_one_node():
    from hsorbits.orbits import OrbitPoset, hasse

    p = OrbitPoset("nilradical", context("A", 1, 1), ["x"], [0], np.ones((1, 1), dtype=bool))
    assert hasse(p) == []


def test_hasse_hermitian_undecorated(c2):
    gl = hermitian_poset(c2)
    assert len(gl.covers) == 16
    plain = [(a, b) for a, b in gl.covers if (a, b) not in gl.decorations]
    # the m_alpha labels leave four covers bare; two of them are labelled in the printed figure
    assert len(plain) == 4
    top = enumerate_hermitian(c2).index(P(c2, WP, ETA))
    assert sum(1 for a, b in plain if b == top) == 2


def test_weight_lattice_examples(c2):
    assert orbit_weight_lattice(P(c2, (2,), A2)) == [(0, -1)]
    assert orbit_weight_lattice(P(c2, (2,))) == []
    assert sorted(orbit_weight_lattice(P(c2, WP, A2, TH))) == sorted([(-2, -1), (0, -1)])


def test_gamma_minus_two_beta_collapse(c2):
    # the gamma, gamma - 2 beta collapse exists in type C and is checked by the malpha suite
    assert E_alpha(P(c2, WP, A2, TH), 0) == [P(c2, WP, ETA)]
    assert run_suite("malpha", c2) == []


@pytest.mark.parametrize("spec", [("A", 3, 2), ("B", 3, 1), ("C", 3, 3), ("D", 4, 1)])
def test_posets_are_partial_orders(spec):
    ctx = context(*spec)
    for p in (hermitian_poset(ctx), nilradical_poset(ctx)):
        check_partial_order(p.leq)
        for a, b in p.covers:
            assert p.dims[b] == p.dims[a] + 1


@pytest.mark.parametrize("spec", [("C", 3, 3), ("D", 4, 4)])
def test_threads_give_identical_matrix(spec):
    ctx = context(*spec)
    assert np.array_equal(rr_matrix(ctx, threads=1), rr_matrix(ctx, threads=2))


@pytest.mark.parametrize("spec", [("A", 4, 2), ("C", 3, 3), ("D", 5, 1)])
def test_nu_bounded_by_v(spec):
    ctx = context(*spec)
    for p in enumerate_hermitian(ctx):
        assert wp_leq(p.nu, p.v, ctx)
