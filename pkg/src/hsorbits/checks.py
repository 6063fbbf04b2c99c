"""Invariant batteries behind ``hsorbits verify`` and the test-suite.

Each check walks its objects in the deterministic enumeration order and
stops at the first failure of a clause, so the reported counterexample is
the smallest one in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

import numpy as np

from .involutions import (
    Involution,
    OrthogonalSet,
    are_orthogonal,
    circle,
    phi_sigma_split,
    sigma_of,
)
from .rootsys import HermitianContext, InvariantError, RootSystem, dominance_leq
from .weyl import (
    WeylElement,
    apply,
    bruhat_leq,
    enumerate_W,
    enumerate_WP,
    in_WP,
    min_coset_rep,
    weyl_group_order,
    wp_ascents,
    wp_descents,
    wp_leq,
)
from .orbits import (
    AdmissiblePair,
    check_partial_order,
    enumerate_fiber,
    enumerate_fiber_inductive,
    enumerate_hermitian,
    enumerate_nilradical,
    fiber_leq,
    nilradical_dim,
    operator_table,
    pan_leq,
    rr_leq,
    rr_matrix,
    standard_matrix,
)

# exhaustive checks over the whole group are skipped above this size
FULL_GROUP_LIMIT = 1000


@dataclass(frozen=True)
class Violation:
    suite: str
    clause: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.suite}] {self.clause}: {self.detail}"


Check = Callable[[], Iterator[tuple[str, str]]]


def _first_per_clause(suite: str, gen: Iterator[tuple[str, str]]) -> list[Violation]:
    seen: dict[str, Violation] = {}
    for clause, detail in gen:
        seen.setdefault(clause, Violation(suite, clause, detail))
    return list(seen.values())


def _fmt(ctx: HermitianContext, roots) -> str:
    return "{" + ", ".join(str(ctx.rs.roots[k]) for k in roots) + "}"


# --- W^P -------------------------------------------------------------------


def _gp1(ctx: HermitianContext) -> Iterator[tuple[str, str]]:
    rs = ctx.rs
    q = enumerate_WP(ctx)
    if len(q) * weyl_group_order_parabolic(ctx) != weyl_group_order(rs.cartan_type, rs.rank):
        yield "quotient size |W|/|W_P|", f"got {len(q)}"
    for v in q:
        if not in_WP(v, ctx):
            yield "inversions of W^P lie in Psi", repr(v)
    om = ctx.omega_P_covee
    for v in q:
        diff = [a - b for a, b in zip(om, apply(v, om, "coroots"))]
        if sum(diff) != v.length:
            yield "length equals height of omega - v(omega)", repr(v)
    for u in q:
        for v in q:
            try:
                wp_leq(u, v, ctx, verify=True)
            except InvariantError as exc:
                yield "three W^P order criteria agree", str(exc)
    for u in q:
        for v in q:
            if u.length != v.length - 1:
                continue
            r = u * v.inverse
            if not r.is_involution() or Involution(r).lam != 1:
                continue
            gamma = phi_sigma_split(Involution(r)).phi_sigma[0]
            if sum(rs.roots[gamma]) != 1:
                yield "covering reflections in W^P are simple", f"{u!r} = s_{rs.roots[gamma]} {v!r}"
    for v in q:
        desc = wp_descents(v, ctx)
        brute = sorted(
            (i, rs.neg(v.inverse.perm[rs.simple(i)]))
            for i in range(rs.rank)
            if v.left_descent(i) and in_WP(v.lmul(i), ctx)
        )
        if desc != brute:
            yield "descents are the maximal inversions", f"{v!r}: {desc} vs {brute}"
        for i, beta in desc:
            sv = v.lmul(i)
            if sv.inversions | (1 << beta) != v.inversions or sv.inversions >> beta & 1:
                yield "inversion set splits along a descent", f"{v!r}, s{i + 1}"
        asc = wp_ascents(v, ctx)
        brute = sorted(
            (i, v.inverse.perm[rs.simple(i)])
            for i in range(rs.rank)
            if not v.left_descent(i) and in_WP(v.lmul(i), ctx)
        )
        if asc != brute:
            yield "ascents are the minimal non-inversions", f"{v!r}: {asc} vs {brute}"
    if rs.rank <= 3 or len(q) ** 2 <= FULL_GROUP_LIMIT:
        yield from _lifting(rs)


def weyl_group_order_parabolic(ctx: HermitianContext) -> int:
    """|W_P| from the orbit of the fundamental coweight."""
    rs = ctx.rs
    return weyl_group_order(rs.cartan_type, rs.rank) // coweight_orbit_size(ctx)


def coweight_orbit_size(ctx: HermitianContext) -> int:
    """Size of the W-orbit of omega_P^vee, i.e. |W^P|, without enumerating W."""
    rs = ctx.rs
    start = tuple(ctx.omega_P_covee)
    seen = {start}
    frontier = [start]
    d = rs.symmetrizer
    a = rs.cartan_matrix
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(rs.rank):
                # s_i on coroot coordinates: x - <alpha_i, x> alpha_i^vee
                c = sum(a[j][i] * x[j] for j in range(rs.rank))
                if c == 0:
                    continue
                y = tuple(x[j] - c * (j == i) for j in range(rs.rank))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def _lifting(rs: RootSystem) -> Iterator[tuple[str, str]]:
    if weyl_group_order(rs.cartan_type, rs.rank) > FULL_GROUP_LIMIT:
        return
    W = enumerate_W(rs)
    for u in W:
        for v in W:
            if u == v or not bruhat_leq(u, v):
                continue
            for i in range(rs.rank):
                su, sv = u.lmul(i), v.lmul(i)
                up_u, up_v = not u.left_descent(i), not v.left_descent(i)
                if up_u == up_v and not (bruhat_leq(su, sv) and su != sv):
                    yield "lifting: same side", f"{u!r} < {v!r}, s{i + 1}"
                if up_u and not up_v and not (bruhat_leq(u, sv) and bruhat_leq(su, v)):
                    yield "lifting: mixed sides", f"{u!r} < {v!r}, s{i + 1}"


# --- involutions -------------------------------------------------------------


def involutions_of(rs: RootSystem) -> list[Involution]:
    return [Involution(w) for w in enumerate_W(rs) if w.is_involution()]


def _inv_group(rs: RootSystem) -> Iterator[tuple[str, str]]:
    if weyl_group_order(rs.cartan_type, rs.rank) > FULL_GROUP_LIMIT:
        return
    invs = involutions_of(rs)
    for s in invs:
        for i in range(rs.rank):
            c = circle(i, s)
            if circle(i, c) != s:
                yield "circle action is an involution", f"{s!r}, s{i + 1}"
            up = c.length > s.length
            plain = WeylElement.simple_reflection(rs, i) * s.element
            if up != (plain.length > s.length):
                yield "circle and left multiplication raise together", f"{s!r}, s{i + 1}"
            if c.L != s.L + (1 if up else -1):
                yield "L changes by one under the circle action", f"{s!r}, s{i + 1}"
    for s in invs:
        for t in invs:
            if s == t or not bruhat_leq(s.element, t.element):
                continue
            if s.L >= t.L:
                yield "Bruhat order is strictly L-compatible", f"{s!r} < {t!r}"
            for i in range(rs.rank):
                cs, ct = circle(i, s), circle(i, t)
                s_up, t_up = cs.length > s.length, ct.length > t.length
                if s_up == t_up and not (bruhat_leq(cs.element, ct.element) and cs != ct):
                    yield "circle action is monotone", f"{s!r} < {t!r}, s{i + 1}"
                if s_up and not t_up and not (
                    bruhat_leq(cs.element, t.element) and bruhat_leq(s.element, ct.element)
                ):
                    yield "circle action lifting", f"{s!r} < {t!r}, s{i + 1}"


def _structure(ctx: HermitianContext) -> Iterator[tuple[str, str]]:
    rs = ctx.rs
    long_norm = rs._cache["long_norm"]
    for a, b in combinations(ctx.psi, 2):
        if not are_orthogonal(rs, a, b):
            continue
        for sign in (1, -1):
            x = tuple(p + sign * q for p, q in zip(rs.roots[a], rs.roots[b]))
            if rs.is_root(x):
                yield "sums and differences of orthogonal Psi roots are not roots", _fmt(ctx, (a, b))
        for alpha in ctx.phi_P_plus:
            plus = lambda k: tuple(p + q for p, q in zip(rs.roots[k], rs.roots[alpha]))
            minus = lambda k: tuple(p - q for p, q in zip(rs.roots[k], rs.roots[alpha]))
            if rs.is_root(plus(a)) and rs.is_root(plus(b)):
                yield "one orthogonal root at most is raised by Phi_P", _fmt(ctx, (a, b))
            in_psi = lambda x: rs.is_root(x) and rs.root_index(x) in ctx.psi
            if in_psi(minus(a)) and in_psi(minus(b)):
                yield "one orthogonal root at most is lowered into Psi", _fmt(ctx, (a, b))
    for S in enumerate_nilradical(ctx):
        sigma = sigma_of(rs, S.roots)
        if sigma.lam != len(S):
            yield "lambda(sigma_S) = |S|", _fmt(ctx, S.roots)
        split = phi_sigma_split(sigma, ctx)
        negated = set(split.phi_sigma)
        halves = set()
        for b in S.roots:
            for c in S.roots:
                for sb in (1, -1):
                    for sc in (1, -1):
                        x = tuple(sb * p + sc * q for p, q in zip(rs.roots[b], rs.roots[c]))
                        if all(v % 2 == 0 for v in x):
                            h = tuple(v // 2 for v in x)
                            if rs.is_root(h):
                                halves.add(rs.root_index(h))
        if negated != halves:
            yield "negated roots are half-sums of S", _fmt(ctx, S.roots)
        both = set(S.roots) | {rs.neg(k) for k in S.roots}
        longS = {k for k in S.roots if rs.norm2(k) == long_norm} if not rs.simply_laced else set(S.roots)
        long_both = longS | {rs.neg(k) for k in longS}
        if rs.simply_laced and negated != both:
            yield "simply laced: negated roots are +-S", _fmt(ctx, S.roots)
        if set(split.long) != long_both:
            yield "long negated roots are +-S_long", _fmt(ctx, S.roots)
        if set(split.long) | set(split.short) != both:
            yield "short part orthogonal to S_long is +-S_short", _fmt(ctx, S.roots)
        for k in range(rs.n_positive):
            if k in S.roots:
                continue
            if _in_integer_span(rs, S.roots, rs.roots[k]):
                yield "Z S meets Phi^+ exactly in S", _fmt(ctx, S.roots)
    pairs = enumerate_hermitian(ctx)
    by_sigma: dict = {}
    for p in pairs:
        neg = phi_sigma_split(p.sigma, ctx).negative_selection
        if tuple(sorted(neg)) != p.vS:
            yield "negative selection recovers v(S)", repr(p)
        prev = by_sigma.setdefault(p.sigma.element.key, p)
        if prev.vS != p.vS:
            yield "equal involutions force equal v(S)", f"{prev!r} vs {p!r}"


def _in_integer_span(rs: RootSystem, basis: tuple[int, ...], x) -> bool:
    # S is orthogonal, so coefficients are inner-product quotients
    coeffs = []
    for b in basis:
        num = rs.inner(x, rs.roots[b])
        den = rs.inner(rs.roots[b], rs.roots[b])
        if num % den:
            return False
        coeffs.append(num // den)
    y = [0] * rs.rank
    for c, b in zip(coeffs, basis):
        for j in range(rs.rank):
            y[j] += c * rs.roots[b][j]
    return tuple(y) == tuple(x)


# --- dimensions ---------------------------------------------------------------


def _dim(ctx: HermitianContext) -> Iterator[tuple[str, str]]:
    rs = ctx.rs
    q = enumerate_WP(ctx)
    npsi = len(ctx.psi)
    pairs = enumerate_hermitian(ctx)
    for p in pairs:
        if not p.is_admissible():
            yield "admissibility v(S) < 0", repr(p)
        if 2 * (p.dim - npsi) != p.sigma.length + len(p.S):
            yield "dim - |Psi| = (l(sigma) + |S|)/2", repr(p)
        if p.sigma.lam != len(p.S):
            yield "lambda(sigma_v(S)) = |S|", repr(p)
        if not wp_leq(p.nu, p.v, ctx):
            yield "nu <= v", repr(p)
        if not (npsi <= p.dim <= 2 * npsi):
            yield "dimension range", repr(p)
    tops = [p for p in pairs if p.dim == 2 * npsi]
    if len(tops) != 1 or tops[0].v != q.longest:
        yield "unique open orbit of dim 2|Psi| over w^P", str(tops)
    for p in pairs:
        if (p.dim == npsi) != (len(p.S) == 0):
            yield "closed orbits are exactly S = empty", repr(p)
    for S in enumerate_nilradical(ctx):
        d = nilradical_dim(S, ctx)
        if d + npsi != AdmissiblePair(ctx, q.longest, S).dim:
            yield "nilradical dim matches the fiber over w^P", _fmt(ctx, S.roots)
    for v in q:
        if enumerate_fiber_inductive(v, ctx) != enumerate_fiber(v, ctx):
            yield "inductive fiber enumeration equals filtering", repr(v)


# --- m_alpha ---------------------------------------------------------------------


def _malpha(ctx: HermitianContext) -> Iterator[tuple[str, str]]:
    rs = ctx.rs
    table = operator_table(ctx)
    pairs = table.pairs
    for i, row in enumerate(table.m):
        for n, p in enumerate(pairs):
            img = pairs[row[n]]
            c = circle(i, p.sigma)
            lowering = c.length < p.sigma.length
            if row[n] != n:
                if img.dim != p.dim + 1:
                    yield "raising adds one to dim", f"{p!r}, s{i + 1}"
                if img.sigma != c or lowering:
                    yield "raised involution is the circle image", f"{p!r}, s{i + 1}"
                if not rr_leq(p, img):
                    yield "O <= m_alpha(O)", f"{p!r}, s{i + 1}"
            if row[row[n]] != row[n]:
                yield "m_alpha is idempotent", f"{p!r}, s{i + 1}"
            E = table.E(n, i)
            if bool(E) != lowering:
                yield "E_alpha nonempty iff the circle action lowers", f"{p!r}, s{i + 1}"
            if len(E) + 1 > 3:
                yield "fibers have at most three orbits", f"{p!r}, s{i + 1}"
            for k in E:
                if row[k] != n:
                    yield "m_alpha inverts E_alpha", f"{p!r}, s{i + 1}"
            beta = rs.neg(p.v.inverse.perm[rs.simple(i)])
            if (len(E) == 2) != (beta in p.S.roots):
                yield "|E_alpha| = 2 iff -v^-1(alpha) in S", f"{p!r}, s{i + 1}"
            if len(E) == 2:
                rest = OrthogonalSet(tuple(k for k in p.S.roots if k != beta))
                want = {
                    (min_coset_rep(p.v.lmul(i), ctx).key, rest.roots),
                    (p.v.key, rest.roots),
                }
                if {pairs[k].key for k in E} != want:
                    yield "two-element fibers drop -v^-1(alpha)", f"{p!r}, s{i + 1}"
            b = p.v.inverse.perm[rs.simple(i)]
            if b < rs.n_positive and b in ctx.phi_P_plus and sum(rs.roots[b]) == 1:
                for g in p.S.roots:
                    g2 = tuple(x - 2 * y for x, y in zip(rs.roots[g], rs.roots[b]))
                    if rs.is_root(g2) and rs.root_index(g2) in p.S.roots:
                        g0 = rs.root_index(tuple(x - y for x, y in zip(rs.roots[g], rs.roots[b])))
                        rest = tuple(k for k in p.S.roots if k not in (g, rs.root_index(g2)))
                        want = (p.v.key, tuple(sorted(rest + (g0,))))
                        if [pairs[k].key for k in E] != [want]:
                            yield "gamma, gamma - 2 beta pattern collapses to gamma - beta", f"{p!r}, s{i + 1}"
            sv = min_coset_rep(p.v.lmul(i), ctx)
            if sv.length > p.v.length and row[n] == n:
                yield "[s v]^P > v forces m_alpha to move", f"{p!r}, s{i + 1}"
            if p.nu.left_descent(i) and row[n] == n:
                yield "s nu < nu forces m_alpha to move", f"{p!r}, s{i + 1}"


# --- orders ------------------------------------------------------------------


def _order_eq(ctx: HermitianContext) -> Iterator[tuple[str, str]]:
    pairs = enumerate_hermitian(ctx)
    full = rr_matrix(ctx, prune=False)
    pruned = rr_matrix(ctx)
    std = standard_matrix(ctx)
    if not np.array_equal(full, pruned):
        a, b = map(int, np.argwhere(full != pruned)[0])
        yield "L-pruned fill equals full fill", f"{pairs[a]!r} vs {pairs[b]!r}"
    try:
        check_partial_order(full)
    except InvariantError as exc:
        yield "combinatorial relation is a partial order", str(exc)
    if not np.array_equal(full, std):
        a, b = map(int, np.argwhere(full != std)[0])
        which = "combinatorial only" if full[a, b] else "generated only"
        yield "generated order equals combinatorial order", f"{pairs[a]!r} <= {pairs[b]!r} ({which})"
    n = len(pairs)
    strict = full & ~np.eye(n, dtype=bool)
    f = strict.astype(np.float32)
    cover = strict & ~((f @ f) > 0)
    for a, b in np.argwhere(cover):
        if pairs[b].dim != pairs[a].dim + 1:
            yield "covers raise dim by one", f"{pairs[a]!r} < {pairs[b]!r}"
    for a in range(n):
        for b in range(n):
            A, B = pairs[a], pairs[b]
            if full[a, b] and A.L >= B.L and a != b:
                yield "rr order is strictly L-compatible", f"{A!r} <= {B!r}"
            if A.v == B.v:
                fl = fiber_leq(A.v, A.S, B.S, ctx)
                if full[a, b] != fl:
                    yield "same-v restriction equals fiber order", f"{A!r} vs {B!r}"
                if fl and not wp_leq(B.nu, A.nu, ctx):
                    yield "sigma comparison implies the nu inequality", f"{A!r} vs {B!r}"
    w = enumerate_WP(ctx).longest
    sets = enumerate_nilradical(ctx)
    for R in sets:
        for S in sets:
            if pan_leq(R, S, ctx) != fiber_leq(w, R, S, ctx):
                yield "nilradical order equals fiber order over w^P", f"{_fmt(ctx, R)} vs {_fmt(ctx, S)}"


SUITES = ("gp1", "inv", "structure", "dim", "malpha", "order-eq", "golden")


def run_suite(name: str, ctx: HermitianContext) -> list[Violation]:
    if name == "gp1":
        return _first_per_clause(name, _gp1(ctx))
    if name == "inv":
        return _first_per_clause(name, _inv_group(ctx.rs))
    if name == "structure":
        return _first_per_clause(name, _structure(ctx))
    if name == "dim":
        return _first_per_clause(name, _dim(ctx))
    if name == "malpha":
        return _first_per_clause(name, _malpha(ctx))
    if name == "order-eq":
        return _first_per_clause(name, _order_eq(ctx))
    if name == "golden":
        from .golden import golden_violations

        return [Violation(name, c, d) for c, d in golden_violations(ctx)]
    raise ValueError(f"unknown suite {name!r}")
