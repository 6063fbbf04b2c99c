"""Orbit parameters: orthogonal subsets of Psi and admissible pairs."""

from __future__ import annotations

from functools import cached_property

from ..involutions import Involution, OrthogonalSet, are_orthogonal, sigma_of
from ..rootsys import HermitianContext, InputError, InvariantError
from ..weyl import WeylElement, enumerate_WP, in_WP, min_coset_rep, wp_descents


class AdmissiblePair:
    """A pair (v, S) with v in W^P and S an orthogonal subset of Phi^+(v)."""

    def __init__(self, ctx: HermitianContext, v: WeylElement, S: OrthogonalSet):
        self.ctx = ctx
        self.v = v
        self.S = S

    @classmethod
    def checked(cls, ctx: HermitianContext, v: WeylElement, S: OrthogonalSet) -> "AdmissiblePair":
        if not in_WP(v, ctx):
            raise InputError(f"{v!r} is not in W^P")
        if S.mask & ~v.inversions:
            raise InputError(f"S is not contained in the inversion set of {v!r}")
        OrthogonalSet.of(ctx.rs, S.roots, ctx)
        return cls(ctx, v, S)

    @property
    def key(self) -> tuple:
        return (self.v.key, self.S.roots)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdmissiblePair):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        rs = self.ctx.rs
        roots = ", ".join(str(rs.roots[k]) for k in self.S.roots)
        return f"({self.v!r}, {{{roots}}})"

    def sort_key(self) -> tuple:
        return (self.v.length, self.v.word, len(self.S), self.S.roots)

    @cached_property
    def vS(self) -> tuple[int, ...]:
        """Root indices of v(S)."""
        return tuple(sorted(self.v.perm[k] for k in self.S.roots))

    @cached_property
    def sigma(self) -> Involution:
        return sigma_of(self.ctx.rs, self.vS)

    @cached_property
    def nu(self) -> WeylElement:
        return min_coset_rep(self.v * sigma_of(self.ctx.rs, self.S.roots).element, self.ctx)

    @property
    def L(self) -> int:
        return self.sigma.L

    @property
    def dim(self) -> int:
        return len(self.ctx.psi) + self.L

    def is_admissible(self) -> bool:
        n = self.ctx.rs.n_positive
        return all(k >= n for k in self.vS)


def pair_invariants(pair: AdmissiblePair) -> tuple[Involution, WeylElement, int, int]:
    return pair.sigma, pair.nu, pair.dim, pair.L


def enumerate_nilradical(ctx: HermitianContext) -> list[OrthogonalSet]:
    """All orthogonal subsets of Psi, ordered by size and then root indices."""
    cached = ctx._cache.get("nilradical")
    if cached is not None:
        return cached
    rs = ctx.rs
    psi = ctx.psi
    out: list[tuple[int, ...]] = []

    def grow(start: int, chosen: tuple[int, ...]) -> None:
        out.append(chosen)
        for k in range(start, len(psi)):
            b = psi[k]
            if all(are_orthogonal(rs, a, b) for a in chosen):
                grow(k + 1, chosen + (b,))

    grow(0, ())
    sets = sorted((OrthogonalSet(s) for s in out), key=OrthogonalSet.sort_key)
    ctx._cache["nilradical"] = sets
    return sets


def enumerate_fiber(v: WeylElement, ctx: HermitianContext) -> list[OrthogonalSet]:
    """Orthogonal subsets of Phi^+(v), by filtering the nilradical list."""
    if not in_WP(v, ctx):
        raise InputError(f"{v!r} is not in W^P")
    inv = v.inversions
    return [S for S in enumerate_nilradical(ctx) if S.mask & ~inv == 0]


def enumerate_fiber_inductive(v: WeylElement, ctx: HermitianContext) -> list[OrthogonalSet]:
    """Orthogonal subsets of Phi^+(v), by induction on the length of v.

    Peel a descent s_i v < v with beta = -v^{-1}(alpha_i); the sets for v are
    those for s_i v together with their orthogonal extensions by beta.
    """
    if not in_WP(v, ctx):
        raise InputError(f"{v!r} is not in W^P")
    rs = ctx.rs
    sets: list[tuple[int, ...]] = [()]
    chain = []
    w = v
    while w.length:
        i, beta = wp_descents(w, ctx)[0]
        chain.append(beta)
        w = w.lmul(i)
    for beta in reversed(chain):
        sets += [
            tuple(sorted(S + (beta,)))
            for S in sets
            if all(are_orthogonal(rs, a, beta) for a in S)
        ]
    return sorted((OrthogonalSet(s) for s in sets), key=OrthogonalSet.sort_key)


def enumerate_hermitian(ctx: HermitianContext) -> list[AdmissiblePair]:
    """All admissible pairs in deterministic order."""
    cached = ctx._cache.get("hermitian")
    if cached is not None:
        return cached
    pairs = [
        AdmissiblePair(ctx, v, S)
        for v in enumerate_WP(ctx)
        for S in enumerate_fiber(v, ctx)
    ]
    pairs.sort(key=AdmissiblePair.sort_key)
    for p in pairs:
        if not p.is_admissible():
            raise InvariantError(f"{p!r} is not admissible")
    ctx._cache["hermitian"] = pairs
    return pairs


def nilradical_dim(S: OrthogonalSet, ctx: HermitianContext) -> int:
    """Dimension of the orbit attached to S: (l(sigma_{w_P(S)}) + |S|) / 2."""
    w_P = enumerate_WP(ctx).w_P
    sigma = sigma_of(ctx.rs, [w_P.perm[k] for k in S.roots])
    total = sigma.length + len(S)
    if total % 2:
        raise InvariantError("odd nilradical dimension numerator")
    return total // 2


def orbit_weight_lattice(pair: AdmissiblePair) -> list[tuple[int, ...]]:
    """v(S), a basis of the weight lattice of the orbit."""
    rs = pair.ctx.rs
    return [rs.roots[pair.v.perm[k]] for k in pair.S.roots]
