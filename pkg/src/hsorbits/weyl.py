"""Weyl group elements, Bruhat order and the cominuscule quotient W^P.

An element is stored as the permutation it induces on root indices; the
canonical key (used for equality and hashing) is the tuple of images of the
simple roots, which is the same information as the integer matrix acting on
simple-root coordinates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .rootsys import (
    Coeffs,
    HermitianContext,
    InputError,
    InvariantError,
    RootSystem,
    dominance_leq,
)


def _simple_perms(rs: RootSystem) -> list[tuple[int, ...]]:
    perms = rs._cache.get("simple_perms")
    if perms is None:
        perms = []
        for i in range(rs.rank):
            a = rs.cartan_matrix[i]
            row = []
            for beta in rs.roots:
                c = sum(b * a[j] for j, b in enumerate(beta) if b)
                image = tuple(b - c * (k == i) for k, b in enumerate(beta))
                row.append(rs.index[image])
            perms.append(tuple(row))
        rs._cache["simple_perms"] = perms
    return perms


class WeylElement:
    """An element of the Weyl group of ``rs``."""

    __slots__ = ("rs", "perm", "key", "__dict__")

    def __init__(self, rs: RootSystem, perm: tuple[int, ...]):
        self.rs = rs
        self.perm = perm
        simples = _simple_indices(rs)
        self.key = tuple(perm[s] for s in simples)

    # construction
    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElement":
        return cls(rs, tuple(range(len(rs.roots))))

    @classmethod
    def simple_reflection(cls, rs: RootSystem, i: int) -> "WeylElement":
        return cls(rs, _simple_perms(rs)[i])

    @classmethod
    def from_word(cls, rs: RootSystem, word: Iterable[int]) -> "WeylElement":
        """Product s_{w[0]} s_{w[1]} ... for a 0-based word."""
        w = cls.identity(rs)
        for i in word:
            w = w * cls.simple_reflection(rs, i)
        return w

    # group structure
    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in other.perm))

    def lmul(self, i: int) -> "WeylElement":
        """s_i * self."""
        s = _simple_perms(self.rs)[i]
        return WeylElement(self.rs, tuple(s[k] for k in self.perm))

    def rmul(self, i: int) -> "WeylElement":
        """self * s_i."""
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in _simple_perms(self.rs)[i]))

    @cached_property
    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for k, image in enumerate(self.perm):
            inv[image] = k
        return WeylElement(self.rs, tuple(inv))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        word = "".join(f"s{i + 1}" for i in self.word) or "e"
        return f"<{self.rs.name} {word}>"

    # invariants
    @cached_property
    def inversions(self) -> int:
        """Bitset over positive-root indices of Phi^+(w)."""
        n = self.rs.n_positive
        mask = 0
        for k in range(n):
            if self.perm[k] >= n:
                mask |= 1 << k
        return mask

    @cached_property
    def length(self) -> int:
        return self.inversions.bit_count()

    def inversion_set(self) -> tuple[int, ...]:
        m = self.inversions
        return tuple(k for k in range(self.rs.n_positive) if m >> k & 1)

    def is_identity(self) -> bool:
        return all(k == image for k, image in zip(_simple_indices(self.rs), self.key))

    def right_descent(self, i: int) -> bool:
        """w s_i < w, i.e. w(alpha_i) is negative."""
        return self.key[i] >= self.rs.n_positive

    def left_descent(self, i: int) -> bool:
        """s_i w < w, i.e. w^{-1}(alpha_i) is negative."""
        return self.inverse.key[i] >= self.rs.n_positive

    @cached_property
    def word(self) -> tuple[int, ...]:
        """Lexicographically minimal reduced word, 0-based."""
        out = []
        w = self
        while w.length:
            i = next(i for i in range(self.rs.rank) if w.left_descent(i))
            out.append(i)
            w = w.lmul(i)
        return tuple(out)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows of the matrix on simple-root coordinates (column i = w(alpha_i))."""
        cols = [self.rs.roots[k] for k in self.key]
        r = self.rs.rank
        return tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))

    def is_involution(self) -> bool:
        return (self * self).is_identity()

    def act(self, k: int) -> int:
        """Image of the root with index ``k``."""
        return self.perm[k]


def _simple_indices(rs: RootSystem) -> tuple[int, ...]:
    s = rs._cache.get("simple_idx")
    if s is None:
        s = tuple(rs.simple(i) for i in range(rs.rank))
        rs._cache["simple_idx"] = s
    return s


def apply(w: WeylElement, x: Sequence, basis: str = "roots") -> tuple:
    """w(x) for x given over simple roots or (with ``basis="coroots"``) simple coroots."""
    rs = w.rs
    m = w.matrix
    r = rs.rank
    if len(x) != r:
        raise InputError(f"expected a vector of length {r}")
    if basis == "roots":
        return tuple(sum(m[i][j] * x[j] for j in range(r)) for i in range(r))
    if basis == "coroots":
        d = rs.symmetrizer
        return tuple(
            sum(Fraction(m[i][j] * d[i], d[j]) * x[j] for j in range(r)) for i in range(r)
        )
    raise InputError(f"unknown basis {basis!r}")


def reflection(rs: RootSystem, k: int) -> WeylElement:
    """The reflection s_beta for the root with index ``k``."""
    cache = rs._cache.setdefault("reflections", {})
    k = k if rs.is_positive(k) else rs.neg(k)
    w = cache.get(k)
    if w is None:
        alpha = rs.roots[k]
        w = WeylElement(rs, tuple(rs.index[rs.reflect(alpha, beta)] for beta in rs.roots))
        cache[k] = w
    return w


def longest_element(rs: RootSystem, subset: Iterable[int] | None = None) -> WeylElement:
    """Longest element of the parabolic subgroup generated by ``subset``."""
    gens = list(range(rs.rank)) if subset is None else sorted(subset)
    w = WeylElement.identity(rs)
    while True:
        i = next((i for i in gens if not w.right_descent(i)), None)
        if i is None:
            return w
        w = w.rmul(i)


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat comparison by the lifting recursion, memoized per root system."""
    memo = u.rs._cache.setdefault("bruhat", {})
    return _bruhat(u, v, memo)


def _bruhat(u: WeylElement, v: WeylElement, memo: dict) -> bool:
    lu, lv = u.length, v.length
    if lu > lv:
        return False
    if lu == lv:
        return u.key == v.key
    if lu == 0:
        return True
    key = (u.key, v.key)
    hit = memo.get(key)
    if hit is not None:
        return hit
    i = next(i for i in range(v.rs.rank) if v.left_descent(i))
    sv = v.lmul(i)
    if u.left_descent(i):
        result = _bruhat(u.lmul(i), sv, memo)
    else:
        result = _bruhat(u, sv, memo)
    memo[key] = result
    return result


def in_WP(w: WeylElement, ctx: HermitianContext) -> bool:
    return w.inversions & ~ctx.psi_mask == 0


def min_coset_rep(w: WeylElement, ctx: HermitianContext) -> WeylElement:
    """[w]^P, the shortest element of w W_P."""
    while True:
        j = next((j for j in ctx.delta_P if w.right_descent(j)), None)
        if j is None:
            return w
        w = w.rmul(j)


@dataclass(eq=False)
class ParabolicQuotient:
    ctx: HermitianContext
    elements: list[WeylElement]
    longest: WeylElement
    w_P: WeylElement
    w0: WeylElement

    def __post_init__(self) -> None:
        self.position = {v.key: k for k, v in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def find_word(self, word: Sequence[int]) -> WeylElement:
        w = WeylElement.from_word(self.ctx.rs, word)
        if w.key not in self.position:
            raise InputError(f"{w!r} is not a minimal coset representative")
        return w


def enumerate_WP(ctx: HermitianContext) -> ParabolicQuotient:
    """All of W^P by breadth-first left multiplication, cached on the context."""
    cached = ctx._cache.get("quotient")
    if cached is not None:
        return cached
    rs = ctx.rs
    e = WeylElement.identity(rs)
    seen = {e.key: e}
    queue = deque([e])
    psi = ctx.psi_mask
    while queue:
        v = queue.popleft()
        for i in range(rs.rank):
            if v.left_descent(i):
                continue
            sv = v.lmul(i)
            if sv.key in seen or sv.inversions & ~psi:
                continue
            seen[sv.key] = sv
            queue.append(sv)
    elements = sorted(seen.values(), key=lambda w: (w.length, w.word))
    longest = elements[-1]
    w_P = longest_element(rs, ctx.delta_P)
    w0 = longest_element(rs)
    q = ParabolicQuotient(ctx, elements, longest, w_P, w0)
    if longest * w_P != w0 or longest.length + w_P.length != w0.length:
        raise InvariantError("w0 != w^P w_P")
    if longest.length != len(ctx.psi):
        raise InvariantError("length of w^P differs from |Psi|")
    ctx._cache["quotient"] = q
    return q


def wp_leq(u: WeylElement, v: WeylElement, ctx: HermitianContext, verify: bool = False) -> bool:
    """Bruhat order on W^P via inversion-set containment.

    With ``verify=True`` the generic Bruhat comparison and the coweight
    dominance test are evaluated too, and any disagreement raises.
    """
    if not (in_WP(u, ctx) and in_WP(v, ctx)):
        raise InputError("wp_leq expects minimal coset representatives")
    result = u.inversions & ~v.inversions == 0
    if verify:
        generic = bruhat_leq(u, v)
        om = ctx.omega_P_covee
        weights = dominance_leq(apply(v, om, "coroots"), apply(u, om, "coroots"), "coroots")
        if not result == generic == weights:
            raise InvariantError(
                f"W^P order criteria disagree on ({u!r}, {v!r}): "
                f"inversions={result} bruhat={generic} coweights={weights}"
            )
    return result


def wp_descents(v: WeylElement, ctx: HermitianContext) -> list[tuple[int, int]]:
    """Pairs (i, beta) with s_i v < v in W^P and beta = -v^{-1}(alpha_i).

    Found as the dominance-maximal roots of Phi^+(v); ``i`` is 0-based and
    ``beta`` a root index.
    """
    rs = v.rs
    inv = v.inversion_set()
    out = []
    for b in inv:
        if any(c != b and dominance_leq(rs.roots[b], rs.roots[c]) for c in inv):
            continue
        alpha = rs.roots[rs.neg(v.perm[b])]
        out.append((_simple_of(rs, alpha), b))
    return sorted(out)


def wp_ascents(v: WeylElement, ctx: HermitianContext) -> list[tuple[int, int]]:
    """Pairs (i, beta) with s_i v > v in W^P; beta minimal in Psi minus Phi^+(v)."""
    rs = v.rs
    rest = [b for b in ctx.psi if not v.inversions >> b & 1]
    out = []
    for b in rest:
        if any(c != b and dominance_leq(rs.roots[c], rs.roots[b]) for c in rest):
            continue
        out.append((_simple_of(rs, rs.roots[v.perm[b]]), b))
    return sorted(out)


def _simple_of(rs: RootSystem, alpha: Coeffs) -> int:
    if sum(alpha) != 1 or min(alpha) < 0:
        raise InvariantError(f"{alpha} is not a simple root")
    return alpha.index(1)


def enumerate_W(rs: RootSystem) -> list[WeylElement]:
    """Every element of W (only sensible for small groups)."""
    e = WeylElement.identity(rs)
    seen = {e.key: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                x = w.lmul(i)
                if x.key not in seen:
                    seen[x.key] = x
                    nxt.append(x)
        frontier = nxt
    return sorted(seen.values(), key=lambda w: (w.length, w.word))


def weyl_group_order(cartan_type: str, rank: int) -> int:
    from math import factorial

    n = rank
    return {
        "A": lambda: factorial(n + 1),
        "B": lambda: 2**n * factorial(n),
        "C": lambda: 2**n * factorial(n),
        "D": lambda: 2 ** (n - 1) * factorial(n),
        "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda: 1152,
        "G": lambda: 12,
    }[cartan_type]()
