"""Involutions of W, orthogonal root sets and the circle action."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .rootsys import HermitianContext, InputError, InvariantError, RootSystem
from .weyl import WeylElement, reflection


def exact_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            f = a[r][col]
            a[r] = [(p * a[r][c] - f * a[rank][c]) // prev for c in range(n)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def are_orthogonal(rs: RootSystem, a: int, b: int) -> bool:
    return rs.inner(rs.roots[a], rs.roots[b]) == 0


@dataclass(frozen=True, order=True)
class OrthogonalSet:
    """Pairwise orthogonal positive roots, stored as sorted root indices."""

    roots: tuple[int, ...]

    @classmethod
    def of(cls, rs: RootSystem, roots: Iterable[int], ctx: HermitianContext | None = None) -> "OrthogonalSet":
        idx = tuple(sorted(set(roots)))
        for k, a in enumerate(idx):
            if ctx is not None and a not in ctx.psi:
                raise InputError(f"{rs.roots[a]} is not in Psi")
            for b in idx[k + 1 :]:
                if not are_orthogonal(rs, a, b):
                    raise InputError(f"{rs.roots[a]} and {rs.roots[b]} are not orthogonal")
        return cls(idx)

    @property
    def mask(self) -> int:
        return sum(1 << k for k in self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def sort_key(self) -> tuple:
        return (len(self.roots), self.roots)


class Involution:
    """A Weyl group element of order at most two, with lambda and L cached."""

    def __init__(self, element: WeylElement):
        if not element.is_involution():
            raise InputError(f"{element!r} is not an involution")
        self.element = element

    @property
    def rs(self) -> RootSystem:
        return self.element.rs

    @property
    def length(self) -> int:
        return self.element.length

    @cached_property
    def lam(self) -> int:
        """Dimension of the -1 eigenspace."""
        m = self.element.matrix
        r = len(m)
        shifted = [[m[i][j] + (i == j) for j in range(r)] for i in range(r)]
        return r - exact_rank(shifted)

    @cached_property
    def L(self) -> int:
        total = self.element.length + self.lam
        if total % 2:
            raise InvariantError(f"L({self.element!r}) is not integral")
        return total // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Involution):
            return NotImplemented
        return self.element == other.element

    def __hash__(self) -> int:
        return hash(self.element)

    def __repr__(self) -> str:
        return f"Involution({self.element!r})"


def sigma_of(rs: RootSystem, S: Iterable[int]) -> Involution:
    """The product of the reflections in a set of pairwise orthogonal roots."""
    roots = list(S)
    for k, a in enumerate(roots):
        for b in roots[k + 1 :]:
            if not are_orthogonal(rs, a, b):
                raise InputError(f"{rs.roots[a]} and {rs.roots[b]} are not orthogonal")
    w = WeylElement.identity(rs)
    for a in roots:
        w = w * reflection(rs, a)
    return Involution(w)


def circle(i: int, sigma: Involution) -> Involution:
    """s_i o sigma: s_i sigma when they commute, s_i sigma s_i otherwise."""
    s = WeylElement.simple_reflection(sigma.rs, i)
    left = s * sigma.element
    if left == sigma.element * s:
        return Involution(left)
    return Involution(left * s)


def inv_length_L(sigma: Involution) -> int:
    return sigma.L


@dataclass(frozen=True)
class PhiSigmaSplit:
    phi_sigma: tuple[int, ...]
    long: tuple[int, ...]
    short: tuple[int, ...]
    negative_selection: tuple[int, ...]


def phi_sigma_split(sigma: Involution, ctx: HermitianContext | None = None) -> PhiSigmaSplit:
    """Roots negated by sigma, split into the long part and the short part
    orthogonal to it; ``negative_selection`` keeps the negative roots of
    their union."""
    rs = sigma.rs
    p = sigma.element.perm
    phi = tuple(k for k in range(len(rs.roots)) if p[k] == rs.neg(k))
    if rs.simply_laced:
        long_, short = phi, ()
    else:
        long_ = tuple(k for k in phi if rs.is_long(k))
        short = tuple(
            k
            for k in phi
            if not rs.is_long(k) and all(are_orthogonal(rs, k, j) for j in long_)
        )
    chosen = sorted(long_ + short)
    neg = tuple(k for k in chosen if not rs.is_positive(k))
    return PhiSigmaSplit(phi, long_, short, neg)
