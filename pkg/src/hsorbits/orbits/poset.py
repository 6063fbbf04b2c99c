"""Finite posets of orbits and their Hasse diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..rootsys import HermitianContext, InvariantError
from ..weyl import WeylElement, min_coset_rep
from .enumeration import enumerate_fiber, enumerate_hermitian, enumerate_nilradical, nilradical_dim
from .operators import operator_table
from .orders import fiber_leq, pan_leq, rr_matrix, standard_matrix


@dataclass
class OrbitPoset:
    space: str
    ctx: HermitianContext
    nodes: list
    dims: list[int]
    leq: np.ndarray
    covers: list[tuple[int, int]] = field(default_factory=list)
    decorations: dict[tuple[int, int], list[int]] = field(default_factory=dict)
    fiber_v: WeylElement | None = None

    def __len__(self) -> int:
        return len(self.nodes)

    def minimal(self) -> list[int]:
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return [n for n in range(len(self)) if not strict[:, n].any()]

    def maximal(self) -> list[int]:
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        return [n for n in range(len(self)) if not strict[n].any()]


def check_partial_order(leq: np.ndarray) -> None:
    n = leq.shape[0]
    if not leq[np.arange(n), np.arange(n)].all():
        raise InvariantError("relation is not reflexive")
    if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
        raise InvariantError("relation is not antisymmetric")
    f = leq.astype(np.float32)
    if ((f @ f > 0) & ~leq).any():
        raise InvariantError("relation is not transitive")


def hasse(poset: OrbitPoset) -> list[tuple[int, int]]:
    """Covering pairs (child, parent); fills in m_alpha labels for hermitian posets."""
    n = len(poset)
    strict = poset.leq & ~np.eye(n, dtype=bool)
    f = strict.astype(np.float32)
    cover = strict & ~((f @ f) > 0)
    edges = [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]
    poset.covers = edges
    poset.decorations = {}
    if poset.space == "hermitian":
        table = operator_table(poset.ctx)
        for a, b in edges:
            labels = [i for i, row in enumerate(table.m) if row[a] == b]
            if labels:
                poset.decorations[(a, b)] = labels
    return edges


def nilradical_poset(ctx: HermitianContext) -> OrbitPoset:
    sets = enumerate_nilradical(ctx)
    n = len(sets)
    leq = np.array([[pan_leq(R, S, ctx) for S in sets] for R in sets], dtype=bool).reshape(n, n)
    p = OrbitPoset("nilradical", ctx, sets, [nilradical_dim(S, ctx) for S in sets], leq)
    hasse(p)
    return p


def fiber_poset(v: WeylElement, ctx: HermitianContext) -> OrbitPoset:
    sets = enumerate_fiber(v, ctx)
    n = len(sets)
    leq = np.array([[fiber_leq(v, R, S, ctx) for S in sets] for R in sets], dtype=bool).reshape(n, n)
    from .enumeration import AdmissiblePair

    dims = [AdmissiblePair(ctx, v, S).dim for S in sets]
    p = OrbitPoset("fiber", ctx, sets, dims, leq, fiber_v=v)
    hasse(p)
    return p


def hermitian_poset(ctx: HermitianContext, method: str = "rr", threads: int = 1) -> OrbitPoset:
    """Orbit poset of G/L; ``method`` is "rr" (pairwise) or "standard" (generated)."""
    pairs = enumerate_hermitian(ctx)
    if method == "rr":
        leq = rr_matrix(ctx, threads)
    elif method == "standard":
        leq = standard_matrix(ctx)
    else:
        raise ValueError(f"unknown method {method!r}")
    p = OrbitPoset("hermitian", ctx, pairs, [q.dim for q in pairs], leq)
    hasse(p)
    return p


def projection_labels(poset: OrbitPoset) -> dict[tuple[int, int], list[int]]:
    """Covering labels in the looser sense of the printed Sp4 diagram.

    An edge keeps its m_alpha labels when it has any; otherwise it gets
    alpha when both projections, v and nu, agree or differ by s_alpha.
    """
    if poset.space != "hermitian":
        raise ValueError("projection labels only make sense on G/L")
    ctx = poset.ctx

    def near(x: WeylElement, y: WeylElement, i: int) -> bool:
        return x == y or y == min_coset_rep(x.lmul(i), ctx) or x == min_coset_rep(y.lmul(i), ctx)

    out = {}
    for a, b in poset.covers:
        labels = poset.decorations.get((a, b))
        if not labels:
            A, B = poset.nodes[a], poset.nodes[b]
            labels = [i for i in range(ctx.rs.rank) if near(A.v, B.v, i) and near(A.nu, B.nu, i)]
        out[(a, b)] = labels
    return out
