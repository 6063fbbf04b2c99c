"""Closure orders on orbit parameters."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..involutions import OrthogonalSet, sigma_of
from ..rootsys import HermitianContext, InputError, context as make_context
from ..weyl import WeylElement, bruhat_leq, enumerate_WP, wp_leq
from .enumeration import AdmissiblePair, enumerate_hermitian
from .operators import operator_table


def rr_leq(A: AdmissiblePair, B: AdmissiblePair) -> bool:
    """(u, R) <= (v, S): [v sigma_S]^P <= [u sigma_R]^P <= u <= v and
    sigma_{u(R)} <= sigma_{v(S)}."""
    if A.ctx is not B.ctx:
        raise InputError("pairs belong to different contexts")
    ctx = A.ctx
    return (
        wp_leq(A.v, B.v, ctx)
        and wp_leq(B.nu, A.nu, ctx)
        and wp_leq(A.nu, A.v, ctx)
        and bruhat_leq(A.sigma.element, B.sigma.element)
    )


def pan_leq(R: OrthogonalSet, S: OrthogonalSet, ctx: HermitianContext) -> bool:
    w_P = enumerate_WP(ctx).w_P
    rs = ctx.rs
    a = sigma_of(rs, [w_P.perm[k] for k in R.roots])
    b = sigma_of(rs, [w_P.perm[k] for k in S.roots])
    return bruhat_leq(a.element, b.element)


def fiber_leq(v: WeylElement, R: OrthogonalSet, S: OrthogonalSet, ctx: HermitianContext) -> bool:
    inv = v.inversions
    if R.mask & ~inv or S.mask & ~inv:
        raise InputError(f"sets are not admissible for {v!r}")
    rs = ctx.rs
    a = sigma_of(rs, [v.perm[k] for k in R.roots])
    b = sigma_of(rs, [v.perm[k] for k in S.roots])
    return bruhat_leq(a.element, b.element)


def _rows(pairs: list[AdmissiblePair], rows: range, prune: bool) -> np.ndarray:
    out = np.zeros((len(rows), len(pairs)), dtype=bool)
    for r, a in enumerate(rows):
        A = pairs[a]
        for b, B in enumerate(pairs):
            # a strictly larger L rules the pair out unless it is the diagonal
            if prune and A.L >= B.L and a != b:
                continue
            out[r, b] = rr_leq(A, B)
    return out


_WORKER: dict = {}


def _worker_rows(spec: tuple[str, int, int], start: int, stop: int, prune: bool) -> tuple[int, np.ndarray]:
    if _WORKER.get("spec") != spec:
        ctx = make_context(*spec)
        _WORKER.update(spec=spec, pairs=enumerate_hermitian(ctx))
    return start, _rows(_WORKER["pairs"], range(start, stop), prune)


def rr_matrix(ctx: HermitianContext, threads: int = 1, prune: bool = True) -> np.ndarray:
    """Full rr_leq relation on the enumerated pairs.

    ``prune`` skips pairs whose L values forbid a strict relation.  With
    ``threads > 1`` row blocks are filled by worker processes, each
    rebuilding the context; the result does not depend on the split.
    """
    pairs = enumerate_hermitian(ctx)
    n = len(pairs)
    if threads <= 1 or n < 64:
        return _rows(pairs, range(n), prune)
    spec = (ctx.rs.cartan_type, ctx.rs.rank, ctx.node + 1)
    step = max(1, -(-n // (threads * 4)))
    out = np.zeros((n, n), dtype=bool)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_worker_rows, spec, s, min(n, s + step), prune) for s in range(0, n, step)]
        for f in futures:
            start, block = f.result()
            out[start : start + block.shape[0]] = block
    return out


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    r = rel.copy()
    while True:
        nxt = r | ((r.astype(np.float32) @ r.astype(np.float32)) > 0)
        if np.array_equal(nxt, r):
            return r
        r = nxt


def standard_matrix(ctx: HermitianContext) -> np.ndarray:
    """Least order containing O <= m_alpha(O) and stable under every m_alpha.

    Seeds the relation and alternates the monotonicity push-forward with
    transitive closure until nothing changes.
    """
    table = operator_table(ctx)
    n = len(table.pairs)
    rel = np.eye(n, dtype=bool)
    maps = []
    for row in table.m:
        P = np.zeros((n, n), dtype=np.float32)
        P[np.arange(n), row] = 1.0
        rel[np.arange(n), row] = True
        maps.append(P)
    rel = transitive_closure(rel)
    while True:
        nxt = rel.copy()
        f = rel.astype(np.float32)
        for P in maps:
            nxt |= (P.T @ f @ P) > 0
        nxt = transitive_closure(nxt)
        if np.array_equal(nxt, rel):
            return rel
        rel = nxt
