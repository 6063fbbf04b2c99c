"""The raising operators m_alpha and their fibers E_alpha.

m_alpha is rebuilt from combinatorial data only: the circle action fixes
the new involution, the longer of v and [s_alpha v]^P fixes the new v, and
the root set comes back from the negative selection of the involution.  A
candidate failing any consistency check means the orbit is stable under
the minimal parabolic and is returned unchanged.
"""

from __future__ import annotations

from ..involutions import OrthogonalSet, are_orthogonal, circle, phi_sigma_split
from ..rootsys import HermitianContext, InputError
from ..weyl import min_coset_rep
from .enumeration import AdmissiblePair, enumerate_hermitian


def _raise_candidate(pair: AdmissiblePair, i: int) -> AdmissiblePair | None:
    ctx = pair.ctx
    rs = ctx.rs
    sigma = pair.sigma
    new_sigma = circle(i, sigma)
    if new_sigma.length < sigma.length:
        return None
    v = pair.v
    sv = min_coset_rep(v.lmul(i), ctx)
    new_v = sv if sv.length > v.length else v
    vinv = new_v.inverse
    S = tuple(sorted(vinv.perm[k] for k in phi_sigma_split(new_sigma, ctx).negative_selection))
    if any(not (new_v.inversions >> k & 1) for k in S):
        return None
    if any(not are_orthogonal(rs, a, b) for n, a in enumerate(S) for b in S[n + 1 :]):
        return None
    cand = AdmissiblePair(ctx, new_v, OrthogonalSet(S))
    if cand.sigma.element != new_sigma.element or cand.L != pair.L + 1:
        return None
    nu = pair.nu
    snu = min_coset_rep(nu.lmul(i), ctx)
    shorter = snu if snu.length < nu.length else nu
    if cand.nu != shorter:
        return None
    return cand


def m_alpha(pair: AdmissiblePair, i: int, ctx: HermitianContext | None = None) -> AdmissiblePair:
    """Image of ``pair`` under the raising operator of the simple root ``i`` (0-based)."""
    ctx = ctx or pair.ctx
    if ctx is not pair.ctx:
        raise InputError("pair belongs to a different context")
    if not 0 <= i < ctx.rs.rank:
        raise InputError(f"simple root index {i} out of range")
    cand = _raise_candidate(pair, i)
    return pair if cand is None else cand


class OperatorTable:
    """m_alpha for every simple root, tabulated on the enumerated pairs."""

    def __init__(self, ctx: HermitianContext):
        self.ctx = ctx
        self.pairs = enumerate_hermitian(ctx)
        self.position = {p.key: n for n, p in enumerate(self.pairs)}
        self.m = []
        for i in range(ctx.rs.rank):
            row = []
            for p in self.pairs:
                row.append(self.position[m_alpha(p, i, ctx).key])
            self.m.append(row)
        self.fibers = []
        for row in self.m:
            fib: dict[int, list[int]] = {}
            for src, dst in enumerate(row):
                if src != dst:
                    fib.setdefault(dst, []).append(src)
            self.fibers.append(fib)

    def index(self, pair: AdmissiblePair) -> int:
        return self.position[pair.key]

    def E(self, n: int, i: int) -> list[int]:
        return self.fibers[i].get(n, [])


def operator_table(ctx: HermitianContext) -> OperatorTable:
    table = ctx._cache.get("operators")
    if table is None:
        table = OperatorTable(ctx)
        ctx._cache["operators"] = table
    return table


def E_alpha(pair: AdmissiblePair, i: int, ctx: HermitianContext | None = None) -> list[AdmissiblePair]:
    """All other pairs sent to ``pair`` by m_alpha."""
    ctx = ctx or pair.ctx
    table = operator_table(ctx)
    return [table.pairs[n] for n in table.E(table.index(pair), i)]
