"""Finite crystallographic root systems and cominuscule contexts.

Roots are integer coefficient tuples over the simple roots (Bourbaki
numbering, 1-based in user-facing output, 0-based internally).  Positive
roots are sorted by (height, coefficients); the negative of the root at
index ``k`` sits at ``k + N`` where ``N`` is the number of positive roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Coeffs = tuple[int, ...]


class InputError(ValueError):
    """Invalid user-level input (bad type/rank, non-cominuscule node, ...)."""


class InvariantError(AssertionError):
    """An internal consistency check failed."""


def _dynkin(cartan_type: str, rank: int) -> tuple[list[tuple[int, int, int]], list[int]]:
    """Return (edges (i, j, multiplicity), squared lengths) for Bourbaki labels.

    Short roots have squared length 2, long ones 4 (6 in G2).
    """
    n = rank
    path = [(i, i + 1, 1) for i in range(n - 1)]
    if cartan_type == "A":
        return path, [2] * n
    if cartan_type == "B":
        edges = path[:-1] + [(n - 2, n - 1, 2)]
        return edges, [4] * (n - 1) + [2]
    if cartan_type == "C":
        edges = path[:-1] + [(n - 2, n - 1, 2)]
        return edges, [2] * (n - 1) + [4]
    if cartan_type == "D":
        edges = [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
        return edges, [2] * n
    if cartan_type == "E":
        edges = [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)]
        return edges, [2] * n
    if cartan_type == "F":
        return [(0, 1, 1), (1, 2, 2), (2, 3, 1)], [4, 4, 2, 2]
    if cartan_type == "G":
        return [(0, 1, 3)], [2, 6]
    raise InputError(f"unknown Cartan type {cartan_type!r}")


def check_type(cartan_type: str, rank: int) -> None:
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if cartan_type not in valid:
        raise InputError(f"unknown Cartan type {cartan_type!r}; expected one of A..G")
    if not valid[cartan_type]:
        raise InputError(f"invalid rank {rank} for type {cartan_type}")


# classical positive-root counts, used as a construction sanity check
def expected_positive_roots(cartan_type: str, rank: int) -> int:
    n = rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, -1),
        "F": 24,
        "G": 6,
    }[cartan_type]


@dataclass(eq=False)
class RootSystem:
    """Cartan data plus the full list of roots as coefficient tuples.

    ``cartan_matrix[i][j]`` is the pairing of the j-th simple root with the
    i-th simple coroot, and ``gram`` the symmetric matrix of inner products
    of simple roots (``gram[i][j] = symmetrizer[i] * cartan_matrix[i][j]``).
    """

    cartan_type: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    gram: tuple[tuple[int, ...], ...]
    roots: tuple[Coeffs, ...]
    index: dict[Coeffs, int] = field(repr=False)
    # mutable caches shared by the Weyl group machinery
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def positive_roots(self) -> tuple[Coeffs, ...]:
        return self.roots[: self.n_positive]

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    def __hash__(self) -> int:
        return hash((self.cartan_type, self.rank))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.cartan_type, self.rank) == (other.cartan_type, other.rank)

    def root_index(self, beta: Sequence[int]) -> int:
        try:
            return self.index[tuple(beta)]
        except KeyError:
            raise InputError(f"{tuple(beta)} is not a root of {self.name}") from None

    def is_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self.index

    def neg(self, k: int) -> int:
        """Index of the negative of root ``k``."""
        n = self.n_positive
        return k + n if k < n else k - n

    def is_positive(self, k: int) -> bool:
        return k < self.n_positive

    def simple(self, i: int) -> int:
        """Index of the i-th simple root (0-based)."""
        return self.index[tuple(int(j == i) for j in range(self.rank))]

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        g = self.gram
        r = self.rank
        return sum(x[i] * g[i][j] * y[j] for i in range(r) if x[i] for j in range(r) if y[j])

    def norm2(self, k: int) -> int:
        beta = self.roots[k]
        return self.inner(beta, beta)

    def is_long(self, k: int) -> bool:
        return self.norm2(k) == self._cache["long_norm"]

    @property
    def simply_laced(self) -> bool:
        return self.cartan_type in ("A", "D", "E")

    @property
    def highest_root(self) -> Coeffs:
        return self.roots[self.n_positive - 1]

    def height(self, beta: Sequence[int]) -> int:
        return sum(beta)

    def reflect(self, alpha: Sequence[int], beta: Sequence[int]) -> Coeffs:
        """s_alpha(beta) for a root alpha and any vector beta."""
        c = 2 * self.inner(beta, alpha) // self.inner(alpha, alpha)
        return tuple(b - c * a for a, b in zip(alpha, beta))

    def pairing_index(self, k: int, j: int) -> int:
        """<root k, (root j)^vee> on root indices."""
        a = self.roots[j]
        return 2 * self.inner(self.roots[k], a) // self.inner(a, a)


def build_root_system(cartan_type: str, rank: int) -> RootSystem:
    """Build the root system of the given simple type by reflection closure."""
    cartan_type = str(cartan_type).upper()
    check_type(cartan_type, rank)
    edges, lengths = _dynkin(cartan_type, rank)
    n = rank
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for i, j, m in edges:
        gram[i][j] = gram[j][i] = -m * min(lengths[i], lengths[j]) // 2
    cartan = [[2 * gram[i][j] // gram[i][i] for j in range(n)] for i in range(n)]
    symmetrizer = [lengths[i] // 2 for i in range(n)]

    def refl(i: int, beta: Coeffs) -> Coeffs:
        c = sum(beta[j] * cartan[i][j] for j in range(n))
        return tuple(b - c * (k == i) for k, b in enumerate(beta))

    simples = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                gamma = refl(i, beta)
                if gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    positives = sorted((b for b in found if all(c >= 0 for c in b)), key=lambda b: (sum(b), b))
    if len(positives) * 2 != len(found):
        raise InvariantError("root closure is not symmetric under negation")
    roots = tuple(positives) + tuple(tuple(-c for c in b) for b in positives)
    rs = RootSystem(
        cartan_type=cartan_type,
        rank=n,
        cartan_matrix=tuple(map(tuple, cartan)),
        symmetrizer=tuple(symmetrizer),
        gram=tuple(map(tuple, gram)),
        roots=roots,
        index={b: k for k, b in enumerate(roots)},
    )
    rs._cache["long_norm"] = max(lengths)
    _check_root_system(rs, refl)
    return rs


def _check_root_system(rs: RootSystem, refl) -> None:
    if rs.n_positive != expected_positive_roots(rs.cartan_type, rs.rank):
        raise InvariantError(f"{rs.name}: wrong number of positive roots {rs.n_positive}")
    for beta in rs.roots:
        for i in range(rs.rank):
            if refl(i, beta) not in rs.index:
                raise InvariantError(f"{rs.name}: not closed under s_{i + 1}")
    theta = rs.highest_root
    for beta in rs.positive_roots:
        if not dominance_leq(beta, theta):
            raise InvariantError(f"{rs.name}: highest root is not unique")
    norms = {rs.norm2(k) for k in range(len(rs.roots))}
    if len(norms) > 2 or (len(norms) == 1) != rs.simply_laced:
        raise InvariantError(f"{rs.name}: unexpected root lengths {norms}")


def pairing(rs: RootSystem, beta: Sequence[int], alpha: Sequence[int]) -> int:
    """The Cartan pairing <beta, alpha^vee> of two roots."""
    if not rs.is_root(beta):
        raise InputError(f"{tuple(beta)} is not a root of {rs.name}")
    if not rs.is_root(alpha):
        raise InputError(f"{tuple(alpha)} is not a root of {rs.name}")
    return 2 * rs.inner(beta, alpha) // rs.inner(alpha, alpha)


def cominuscule_nodes(rs: RootSystem) -> set[int]:
    """0-based indices of simple roots occurring with coefficient 1 in theta."""
    return {i for i, c in enumerate(rs.highest_root) if c == 1}


def dominance_leq(x: Sequence, y: Sequence, basis: str = "roots", basis_y: str | None = None) -> bool:
    """True iff y - x is a nonnegative integer combination of the basis.

    ``basis`` names the basis of both vectors (``"roots"`` or ``"coroots"``);
    pass ``basis_y`` only to assert the second vector shares it.
    """
    if basis not in ("roots", "coroots"):
        raise InputError(f"unknown basis {basis!r}")
    if basis_y is not None and basis_y != basis:
        raise InputError("cannot compare vectors over different bases")
    if len(x) != len(y):
        raise InputError("vectors have different lengths")
    for a, b in zip(x, y):
        d = Fraction(b) - Fraction(a)
        if d < 0 or d.denominator != 1:
            return False
    return True


@dataclass(eq=False)
class HermitianContext:
    """A root system with a cominuscule node and the derived parabolic data."""

    rs: RootSystem
    node: int
    psi: tuple[int, ...]
    delta_P: tuple[int, ...]
    phi_P_plus: tuple[int, ...]
    omega_P_covee: tuple[Fraction, ...]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def psi_mask(self) -> int:
        return self._cache["psi_mask"]

    def __repr__(self) -> str:
        return f"HermitianContext({self.rs.name}, node={self.node + 1})"

    @property
    def label(self) -> str:
        return f"{self.rs.name}({self.node + 1})"


def _solve_rational(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def build_hermitian_context(rs: RootSystem, node: int) -> HermitianContext:
    """Context for the cominuscule node ``node`` (0-based).

    Raises InputError quoting the coefficient of the node in the highest root
    when the node is not cominuscule.
    """
    if not 0 <= node < rs.rank:
        raise InputError(f"node {node + 1} out of range 1..{rs.rank} for {rs.name}")
    coeff = rs.highest_root[node]
    if coeff != 1:
        raise InputError(
            f"node {node + 1} of {rs.name} is not cominuscule: "
            f"[theta:alpha_{node + 1}] = {coeff}"
        )
    npos = rs.n_positive
    psi = tuple(k for k in range(npos) if rs.roots[k][node] == 1)
    phi_P_plus = tuple(k for k in range(npos) if rs.roots[k][node] == 0)
    delta_P = tuple(i for i in range(rs.rank) if i != node)
    # <alpha_i, omega^vee> = delta_{i,node}, i.e. A^T c = e_node
    at = [[rs.cartan_matrix[j][i] for j in range(rs.rank)] for i in range(rs.rank)]
    omega = tuple(_solve_rational(at, [int(i == node) for i in range(rs.rank)]))
    ctx = HermitianContext(rs, node, psi, delta_P, phi_P_plus, omega)
    ctx._cache["psi_mask"] = sum(1 << k for k in psi)
    _check_context(ctx)
    return ctx


def _check_context(ctx: HermitianContext) -> None:
    rs = ctx.rs
    if set(ctx.psi) | set(ctx.phi_P_plus) != set(range(rs.n_positive)) or set(ctx.psi) & set(ctx.phi_P_plus):
        raise InvariantError("Psi and Phi_P^+ do not partition the positive roots")
    for a in ctx.psi:
        for b in ctx.psi:
            s = tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))
            if rs.is_root(s):
                raise InvariantError("nilradical is not abelian")
    for k in range(rs.n_positive):
        # <omega^vee, alpha> for alpha in coefficient form is just the node coefficient
        value = rs.roots[k][ctx.node]
        if value not in (0, 1):
            raise InvariantError("coweight is not cominuscule")


def context(cartan_type: str, rank: int, node: int) -> HermitianContext:
    """Convenience: build a context from a 1-based node label."""
    rs = build_root_system(cartan_type, rank)
    return build_hermitian_context(rs, node - 1)
