"""PosetDocument: the JSON/DOT exchange format for orbit posets.

Words are 1-based simple-reflection indices of the lexicographically
minimal reduced word; roots are coefficient arrays over the simple roots.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import __version__
from .involutions import sigma_of
from .orbits import OrbitPoset
from .orbits.enumeration import AdmissiblePair
from .weyl import enumerate_WP, min_coset_rep


@dataclass(frozen=True)
class Header:
    cartan_type: str
    rank: int
    node: int
    space: str
    version: str = __version__


@dataclass(frozen=True)
class NodeRecord:
    id: int
    v: list[int]
    S: list[list[int]]
    dim: int
    L: int
    sigma: list[int]
    nu: list[int]


@dataclass
class PosetDocument:
    header: Header
    nodes: list[NodeRecord]
    edges: list[list[int]]
    decorations: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "header": asdict(self.header),
            "nodes": [asdict(n) for n in self.nodes],
            "edges": self.edges,
        }
        if self.header.space == "gl":
            out["decorations"] = self.decorations
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "PosetDocument":
        return cls(
            Header(**data["header"]),
            [NodeRecord(**n) for n in data["nodes"]],
            [list(e) for e in data["edges"]],
            [dict(edge=list(d["edge"]), alpha=d["alpha"]) for d in data.get("decorations", [])],
        )


def _word(w) -> list[int]:
    return [i + 1 for i in w.word]


def space_name(poset: OrbitPoset) -> str:
    if poset.space == "hermitian":
        return "gl"
    if poset.space == "nilradical":
        return "pu"
    return "fiber:" + ",".join(map(str, _word(poset.fiber_v))) if poset.fiber_v.length else "fiber:e"


def document_from_poset(poset: OrbitPoset) -> PosetDocument:
    ctx = poset.ctx
    rs = ctx.rs
    header = Header(rs.cartan_type, rs.rank, ctx.node + 1, space_name(poset))
    records = []
    if poset.space == "nilradical":
        q = enumerate_WP(ctx)
        for n, S in enumerate(poset.nodes):
            sigma = sigma_of(rs, [q.w_P.perm[k] for k in S.roots])
            nu = min_coset_rep(q.longest * sigma_of(rs, S.roots).element, ctx)
            records.append(
                NodeRecord(
                    n, _word(q.longest), [list(rs.roots[k]) for k in S.roots],
                    poset.dims[n], sigma.L, _word(sigma.element), _word(nu),
                )
            )
    else:
        for n, node in enumerate(poset.nodes):
            pair = node if isinstance(node, AdmissiblePair) else AdmissiblePair(ctx, poset.fiber_v, node)
            records.append(
                NodeRecord(
                    n, _word(pair.v), [list(rs.roots[k]) for k in pair.S.roots],
                    pair.dim, pair.L, _word(pair.sigma.element), _word(pair.nu),
                )
            )
    edges = [[a, b] for a, b in sorted(poset.covers)]
    decorations = [
        {"edge": [a, b], "alpha": i + 1}
        for (a, b), labels in sorted(poset.decorations.items())
        for i in labels
    ]
    return PosetDocument(header, records, edges, decorations)


def emit_json(doc: PosetDocument) -> str:
    """Stable JSON text: fixed key order, one node or edge per line."""
    d = doc.to_dict()
    lines = ["{", f'  "header": {json.dumps(d["header"])},', '  "nodes": [']
    lines += [f"    {json.dumps(n)}," for n in d["nodes"]]
    if d["nodes"]:
        lines[-1] = lines[-1].rstrip(",")
    lines.append("  ],")
    lines.append('  "edges": ' + json.dumps(d["edges"]) + ("," if "decorations" in d else ""))
    if "decorations" in d:
        lines.append('  "decorations": [')
        lines += [f"    {json.dumps(x)}," for x in d["decorations"]]
        if d["decorations"]:
            lines[-1] = lines[-1].rstrip(",")
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> PosetDocument:
    return PosetDocument.from_dict(json.loads(text))


def _fmt_word(word: list[int]) -> str:
    return "".join(f"s{i}" for i in word) or "e"


def emit_dot(doc: PosetDocument) -> str:
    labels: dict[tuple[int, int], list[int]] = {}
    for d in doc.decorations:
        labels.setdefault(tuple(d["edge"]), []).append(d["alpha"])
    h = doc.header
    out = [f'digraph "{h.cartan_type}{h.rank}_node{h.node}_{h.space}" {{', "  rankdir=BT;"]
    for n in doc.nodes:
        S = "{" + ", ".join("(" + ",".join(map(str, r)) + ")" for r in n.S) + "}"
        out.append(f'  n{n.id} [label="v={_fmt_word(n.v)}; S={S}; dim={n.dim}"];')
    for a, b in doc.edges:
        lab = labels.get((a, b))
        attr = f' [label="{",".join(map(str, lab))}"]' if lab else ""
        out.append(f"  n{a} -> n{b}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"
