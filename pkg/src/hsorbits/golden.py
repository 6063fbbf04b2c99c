"""Comparison against the checked-in Sp4 fixtures."""

from __future__ import annotations

import json
from importlib import resources
from typing import Iterator

from .documents import document_from_poset, emit_json
from .orbits import hermitian_poset, nilradical_poset, projection_labels
from .rootsys import HermitianContext
from .weyl import enumerate_WP

GOLDEN_CONTEXT = ("C", 2, 2)
DOCUMENTS = {"pu": "c2_node2_pu.json", "gl": "c2_node2_gl.json"}


def has_golden(ctx: HermitianContext) -> bool:
    return (ctx.rs.cartan_type, ctx.rs.rank, ctx.node + 1) == GOLDEN_CONTEXT


def load_fixture(name: str) -> str:
    return resources.files("hsorbits.fixtures").joinpath(name).read_text()


def figure() -> dict:
    return json.loads(load_fixture("sp4_figure.json"))


def _node_key(rec: dict) -> tuple:
    return (tuple(rec["v"]), tuple(map(tuple, rec["S"])))


def golden_violations(ctx: HermitianContext) -> list[tuple[str, str]]:
    if not has_golden(ctx):
        return []
    return list(_figure_checks(ctx)) + list(_document_checks(ctx))


def _figure_checks(ctx: HermitianContext) -> Iterator[tuple[str, str]]:
    rs = ctx.rs
    fig = figure()
    words = [[i + 1 for i in v.word] for v in enumerate_WP(ctx)]
    if words != fig["quotient"]:
        yield "quotient matches the bottom row", str(words)

    # nilradical diamond
    pu = nilradical_poset(ctx)
    names = {tuple(map(tuple, rec["S"])): name for name, rec in fig["nilradical"]["nodes"].items()}
    got = {}
    for n, S in enumerate(pu.nodes):
        key = tuple(rs.roots[k] for k in S.roots)
        if key not in names:
            yield "nilradical nodes match", f"unexpected {key}"
            continue
        got[n] = names[key]
        if pu.dims[n] != fig["nilradical"]["nodes"][names[key]]["dim"]:
            yield "nilradical dimensions match", names[key]
    if len(got) != len(fig["nilradical"]["nodes"]):
        yield "nilradical nodes match", f"{len(pu.nodes)} nodes"
    edges = {(got.get(a), got.get(b)) for a, b in pu.covers}
    want = {tuple(e) for e in fig["nilradical"]["edges"]}
    if edges != want:
        yield "nilradical covers match", f"extra {sorted(edges - want)}, missing {sorted(want - edges)}"

    # G/L diagram
    gl = hermitian_poset(ctx)
    fnodes = fig["hermitian"]["nodes"]
    names = {_node_key(rec): name for name, rec in fnodes.items()}
    got = {}
    for n, p in enumerate(gl.nodes):
        key = (tuple(i + 1 for i in p.v.word), tuple(rs.roots[k] for k in p.S.roots))
        name = names.get(key)
        if name is None:
            yield "G/L nodes match", f"unexpected {p!r}"
            continue
        got[n] = name
        rec = fnodes[name]
        if p.dim != rec["dim"] or [i + 1 for i in p.nu.word] != rec["nu"]:
            yield "G/L dimensions and projections match", name
    if len(got) != len(fnodes):
        yield "G/L nodes match", f"{len(gl.nodes)} nodes"
    labels = projection_labels(gl)
    edges = {(got.get(a), got.get(b)): tuple(i + 1 for i in labels[(a, b)]) for a, b in gl.covers}
    want = {(c, p): (lab,) if lab else () for c, p, lab in fig["hermitian"]["edges"]}
    if set(edges) != set(want):
        yield "G/L covers match", f"extra {sorted(set(edges) - set(want))}, missing {sorted(set(want) - set(edges))}"
    for e, lab in sorted(want.items()):
        if e in edges and edges[e] != lab:
            yield "G/L edge labels match", f"{e}: expected {lab}, got {edges[e]}"
    # m_alpha labels must be a sub-labelling of the printed one
    for (a, b), labs in gl.decorations.items():
        e = (got.get(a), got.get(b))
        if tuple(i + 1 for i in labs) != want.get(e):
            yield "m_alpha labels agree with the printed labels", f"{e}: {labs}"


def _document_checks(ctx: HermitianContext) -> Iterator[tuple[str, str]]:
    posets = {"pu": nilradical_poset(ctx), "gl": hermitian_poset(ctx)}
    for space, fname in DOCUMENTS.items():
        text = emit_json(document_from_poset(posets[space]))
        if text != load_fixture(fname):
            yield "emitted document equals checked-in fixture", fname
