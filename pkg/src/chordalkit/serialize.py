"""JSON and DOT rendering of results. JSON is the machine format, DOT the
human one; both render vertex sets in sorted name order so identical inputs
give byte-identical output.
"""

from __future__ import annotations

import json
from typing import Iterable

from .cliquetree import CliqueTreeResult, GeneratorsResult
from .decomposition import AtomTreeResult
from .graph import ComplementView, Graph
from .labeling import LabelingStructure
from .search import SearchTrace, TriangulationResult

AnyGraph = Graph | ComplementView


def _names(g: AnyGraph, vertices: Iterable[int]) -> list[str]:
    return sorted(g.names[v] for v in vertices)


def _set_list(g: AnyGraph, sets: Iterable[frozenset[int]]) -> list[list[str]]:
    return sorted((_names(g, s) for s in sets), key=lambda ns: (len(ns), ns))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def clique_tree_json(g: AnyGraph, t: CliqueTreeResult) -> dict:
    return {
        "cliques": [_names(g, K) for K in t.cliques],
        "edges": [list(e) for e in t.tree_edges],
        "separators": _set_list(g, t.separators),
        "ordering": t.ordering.names(g),
    }


def generators_json(g: AnyGraph, r: GeneratorsResult) -> dict:
    return {
        "ordering": r.ordering.names(g),
        "gen_cliques": [g.names[v] for v in r.gen_cliques],
        "gen_separators": [g.names[v] for v in r.gen_separators],
    }


def triangulation_json(g: AnyGraph, tri: TriangulationResult, tree: CliqueTreeResult | None = None) -> dict:
    out = {
        "ordering": tri.ordering.names(g),
        "fill_edges": [sorted((g.names[u], g.names[v])) for u, v in tri.fill_edges],
    }
    if tree is not None:
        out["clique_tree"] = clique_tree_json(g, tree)
    return out


def atom_tree_json(g: AnyGraph, t: AtomTreeResult) -> dict:
    return {
        "atoms": [_names(g, A) for A in t.atoms],
        "edges": [list(e) for e in t.tree_edges],
        "clique_separators": _set_list(g, t.clique_separators),
        "ordering": t.triangulation.ordering.names(g),
        "fill_edges": [sorted((g.names[u], g.names[v])) for u, v in t.triangulation.fill_edges],
    }


def trace_json(g: AnyGraph, structure: LabelingStructure, trace: SearchTrace) -> list[dict]:
    return [
        {
            "i": e.i,
            "vertex": g.names[e.vertex],
            "label": structure.render(e.label),
            "increased": [g.names[v] for v in e.increased],
            "fill": [sorted((g.names[u], g.names[v])) for u, v in e.fill],
        }
        for e in trace.entries
    ]


def final_labels(g: AnyGraph, structure: LabelingStructure, trace: SearchTrace) -> dict[str, object]:
    return {g.names[v]: structure.render(lbl) for v, lbl in trace.final_labels().items()}


def _dot_set(names: list[str]) -> str:
    return "{" + ",".join(names) + "}"


def clique_tree_dot(g: AnyGraph, t: CliqueTreeResult) -> str:
    lines = ["graph cliquetree {"]
    for j, K in enumerate(t.cliques, start=1):
        lines.append(f'  k{j} [label="{_dot_set(_names(g, K))}"];')
    for p, q in t.tree_edges:
        sep = _dot_set(_names(g, t.edge_separator(p, q)))
        lines.append(f'  k{p} -- k{q} [label="{sep}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def atom_tree_dot(g: AnyGraph, t: AtomTreeResult) -> str:
    lines = ["graph atomtree {"]
    for j, A in enumerate(t.atoms, start=1):
        lines.append(f'  a{j} [label="{_dot_set(_names(g, A))}"];')
    for p, q in t.tree_edges:
        sep = _dot_set(_names(g, t.edge_separator(p, q)))
        lines.append(f'  a{p} -- a{q} [label="{sep}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
