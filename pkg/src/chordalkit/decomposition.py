"""Decomposition of arbitrary connected graphs by clique minimal separators.

The triangulating label search yields a minimal triangulation whose clique
tree, after contracting every tree edge whose separator is not a clique in
the original graph, becomes the atom tree: nodes are the atoms (maximal
connected subgraphs without a clique separator), edge intersections are the
clique minimal separators. A fused single-pass builder constructs the atom
tree directly, deciding at each label-detected clique boundary whether the
separator is a clique in the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cliquetree import CliqueTreeResult, _TreeBuilder, _maybe_debug
from .errors import DebugInvariantError, InputMismatchError
from .graph import Graph, Ordering, VertexSet, add_edges, require_connected
from .labeling import Cmp, LabelingStructure, require_dcl, require_ic
from .search import LabelSearch, TieBreak, TriangulationResult


@dataclass(frozen=True)
class MlsmCliqueTreeResult:
    """A minimal moplex ordering, its minimal triangulation, and the clique
    tree of that triangulation (not of the input graph)."""

    ordering: Ordering
    triangulation: TriangulationResult
    clique_tree: CliqueTreeResult

    @property
    def separators(self) -> frozenset[VertexSet]:
        return self.clique_tree.separators


@dataclass(frozen=True)
class AtomTreeResult:
    """Atoms A_1..A_s, tree edges on 1-based indices, the clique minimal
    separators, the atom each vertex was filed into, the triangulation the
    construction went through, and (for the single-pass builder) the current
    atom index per iteration."""

    atoms: tuple[VertexSet, ...]
    tree_edges: tuple[tuple[int, int], ...]
    clique_separators: frozenset[VertexSet]
    atom_of: dict[int, int]
    triangulation: TriangulationResult
    current_atom_history: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.atoms)

    def atom(self, j: int) -> VertexSet:
        return self.atoms[j - 1]

    def edge_separator(self, p: int, q: int) -> VertexSet:
        return self.atom(p) & self.atom(q)


def is_clique_in(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the vertices are pairwise adjacent in g (empty and singleton
    sets count as cliques)."""
    vs = list(vertices)
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if not g.adjacent(vs[a], vs[b]):
                return False
    return True


def dcl_mlsm_clique_tree(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
) -> MlsmCliqueTreeResult:
    """Triangulating search fused with the label-test clique-tree builder:
    one pass yields a minimal moplex ordering, the minimal triangulation H,
    and a clique tree of H. Requires a structure that detects new cliques
    with labels."""
    require_connected(g)
    require_ic(structure)
    require_dcl(structure)
    overlay = [set(s) for s in g.adj]
    run = LabelSearch(g, structure, tiebreak, label_neighbors=lambda v: overlay[v])
    builder = _TreeBuilder()
    fill_all: list[tuple[int, int]] = []
    for i in range(g.n, 0, -1):
        x = run.choose(i, prefer="greater")
        run.assign(x, i)
        sep = frozenset(y for y in overlay[x] if run.numbered[y])
        if i < g.n and structure.compare(run.prev_label, run.labels[x]) is not Cmp.LESS:
            builder.open_clique(sep, builder.parent_of(sep, run.pos))
        builder.add_vertex(builder.s, x)
        if run.debug and builder.current() != sep | {x}:
            raise DebugInvariantError(f"label test and set test disagree at position {i}")
        targets, fill = run.inc_targets(x, i)
        for a, b in fill:
            overlay[a].add(b)
            overlay[b].add(a)
        fill_all.extend(fill)
        run.finish_iteration(i, x, targets, fill)
        _maybe_debug(builder, lambda a, b: b in overlay[a], run)
    ordering = run.ordering()
    tri = TriangulationResult(ordering, add_edges(g, fill_all), tuple(fill_all))
    return MlsmCliqueTreeResult(ordering, tri, builder.result(ordering))


def atom_tree_from_clique_tree(g: Graph, h: Graph, t: CliqueTreeResult) -> AtomTreeResult:
    """Contract every clique-tree edge whose separator fails to be a clique
    in g; each contracted component's cliques union into one atom, the kept
    edges become atom-tree edges, and their intersections are the clique
    minimal separators."""
    if set().union(*t.cliques) != set(range(g.n)):
        raise InputMismatchError("clique tree does not cover the vertex set")
    for u, v in g.edges():
        if not h.adjacent(u, v):
            raise InputMismatchError("supposed triangulation is missing a base edge")

    s = t.size
    parent = list(range(s + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    kept: list[tuple[int, int]] = []
    for p, q in t.tree_edges:
        sep = t.edge_separator(p, q)
        if is_clique_in(g, sep):
            kept.append((p, q))
        else:
            parent[find(p)] = find(q)

    roots = sorted({find(j) for j in range(1, s + 1)})
    atom_index = {root: idx for idx, root in enumerate(roots, start=1)}
    merged: list[set[int]] = [set() for _ in roots]
    for j in range(1, s + 1):
        merged[atom_index[find(j)] - 1] |= t.clique(j)

    edges = []
    seps = set()
    for p, q in kept:
        edges.append((atom_index[find(p)], atom_index[find(q)]))
        seps.add(t.edge_separator(p, q))

    atom_of = {v: atom_index[find(j)] for v, j in t.clique_of.items()}
    fill = tuple(sorted(set(h.edges()) - set(g.edges())))
    tri = TriangulationResult(t.ordering, h, fill)
    return AtomTreeResult(
        atoms=tuple(frozenset(a) for a in merged),
        tree_edges=tuple(edges),
        clique_separators=frozenset(seps),
        atom_of=atom_of,
        triangulation=tri,
    )


def dcl_atom_tree(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
) -> AtomTreeResult:
    """Single-pass atom tree: run the triangulating search; at each
    label-detected clique boundary, start a new atom only when the separator
    is a clique in g itself (fill edges never count), otherwise keep growing
    the atom that contains the separator's earliest vertex. Between
    boundaries the current atom keeps growing."""
    require_connected(g)
    require_ic(structure)
    require_dcl(structure)
    overlay = [set(s) for s in g.adj]
    run = LabelSearch(g, structure, tiebreak, label_neighbors=lambda v: overlay[v])
    atoms: list[set[int]] = [set()]
    edges: list[tuple[int, int]] = []
    clique_seps: set[VertexSet] = set()
    atom_of: dict[int, int] = {}
    q = 1
    history: list[int] = []
    fill_all: list[tuple[int, int]] = []
    for i in range(g.n, 0, -1):
        x = run.choose(i, prefer="greater")
        run.assign(x, i)
        sep = frozenset(y for y in overlay[x] if run.numbered[y])
        if i < g.n and structure.compare(run.prev_label, run.labels[x]) is not Cmp.LESS:
            anchor = min(sep, key=lambda v: run.pos[v])
            p = atom_of[anchor]
            if is_clique_in(g, sep):
                atoms.append(set(sep))
                edges.append((p, len(atoms)))
                clique_seps.add(sep)
                q = len(atoms)
            else:
                q = p
        atoms[q - 1].add(x)
        atom_of[x] = q
        history.append(q)
        targets, fill = run.inc_targets(x, i)
        for a, b in fill:
            overlay[a].add(b)
            overlay[b].add(a)
        fill_all.extend(fill)
        run.finish_iteration(i, x, targets, fill)
    ordering = run.ordering()
    tri = TriangulationResult(ordering, add_edges(g, fill_all), tuple(fill_all))
    return AtomTreeResult(
        atoms=tuple(frozenset(a) for a in atoms),
        tree_edges=tuple(edges),
        clique_separators=frozenset(clique_seps),
        atom_of=atom_of,
        triangulation=tri,
        current_atom_history=tuple(history),
    )
