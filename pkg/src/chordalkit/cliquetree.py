"""Clique-tree construction.

Builders come in several flavors: from an arbitrary perfect elimination
ordering, from a perfect moplex ordering (which completes each maximal clique
before starting the next, enabling a simpler new-clique test), fused with the
label searches (generic set test or pure label test for structures that can
detect clique boundaries with labels), and the complement pair that builds
the clique tree of the complement graph, or just its clique/separator
generators, without ever materializing complement edges.

Clique indices are 1-based and append-only; node 1 starts empty and grows.
Tree edges pair clique indices; each edge's intersection is a minimal
separator of the (possibly complement) chordal graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import debug
from .errors import (
    ComplementDisconnectedError,
    ComplementNotChordalError,
    DebugInvariantError,
    NotAPeoError,
    NotChordalError,
    NotMCCompError,
)
from .graph import (
    ComplementView,
    Graph,
    Ordering,
    VertexSet,
    complement_is_connected,
    require_connected,
)
from .labeling import (
    Cmp,
    LabelingStructure,
    require_complement_reversing,
    require_dcl,
    require_ic,
)
from .search import LabelSearch, SearchTrace, TieBreak


@dataclass(frozen=True)
class CliqueTreeResult:
    """Cliques K_1..K_s, tree edges on 1-based indices, the deduplicated
    separator set, the clique each vertex was filed into, and the ordering
    that produced everything."""

    cliques: tuple[VertexSet, ...]
    tree_edges: tuple[tuple[int, int], ...]
    separators: frozenset[VertexSet]
    clique_of: dict[int, int]
    ordering: Ordering
    trace: SearchTrace | None = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.cliques)

    def clique(self, j: int) -> VertexSet:
        """Clique with 1-based index j."""
        return self.cliques[j - 1]

    def edge_separator(self, p: int, q: int) -> VertexSet:
        return self.clique(p) & self.clique(q)


@dataclass(frozen=True)
class GeneratorsResult:
    """Vertices generating the maximal cliques / minimal separators of the
    complement graph: closed (resp. open) higher neighborhoods in the
    complement of the listed vertices, taken in order, are exactly those."""

    ordering: Ordering
    gen_cliques: tuple[int, ...]
    gen_separators: tuple[int, ...]
    trace: SearchTrace | None = field(default=None, compare=False, repr=False)


def _is_clique(adjacent: Callable[[int, int], bool], vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if not adjacent(vs[a], vs[b]):
                return False
    return True


class _TreeBuilder:
    """Bookkeeping shared by every builder: the growing clique list, tree
    edges, separator store (canonical frozensets, so duplicates collapse),
    and the vertex-to-clique map."""

    def __init__(self) -> None:
        self.cliques: list[set[int]] = [set()]
        self.edges: list[tuple[int, int]] = []
        self.seps: set[VertexSet] = set()
        self.clique_of: dict[int, int] = {}

    @property
    def s(self) -> int:
        return len(self.cliques)

    def current(self) -> set[int]:
        return self.cliques[-1]

    def parent_of(self, sep: VertexSet, pos) -> int:
        # the earliest-position vertex of the separator names the parent node
        k_vertex = min(sep, key=lambda v: pos[v])
        return self.clique_of[k_vertex]

    def open_clique(self, sep: VertexSet, p: int) -> int:
        self.cliques.append(set(sep))
        s = len(self.cliques)
        self.edges.append((p, s))
        self.seps.add(frozenset(sep))
        return s

    def add_vertex(self, j: int, x: int) -> None:
        self.cliques[j - 1].add(x)
        self.clique_of[x] = j

    def result(self, ordering: Ordering, trace: SearchTrace | None = None) -> CliqueTreeResult:
        return CliqueTreeResult(
            cliques=tuple(frozenset(c) for c in self.cliques),
            tree_edges=tuple(self.edges),
            separators=frozenset(self.seps),
            clique_of=dict(self.clique_of),
            ordering=ordering,
            trace=trace,
        )


def _debug_check_partial(
    builder: _TreeBuilder,
    adjacent: Callable[[int, int], bool],
    numbered: list[int],
    pos,
) -> None:
    """Oracle-backed mid-run check (debug mode, small n only): the nodes so
    far are the maximal cliques of the processed subgraph, the separator
    store matches its minimal separators, the edges form a tree, and every
    processed vertex's closed higher neighborhood sits inside its clique."""
    from . import oracle

    verts = sorted(numbered)
    remap = {v: i for i, v in enumerate(verts)}
    sub = Graph(
        [str(v) for v in verts],
        [
            (remap[a], remap[b])
            for ai, a in enumerate(verts)
            for b in verts[ai + 1 :]
            if adjacent(a, b)
        ],
    )
    want_cliques = {frozenset(verts[i] for i in c) for c in oracle.maximal_cliques(sub)}
    have_cliques = {frozenset(c) for c in builder.cliques}
    if want_cliques != have_cliques:
        raise DebugInvariantError(
            f"partial clique set {sorted(map(sorted, have_cliques))} is not the maximal "
            f"clique set of the processed subgraph"
        )
    want_seps = {frozenset(verts[i] for i in s) for s in oracle.minimal_separators(sub)}
    if want_seps != builder.seps:
        raise DebugInvariantError("partial separator store mismatches the processed subgraph")
    if len(builder.edges) != builder.s - 1:
        raise DebugInvariantError("partial tree edge count is off")
    # acyclicity via union-find
    parent = list(range(builder.s + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p, q in builder.edges:
        rp, rq = find(p), find(q)
        if rp == rq:
            raise DebugInvariantError("partial tree has a cycle")
        parent[rp] = rq
    for y in numbered:
        hood = {z for z in numbered if adjacent(y, z) and pos[z] > pos[y]} | {y}
        if not hood <= builder.cliques[builder.clique_of[y] - 1]:
            raise DebugInvariantError(
                f"closed higher neighborhood of {y} escapes its clique"
            )


def _maybe_debug(builder, adjacent, run) -> None:
    if run.debug and run.n <= debug.ORACLE_CHECK_MAX_N:
        _debug_check_partial(builder, adjacent, run.numbered_list, run.pos)


# ---------------------------------------------------------------------------
# builders from a given ordering


def clique_tree_from_peo(h: Graph, alpha: Ordering, *, verify: bool = True) -> CliqueTreeResult:
    """Clique tree and minimal separators of a connected chordal graph from
    an arbitrary perfect elimination ordering.

    Walks positions n down to 1; the processed neighborhood S of each vertex
    either equals an existing node (the vertex joins it) or opens a new node
    hanging off the node of S's earliest vertex, recording S as a separator.
    With verify on, a non-clique S (i.e. the ordering is not a peo, e.g. the
    graph is not chordal) raises.
    """
    require_connected(h)
    if len(alpha) != h.n:
        raise ValueError("ordering length does not match the graph")
    builder = _TreeBuilder()
    numbered = [False] * h.n
    numbered_list: list[int] = []
    for i in range(h.n, 0, -1):
        x = alpha.vertex_at(i)
        sep = frozenset(y for y in h.adj[x] if numbered[y])
        if verify and not _is_clique(h.adjacent, sep):
            raise NotAPeoError(
                f"processed neighborhood of {h.names[x]!r} at position {i} is not a clique"
            )
        if i == h.n:
            p = 1
        else:
            if not sep:
                # a peo of a connected graph never strands a vertex
                raise NotAPeoError(
                    f"vertex {h.names[x]!r} at position {i} has no later neighbor"
                )
            p = builder.parent_of(sep, alpha.pos)
        if builder.cliques[p - 1] == sep:
            builder.add_vertex(p, x)
        else:
            s = builder.open_clique(sep, p)
            builder.add_vertex(s, x)
        numbered[x] = True
        numbered_list.append(x)
        if debug.enabled() and h.n <= debug.ORACLE_CHECK_MAX_N:
            _debug_check_partial(builder, h.adjacent, numbered_list, alpha.pos)
    return builder.result(alpha)


def clique_tree_from_pmo(h: Graph, alpha: Ordering, *, verify: bool = True, validate: bool = False) -> CliqueTreeResult:
    """Clique tree from a clique-completing peo (equivalently, a perfect
    moplex ordering): the simplified new-node test compares the processed
    neighborhood against the current node only. Cliques other than the
    current one are maximal at every intermediate step.

    With validate on, the finished node set is checked against the exact
    maximal cliques and a mismatch raises (the ordering was not
    clique-completing); otherwise the precondition is trusted.
    """
    require_connected(h)
    if len(alpha) != h.n:
        raise ValueError("ordering length does not match the graph")
    builder = _TreeBuilder()
    numbered = [False] * h.n
    numbered_list: list[int] = []
    for i in range(h.n, 0, -1):
        x = alpha.vertex_at(i)
        sep = frozenset(y for y in h.adj[x] if numbered[y])
        if verify and not _is_clique(h.adjacent, sep):
            raise NotAPeoError(
                f"processed neighborhood of {h.names[x]!r} at position {i} is not a clique"
            )
        if i < h.n and not sep:
            raise NotAPeoError(f"vertex {h.names[x]!r} at position {i} has no later neighbor")
        if builder.current() != sep:
            p = builder.parent_of(sep, alpha.pos)
            builder.open_clique(sep, p)
        builder.add_vertex(builder.s, x)
        numbered[x] = True
        numbered_list.append(x)
        if debug.enabled() and h.n <= debug.ORACLE_CHECK_MAX_N:
            _debug_check_partial(builder, h.adjacent, numbered_list, alpha.pos)
    result = builder.result(alpha)
    if validate:
        from . import oracle

        if set(result.cliques) != oracle.maximal_cliques(h):
            raise NotMCCompError("ordering does not complete maximal cliques one by one")
    return result


# ---------------------------------------------------------------------------
# builders fused with the label search


def mls_clique_tree(
    h: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
    *,
    verify: bool = True,
) -> CliqueTreeResult:
    """Run the moplex-refined label search and build the clique tree on the
    fly with the set-based new-node test. Works for every labeling structure
    satisfying the inclusion condition."""
    require_connected(h)
    require_ic(structure)
    run = LabelSearch(h, structure, tiebreak)
    builder = _TreeBuilder()
    for i in range(h.n, 0, -1):
        x = run.choose(i, prefer="greater")
        run.assign(x, i)
        sep = frozenset(y for y in h.adj[x] if run.numbered[y])
        if verify and not _is_clique(h.adjacent, sep):
            raise NotChordalError(
                f"processed neighborhood of {h.names[x]!r} is not a clique; input not chordal"
            )
        if builder.current() != sep:
            builder.open_clique(sep, builder.parent_of(sep, run.pos))
        builder.add_vertex(builder.s, x)
        increased = run.inc_plain(x, i)
        run.finish_iteration(i, x, increased)
        _maybe_debug(builder, h.adjacent, run)
    return builder.result(run.ordering(), run.trace)


def dcl_mls_clique_tree(
    h: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
    *,
    enforce_dcl: bool = True,
    verify: bool = True,
) -> CliqueTreeResult:
    """Like mls_clique_tree but the new-node test is purely on labels: a new
    clique starts exactly when the chosen label does not exceed the previous
    one. Sound only for structures that detect new cliques with labels; with
    enforce_dcl off the run proceeds regardless and the result can be invalid
    (useful to reproduce the failure of structures that lack the property).
    """
    require_connected(h)
    require_ic(structure)
    if enforce_dcl:
        require_dcl(structure)
    run = LabelSearch(h, structure, tiebreak)
    builder = _TreeBuilder()
    for i in range(h.n, 0, -1):
        x = run.choose(i, prefer="greater")
        run.assign(x, i)
        sep = frozenset(y for y in h.adj[x] if run.numbered[y])
        if verify and not _is_clique(h.adjacent, sep):
            raise NotChordalError(
                f"processed neighborhood of {h.names[x]!r} is not a clique; input not chordal"
            )
        if i < h.n and structure.compare(run.prev_label, run.labels[x]) is not Cmp.LESS:
            builder.open_clique(sep, builder.parent_of(sep, run.pos))
        builder.add_vertex(builder.s, x)
        if enforce_dcl and run.debug and builder.current() != sep | {x}:
            raise DebugInvariantError(
                f"label test and set test disagree at position {i}"
            )
        increased = run.inc_plain(x, i)
        run.finish_iteration(i, x, increased)
        if enforce_dcl:
            _maybe_debug(builder, h.adjacent, run)
    return builder.result(run.ordering(), run.trace)


# ---------------------------------------------------------------------------
# complement builders


def complement_mls_clique_tree(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
    *,
    verify: bool = True,
) -> CliqueTreeResult:
    """Clique tree and minimal separators of the complement of g, computed by
    choosing label-minimal vertices (preferring a label equal to the previous
    one) and increasing labels along edges of g itself. A new clique starts
    exactly when the chosen label differs from the previous minimum, for any
    complement-reversing structure.

    Complement adjacency is only ever tested pairwise; still, building the
    tree costs time proportional to the complement's size, not to g's.
    """
    if not complement_is_connected(g):
        raise ComplementDisconnectedError("complement of the input graph is not connected")
    require_ic(structure)
    require_complement_reversing(structure)
    view = ComplementView(g)
    run = LabelSearch(g, structure, tiebreak, minimize=True)
    builder = _TreeBuilder()
    for i in range(g.n, 0, -1):
        if run.debug and i < g.n:
            _debug_equal_label_boundary(run, view, builder)
        prev_at_choice = run.prev_label
        x = run.choose(i, prefer="equal")
        run.assign(x, i)
        sep = frozenset(v for v in run.numbered_list if view.adjacent(x, v))
        if verify and not _is_clique(view.adjacent, sep):
            raise ComplementNotChordalError(
                f"complement neighborhood of {g.names[x]!r} is not a complement clique"
            )
        if i < g.n and structure.compare(run.prev_label, run.labels[x]) is not Cmp.EQUAL:
            if not sep:
                raise ComplementNotChordalError("empty boundary separator mid-run")
            builder.open_clique(sep, builder.parent_of(sep, run.pos))
            run.prev_label = run.labels[x]
        builder.add_vertex(builder.s, x)
        if run.debug and builder.current() != sep | {x}:
            raise DebugInvariantError(
                f"equal-label test and set test disagree at position {i}"
            )
        increased = run.inc_plain(x, i)
        run.finish_iteration(i, x, increased, prev_at_choice=prev_at_choice, update_prev=False)
        _maybe_debug(builder, view.adjacent, run)
    return builder.result(run.ordering(), run.trace)


def _debug_equal_label_boundary(run: LabelSearch, view: ComplementView, builder: _TreeBuilder) -> None:
    """Debug hook for the complement path: an unnumbered vertex has the
    previous minimal label exactly when its processed complement
    neighborhood equals the current clique."""
    current = builder.current()
    for y in range(run.n):
        if run.numbered[y]:
            continue
        hood = {v for v in run.numbered_list if view.adjacent(y, v)}
        label_hit = run.structure.compare(run.labels[y], run.prev_label) is Cmp.EQUAL
        if label_hit != (hood == current):
            raise DebugInvariantError(
                f"equal-label test and clique-boundary test disagree on vertex {y}"
            )


def complement_mls_generators(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
) -> GeneratorsResult:
    """Generators of the complement's maximal cliques and minimal separators
    w.r.t. the computed ordering, using edges of g only (the near-linear
    path: no complement adjacency is ever queried). Chordality of the
    complement is a trusted precondition here; run the tree builder or the
    oracle validators when it needs checking."""
    if not complement_is_connected(g):
        raise ComplementDisconnectedError("complement of the input graph is not connected")
    require_ic(structure)
    require_complement_reversing(structure)
    run = LabelSearch(g, structure, tiebreak, minimize=True)
    gen_cli: list[int] = []
    gen_sep: list[int] = []
    for i in range(g.n, 0, -1):
        prev_at_choice = run.prev_label
        x = run.choose(i, prefer="equal")
        run.assign(x, i)
        if i < g.n and structure.compare(run.prev_label, run.labels[x]) is not Cmp.EQUAL:
            gen_cli.append(run.alpha[i + 1])  # type: ignore[arg-type]
            gen_sep.append(x)
            run.prev_label = run.labels[x]
        increased = run.inc_plain(x, i)
        run.finish_iteration(i, x, increased, prev_at_choice=prev_at_choice, update_prev=False)
    gen_cli.append(run.alpha[1])  # type: ignore[arg-type]
    return GeneratorsResult(run.ordering(), tuple(gen_cli), tuple(gen_sep), run.trace)


def extract_generators(result: CliqueTreeResult) -> GeneratorsResult:
    """Read the generators off a clique-completing tree result: each clique's
    earliest-position vertex generates it; each non-root clique's latest
    vertex outside its opening separator generates that separator."""
    pos = result.ordering.pos
    gen_cli = [min(K, key=lambda v: pos[v]) for K in result.cliques]
    opened_sep = {q: result.edge_separator(p, q) for p, q in result.tree_edges}
    gen_sep = [
        max(result.clique(q) - opened_sep[q], key=lambda v: pos[v])
        for q in sorted(opened_sep)
    ]
    return GeneratorsResult(result.ordering, tuple(gen_cli), tuple(gen_sep))


# ---------------------------------------------------------------------------
# fast paths for the two classic total-order structures

# The label test against the previous label costs at most the degree of the
# chosen vertex (an integer compare, or a list compare no longer than the
# label), so these builders run in time linear-ish in n + m.


def fast_clique_tree(h: Graph, token: str) -> CliqueTreeResult:
    """Linear-time clique tree for 'mcs' (bucket queue) or 'lexbfs'
    (partition refinement), using the label-based new-clique test and
    lowest-index tie-breaking. Produces the same result as the generic
    label-test builder with the matching structure."""
    if token == "mcs":
        return _fast_mcs_clique_tree(h)
    if token == "lexbfs":
        return _fast_lexbfs_clique_tree(h)
    raise ValueError("fast path supports 'mcs' and 'lexbfs' only")


def _fast_mcs_clique_tree(h: Graph) -> CliqueTreeResult:
    require_connected(h)
    n = h.n
    label = [0] * n
    numbered = [False] * n
    pos = [0] * n
    alpha: list[int] = [0] * (n + 1)
    buckets: list[set[int]] = [set(range(n))]
    top = 0
    builder = _TreeBuilder()
    prev = 0
    for i in range(n, 0, -1):
        while not buckets[top]:
            top -= 1
        x = min(buckets[top])
        buckets[top].discard(x)
        numbered[x] = True
        pos[x] = i
        alpha[i] = x
        sep = frozenset(y for y in h.adj[x] if numbered[y])
        if i < n and label[x] <= prev:
            builder.open_clique(sep, builder.parent_of(sep, pos))
        builder.add_vertex(builder.s, x)
        prev = label[x]
        for y in h.adj[x]:
            if not numbered[y]:
                buckets[label[y]].discard(y)
                label[y] += 1
                if label[y] == len(buckets):
                    buckets.append(set())
                buckets[label[y]].add(y)
                if label[y] > top:
                    top = label[y]
    return builder.result(Ordering(alpha[1:]))


class _Block:
    __slots__ = ("members", "prev", "next")

    def __init__(self, members: set[int]):
        self.members = members
        self.prev: _Block | None = None
        self.next: _Block | None = None


def _fast_lexbfs_clique_tree(h: Graph) -> CliqueTreeResult:
    require_connected(h)
    n = h.n
    labels: list[list[int]] = [[] for _ in range(n)]
    numbered = [False] * n
    pos = [0] * n
    alpha: list[int] = [0] * (n + 1)
    head = _Block(set(range(n)))
    block_of: list[_Block] = [head] * n
    builder = _TreeBuilder()
    prev: list[int] = []
    for i in range(n, 0, -1):
        x = min(head.members)
        head.members.discard(x)
        if not head.members:
            head = _unlink(head)
        numbered[x] = True
        pos[x] = i
        alpha[i] = x
        sep = frozenset(y for y in h.adj[x] if numbered[y])
        if i < n and labels[x] <= prev:
            builder.open_clique(sep, builder.parent_of(sep, pos))
        builder.add_vertex(builder.s, x)
        prev = labels[x]
        # refinement: touched vertices split off, placed ahead of their block
        twins: dict[int, _Block] = {}
        for y in h.adj[x]:
            if numbered[y]:
                continue
            labels[y].append(i)
            b = block_of[y]
            twin = twins.get(id(b))
            if twin is None:
                twin = _Block(set())
                twin.prev = b.prev
                twin.next = b
                if b.prev is not None:
                    b.prev.next = twin
                b.prev = twin
                if b is head:
                    head = twin
                twins[id(b)] = twin
            b.members.discard(y)
            twin.members.add(y)
            block_of[y] = twin
            if not b.members:
                _unlink(b)
                twins.pop(id(b))
    return builder.result(Ordering(alpha[1:]))


def _unlink(b: _Block) -> _Block:
    """Remove an empty block; returns the follower (new head when b led)."""
    if b.prev is not None:
        b.prev.next = b.next
    if b.next is not None:
        b.next.prev = b.prev
    nxt = b.next
    b.prev = b.next = None
    return nxt if nxt is not None else b
