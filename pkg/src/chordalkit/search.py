"""The label-search drivers: plain and moplex-refined searches, and their
triangulating counterparts that add fill edges on the fly.

All drivers number vertices from position n down to 1, at each step choosing
an unnumbered vertex with maximal label (no other unnumbered label compares
strictly greater) and increasing the labels of affected unnumbered vertices
with the current position. They are generic over any labeling structure that
satisfies the inclusion condition. On chordal inputs the plain searches emit
perfect elimination orderings; the moplex variants additionally emit perfect
moplex orderings; the triangulating variants emit minimal elimination /
moplex orderings together with the filled graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import debug
from .errors import DebugInvariantError, ScriptConflictError
from .graph import (
    ComplementView,
    Graph,
    Ordering,
    add_edges,
    require_connected,
)
from .labeling import Cmp, Label, LabelingStructure, require_ic
from .rng import SplitMix64


# ---------------------------------------------------------------------------
# tie-break policies


class TieBreak:
    """Chooses among equally acceptable candidates. Policies never override
    the label rule: they only pick within the legal candidate set."""

    def start(self, g: Graph | ComplementView) -> "_Picker":
        raise NotImplementedError


class _Picker:
    def pick(self, candidates: list[int]) -> int:
        raise NotImplementedError


class LowestIndex(TieBreak):
    """Deterministic default: smallest vertex index wins."""

    def start(self, g):
        return _LowestPicker()

    def __repr__(self):
        return "LowestIndex()"


class _LowestPicker(_Picker):
    def pick(self, candidates):
        return min(candidates)


@dataclass(frozen=True)
class SeededRandom(TieBreak):
    seed: int

    def start(self, g):
        return _SeededPicker(self.seed)


class _SeededPicker(_Picker):
    def __init__(self, seed: int):
        self.rng = SplitMix64(seed)

    def pick(self, candidates):
        ordered = sorted(candidates)
        return ordered[self.rng.below(len(ordered))]


@dataclass(frozen=True)
class ScriptedOrder(TieBreak):
    """Explicit pick sequence by vertex name, first pick first (so the list
    reads from position n downward). A scripted vertex that is not a legal
    candidate at its turn is an error, never a silent override; after the
    script runs out, lowest index takes over."""

    picks: tuple[str, ...]

    def __init__(self, picks: Iterable[str]):
        object.__setattr__(self, "picks", tuple(picks))

    def start(self, g):
        seen = set()
        indices = []
        for name in self.picks:
            if name in seen:
                raise ScriptConflictError(f"script names vertex {name!r} twice")
            seen.add(name)
            indices.append(g.index(name))
        return _ScriptedPicker(indices, g.names)


class _ScriptedPicker(_Picker):
    def __init__(self, script: list[int], names):
        self.script = script
        self.names = names
        self.at = 0

    def pick(self, candidates):
        if self.at >= len(self.script):
            return min(candidates)
        wanted = self.script[self.at]
        self.at += 1
        if wanted not in candidates:
            raise ScriptConflictError(
                f"scripted vertex {self.names[wanted]!r} is not a legal choice here"
            )
        return wanted


# ---------------------------------------------------------------------------
# traces and results


@dataclass(frozen=True)
class TraceEntry:
    i: int
    vertex: int
    label: Label
    prev_label: Label
    increased: tuple[int, ...]
    fill: tuple[tuple[int, int], ...] = ()


@dataclass
class SearchTrace:
    structure: str
    entries: list[TraceEntry] = field(default_factory=list)

    def final_labels(self) -> dict[int, Label]:
        return {e.vertex: e.label for e in self.entries}


@dataclass(frozen=True)
class TriangulationResult:
    """An ordering, the input graph plus its fill (chordal), and the fill
    edges in insertion order."""

    ordering: Ordering
    graph: Graph
    fill_edges: tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# engine core


class LabelSearch:
    """Working state of one driver invocation: labels, the numbered set,
    candidate selection under a partial order, and the debug hooks.

    ``label_neighbors`` is the adjacency that drives label increases (the
    input graph by default; the base graph for complement runs). The same
    adjacency feeds the label-order debug hook, since label content always
    mirrors it.
    """

    def __init__(
        self,
        g: Graph | ComplementView,
        structure: LabelingStructure,
        tiebreak: TieBreak | None = None,
        *,
        minimize: bool = False,
        label_neighbors: Callable[[int], Iterable[int]] | None = None,
    ):
        self.g = g
        self.structure = structure
        self.minimize = minimize
        self.picker = (tiebreak or LowestIndex()).start(g)
        n = g.n
        self.n = n
        self.labels: list[Label] = [structure.initial() for _ in range(n)]
        self.numbered = [False] * n
        self.numbered_list: list[int] = []  # in pick order (positions n..1)
        self.alpha: list[int | None] = [None] * (n + 1)  # 1-based positions
        self.pos = [0] * n
        self.prev_label: Label = structure.initial()
        self.trace = SearchTrace(structure.name)
        if label_neighbors is None:
            label_neighbors = lambda v: g.neighbors(v)
        self.label_neighbors = label_neighbors
        self.debug = debug.enabled()

    # -- candidate selection

    def _extreme_candidates(self) -> list[int]:
        """Unnumbered vertices whose label no other unnumbered label beats
        (strictly greater for maximize, strictly less for minimize)."""
        beats = Cmp.GREATER if not self.minimize else Cmp.LESS
        loses = Cmp.LESS if not self.minimize else Cmp.GREATER
        cmp = self.structure.compare
        cands: list[int] = []
        for v in range(self.n):
            if self.numbered[v]:
                continue
            lv = self.labels[v]
            dominated = False
            survivors = []
            for c in cands:
                r = cmp(self.labels[c], lv)
                if r is beats:
                    dominated = True
                    break
                if r is not loses:
                    survivors.append(c)
            if dominated:
                continue
            survivors.append(v)
            cands = survivors
        return cands

    def candidates(self, prefer: str | None = None) -> list[int]:
        """Extreme-label candidates, optionally narrowed to those comparing
        Greater than (or Equal to) the previous chosen label when that
        narrowing leaves anything."""
        cands = self._extreme_candidates()
        if prefer is not None:
            want = Cmp.GREATER if prefer == "greater" else Cmp.EQUAL
            narrowed = [v for v in cands if self.structure.compare(self.labels[v], self.prev_label) is want]
            if narrowed:
                return narrowed
        return cands

    def choose(self, i: int, prefer: str | None = None) -> int:
        if self.debug and self.n <= debug.LABEL_CHECK_MAX_N:
            self._assert_label_order(i)
        x = self.picker.pick(self.candidates(prefer))
        return x

    def assign(self, x: int, i: int) -> None:
        self.alpha[i] = x
        self.pos[x] = i
        self.numbered[x] = True
        self.numbered_list.append(x)

    def finish_iteration(
        self,
        i: int,
        x: int,
        increased: Sequence[int],
        fill: Sequence[tuple[int, int]] = (),
        *,
        prev_at_choice: Label | None = None,
        update_prev: bool = True,
    ) -> None:
        recorded_prev = self.prev_label if prev_at_choice is None else prev_at_choice
        self.trace.entries.append(
            TraceEntry(i, x, self.labels[x], recorded_prev, tuple(increased), tuple(fill))
        )
        if update_prev:
            self.prev_label = self.labels[x]

    # -- label updates

    def inc_plain(self, x: int, i: int) -> list[int]:
        """Increase the labels of unnumbered label-adjacency neighbors of x."""
        out = []
        for y in sorted(self.label_neighbors(x)):
            if not self.numbered[y]:
                self._bump(y, i)
                out.append(y)
        return out

    def inc_targets(self, x: int, i: int) -> tuple[list[int], list[tuple[int, int]]]:
        """Triangulating label increase: an unnumbered y (distinct from x)
        qualifies when the original graph has a path from x to y through
        unnumbered internal vertices all labeled strictly below y's label (a
        plain edge qualifies with no internal vertices). Returns the targets
        and the new fill edges among them. The path search runs on original
        edges only; fill is recorded, never searched through (searching the
        overlay would change nothing anyway: every fill edge keeps a numbered
        endpoint, and path internals must be unnumbered)."""
        g = self.g
        assert isinstance(g, Graph)
        cmp = self.structure.compare
        targets: list[int] = []
        fill: list[tuple[int, int]] = []
        for y in range(self.n):
            if y == x or self.numbered[y]:
                continue
            ly = self.labels[y]
            # BFS from x over allowed internal vertices
            reachable = False
            seen = {x}
            stack = [x]
            while stack and not reachable:
                u = stack.pop()
                for w in g.adj[u]:
                    if w == y:
                        reachable = True
                        break
                    if w in seen or self.numbered[w] or w == x:
                        continue
                    if cmp(self.labels[w], ly) is Cmp.LESS:
                        seen.add(w)
                        stack.append(w)
            if reachable:
                targets.append(y)
                if not g.adjacent(x, y):
                    fill.append((min(x, y), max(x, y)))
        for y in targets:
            self._bump(y, i)
        return targets, fill

    def _bump(self, y: int, i: int) -> None:
        old = self.labels[y]
        new = self.structure.inc(old, i)
        if self.debug:
            r = self.structure.compare(old, new)
            if r not in (Cmp.LESS, Cmp.EQUAL):
                raise DebugInvariantError(
                    f"label of vertex {y} did not grow under inc at position {i}"
                )
        self.labels[y] = new

    # -- results

    def ordering(self) -> Ordering:
        return Ordering(self.alpha[1:])  # type: ignore[arg-type]

    # -- debug hooks

    def _assert_label_order(self, i: int) -> None:
        """Processed-neighborhood inclusions must be reflected in the label
        order: strict inclusion forces strictly smaller, equality forces
        equal labels."""
        unnumbered = [v for v in range(self.n) if not self.numbered[v]]
        hoods = {
            y: frozenset(z for z in self.label_neighbors(y) if self.numbered[z])
            for y in unnumbered
        }
        for y in unnumbered:
            for z in unnumbered:
                if y == z:
                    continue
                r = self.structure.compare(self.labels[y], self.labels[z])
                if hoods[y] < hoods[z] and r is not Cmp.LESS:
                    raise DebugInvariantError(
                        f"iteration {i}: processed neighborhood of {y} is strictly "
                        f"inside that of {z} but labels compare {r.value}"
                    )
                if hoods[y] == hoods[z] and r is not Cmp.EQUAL:
                    raise DebugInvariantError(
                        f"iteration {i}: equal processed neighborhoods of {y},{z} "
                        f"but labels compare {r.value}"
                    )


# ---------------------------------------------------------------------------
# drivers


def mls(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
    *,
    minimize: bool = False,
) -> tuple[Ordering, SearchTrace]:
    """Plain maximal-label search (minimal with minimize=True, which runs the
    search under the dual label order)."""
    require_connected(g)
    require_ic(structure)
    run = LabelSearch(g, structure, tiebreak, minimize=minimize)
    for i in range(g.n, 0, -1):
        x = run.choose(i)
        run.assign(x, i)
        increased = run.inc_plain(x, i)
        run.finish_iteration(i, x, increased)
    return run.ordering(), run.trace


def moplex_mls(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
) -> tuple[Ordering, SearchTrace]:
    """Maximal-label search preferring, among maximal labels, one strictly
    greater than the previously chosen label whenever possible. On a chordal
    input the result is a perfect moplex ordering."""
    require_connected(g)
    require_ic(structure)
    run = LabelSearch(g, structure, tiebreak)
    for i in range(g.n, 0, -1):
        x = run.choose(i, prefer="greater")
        run.assign(x, i)
        increased = run.inc_plain(x, i)
        run.finish_iteration(i, x, increased)
    return run.ordering(), run.trace


def _triangulating(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None,
    prefer: str | None,
) -> tuple[TriangulationResult, SearchTrace]:
    require_connected(g)
    require_ic(structure)
    run = LabelSearch(g, structure, tiebreak)
    fill_all: list[tuple[int, int]] = []
    for i in range(g.n, 0, -1):
        x = run.choose(i, prefer=prefer)
        run.assign(x, i)
        targets, fill = run.inc_targets(x, i)
        fill_all.extend(fill)
        run.finish_iteration(i, x, targets, fill)
    h = add_edges(g, fill_all)
    return TriangulationResult(run.ordering(), h, tuple(fill_all)), run.trace


def mlsm(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
) -> tuple[TriangulationResult, SearchTrace]:
    """Triangulating search: the ordering is a minimal elimination ordering
    and the returned graph is the associated minimal triangulation."""
    return _triangulating(g, structure, tiebreak, prefer=None)


def moplex_mlsm(
    g: Graph,
    structure: LabelingStructure,
    tiebreak: TieBreak | None = None,
) -> tuple[TriangulationResult, SearchTrace]:
    """Triangulating search with the moplex preference rule: the ordering is
    additionally a perfect moplex ordering of the output triangulation."""
    return _triangulating(g, structure, tiebreak, prefer="greater")


def triangulation_from_ordering(g: Graph, alpha: Ordering) -> TriangulationResult:
    """Elimination game: saturate the not-yet-processed neighborhood of each
    vertex in position order, accumulating fill edges."""
    if len(alpha) != g.n:
        raise ValueError("ordering length does not match the graph")
    adj = [set(s) for s in g.adj]
    fill: list[tuple[int, int]] = []
    for i in range(1, g.n + 1):
        x = alpha.vertex_at(i)
        later = [y for y in adj[x] if alpha.position_of(y) > i]
        later.sort()
        for a_idx in range(len(later)):
            for b_idx in range(a_idx + 1, len(later)):
                a, b = later[a_idx], later[b_idx]
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                    fill.append((min(a, b), max(a, b)))
    h = add_edges(g, fill)
    return TriangulationResult(alpha, h, tuple(fill))
