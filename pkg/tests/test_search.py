import pytest

from conftest import chordal_corpus, cochordal_corpus, connected_corpus

from chordalkit import serialize
from chordalkit.errors import DisconnectedGraphError, ScriptConflictError
from chordalkit.fixtures import fixture, graph
from chordalkit.graph import complement_view, from_edge_list, from_vertices, ordering_from_names
from chordalkit.labeling import lexbfs, lexdfs, mcs, mns
from chordalkit.oracle import is_chordal, is_minimal_triangulation, is_peo, is_pmo
from chordalkit.search import (
    LowestIndex,
    ScriptedOrder,
    SeededRandom,
    mls,
    mlsm,
    moplex_mls,
    moplex_mlsm,
    triangulation_from_ordering,
)

ALL = [mcs, lexbfs, lexdfs, mns]
TOTAL = [mcs, lexbfs, lexdfs]


def scripted(fx):
    # the fixture script is the target ordering; picks run from the back
    return ScriptedOrder(reversed(fx.script))


class TestFigureLabels:
    @pytest.mark.parametrize("name", ["fig1_h", "fig5_g", "fig6_g"])
    def test_depth_first_labels(self, name):
        fx = fixture(name)
        g = fx.graph()
        alpha, trace = mls(g, lexdfs(), scripted(fx))
        assert alpha.names(g) == list(fx.script)
        assert serialize.final_labels(g, lexdfs(), trace) == fx.final_labels

    def test_breadth_first_labels_fig4(self):
        fx = fixture("fig4_g")
        g = fx.graph()
        alpha, trace = mls(g, lexbfs(), scripted(fx))
        assert serialize.final_labels(g, lexbfs(), trace) == fx.final_labels


class TestMls:
    def test_single_vertex(self):
        g = from_vertices(["v"])
        alpha, trace = mls(g, mcs())
        assert alpha.names(g) == ["v"] and len(trace.entries) == 1

    def test_disconnected_rejected(self):
        g = from_vertices(["a", "b", "c"], [("a", "b")])
        with pytest.raises(DisconnectedGraphError):
            mls(g, mcs())

    def test_permutation_and_peo_sweep(self):
        for g in chordal_corpus(24):
            for f in ALL:
                alpha, trace = mls(g, f())
                assert sorted(e.vertex for e in trace.entries) == list(range(g.n))
                assert len(trace.entries) == g.n
                assert is_peo(g, alpha), f().name

    def test_trace_json_schema(self):
        g = graph("fig1_h")
        _, trace = mls(g, lexdfs(), scripted(fixture("fig1_h")))
        rows = serialize.trace_json(g, lexdfs(), trace)
        assert [r["i"] for r in rows] == [6, 5, 4, 3, 2, 1]
        assert set(rows[0]) == {"i", "vertex", "label", "increased", "fill"}
        assert rows[0]["vertex"] == "f" and rows[0]["increased"] == ["a", "b", "e"]


class TestTieBreaks:
    def test_lowest_index_is_default(self):
        g = graph("fig1_h")
        a1, _ = mls(g, mcs())
        a2, _ = mls(g, mcs(), LowestIndex())
        assert a1 == a2

    def test_seeded_reproducible(self):
        g = graph("fig1_h")
        a1, _ = mls(g, mns(), SeededRandom(7))
        a2, _ = mls(g, mns(), SeededRandom(7))
        assert a1 == a2

    def test_script_conflict_raises(self):
        g = graph("fig1_h")
        # after picking f, vertex c (label ()) is not maximal: a,b,e carry (6)
        with pytest.raises(ScriptConflictError):
            mls(g, lexdfs(), ScriptedOrder(["f", "c"]))

    def test_script_duplicate_raises(self):
        g = graph("fig1_h")
        with pytest.raises(ScriptConflictError):
            mls(g, lexdfs(), ScriptedOrder(["f", "f"]))

    def test_partial_script_falls_back_to_lowest(self):
        g = graph("fig1_h")
        alpha, _ = mls(g, lexdfs(), ScriptedOrder(["f", "e"]))
        # hand trace: after f,e the depth-first order forces c then d,
        # then lowest index picks a before b
        assert alpha.names(g) == ["b", "a", "d", "c", "e", "f"]


class TestMoplex:
    def test_pmo_sweep(self):
        for g in chordal_corpus(24):
            for f in ALL:
                alpha, _ = moplex_mls(g, f())
                assert is_pmo(g, alpha), f().name

    def test_fig1_set_labels_give_pmo(self):
        g = graph("fig1_h")
        for tb in (LowestIndex(), SeededRandom(5), SeededRandom(17)):
            alpha, _ = moplex_mls(g, mns(), tb)
            assert is_pmo(g, alpha)

    def test_total_orders_identical_to_plain(self):
        for g in chordal_corpus(16):
            for f in TOTAL:
                for tb in (LowestIndex(), SeededRandom(3)):
                    a1, _ = mls(g, f(), tb)
                    a2, _ = moplex_mls(g, f(), tb)
                    assert a1 == a2, f().name

    def test_fig1_breadth_first_completion(self):
        # starting f then e completes {e,f}; breadth-first then finishes
        # {a,b,f} before {c,d,e}, depth-first the other way round, so the
        # clique finished last holds the lowest positions
        g = graph("fig1_h")
        ab, _ = moplex_mls(g, lexbfs(), ScriptedOrder(["f", "e"]))
        ad, _ = moplex_mls(g, lexdfs(), ScriptedOrder(["f", "e"]))
        assert set(ab.names(g)[:2]) == {"c", "d"}
        assert set(ad.names(g)[:2]) == {"a", "b"}


class TestMinimizeDuality:
    def test_min_run_is_complement_max_run(self):
        for g in cochordal_corpus(16):
            view = complement_view(g)
            for f in ALL:
                alpha_min, _ = mls(g, f(), minimize=True)
                replay, _ = mls(view, f(), ScriptedOrder(reversed(alpha_min.names(g))))
                assert replay == alpha_min, f().name

    def test_min_run_gives_complement_peo(self):
        from chordalkit.graph import materialize_complement

        for g in cochordal_corpus(12):
            comp = materialize_complement(g)
            for f in ALL:
                alpha_min, _ = mls(g, f(), minimize=True)
                assert is_peo(comp, alpha_min), f().name


class TestMlsm:
    def test_chordal_input_no_fill_and_same_ordering(self):
        for g in chordal_corpus(16):
            for f in ALL:
                tri, trace = mlsm(g, f())
                assert tri.fill_edges == ()
                plain, _ = mls(g, f())
                assert tri.ordering == plain
                # every label increase is a direct-edge target on chordal input
                for e in trace.entries:
                    assert set(e.increased) <= set(g.neighbors(e.vertex))

    def test_four_cycle_single_chord(self):
        c4 = from_edge_list([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        tri, _ = mlsm(c4, mcs())
        assert len(tri.fill_edges) == 1
        assert is_chordal(tri.graph)
        assert is_minimal_triangulation(c4, tri.graph)

    def test_meo_sweep(self):
        for g in connected_corpus(16):
            for f in ALL:
                tri, _ = mlsm(g, f())
                assert is_minimal_triangulation(g, tri.graph), f().name
                assert is_peo(tri.graph, tri.ordering), f().name

    def test_fig4_breadth_first_is_not_minimal(self):
        # the plain search ordering, pushed through the elimination game,
        # fills {2,4},{3,4}; dropping {3,4} alone stays chordal
        fx = fixture("fig4_g")
        g = fx.graph()
        alpha, _ = mls(g, lexbfs(), scripted(fx))
        tri = triangulation_from_ordering(g, alpha)
        fills = {frozenset((g.names[u], g.names[v])) for u, v in tri.fill_edges}
        assert fills == {frozenset({"2", "4"}), frozenset({"3", "4"})}
        assert is_chordal(tri.graph)
        assert not is_minimal_triangulation(g, tri.graph)


class TestMoplexMlsm:
    def test_chordal_matches_moplex_mls(self):
        for g in chordal_corpus(12):
            for f in ALL:
                tri, _ = moplex_mlsm(g, f())
                alpha, _ = moplex_mls(g, f())
                assert tri.fill_edges == () and tri.ordering == alpha

    def test_complete_graph_any_ordering(self):
        k4 = from_edge_list([(a, b) for a in "abcd" for b in "abcd" if a < b])
        tri, _ = moplex_mlsm(k4, mns())
        assert tri.fill_edges == ()

    def test_mmo_certificate_sweep(self):
        for g in connected_corpus(16):
            for f in ALL:
                tri, _ = moplex_mlsm(g, f())
                assert is_minimal_triangulation(g, tri.graph), f().name
                assert is_pmo(tri.graph, tri.ordering), f().name


class TestEliminationGame:
    def test_peo_of_chordal_no_fill(self):
        for g in chordal_corpus(8):
            alpha, _ = mls(g, mcs())
            assert triangulation_from_ordering(g, alpha).fill_edges == ()

    def test_path_graph_middle_first(self):
        g = from_edge_list([("a", "b"), ("b", "c")])
        alpha = ordering_from_names(g, ["b", "a", "c"])
        tri = triangulation_from_ordering(g, alpha)
        assert [(g.names[u], g.names[v]) for u, v in tri.fill_edges] == [("a", "c")]
        assert is_chordal(tri.graph)
