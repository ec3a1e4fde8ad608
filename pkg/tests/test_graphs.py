import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mincw import (FamilySpec, Graph, LimitError, build_family, components,
                   disjoint_union, graph_stats, is_bipartite, is_connected,
                   relabel, shortest_even_path, spanning_tree_bipartition,
                   tree_even_paths)
from mincw.graphs import bits_of, graph_from_edge_mask, mask_of

from conftest import random_connected_graph, random_graph


def F(kind, *params):
    return build_family(FamilySpec(kind, params))


class TestGraphType:
    def test_from_edges_and_accessors(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.degree(1) == 2 and g.degree(0) == 1
        assert g.has_edge(0, 1) and not g.has_edge(0, 2)
        assert list(g.edges()) == [(0, 1), (1, 2)]
        assert g.edge_count() == 2

    def test_validation(self):
        with pytest.raises(ValueError, match="symmetric"):
            Graph(2, (0b10, 0b00))
        with pytest.raises(ValueError, match="self-loop"):
            Graph(1, (0b1,))
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(2, [(1, 1)])
        with pytest.raises(ValueError, match="vertex count"):
            Graph(63, tuple([0] * 63))
        with pytest.raises(ValueError, match="references"):
            Graph(2, (0b100, 0b000))
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(2, [(0, 2)])


class TestFamilies:
    def test_complete_3(self):
        g = F("complete", 3)
        assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]

    def test_path_3(self):
        assert sorted(F("path", 3).edges()) == [(0, 1), (1, 2)]

    def test_bipartite_2_3(self):
        g = F("bipartite", 2, 3)
        assert g.edge_count() == 6
        assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
        assert all(g.has_edge(u, v) for u in (0, 1) for v in (2, 3, 4))

    def test_cycle_and_doublestar(self):
        g = F("cycle", 4)
        assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
        ds = F("doublestar", 2, 1)
        assert sorted(ds.edges()) == [(0, 1), (0, 2), (0, 3), (1, 4)]

    def test_multipartite_blocks(self):
        g = F("multipartite", 2, 1, 1)
        assert g.n == 4 and g.edge_count() == 5
        assert not g.has_edge(0, 1)

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            FamilySpec("cycle", (2,))
        with pytest.raises(ValueError):
            FamilySpec("path", (0,))
        with pytest.raises(ValueError):
            FamilySpec("bipartite", (3,))
        with pytest.raises(ValueError):
            FamilySpec("wheel", (4,))
        with pytest.raises(ValueError):
            FamilySpec.parse("path5")
        with pytest.raises(ValueError):
            FamilySpec.parse("path:x")

    def test_parse_and_label(self):
        spec = FamilySpec.parse("multipartite:2,1,1")
        assert spec == FamilySpec("multipartite", (2, 1, 1))
        assert spec.label() == "multipartite:2,1,1"
        assert spec.order == 4
        assert FamilySpec.parse("doublestar:3,4").order == 9


class TestComponents:
    def test_connected_families(self):
        assert components(F("complete", 3)) == [0b111]
        assert components(F("edgeless", 3)) == [0b001, 0b010, 0b100]

    def test_disjoint_union(self):
        g = disjoint_union(F("path", 2), F("complete", 1))
        assert components(g) == [0b011, 0b100]
        assert not is_connected(g)

    def test_union_of_components(self):
        rng = random.Random(11)
        for _ in range(30):
            a, b = random_graph(rng, 4), random_graph(rng, 3)
            u = disjoint_union(a, b)
            expect = components(a) + [c << a.n for c in components(b)]
            assert sorted(components(u)) == sorted(expect)


class TestBipartition:
    def test_path4(self):
        bp = spanning_tree_bipartition(F("path", 4))
        assert (bp.a, bp.b) == (2, 2)

    def test_star_any_root(self):
        star = F("bipartite", 1, 4)
        assert {spanning_tree_bipartition(star).a,
                spanning_tree_bipartition(star).b} == {1, 4}
        leaf_first = relabel(star, [4, 0, 1, 2, 3])
        assert {spanning_tree_bipartition(leaf_first).a,
                spanning_tree_bipartition(leaf_first).b} == {1, 4}

    def test_cycle5_root0(self):
        bp = spanning_tree_bipartition(F("cycle", 5))
        assert (bp.a, bp.b) == (3, 2)
        assert bp.color_a == 0b01101  # vertices 0, 2, 3 at even BFS depth

    def test_partition_invariants(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(1, 9))
            bp = spanning_tree_bipartition(g)
            assert bp.color_a & bp.color_b == 0
            assert bp.color_a | bp.color_b == g.full_mask
            assert bp.a + bp.b == g.n

    def test_disconnected_rejected(self):
        g = F("edgeless", 3)
        with pytest.raises(ValueError, match="per component"):
            spanning_tree_bipartition(g)
        with pytest.raises(ValueError, match="per component"):
            tree_even_paths(g)


class TestStats:
    @pytest.mark.parametrize("spec,expect", [
        (("complete", 4), (6, 3, 3, 4, 1)),
        (("cycle", 5), (5, 2, 2, 0, 2)),
        (("bipartite", 2, 3), (6, 2, 3, 0, 2)),
    ])
    def test_examples(self, spec, expect):
        st_ = graph_stats(F(*spec))
        assert (st_.edges, st_.min_degree, st_.max_degree,
                st_.triangles, st_.diameter) == expect

    def test_diameter_edge_cases(self):
        assert graph_stats(F("complete", 1)).diameter == 0
        assert math.isinf(graph_stats(F("edgeless", 2)).diameter)

    def test_triangle_counts(self):
        for n in range(3, 9):
            assert graph_stats(F("complete", n)).triangles == math.comb(n, 3)
        for spec in [("bipartite", 3, 4), ("path", 6), ("cycle", 8)]:
            assert graph_stats(F(*spec)).triangles == 0

    def test_triangles_against_subset_scan(self):
        rng = random.Random(3)
        for _ in range(25):
            g = random_graph(rng, 7)
            brute = sum(1
                        for a in range(7) for b in range(a + 1, 7)
                        for c in range(b + 1, 7)
                        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c))
            assert graph_stats(g).triangles == brute


def all_simple_paths(g, u, v):
    out = []

    def walk(path, used):
        here = path[-1]
        if here == v:
            out.append(list(path))
            return
        for w in bits_of(g.adj[here] & ~used):
            path.append(w)
            walk(path, used | 1 << w)
            path.pop()

    walk([u], 1 << u)
    return out


def even_path_oracle(g, u, v):
    evens = [p for p in all_simple_paths(g, u, v) if (len(p) - 1) % 2 == 0 and len(p) > 1]
    if not evens:
        return None
    best_len = min(len(p) for p in evens)
    return min(p for p in evens if len(p) == best_len)


class TestShortestEvenPath:
    def test_path3(self):
        assert shortest_even_path(F("path", 3), 0, 2) == [0, 1, 2]

    def test_odd_cycle_neighbors_use_all_vertices(self):
        assert shortest_even_path(F("cycle", 5), 0, 1) == [0, 4, 3, 2, 1]

    def test_absent(self):
        assert shortest_even_path(F("complete", 2), 0, 1) is None

    def test_bad_args(self):
        with pytest.raises(ValueError):
            shortest_even_path(F("path", 3), 1, 1)
        with pytest.raises(LimitError):
            shortest_even_path(F("path", 21), 0, 1)

    def test_against_exhaustive_oracle(self):
        rng = random.Random(17)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 7))
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    assert shortest_even_path(g, u, v) == even_path_oracle(g, u, v)


class TestTreeEvenPaths:
    def test_path4(self):
        pairs = [p for p, _ in tree_even_paths(F("path", 4))]
        assert pairs == [(0, 2), (1, 3)]

    def test_star_leaves(self):
        star = F("bipartite", 1, 3)
        pairs = [p for p, _ in tree_even_paths(star)]
        assert pairs == [(1, 2), (1, 3), (2, 3)]

    def test_path5_count(self):
        assert len(tree_even_paths(F("path", 5))) == 4

    def test_path_structure(self):
        rng = random.Random(23)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 9))
            bp = spanning_tree_bipartition(g)
            entries = tree_even_paths(g)
            assert len(entries) == math.comb(bp.a, 2) + math.comb(bp.b, 2)
            for (u, v), path in entries:
                assert path[0] == u and path[-1] == v
                assert len(path) % 2 == 1  # even number of edges
                assert len(set(path)) == len(path)
                for x, y in zip(path, path[1:]):
                    assert g.has_edge(x, y)
                    # consecutive path vertices lie in opposite color classes
                    assert bool(bp.color_a >> x & 1) != bool(bp.color_a >> y & 1)


class TestRelabelAndBipartite:
    def test_relabel_preserves_structure(self):
        rng = random.Random(31)
        for _ in range(20):
            g = random_graph(rng, 6)
            perm = list(range(6))
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert h.edge_count() == g.edge_count()
            assert sorted(h.adj[perm[v]].bit_count() for v in range(6)) == \
                   sorted(g.adj[v].bit_count() for v in range(6))
            inverse = [perm.index(i) for i in range(6)]
            assert relabel(h, inverse) == g

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            relabel(F("path", 3), [0, 0, 1])

    def test_is_bipartite(self):
        assert is_bipartite(F("path", 6))
        assert is_bipartite(F("cycle", 6))
        assert is_bipartite(F("bipartite", 3, 4))
        assert is_bipartite(F("edgeless", 4))
        assert not is_bipartite(F("cycle", 5))
        assert not is_bipartite(F("complete", 3))
        assert is_bipartite(disjoint_union(F("path", 3), F("cycle", 4)))
        assert not is_bipartite(disjoint_union(F("path", 3), F("cycle", 3)))


class TestEdgeMasks:
    def test_full_mask_is_complete(self):
        g = graph_from_edge_mask(4, (1 << 6) - 1)
        assert g == F("complete", 4)

    def test_mask_helpers(self):
        assert bits_of(0b1011) == (0, 1, 3)
        assert mask_of([0, 1, 3]) == 0b1011


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.randoms(use_true_random=False))
def test_components_partition_vertices(n, rng):
    g = random_graph(rng, n)
    comps = components(g)
    union = 0
    for c in comps:
        assert union & c == 0
        union |= c
    assert union == g.full_mask
    # each component is internally closed: no edges leave it
    for c in comps:
        for v in bits_of(c):
            assert g.adj[v] & ~c == 0
