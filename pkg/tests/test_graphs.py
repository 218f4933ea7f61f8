import itertools

import numpy as np
import pytest

from qecstar.graphs import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeListFormatError,
    EmbeddingError,
    SelfLoopError,
    VertexRangeError,
    build_graph,
    distance_matrix,
    format_edge_list,
    is_isometric_subgraph,
    named_graph,
    parse_edge_list,
    read_edge_list,
    star_product,
)

from conftest import random_star


def brute_distances(g):
    """Floyd-Warshall, independent of the BFS under test."""
    n = g.vertex_count
    D = np.full((n, n), np.inf)
    np.fill_diagonal(D, 0)
    for u, v in g.edges:
        D[u, v] = D[v, u] = 1
    for k in range(n):
        D = np.minimum(D, D[:, [k]] + D[[k], :])
    return D.astype(int)


class TestBuildGraph:
    def test_k2(self):
        g = build_graph(2, [(0, 1)])
        assert g.adjacency == ((1,), (0,))

    def test_k3(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.edge_count == 3
        assert g.adjacency == ((1, 2), (0, 2), (0, 1))

    @pytest.mark.parametrize(
        "n, edges, exc",
        [
            (4, [(0, 1), (2, 3)], DisconnectedGraphError),
            (3, [(0, 1), (1, 1)], SelfLoopError),
            (3, [(0, 1), (1, 2), (1, 0)], DuplicateEdgeError),
            (3, [(0, 1), (0, 1), (1, 2)], DuplicateEdgeError),
            (3, [(0, 1), (1, 3)], VertexRangeError),
            (0, [], VertexRangeError),
        ],
    )
    def test_errors(self, n, edges, exc):
        with pytest.raises(exc):
            build_graph(n, edges)

    def test_errors_are_distinct(self):
        classes = {DisconnectedGraphError, SelfLoopError, DuplicateEdgeError, VertexRangeError}
        assert len(classes) == 4
        assert all(issubclass(c, ValueError) for c in classes)


class TestNamedGraph:
    def test_path3(self):
        assert named_graph("path", 3).edges == [(0, 1), (1, 2)]

    def test_cycle4(self):
        g = named_graph("cycle", 4)
        assert sorted(g.edges) == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert g.degrees() == [2, 2, 2, 2]

    def test_k1(self):
        g = named_graph("complete", 1)
        assert g.vertex_count == 1 and g.edge_count == 0

    def test_star(self):
        assert named_graph("star", 5).degrees() == [4, 1, 1, 1, 1]

    @pytest.mark.parametrize("kind, n", [("cycle", 2), ("path", 0), ("complete", 0), ("wheel", 5)])
    def test_invalid(self, kind, n):
        with pytest.raises(ValueError):
            named_graph(kind, n)


class TestDistanceMatrix:
    def test_k3(self):
        D = distance_matrix(named_graph("complete", 3))
        assert (D == 1 - np.eye(3, dtype=int)).all()

    def test_c4(self):
        D = distance_matrix(named_graph("cycle", 4))
        assert D[0, 2] == 2 and D[0, 1] == 1

    def test_paths_up_to_64(self):
        for n in range(1, 65):
            D = distance_matrix(named_graph("path", n))
            i = np.arange(n)
            assert (D == np.abs(i[:, None] - i[None, :])).all()

    def test_read_only(self):
        D = distance_matrix(named_graph("path", 3))
        with pytest.raises(ValueError):
            D[0, 1] = 5

    def test_invariants_on_random_stars(self, rng):
        for _ in range(30):
            _, g, _ = random_star(rng)
            D = distance_matrix(g)
            assert (D == D.T).all() and (np.diag(D) == 0).all()
            adj = np.zeros_like(D)
            for u, v in g.edges:
                adj[u, v] = adj[v, u] = 1
            assert ((D == 1) == (adj == 1)).all()
            assert (D[:, :, None] <= D[:, None, :] + D.T[None, :, :]).all()
            assert (D == brute_distances(g)).all()


class TestStarProduct:
    def test_two_k2_is_p3(self):
        k2 = named_graph("complete", 2)
        for r1, r2 in itertools.product(range(2), repeat=2):
            g, _ = star_product([(k2, r1), (k2, r2)])
            assert sorted(g.degrees()) == [1, 1, 2]

    def test_k3_k3(self):
        k3 = named_graph("complete", 3)
        g, maps = star_product([(k3, 0), (k3, 0)])
        assert g.vertex_count == 5 and g.edge_count == 6
        assert sorted(g.degrees()) == [2, 2, 2, 2, 4]
        assert maps == [(0, 1, 2), (0, 3, 4)]

    def test_single_factor(self):
        p4 = named_graph("path", 4)
        g, maps = star_product([(p4, 2)])
        D = distance_matrix(g)
        idx = np.asarray(maps[0])
        assert (D[np.ix_(idx, idx)] == distance_matrix(p4)).all()

    def test_glue_vertex_and_blocks(self):
        g, maps = star_product([(named_graph("path", 3), 1), (named_graph("cycle", 4), 2)])
        assert maps[0][1] == 0 and maps[1][2] == 0
        assert sorted(maps[0]) == [0, 1, 2]
        assert sorted(maps[1]) == [0, 3, 4, 5]

    def test_distance_formula_exhaustive(self, rng):
        for _ in range(40):
            factors, g, maps = random_star(rng, 1, 6, 7)
            if g.vertex_count > 40:
                continue
            D = distance_matrix(g)
            Ds = [distance_matrix(f) for f, _ in factors]
            owner = {}
            for j, ((f, root), m) in enumerate(zip(factors, maps)):
                for v in range(f.vertex_count):
                    if v != root:
                        owner[m[v]] = (j, v)
            for x in range(g.vertex_count):
                for y in range(g.vertex_count):
                    if x == 0 or y == 0:
                        z = y if x == 0 else x
                        if z == 0:
                            expected = 0
                        else:
                            j, v = owner[z]
                            expected = Ds[j][factors[j][1], v]
                    else:
                        (i, u), (j, v) = owner[x], owner[y]
                        if i == j:
                            expected = Ds[i][u, v]
                        else:
                            expected = Ds[i][u, factors[i][1]] + Ds[j][factors[j][1], v]
                    assert D[x, y] == expected

    def test_associative_on_distances(self, rng):
        for _ in range(20):
            (g1, o1), (g2, o2), (g3, o3) = [
                (g, r) for g, r in (random_star(rng, 1, 1, 5)[0][0] for _ in range(3))
            ]
            left, lmaps = star_product([(g1, o1), (g2, o2)])
            left3, l3 = star_product([(left, 0), (g3, o3)])
            right, rmaps = star_product([(g2, o2), (g3, o3)])
            right3, r3 = star_product([(g1, o1), (right, 0)])
            flat, fmaps = star_product([(g1, o1), (g2, o2), (g3, o3)])
            # canonical labels: (factor index, factor vertex) with the glue vertex shared
            def labels(maps_to_product):
                out = {}
                for j, m in enumerate(maps_to_product):
                    for v, p in enumerate(m):
                        out[(j, v)] = p
                return out
            lab_left = labels([[l3[0][p] for p in lmaps[0]], [l3[0][p] for p in lmaps[1]], l3[1]])
            lab_right = labels([r3[0], [r3[1][p] for p in rmaps[0]], [r3[1][p] for p in rmaps[1]]])
            lab_flat = labels(fmaps)
            DL, DR, DF = distance_matrix(left3), distance_matrix(right3), distance_matrix(flat)
            keys = list(lab_flat)
            for a in keys:
                for b in keys:
                    assert DL[lab_left[a], lab_left[b]] == DF[lab_flat[a], lab_flat[b]]
                    assert DR[lab_right[a], lab_right[b]] == DF[lab_flat[a], lab_flat[b]]

    def test_invalid_root(self):
        with pytest.raises(VertexRangeError):
            star_product([(named_graph("path", 3), 3)])

    def test_factor_too_small(self):
        with pytest.raises(ValueError):
            star_product([(named_graph("complete", 1), 0)])

    def test_empty(self):
        with pytest.raises(ValueError):
            star_product([])


class TestIsometric:
    def test_path_prefix(self):
        assert is_isometric_subgraph(named_graph("path", 5), named_graph("path", 3), [0, 1, 2])

    def test_factors_in_product(self, rng):
        for _ in range(20):
            factors, g, maps = random_star(rng)
            for (f, _), m in zip(factors, maps):
                assert is_isometric_subgraph(g, f, m)

    def test_p4_in_c4_is_not_isometric(self):
        assert not is_isometric_subgraph(named_graph("cycle", 4), named_graph("path", 4), [0, 1, 2, 3])

    def test_p3_in_c4_is_isometric(self):
        assert is_isometric_subgraph(named_graph("cycle", 4), named_graph("path", 3), [0, 1, 2])

    def test_non_injective(self):
        with pytest.raises(EmbeddingError):
            is_isometric_subgraph(named_graph("path", 5), named_graph("path", 3), [0, 1, 0])

    def test_not_edge_preserving(self):
        with pytest.raises(EmbeddingError):
            is_isometric_subgraph(named_graph("path", 5), named_graph("path", 3), [0, 2, 4])


class TestEdgeList:
    def test_round_trip(self, tmp_path):
        g = named_graph("cycle", 5)
        path = tmp_path / "c5.edges"
        path.write_text(format_edge_list(g), encoding="utf-8")
        assert read_edge_list(path) == g

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a path\n\nn 3  # three vertices\n0 1\n 1   2 # last\n")
        assert g == named_graph("path", 3)

    @pytest.mark.parametrize(
        "text, exc",
        [
            ("n 3\n0 1\n1 0\n1 2\n", DuplicateEdgeError),
            ("n 3\n0 1\n0 1\n1 2\n", DuplicateEdgeError),
            ("0 1\n", EdgeListFormatError),
            ("n 3\n0 1 2\n", EdgeListFormatError),
            ("n 3\n0 x\n", EdgeListFormatError),
            ("", EdgeListFormatError),
            ("n 3\n0 1\n", DisconnectedGraphError),
        ],
    )
    def test_rejects(self, text, exc):
        with pytest.raises(exc):
            parse_edge_list(text)
