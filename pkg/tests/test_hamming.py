import io
import itertools
from math import comb

import numpy as np
import pytest

from hamaut.hamming import (
    HammingGraph, decode, diameter, distance_matrix, distance_partition, edges, encode,
    hamming_distance, intersection_lemma_check, intersection_lemma_set, layer_size,
    lemma1_counterexamples, lemma3_counterexamples, lemma_report, make_graph,
    neighborhood_components, neighbors, write_edge_list,
)
from hamaut.perm import ScaleError
from oracles import bfs_distances, differ_in_one, hamming_edges, matrix_bfs_distances, words

SMALL = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (2, 5)]


def test_make_graph():
    g = make_graph(2, 3)
    assert (g.num_vertices, g.degree) == (9, 4)
    cube = make_graph(3, 2)
    assert (cube.num_vertices, cube.degree) == (8, 3)
    assert len(hamming_edges(3, 2)) == 12 == sum(1 for _ in edges(cube))
    with pytest.raises(ValueError):
        make_graph(2, 1)
    with pytest.raises(ValueError):
        make_graph(0, 3)
    with pytest.raises(ScaleError):
        make_graph(7, 10)
    with pytest.raises(ScaleError):
        make_graph(5, 3, max_vertices=81)


@pytest.mark.parametrize("m", [2, 3, 5, 7])
def test_one_coordinate_is_complete_graph(m):
    g = make_graph(1, m)
    for u, v in itertools.combinations(g.vertices(), 2):
        assert g.is_adjacent(u, v)


def test_encode_decode_examples():
    g = make_graph(2, 3)
    assert encode(g, (0, 0)) == 0
    assert encode(g, (1, 2)) == 5
    assert decode(g, 8) == (2, 2)
    with pytest.raises(IndexError):
        decode(g, 9)
    with pytest.raises(ValueError):
        encode(g, (3, 0))


@pytest.mark.parametrize("n,m", SMALL + [(4, 3), (3, 5)])
def test_encode_decode_round_trip(n, m):
    g = make_graph(n, m)
    assert [decode(g, i) for i in range(g.num_vertices)] == list(g.vertices())
    assert all(encode(g, decode(g, i)) == i for i in range(g.num_vertices))


def test_hamming_distance_examples():
    assert hamming_distance((0, 0), (0, 0)) == 0
    assert hamming_distance((0, 0), (0, 1)) == 1
    with pytest.raises(ValueError):
        hamming_distance((0,), (0, 1))


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (3, 3), (2, 4)])
def test_hamming_distance_is_graph_distance(n, m):
    bfs = bfs_distances(n, m)
    assert len(bfs) == (m**n) ** 2
    for (u, v), d in bfs.items():
        assert hamming_distance(u, v) == d


@pytest.mark.parametrize("n,m", SMALL)
def test_distance_matrix_matches_bfs(n, m):
    assert np.array_equal(distance_matrix(make_graph(n, m)), matrix_bfs_distances(n, m))


def test_metric_axioms():
    vs = words(2, 3)
    for a, b, c in itertools.product(vs, repeat=3):
        assert hamming_distance(a, b) == hamming_distance(b, a)
        assert (hamming_distance(a, b) == 0) == (a == b)
        assert hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c)


def test_neighbors_examples():
    g = make_graph(2, 3)
    assert neighbors(g, (0, 0)) == [(1, 0), (2, 0), (0, 1), (0, 2)]
    assert set(neighbors(g, (0, 0))) == {(0, 1), (0, 2), (1, 0), (2, 0)}
    assert neighbors(make_graph(1, 3), (0,)) == [(1,), (2,)]
    cube = make_graph(3, 2)
    assert all(len(neighbors(cube, v)) == 3 for v in cube.vertices())


@pytest.mark.parametrize("n,m", SMALL)
def test_neighbors_match_definition(n, m):
    g = make_graph(n, m)
    for v in g.vertices():
        nb = neighbors(g, v)
        assert len(nb) == len(set(nb)) == n * (m - 1)
        assert set(nb) == {u for u in words(n, m) if differ_in_one(u, v)}


def test_distance_partition_examples():
    g = make_graph(2, 3)
    for x in g.vertices():
        part = distance_partition(g, x)
        assert part.sizes() == (1, 4, 4)
        assert part.layers[0] == {x}
    cube = make_graph(3, 2)
    assert all(distance_partition(cube, x).sizes() == (1, 3, 3, 1) for x in cube.vertices())


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (3, 3), (2, 5)])
def test_distance_partition_invariants(n, m):
    g = make_graph(n, m)
    everything = set(g.vertices())
    for x in g.vertices():
        part = distance_partition(g, x)
        assert len(part.layers) == n + 1
        assert set().union(*part.layers) == everything
        assert sum(part.sizes()) == len(everything)
        assert part.sizes() == tuple(comb(n, i) * (m - 1) ** i for i in range(n + 1))
        assert part.sizes() == tuple(layer_size(n, m, i) for i in range(n + 1))
        assert part.layer_of(x) == 0


def test_diameter():
    assert diameter(make_graph(2, 3)) == 2
    assert diameter(make_graph(1, 6)) == 1
    assert max(bfs_distances(3, 3).values()) == 3 == diameter(make_graph(3, 3))


def test_neighborhood_components_examples():
    g = make_graph(2, 3)
    assert neighborhood_components(g, (0, 0)) == [{(1, 0), (2, 0)}, {(0, 1), (0, 2)}]
    cube = make_graph(3, 2)
    for v in cube.vertices():
        comps = neighborhood_components(cube, v)
        assert len(comps) == 3 and all(len(c) == 1 for c in comps)


def test_neighborhood_components_are_cliques_h24():
    g = make_graph(2, 4)
    for v in g.vertices():
        comps = neighborhood_components(g, v)
        assert len(comps) == 2
        for c in comps:
            assert len(c) == 3
            assert all(differ_in_one(a, b) for a, b in itertools.combinations(c, 2))
            # component i is the set of words differing from v only at coordinate i
            (i,) = {j for a in c for j in range(2) if a[j] != v[j]}


@pytest.mark.parametrize("n,m", SMALL + [(3, 4)])
def test_lemma3_everywhere(n, m):
    g = make_graph(n, m)
    assert lemma3_counterexamples(g) == []
    for v in g.vertices():
        for i, comp in enumerate(neighborhood_components(g, v)):
            assert comp == {v[:i] + (s,) + v[i + 1:] for s in range(m) if s != v[i]}


def test_intersection_lemma_examples():
    g = make_graph(2, 3)
    assert intersection_lemma_check(g, (0, 0), (1, 1))
    assert intersection_lemma_set(g, (0, 0), (1, 1)) == {(1, 1)}
    with pytest.raises(ValueError):
        intersection_lemma_check(g, (0, 0), (0, 0))


def test_intersection_lemma_at_distance_one_is_the_whole_neighbourhood():
    # only w = x contributes, so the literal intersection is N(x) & Gamma_1 = N(x)
    g = make_graph(2, 3)
    got = intersection_lemma_set(g, (0, 0), (0, 1))
    assert got == {(0, 1), (0, 2), (1, 0), (2, 0)}
    assert not intersection_lemma_check(g, (0, 0), (0, 1))
    assert intersection_lemma_check(make_graph(1, 2), (0,), (1,))


def test_intersection_lemma_h33_all_targets():
    g = make_graph(3, 3)
    x = (0, 0, 0)
    outcome = {v: intersection_lemma_check(g, x, v) for v in g.vertices() if v != x}
    assert len(outcome) == 26
    assert {v for v, ok in outcome.items() if not ok} == set(neighbors(g, x))
    assert all(ok for v, ok in outcome.items() if hamming_distance(x, v) >= 2)


def _literal_intersection(n, m, x, v):
    """Direct set-builder evaluation, independent of the package's partition."""
    vs = words(n, m)
    dist = lambda a, b: sum(p != q for p, q in zip(a, b))  # noqa: E731
    i = dist(x, v)
    ws = [w for w in vs if dist(w, x) == i - 1 and dist(w, v) == 1]
    sets = [{u for u in vs if dist(u, w) == 1 and dist(u, x) == i} for w in ws]
    return set.intersection(*sets)


@pytest.mark.parametrize("n,m", [(2, 3), (2, 2), (3, 2)])
def test_intersection_matches_set_builder(n, m):
    g = make_graph(n, m)
    for x, v in itertools.permutations(g.vertices(), 2):
        assert intersection_lemma_set(g, x, v) == _literal_intersection(n, m, x, v)


@pytest.mark.parametrize("n,m", [(2, 3), (2, 4), (2, 5), (3, 3), (2, 2), (3, 2), (4, 2)])
def test_lemma1_beyond_distance_one(n, m):
    # m = 2 included on purpose: beyond distance one the statement still holds
    assert lemma1_counterexamples(make_graph(n, m), min_distance=2) == []


def test_lemma_report_schema():
    rep = lemma_report(make_graph(3, 2), "L3")
    assert rep == {"graph": {"n": 3, "m": 2}, "lemma": "L3", "pass": True, "counterexamples": []}
    rep = lemma_report(make_graph(2, 3), "L1")
    assert rep["pass"] is False
    assert {c["distance"] for c in rep["counterexamples"]} == {1}
    with pytest.raises(ValueError):
        lemma_report(make_graph(2, 3), "L2")


def test_edge_list_export():
    g = make_graph(2, 3)
    buf = io.StringIO()
    assert write_edge_list(g, buf) == 18
    lines = buf.getvalue().splitlines()
    pairs = [tuple(map(int, line.split())) for line in lines]
    assert pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)
    assert set(pairs) == set(hamming_edges(2, 3))


def test_graph_is_immutable_and_hashable():
    g = HammingGraph(2, 3)
    assert g == make_graph(2, 3) and hash(g) == hash(make_graph(2, 3))
    with pytest.raises(AttributeError):
        g.n = 4
