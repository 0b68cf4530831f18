"""Exit criteria. Each test is one criterion; a summary line per criterion is
printed at the end of the pytest run."""

import itertools
import random
import time
from math import comb, factorial

import numpy as np
import pytest

from hamaut.engine import (
    SearchConfig, decompose, disjoint_union_aut_order, distance_transitivity_check,
    enumerate_automorphisms, forced_by_propagation, pointwise_kernel,
)
from hamaut.hamming import (
    diameter, distance_matrix, distance_partition, intersection_lemma_check, make_graph,
    neighborhood_components, neighbors,
)
from hamaut.perm import identity
from hamaut.wreath import all_wreath_elements, random_wreath_element, to_vertex_permutation
from oracles import differ_in_one, matrix_bfs_distances

acceptance = pytest.mark.acceptance


@acceptance(1, "enumerated |Aut(H(n,m))| = (m!)^n n! on six graphs, time budgets")
@pytest.mark.parametrize("n,m,expected", [
    (1, 3, 6), (1, 4, 24), (2, 3, 72), (2, 4, 1152), (3, 2, 48), (3, 3, 1296),
])
def test_c1_aut_order(n, m, expected):
    assert factorial(m) ** n * factorial(n) == expected
    start = time.perf_counter()
    count = sum(1 for _ in enumerate_automorphisms(make_graph(n, m), SearchConfig()))
    elapsed = time.perf_counter() - start
    assert count == expected
    assert elapsed < (1.0 if (n, m) == (2, 3) else 60.0)


@acceptance(2, "Aut(H(2,3)) equals the 72 flattened wreath elements as sets")
def test_c2_aut_equals_wreath():
    g = make_graph(2, 3)
    enumerated = list(enumerate_automorphisms(g))
    flattened = {to_vertex_permutation(g, w) for w in all_wreath_elements(2, 3)}
    assert len(enumerated) == len(set(enumerated)) == 72
    assert len(flattened) == 72
    assert set(enumerated) == flattened


@acceptance(3, "intersection lemma on every (x, v != x) of H(2,3), H(2,4), H(2,5), H(3,3)")
def test_c3_intersection_lemma():
    failures = {}
    for n, m in [(2, 3), (2, 4), (2, 5), (3, 3)]:
        g = make_graph(n, m)
        bad = []
        for x in g.vertices():
            part = distance_partition(g, x)
            for v in g.vertices():
                if v != x and not intersection_lemma_check(g, x, v, part):
                    bad.append((x, v, part.layer_of(v)))
        if bad:
            failures[(n, m)] = bad
    by_distance = {key: sorted({d for *_, d in bad}) for key, bad in failures.items()}
    assert not failures, (
        f"{sum(map(len, failures.values()))} counterexamples, at distances {by_distance}")


@acceptance(4, "N(v) induces n disjoint K_{m-1} at every vertex of five graphs")
@pytest.mark.parametrize("n,m", [(2, 3), (2, 4), (2, 5), (3, 3), (3, 2)])
def test_c4_neighbourhood_components(n, m):
    g = make_graph(n, m)
    for v in g.vertices():
        comps = neighborhood_components(g, v)
        assert len(comps) == n
        for c in comps:
            assert len(c) == m - 1
            assert all(differ_in_one(a, b) for a, b in itertools.combinations(c, 2))
        assert set().union(*comps) == set(neighbors(g, v))


@acceptance(5, "brute-forced |Aut(n K_c)| = (c!)^n n! for four cases")
@pytest.mark.parametrize("copies,size,expected", [(2, 2, 8), (2, 3, 72), (3, 2, 48), (1, 4, 24)])
def test_c5_disjoint_union(copies, size, expected):
    assert factorial(size) ** copies * factorial(copies) == expected
    assert disjoint_union_aut_order(copies, size) == expected


@acceptance(6, "pointwise stabilizer of {x0} + N(x0) is trivial on H(2,3), H(2,4), two methods")
@pytest.mark.parametrize("n,m", [(2, 3), (2, 4)])
def test_c6_rigidity(n, m):
    g = make_graph(n, m)
    assert pointwise_kernel(g) == [identity(g.num_vertices)]
    assert forced_by_propagation(g)


@acceptance(7, "1000 random elements of H(3,4) round-trip through decompose, under 30 s")
def test_c7_decompose_round_trip():
    g = make_graph(3, 4)
    rng = random.Random(20261015)
    start = time.perf_counter()
    verified = 0
    for _ in range(1000):
        sigma = to_vertex_permutation(g, random_wreath_element(3, 4, rng))
        d = decompose(g, sigma)
        if d.verified and to_vertex_permutation(g, d.element) == sigma:
            verified += 1
    elapsed = time.perf_counter() - start
    assert verified == 1000
    assert elapsed < 30.0


@acceptance(8, "H(2,3) is distance-transitive under its 72 automorphisms")
def test_c8_distance_transitivity():
    g = make_graph(2, 3)
    autos = list(enumerate_automorphisms(g))
    assert len(autos) == 72
    assert distance_transitivity_check(g, automorphisms=autos)


@acceptance(9, "layer sizes, degree, diameter, BFS = Hamming distance on all m^n <= 625")
def test_c9_structural_formulas():
    graphs = [(n, m) for n in range(1, 10) for m in range(2, 626) if m**n <= 625]
    assert len(graphs) == 665
    for n, m in graphs:
        g = make_graph(n, m)
        dist = distance_matrix(g)
        assert np.array_equal(dist, matrix_bfs_distances(n, m))
        formula = [comb(n, i) * (m - 1) ** i for i in range(n + 1)]
        counts = np.stack([np.bincount(row, minlength=n + 1) for row in dist])
        assert (counts == formula).all()
        assert dist.max() == diameter(g) == n
        assert all(len(neighbors(g, v)) == n * (m - 1) for v in g.vertices())
        if n >= 2:
            for x in g.vertices():
                assert list(distance_partition(g, x).sizes()) == formula
