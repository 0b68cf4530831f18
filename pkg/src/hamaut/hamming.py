"""The Hamming graph H(n, m) as an implicit graph on words over {0, ..., m-1}.

Adjacency is never stored; two words are adjacent iff they differ in exactly
one coordinate. Vertices are tuples and are encoded as base-m integers with
coordinate 0 most significant.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import comb
from typing import IO, Iterator, Sequence

import numpy as np

from .perm import ScaleError

Vertex = tuple[int, ...]

DEFAULT_MAX_VERTICES = 10**6


@dataclass(frozen=True)
class HammingGraph:
    n: int
    m: int
    max_vertices: int = DEFAULT_MAX_VERTICES

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"word length n must be >= 1, got {self.n}")
        if self.m < 2:
            raise ValueError(f"alphabet size m must be >= 2, got {self.m}")
        if self.m**self.n > self.max_vertices:
            raise ScaleError(
                f"H({self.n},{self.m}) has {self.m**self.n} vertices, cap is {self.max_vertices}"
            )

    @property
    def num_vertices(self) -> int:
        return self.m**self.n

    @property
    def degree(self) -> int:
        return self.n * (self.m - 1)

    def vertices(self) -> Iterator[Vertex]:
        """All vertices in encoding order."""
        return itertools.product(range(self.m), repeat=self.n)

    def check_vertex(self, v: Sequence[int]) -> Vertex:
        v = tuple(v)
        if len(v) != self.n or any(not 0 <= c < self.m for c in v):
            raise ValueError(f"{v} is not a vertex of H({self.n},{self.m})")
        return v

    def is_adjacent(self, u: Vertex, v: Vertex) -> bool:
        return hamming_distance(u, v) == 1

    def encode(self, v: Sequence[int]) -> int:
        return encode(self, v)

    def decode(self, idx: int) -> Vertex:
        return decode(self, idx)


@dataclass(frozen=True)
class DistancePartition:
    base: Vertex
    layers: tuple[frozenset, ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def layer_of(self, v: Vertex) -> int:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        raise KeyError(v)


def make_graph(n: int, m: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> HammingGraph:
    return HammingGraph(n, m, max_vertices)


def encode(g: HammingGraph, v: Sequence[int]) -> int:
    idx = 0
    for c in g.check_vertex(v):
        idx = idx * g.m + c
    return idx


def decode(g: HammingGraph, idx: int) -> Vertex:
    if not 0 <= idx < g.num_vertices:
        raise IndexError(f"index {idx} outside 0..{g.num_vertices - 1}")
    coords = [0] * g.n
    for i in range(g.n - 1, -1, -1):
        idx, coords[i] = divmod(idx, g.m)
    return tuple(coords)


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def coordinate_array(g: HammingGraph) -> np.ndarray:
    """Row ``i`` holds ``decode(g, i)``."""
    idx = np.arange(g.num_vertices, dtype=np.int64)
    powers = g.m ** np.arange(g.n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % g.m


def distance_matrix(g: HammingGraph) -> np.ndarray:
    """Pairwise Hamming distances between encoded vertices."""
    c = coordinate_array(g)
    return (c[:, None, :] != c[None, :, :]).sum(axis=2)


def neighbors(g: HammingGraph, v: Sequence[int]) -> list[Vertex]:
    """Neighbours ordered by coordinate, then by replacement symbol."""
    v = g.check_vertex(v)
    out = []
    for i in range(g.n):
        for s in range(g.m):
            if s != v[i]:
                out.append(v[:i] + (s,) + v[i + 1:])
    return out


def distance_partition(g: HammingGraph, x: Sequence[int]) -> DistancePartition:
    x = g.check_vertex(x)
    layers: list[set] = [set() for _ in range(g.n + 1)]
    for v in g.vertices():
        layers[hamming_distance(x, v)].add(v)
    return DistancePartition(x, tuple(frozenset(layer) for layer in layers))


def layer_size(n: int, m: int, i: int) -> int:
    """Closed form |Gamma_i(x)| = C(n, i) (m-1)^i."""
    return comb(n, i) * (m - 1) ** i


def diameter(g: HammingGraph) -> int:
    return g.n


def neighborhood_components(g: HammingGraph, v: Sequence[int]) -> list[frozenset]:
    """Connected components of the subgraph induced on N(v).

    Components are found by search over the induced subgraph, not read off
    the coordinates, and are listed in order of first appearance in
    ``neighbors(g, v)``.
    """
    nbrs = neighbors(g, v)
    inside = set(nbrs)
    seen: set = set()
    components = []
    for start in nbrs:
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in neighbors(g, u):
                if w in inside and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        components.append(frozenset(comp))
    return components


def intersection_lemma_set(g: HammingGraph, x: Sequence[int], v: Sequence[int],
                           partition: DistancePartition | None = None) -> frozenset:
    """Intersection of N(w) & Gamma_i(x) over w in Gamma_{i-1}(x) & N(v), i = d(x, v).

    Evaluated literally; at i = 1 the only w is x itself, so the result is
    all of N(x).
    """
    x = g.check_vertex(x)
    v = g.check_vertex(v)
    i = hamming_distance(x, v)
    if i == 0:
        raise ValueError("v must differ from the base vertex x")
    part = partition if partition is not None else distance_partition(g, x)
    prev, layer = part.layers[i - 1], part.layers[i]
    result = None
    for w in neighbors(g, v):
        if w not in prev:
            continue
        candidates = {u for u in neighbors(g, w) if u in layer}
        result = candidates if result is None else result & candidates
    return frozenset(result)


def intersection_lemma_check(g: HammingGraph, x: Sequence[int], v: Sequence[int],
                             partition: DistancePartition | None = None) -> bool:
    return intersection_lemma_set(g, x, v, partition) == {tuple(v)}


def lemma1_counterexamples(g: HammingGraph, min_distance: int = 1) -> list[dict]:
    """Every (x, v) with d(x, v) >= min_distance whose intersection is not {v}."""
    bad = []
    for x in g.vertices():
        part = distance_partition(g, x)
        for i in range(max(min_distance, 1), g.n + 1):
            for v in sorted(part.layers[i]):
                got = intersection_lemma_set(g, x, v, part)
                if got != {v}:
                    bad.append({"x": list(x), "v": list(v), "distance": i,
                                "intersection": sorted(list(u) for u in got)})
    return bad


def lemma3_counterexamples(g: HammingGraph) -> list[dict]:
    """Vertices whose neighbourhood is not n disjoint copies of K_{m-1}."""
    bad = []
    for v in g.vertices():
        comps = neighborhood_components(g, v)
        ok = len(comps) == g.n and all(
            len(c) == g.m - 1
            and all(g.is_adjacent(a, b) for a, b in itertools.combinations(c, 2))
            for c in comps
        )
        if not ok:
            bad.append({"v": list(v), "component_sizes": [len(c) for c in comps]})
    return bad


def lemma_report(g: HammingGraph, lemma: str) -> dict:
    """Exhaustive lemma check as a JSON-ready dict; ``lemma`` is "L1" or "L3"."""
    if lemma == "L1":
        bad = lemma1_counterexamples(g)
    elif lemma == "L3":
        bad = lemma3_counterexamples(g)
    else:
        raise ValueError(f"unknown lemma {lemma!r}")
    return {"graph": {"n": g.n, "m": g.m}, "lemma": lemma, "pass": not bad,
            "counterexamples": bad}


def edges(g: HammingGraph) -> Iterator[tuple[int, int]]:
    """Edges as encoded pairs (u, v), u < v, in ascending order."""
    for u in range(g.num_vertices):
        for w in sorted(encode(g, x) for x in neighbors(g, decode(g, u))):
            if w > u:
                yield u, w


def write_edge_list(g: HammingGraph, fh: IO[str]) -> int:
    count = 0
    for u, v in edges(g):
        fh.write(f"{u} {v}\n")
        count += 1
    return count

