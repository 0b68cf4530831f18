"""Automorphism search, verification and wreath decomposition for H(n, m).

The search is a plain backtracking over vertex images. Vertices are
assigned in BFS order from vertex 0 and a candidate image must keep the
degree, and either the full distance profile (default) or the adjacency
pattern, towards every vertex assigned so far. Either test is sound for
automorphisms and every completed leaf is an automorphism, so the search
yields each automorphism exactly once.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .hamming import (
    HammingGraph, Vertex, coordinate_array, decode, distance_matrix, distance_partition, encode,
    neighbors,
)
from .perm import Permutation, ScaleError, compose, inverse, transposition
from .wreath import (
    WreathElement, entrywise_map, multiply, to_vertex_permutation, wreath_inverse,
)

DECOMPOSE_MAX_VERTICES = 4096


@dataclass(frozen=True)
class SearchConfig:
    max_vertices: int = 81
    max_count: int | None = None
    prune_by_distance_profile: bool = True

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be positive")
        if self.max_count is not None and self.max_count < 1:
            raise ValueError("max_count must be positive")


@dataclass(frozen=True)
class Decomposition:
    """Result of reading a vertex permutation as a wreath element.

    ``element`` is None when the neighbourhood of the base vertex is not
    mapped coordinate-wise, in which case ``verified`` is False.
    """
    element: WreathElement | None
    translate: WreathElement
    verified: bool
    stabilizer_part: WreathElement | None = None

    def to_dict(self) -> dict:
        el = self.element
        return {
            "verified": self.verified,
            "theta": list(el.coord_perm.images) if el else None,
            "entry_perms": [list(p.images) for p in el.entry_perms] if el else None,
            "translate": self.translate.to_dict(),
        }


# --- graph data --------------------------------------------------------------

def _check_cap(num_vertices: int, cap: int) -> None:
    if num_vertices > cap:
        raise ScaleError(f"{num_vertices} vertices exceeds the cap of {cap}")


@lru_cache(maxsize=32)
def _coords(g: HammingGraph) -> np.ndarray:
    return coordinate_array(g)


@lru_cache(maxsize=32)
def _edge_array(g: HammingGraph) -> np.ndarray:
    pairs = [(u, encode(g, w)) for u in range(g.num_vertices)
             for w in neighbors(g, decode(g, u))]
    arr = np.array(pairs, dtype=np.int64)
    return arr[arr[:, 0] < arr[:, 1]]


def hamming_adjacency(g: HammingGraph) -> list[frozenset]:
    """Encoded adjacency lists of ``g``."""
    return [frozenset(encode(g, w) for w in neighbors(g, decode(g, u)))
            for u in range(g.num_vertices)]


def disjoint_union_adjacency(n_copies: int, clique_size: int) -> list[frozenset]:
    """Adjacency of n_copies disjoint copies of K_clique_size, copy-major numbering."""
    if n_copies < 1 or clique_size < 1:
        raise ValueError("need at least one copy of a non-empty clique")
    adj = []
    for a in range(n_copies):
        block = range(a * clique_size, (a + 1) * clique_size)
        for b in block:
            adj.append(frozenset(x for x in block if x != b))
    return adj


def _distance_matrix(adj: Sequence[frozenset]) -> np.ndarray:
    """All-pairs graph distances, -1 where unreachable."""
    V = len(adj)
    rows = [u for u in range(V) for _ in adj[u]]
    cols = [w for u in range(V) for w in adj[u]]
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(V, V))
    dist = shortest_path(mat, unweighted=True, directed=False)
    dist[np.isinf(dist)] = -1
    return dist.astype(np.int64)


def _bfs_order(adj: Sequence[frozenset]) -> list[int]:
    seen = [False] * len(adj)
    order = []
    for root in range(len(adj)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


# --- search ------------------------------------------------------------------

def search_automorphisms(adj: Sequence[frozenset], cfg: SearchConfig = SearchConfig()
                         ) -> Iterator[Permutation]:
    """Backtracking enumeration of the automorphisms of a graph given by adjacency lists.

    Output order is deterministic: depth-first with candidate images tried in
    ascending order.
    """
    V = len(adj)
    _check_cap(V, cfg.max_vertices)
    if cfg.prune_by_distance_profile:
        rel = _distance_matrix(adj)
    else:
        rel = np.zeros((V, V), dtype=np.int64)
        for u in range(V):
            rel[u, list(adj[u])] = 1
    deg = np.array([len(a) for a in adj])
    order = np.array(_bfs_order(adj), dtype=np.int64)
    img = np.full(V, -1, dtype=np.int64)
    used = np.zeros(V, dtype=bool)
    emitted = 0

    def extend(k: int) -> Iterator[Permutation]:
        if k == V:
            yield Permutation(tuple(int(x) for x in img))
            return
        u = order[k]
        mask = ~used & (deg == deg[u])
        if k:
            prefix = order[:k]
            mask &= (rel[img[prefix]] == rel[u, prefix][:, None]).all(axis=0)
        for c in np.flatnonzero(mask):
            img[u] = c
            used[c] = True
            yield from extend(k + 1)
            used[c] = False
            img[u] = -1

    for perm in extend(0):
        yield perm
        emitted += 1
        if cfg.max_count is not None and emitted >= cfg.max_count:
            return


def enumerate_automorphisms(g: HammingGraph, cfg: SearchConfig = SearchConfig()
                            ) -> Iterator[Permutation]:
    _check_cap(g.num_vertices, cfg.max_vertices)
    return search_automorphisms(hamming_adjacency(g), cfg)


def aut_order(g: HammingGraph, cfg: SearchConfig = SearchConfig()) -> int:
    return sum(1 for _ in enumerate_automorphisms(g, cfg))


def disjoint_union_aut_order(n_copies: int, clique_size: int,
                             cfg: SearchConfig = SearchConfig(max_vertices=12)) -> int:
    """Count automorphisms of n_copies * K_clique_size by search."""
    adj = disjoint_union_adjacency(n_copies, clique_size)
    return sum(1 for _ in search_automorphisms(adj, cfg))


def write_automorphisms(perms: Iterable[Permutation], fh: IO[str],
                        limit: int | None = None) -> int:
    """Write one JSON image table per line; returns the number written."""
    count = 0
    for p in perms:
        if limit is not None and count >= limit:
            break
        fh.write(json.dumps(list(p.images)) + "\n")
        count += 1
    return count


# --- verification ------------------------------------------------------------

def is_automorphism(g: HammingGraph, sigma: Permutation,
                    max_vertices: int = DECOMPOSE_MAX_VERTICES) -> bool:
    if sigma.degree != g.num_vertices:
        raise ValueError(f"permutation of degree {sigma.degree} on {g.num_vertices} vertices")
    _check_cap(g.num_vertices, max_vertices)
    coords = _coords(g)
    edges = _edge_array(g)

    def edges_preserved(images: np.ndarray) -> bool:
        a, b = coords[images[edges[:, 0]]], coords[images[edges[:, 1]]]
        return bool(((a != b).sum(axis=1) == 1).all())

    s = np.array(sigma.images, dtype=np.int64)
    # the inverse direction is the non-edge -> non-edge condition
    return edges_preserved(s) and edges_preserved(np.array(inverse(sigma).images))


def decompose(g: HammingGraph, sigma: Permutation,
              max_vertices: int = DECOMPOSE_MAX_VERTICES) -> Decomposition:
    """Read ``sigma`` as a wreath element, then verify on every vertex.

    Moves the image of the all-zeros word back to it with an entrywise map
    of transpositions, reads the coordinate permutation and the per-coordinate
    relabellings off the neighbourhood of the all-zeros word, and checks the
    assembled element against ``sigma`` pointwise. A failed read or a failed
    check gives ``verified=False``.
    """
    if sigma.degree != g.num_vertices:
        raise ValueError(f"permutation of degree {sigma.degree} on {g.num_vertices} vertices")
    _check_cap(g.num_vertices, max_vertices)
    n, m = g.n, g.m
    y0 = decode(g, sigma.images[0])
    translate = entrywise_map([transposition(m, 0, y0[i]) for i in range(n)])
    tau = compose(sigma, to_vertex_permutation(g, translate))

    theta: list[int | None] = [None] * n
    relabel = [[0] + [-1] * (m - 1) for _ in range(n)]
    for i in range(n):
        for a in range(1, m):
            e = [0] * n
            e[i] = a
            image = decode(g, tau.images[encode(g, e)])
            moved = [j for j in range(n) if image[j] != 0]
            if len(moved) != 1 or theta[i] not in (None, moved[0]):
                return Decomposition(None, translate, False)
            theta[i] = moved[0]
            relabel[i][a] = image[moved[0]]
    try:
        stab = WreathElement(tuple(Permutation(tuple(r)) for r in relabel),
                             Permutation(tuple(theta)))
    except ValueError:
        return Decomposition(None, translate, False)

    element = multiply(stab, wreath_inverse(translate))
    verified = to_vertex_permutation(g, element) == sigma
    return Decomposition(element, translate, verified, stab)


# --- structural checks -------------------------------------------------------

def pointwise_kernel(g: HammingGraph, cfg: SearchConfig = SearchConfig()) -> list[Permutation]:
    """Enumerated automorphisms fixing vertex 0 and each of its neighbours."""
    fixed = [0] + [encode(g, w) for w in neighbors(g, decode(g, 0))]
    return [p for p in enumerate_automorphisms(g, cfg)
            if all(p.images[i] == i for i in fixed)]


def forced_by_propagation(g: HammingGraph, x: Sequence[int] | None = None) -> bool:
    """Show that fixing x and N(x) pointwise forces every other vertex.

    Walks the distance layers outward. With every vertex of layer i-1 already
    mapped, the image of u in layer i must lie in N(f(w)) for every w in
    layer i-1 adjacent to u, and in layer i. Returns True iff that candidate
    set is always the single vertex u.
    """
    x = g.check_vertex(x if x is not None else (0,) * g.n)
    part = distance_partition(g, x)
    image: dict[Vertex, Vertex] = {x: x}
    image.update((w, w) for w in part.layers[1])
    for i in range(2, g.n + 1):
        prev, layer = part.layers[i - 1], part.layers[i]
        for u in sorted(layer):
            cands = set(layer)
            for w in neighbors(g, u):
                if w in prev:
                    cands &= set(neighbors(g, image[w]))
            if cands != {u}:
                return False
            image[u] = u
    return len(image) == g.num_vertices


@dataclass(frozen=True)
class RigidityReport:
    kernel_size: int
    by_enumeration: bool
    by_propagation: bool

    @property
    def holds(self) -> bool:
        return self.by_enumeration and self.by_propagation


def rigidity_report(g: HammingGraph, cfg: SearchConfig = SearchConfig()) -> RigidityReport:
    kernel = pointwise_kernel(g, cfg)
    by_enum = len(kernel) == 1 and kernel[0].is_identity()
    return RigidityReport(len(kernel), by_enum, forced_by_propagation(g))


def rigidity_check(g: HammingGraph, cfg: SearchConfig = SearchConfig()) -> bool:
    return rigidity_report(g, cfg).holds


def stabilizer_order(g: HammingGraph, cfg: SearchConfig = SearchConfig(), x: int = 0) -> int:
    return sum(1 for p in enumerate_automorphisms(g, cfg) if p.images[x] == x)


def distance_transitivity_check(g: HammingGraph, cfg: SearchConfig = SearchConfig(),
                                automorphisms: Sequence[Permutation] | None = None) -> bool:
    """True iff the group is transitive on ordered pairs at each distance.

    Orbits on ordered pairs partition them, so it is enough to compare the
    orbit of one representative pair per distance with the full set of
    pairs at that distance.
    """
    autos = list(automorphisms) if automorphisms is not None else list(
        enumerate_automorphisms(g, cfg))
    dist = distance_matrix(g)
    images = np.array([p.images for p in autos], dtype=np.int64)
    for d in range(g.n + 1):
        v = int(np.flatnonzero(dist[0] == d)[0])
        orbit = set(zip(images[:, 0].tolist(), images[:, v].tolist()))
        if orbit != set(zip(*map(np.ndarray.tolist, np.nonzero(dist == d)))):
            return False
    return True

