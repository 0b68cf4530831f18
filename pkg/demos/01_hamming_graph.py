"""Building H(n, m) and looking at its distance structure.

Run with:  python demos/01_hamming_graph.py
"""
from hamaut.hamming import (
    distance_partition, intersection_lemma_set, make_graph, neighborhood_components, neighbors,
)

# H(2,3): nine words of length 2 over {0, 1, 2}; neighbours differ in one place.
g = make_graph(2, 3)
print(f"H(2,3): {g.num_vertices} vertices, degree {g.degree}")
print("neighbours of 00:", ["".join(map(str, v)) for v in neighbors(g, (0, 0))])

# Layers by distance from a base word. Sizes follow C(n,i) (m-1)^i.
part = distance_partition(make_graph(3, 3), (0, 0, 0))
print("H(3,3) layer sizes from 000:", part.sizes())

# The neighbourhood of a vertex splits into one clique per coordinate.
for comp in neighborhood_components(make_graph(3, 4), (0, 0, 0)):
    print("component:", sorted("".join(map(str, v)) for v in comp))

# Going outward one layer at a time, a vertex at distance >= 2 is pinned down
# by its neighbours one layer closer in.
print("intersection for x=00, v=11:", intersection_lemma_set(g, (0, 0), (1, 1)))
# At distance 1 the only inner neighbour is x itself, so nothing is pinned down.
print("intersection for x=00, v=01:", sorted(intersection_lemma_set(g, (0, 0), (0, 1))))
