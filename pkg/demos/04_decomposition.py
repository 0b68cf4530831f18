"""Reading an automorphism back as (entry permutations, coordinate permutation).

Run with:  python demos/04_decomposition.py
"""
import random

from hamaut.engine import decompose, enumerate_automorphisms
from hamaut.hamming import encode, make_graph
from hamaut.perm import Permutation
from hamaut.wreath import random_wreath_element, to_vertex_permutation

g = make_graph(3, 4)
w = random_wreath_element(3, 4, seed=7)
sigma = to_vertex_permutation(g, w)
d = decompose(g, sigma)
print("original element:   ", w.to_json())
print("decomposition:      ", d.to_dict())
print("recovered exactly:  ", d.element == w)

# A permutation that is not an automorphism fails the final check.
h = make_graph(2, 3)
images = list(range(9))
a, b = encode(h, (0, 1)), encode(h, (1, 0))
images[a], images[b] = b, a
print("swap 01<->10 verified:", decompose(h, Permutation(tuple(images))).verified)

# Every automorphism found by search decomposes.
autos = list(enumerate_automorphisms(h))
print(f"{sum(decompose(h, p).verified for p in autos)} of {len(autos)} automorphisms decompose")

rng = random.Random(0)
ok = sum(decompose(g, to_vertex_permutation(g, random_wreath_element(3, 4, rng))).verified
         for _ in range(200))
print(f"{ok}/200 random elements of H(3,4) round-trip")
