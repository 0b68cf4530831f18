"""Sym(m) wr Sym(n) acting on words.

Run with:  python demos/02_wreath_action.py
"""
from hamaut.engine import is_automorphism
from hamaut.hamming import make_graph
from hamaut.perm import Permutation, identity
from hamaut.wreath import (
    act, coordinate_permutation, entrywise_map, multiply, random_wreath_element,
    to_vertex_permutation, wreath_identity, wreath_inverse, wreath_order,
)

# Swapping the two coordinates of a word.
swap = coordinate_permutation(Permutation((1, 0)), 3)
print("swap (1,2) ->", act(swap, (1, 2)))

# Relabelling the first coordinate by the 3-cycle 0->1->2->0.
shift = entrywise_map([Permutation((1, 2, 0)), identity(3)])
print("shift (0,0) ->", act(shift, (0, 0)))

# Products act left to right: first swap, then shift.
both = multiply(swap, shift)
print("swap then shift (1,2) ->", act(both, (1, 2)), "=", act(shift, act(swap, (1, 2))))

# Every element, flattened to a permutation of the 9 vertices, is an automorphism.
g = make_graph(2, 3)
w = random_wreath_element(2, 3, seed=42)
sigma = to_vertex_permutation(g, w)
print("random element:", w.to_json())
print("as vertex permutation:", list(sigma.images), "automorphism:", is_automorphism(g, sigma))
print("inverse undoes it:", multiply(w, wreath_inverse(w)) == wreath_identity(2, 3))
print("group order (m!)^n n! for n=2, m=3:", wreath_order(2, 3))
