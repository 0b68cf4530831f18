"""Counting automorphisms by backtracking and comparing with (m!)^n n!.

Run with:  python demos/03_automorphism_search.py
"""
import time

from hamaut.engine import (
    SearchConfig, aut_order, disjoint_union_aut_order, distance_transitivity_check,
    rigidity_report, stabilizer_order,
)
from hamaut.hamming import make_graph
from hamaut.wreath import wreath_order

for n, m in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 2), (3, 3)]:
    g = make_graph(n, m)
    start = time.perf_counter()
    count = aut_order(g)
    ms = (time.perf_counter() - start) * 1000
    print(f"H({n},{m}): searched {count:5d}, formula {wreath_order(n, m):5d}  ({ms:.0f} ms)")

# Without distance profiles the search only compares adjacency; same answer, more work.
print("adjacency-only search on H(2,3):",
      aut_order(make_graph(2, 3), SearchConfig(prune_by_distance_profile=False)))

# Orbit-stabilizer: |G| = |G_x| * |V| because the group is vertex-transitive.
g = make_graph(2, 4)
print(f"H(2,4): |G_x| = {stabilizer_order(g)}, |V| = {g.num_vertices}")

# Fixing a vertex and all of its neighbours leaves only the identity.
print("rigidity on H(2,4):", rigidity_report(g))
print("H(2,3) distance-transitive:", distance_transitivity_check(make_graph(2, 3)))

# n disjoint copies of K_c have (c!)^n n! automorphisms.
for copies, size in [(2, 2), (2, 3), (3, 2), (1, 4)]:
    print(f"{copies} x K_{size}: {disjoint_union_aut_order(copies, size)}")
