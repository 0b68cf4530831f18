"""Automorphisms of Hamming graphs H(n, m) and the wreath product Sym(m) wr Sym(n)."""

from .engine import (
    Decomposition, SearchConfig, aut_order, decompose, disjoint_union_aut_order,
    distance_transitivity_check, enumerate_automorphisms, is_automorphism, rigidity_check,
)
from .hamming import (
    DistancePartition, HammingGraph, decode, diameter, distance_partition, encode,
    hamming_distance, intersection_lemma_check, make_graph, neighborhood_components, neighbors,
)
from .perm import Permutation, ScaleError, compose, identity, inverse
from .wreath import (
    WreathElement, act, multiply, random_wreath_element, to_vertex_permutation,
    wreath_identity, wreath_inverse, wreath_order,
)

__version__ = "0.1.0"
