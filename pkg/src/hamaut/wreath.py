"""Sym(m) wr Sym(n) acting on the words of H(n, m).

An element ``(f, theta)`` sends a word ``v`` to ``y`` with
``y[theta(i)] = f(i)(v[i])``: coordinate ``i`` is relabelled by ``f(i)`` and
then moved to position ``theta(i)``. Products are left to right, so
``act(multiply(a, b), v) == act(b, act(a, v))``.

Pure coordinate moves (all ``f(i)`` trivial) form the subgroup of coordinate
permutations; pure relabellings (``theta`` trivial) form the subgroup of
entrywise maps.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .hamming import HammingGraph, Vertex, decode, encode
from .perm import (
    Permutation, all_permutations, apply, compose, identity, inverse, random_permutation,
)


@dataclass(frozen=True)
class WreathElement:
    entry_perms: tuple[Permutation, ...]
    coord_perm: Permutation

    def __post_init__(self):
        entry_perms = tuple(self.entry_perms)
        object.__setattr__(self, "entry_perms", entry_perms)
        if len(entry_perms) != self.coord_perm.degree:
            raise ValueError(
                f"{len(entry_perms)} entry permutations for coordinate degree {self.coord_perm.degree}"
            )
        degrees = {p.degree for p in entry_perms}
        if len(degrees) != 1:
            raise ValueError(f"entry permutations have mixed degrees {sorted(degrees)}")

    @property
    def n(self) -> int:
        return self.coord_perm.degree

    @property
    def m(self) -> int:
        return self.entry_perms[0].degree

    def to_dict(self) -> dict:
        return {"entry_perms": [list(p.images) for p in self.entry_perms],
                "coord_perm": list(self.coord_perm.images)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "WreathElement":
        return cls(tuple(Permutation(tuple(p)) for p in data["entry_perms"]),
                   Permutation(tuple(data["coord_perm"])))

    @classmethod
    def from_json(cls, text: str) -> "WreathElement":
        return cls.from_dict(json.loads(text))


def wreath_identity(n: int, m: int) -> WreathElement:
    return WreathElement(tuple(identity(m) for _ in range(n)), identity(n))


def coordinate_permutation(theta: Permutation, m: int) -> WreathElement:
    """Element moving coordinate i to position theta(i), no relabelling."""
    return WreathElement(tuple(identity(m) for _ in range(theta.degree)), theta)


def entrywise_map(entry_perms: Sequence[Permutation]) -> WreathElement:
    """Element relabelling coordinate i by entry_perms[i] in place."""
    return WreathElement(tuple(entry_perms), identity(len(entry_perms)))


def _check_shape(w: WreathElement, n: int, m: int) -> None:
    if (w.n, w.m) != (n, m):
        raise ValueError(f"element of shape (n={w.n}, m={w.m}) used with (n={n}, m={m})")


def act(w: WreathElement, v: Sequence[int]) -> Vertex:
    if len(v) != w.n:
        raise ValueError(f"vertex of length {len(v)} acted on by element with n={w.n}")
    out = [0] * w.n
    for i, x in enumerate(v):
        out[apply(w.coord_perm, i)] = apply(w.entry_perms[i], x)
    return tuple(out)


def multiply(w1: WreathElement, w2: WreathElement) -> WreathElement:
    """Product acting as ``w1`` first, then ``w2``."""
    _check_shape(w2, w1.n, w1.m)
    theta1 = w1.coord_perm
    entries = tuple(compose(w1.entry_perms[i], w2.entry_perms[apply(theta1, i)])
                    for i in range(w1.n))
    return WreathElement(entries, compose(theta1, w2.coord_perm))


def wreath_inverse(w: WreathElement) -> WreathElement:
    # entry j of the inverse undoes the relabelling that landed on position j
    theta_inv = inverse(w.coord_perm)
    entries = tuple(inverse(w.entry_perms[apply(theta_inv, j)]) for j in range(w.n))
    return WreathElement(entries, theta_inv)


def to_vertex_permutation(g: HammingGraph, w: WreathElement) -> Permutation:
    """Flatten ``w`` into a permutation of the encoded vertices of ``g``."""
    _check_shape(w, g.n, g.m)
    return Permutation(tuple(encode(g, act(w, decode(g, i))) for i in range(g.num_vertices)))


def wreath_order(n: int, m: int) -> int:
    """(m!)^n n!"""
    return factorial(m) ** n * factorial(n)


def random_wreath_element(n: int, m: int, seed: int | random.Random) -> WreathElement:
    if n < 1 or m < 2:
        raise ValueError(f"need n >= 1 and m >= 2, got n={n}, m={m}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    entries = tuple(random_permutation(m, rng) for _ in range(n))
    return WreathElement(entries, random_permutation(n, rng))


def all_wreath_elements(n: int, m: int) -> Iterator[WreathElement]:
    """Every element; only sensible for tiny (n, m)."""
    syms_m = list(all_permutations(m))
    for theta in all_permutations(n):
        for entries in itertools.product(syms_m, repeat=n):
            yield WreathElement(entries, theta)
