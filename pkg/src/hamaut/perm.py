"""Finite permutations of {0, ..., k-1}.

Composition runs left to right: ``compose(p, q)`` applies ``p`` first and
then ``q``, so ``apply(compose(p, q), i) == apply(q, apply(p, i))``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

DEFAULT_ENUMERATION_CAP = 8


class ScaleError(ValueError):
    """A requested computation exceeds a configured size cap."""


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if not images:
            raise ValueError("permutation degree must be at least 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return apply(self, i)

    def __len__(self) -> int:
        return len(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def to_json(self) -> str:
        return json.dumps(list(self.images))

    @classmethod
    def from_json(cls, text: str) -> "Permutation":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError("permutation JSON must be an array of integers")
        return cls(tuple(data))


def identity(k: int) -> Permutation:
    if k < 1:
        raise ValueError(f"degree must be positive, got {k}")
    return Permutation(tuple(range(k)))


def apply(p: Permutation, i: int) -> int:
    if not 0 <= i < p.degree:
        raise IndexError(f"point {i} outside 0..{p.degree - 1}")
    return p.images[i]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return the permutation that applies ``p`` and then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Permutation(tuple(qi[x] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, x in enumerate(p.images):
        out[x] = i
    return Permutation(tuple(out))


def transposition(k: int, a: int, b: int) -> Permutation:
    """Swap ``a`` and ``b``; the identity when ``a == b``."""
    images = list(range(k))
    images[a], images[b] = images[b], images[a]
    return Permutation(tuple(images))


def all_permutations(k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Permutation]:
    """Yield all ``k!`` permutations in lexicographic order of image tables."""
    if k < 1:
        raise ValueError(f"degree must be positive, got {k}")
    if k > cap:
        raise ScaleError(f"refusing to enumerate {k}! = {factorial(k)} permutations (cap k <= {cap})")
    for images in itertools.permutations(range(k)):
        yield Permutation(images)


def random_permutation(k: int, seed: int | random.Random) -> Permutation:
    """Seeded Fisher-Yates shuffle of the identity.

    ``seed`` may also be a ``random.Random`` instance, which is advanced.
    """
    if k < 1:
        raise ValueError(f"degree must be positive, got {k}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    images = list(range(k))
    rng.shuffle(images)
    return Permutation(tuple(images))


def from_images(images: Sequence[int]) -> Permutation:
    return Permutation(tuple(images))
