"""Seeded random finite posets for property testing."""

from __future__ import annotations

import random

from .poset import FinitePoset


def random_poset(rng: random.Random, max_size: int = 9, min_size: int = 1) -> FinitePoset:
    """A random poset on 0..n-1 with n <= max_size.

    Generator pairs follow a hidden random permutation, so the declared
    element order is unrelated to the order relation and tie-breaking code
    paths get exercised.
    """
    n = rng.randint(min_size, max_size)
    perm = list(range(n))
    rng.shuffle(perm)
    p = rng.uniform(0.1, 0.5)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                pairs.append((perm[i], perm[j]))
    return FinitePoset.from_generators(range(n), pairs)
