"""Shared helpers for the test suite."""

from __future__ import annotations

import random
from typing import Iterator

from oddmaps import CommuteInstance, Partition


def random_partition(rng: random.Random, max_size: int) -> Partition:
    """A quick non-uniform sampler: greedy parts under a decreasing cap."""
    n = rng.randint(0, max_size)
    parts = []
    remaining, cap = n, n
    while remaining:
        p = rng.randint(1, min(cap, remaining))
        parts.append(p)
        cap = p
        remaining -= p
    return Partition(parts)


def commute_instances(n_max: int) -> Iterator[CommuteInstance]:
    """Every valid (n; k, l) with n <= n_max."""
    for n in range(2, n_max + 1):
        l = 1
        while (1 << l) <= n:
            for k in range(l):
                if (1 << k) + (1 << l) <= n:
                    yield CommuteInstance(n=n, k=k, l=l)
            l += 1
