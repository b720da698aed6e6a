"""Shared helpers for the test suite: triple enumeration by size pattern
and a hook-length dimension formula used as an independent oracle."""

from __future__ import annotations

import itertools
from math import factorial

from heisenstab import Kind, Partition
from heisenstab.partitions import partitions_up_to
from heisenstab.stability import coefficient, size_pattern_ok


def size_triples(kind: Kind, max_size: int):
    """All (alpha, beta, gamma) partition triples whose sizes are each at
    most max_size and fit the kind's size pattern."""
    everything = list(partitions_up_to(max_size))
    for a, b, c in itertools.product(everything, repeat=3):
        if size_pattern_ok(kind, a, b, c):
            yield a, b, c


def direction_triples(kind: Kind, max_size: int):
    """The valid triples among size_triples: positive coefficient."""
    for a, b, c in size_triples(kind, max_size):
        if coefficient(kind, a, b, c) > 0:
            yield a, b, c


def hook_length_dimension(lam: Partition) -> int:
    """Independent dimension oracle: n! over the product of hook lengths."""
    lam = Partition(lam)
    n = lam.size
    if n == 0:
        return 1
    conj = [sum(1 for p in lam if p > c) for c in range(lam[0])]
    denom = 1
    for r, row in enumerate(lam):
        for c in range(row):
            denom *= (row - c) + (conj[c] - r) - 1
    return factorial(n) // denom
