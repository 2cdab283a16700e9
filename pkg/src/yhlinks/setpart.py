"""
Compositions of n into d parts and ordered set partitions of {1..n}.

An ordered set partition is a d-tuple of sorted tuples (I_1, ..., I_d), pairwise
disjoint and covering {1..n}; parts may be empty and their order matters. Its shape
is the composition (|I_1|, ..., |I_d|).

Enumeration orders are fixed because they fix the row/column order of the matrix
model: compositions come in descending lexicographic order, and partitions of a shape
choose I_1, then I_2, ... as lexicographic combinations of what is left.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .braid import Permutation, perm_cycles

Composition = tuple[int, ...]
OrderedSetPartition = tuple[tuple[int, ...], ...]


def compositions(n: int, d: int, positive_only: bool = False) -> list[Composition]:
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    lo = 1 if positive_only else 0

    def rec(remaining: int, slots: int) -> Iterator[Composition]:
        if slots == 1:
            if remaining >= lo:
                yield (remaining,)
            return
        for first in range(remaining - lo * (slots - 1), lo - 1, -1):
            for tail in rec(remaining - first, slots - 1):
                yield (first,) + tail

    return list(rec(n, d))


def multinomial(mu: Sequence[int]) -> int:
    out = math.factorial(sum(mu))
    for m in mu:
        out //= math.factorial(m)
    return out


def shape(I: OrderedSetPartition) -> Composition:
    return tuple(len(part) for part in I)


def partitions_of_shape(mu: Sequence[int]) -> list[OrderedSetPartition]:
    mu = tuple(mu)
    n = sum(mu)

    def rec(remaining: tuple[int, ...], k: int) -> Iterator[OrderedSetPartition]:
        if k == len(mu):
            yield ()
            return
        for part in itertools.combinations(remaining, mu[k]):
            rest = tuple(j for j in remaining if j not in part)
            for tail in rec(rest, k + 1):
                yield (part,) + tail

    return list(rec(tuple(range(1, n + 1)), 0))


def all_partitions(n: int, d: int, positive_only: bool = False) -> list[OrderedSetPartition]:
    return [I for mu in compositions(n, d, positive_only) for I in partitions_of_shape(mu)]


def is_partition(I: Sequence[Sequence[int]], n: int) -> bool:
    flat = [j for part in I for j in part]
    return sorted(flat) == list(range(1, n + 1))


def act(pi: Permutation, I: OrderedSetPartition) -> OrderedSetPartition:
    """pi(I) = (pi(I_1), ..., pi(I_d))."""
    n = len(pi)
    if not is_partition(I, n):
        raise ValueError(f"{I} is not a partition of 1..{n}")
    return tuple(tuple(sorted(pi[j - 1] for j in part)) for part in I)


def swap_partition(I: OrderedSetPartition, i: int) -> OrderedSetPartition:
    """s_i(I) without the size check that ``act`` performs."""
    def f(j: int) -> int:
        return i + 1 if j == i else i if j == i + 1 else j
    return tuple(tuple(sorted(f(j) for j in part)) for part in I)


def part_of(I: OrderedSetPartition, j: int) -> int:
    """0-based index a with j in I_a."""
    for a, part in enumerate(I):
        if j in part:
            return a
    raise ValueError(f"{j} not covered by {I}")


def fixed_partitions(p: Permutation, d: int, positive_only: bool = False) -> list[OrderedSetPartition]:
    """All I with p(I) = I: each cycle of p goes wholesale into one part."""
    cycles = perm_cycles(p)
    out = []
    for assignment in itertools.product(range(d), repeat=len(cycles)):
        if positive_only and len(set(assignment)) < d:
            continue
        parts: list[list[int]] = [[] for _ in range(d)]
        for cyc, a in zip(cycles, assignment):
            parts[a].extend(cyc)
        out.append(tuple(tuple(sorted(part)) for part in parts))
    return out


def format_partition(I: OrderedSetPartition) -> str:
    return "|".join("{" + ",".join(map(str, part)) + "}" for part in I)
