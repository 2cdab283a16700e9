"""
The Yokonuma-Hecke link invariants T_d, computed two ways.

``td_via_matrix`` takes the tensor trace of the diagonal of the matrix-model image
of the braid, summed over ordered partitions with no empty part. ``td_via_sublinks``
sums over unordered families of d sublinks and multiplies by d!. Both use the same
exponent for (u gamma): the signed number of crossings between different blocks,
which is twice the sum of the usual pairwise linking numbers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Sequence

from . import hecke
from .braid import (
    BraidWord,
    components,
    partition_linking,
    permutation,
    remove_strands_bottom,
)
from .laurent import ZERO, LaurentPoly, int_pow, monomial
from .setpart import fixed_partitions
from .yhmatrix import closed_entry, psi_delta_bruteforce

UG = monomial(1, 1, 0, 1)

SublinkFamily = tuple[tuple[tuple[int, ...], ...], ...]
"""Blocks of components; each component is the sorted tuple of its strands."""


class RouteMismatch(RuntimeError):
    pass


def td_via_matrix(beta: BraidWord, d: int, model: str = "closed") -> LaurentPoly:
    """
    Sum over I with every part nonempty of the tensor trace of the (I, I) entry.

    With ``model="closed"`` only partitions fixed by the braid permutation are
    visited (all other diagonal entries vanish) and entries come from the closed
    form. ``model="bruteforce"`` multiplies out the full matrix instead.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if model == "bruteforce":
        M = psi_delta_bruteforce(beta, d)
        total = ZERO
        for (row, col), e in M.entries.items():
            if row == col and all(row):
                total = total + e.tensor_trace()
        return total
    if model != "closed":
        raise ValueError(f"unknown model {model!r}")
    total = ZERO
    for I in fixed_partitions(permutation(beta), d, positive_only=True):
        total = total + closed_entry(beta, I, d).tensor_trace()
    return total


def _set_partitions(items: Sequence, k: int) -> Iterator[list[list]]:
    """Unordered partitions of ``items`` into exactly k nonempty blocks."""
    if k == 0:
        if not items:
            yield []
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest, k - 1):
        yield [[first]] + part
    for part in _set_partitions(rest, k):
        for b in range(len(part)):
            yield part[:b] + [[first] + part[b]] + part[b + 1:]


def enumerate_families(beta: BraidWord, d: int) -> list[SublinkFamily]:
    if d < 1:
        raise ValueError("d must be positive")
    fams = []
    for blocks in _set_partitions(components(beta), d):
        fams.append(tuple(sorted(tuple(sorted(b)) for b in blocks)))
    return sorted(fams)


def block_strands(block: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    return tuple(sorted(j for comp in block for j in comp))


def family_linking(beta: BraidWord, fam: SublinkFamily) -> int:
    return partition_linking(beta, [block_strands(b) for b in fam])


def sublink_homfly(beta: BraidWord, strands: Sequence[int]) -> LaurentPoly:
    return hecke.homfly(remove_strands_bottom(beta, strands))


def _family_term(beta: BraidWord, fam: SublinkFamily) -> LaurentPoly:
    term = int_pow(UG, family_linking(beta, fam))
    for block in fam:
        term = term * sublink_homfly(beta, block_strands(block))
    return term


def td_via_sublinks(beta: BraidWord, d: int, workers: int = 1) -> LaurentPoly:
    fams = enumerate_families(beta, d)
    if workers > 1 and len(fams) > 1:
        with ThreadPoolExecutor(workers) as pool:
            terms = list(pool.map(lambda f: _family_term(beta, f), fams))
    else:
        terms = [_family_term(beta, f) for f in fams]
    total = ZERO
    for t in terms:
        total = total + t
    return total.scale(math.factorial(d))


def td(beta: BraidWord, d: int, method: str = "both") -> LaurentPoly:
    if method == "matrix":
        return td_via_matrix(beta, d)
    if method == "sublink":
        return td_via_sublinks(beta, d)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    a = td_via_matrix(beta, d)
    b = td_via_sublinks(beta, d)
    if a != b:
        raise RouteMismatch(f"T_{d}({beta}): matrix route {a} != sublink route {b}")
    return a


def top_formula(beta: BraidWord, lk: Sequence[Sequence[int]]) -> LaurentPoly:
    """N! (u gamma)^{2 sum_{i<j} lk_ij} P(K_1)...P(K_N) from a linking matrix and per-component P."""
    comps = components(beta)
    N = len(comps)
    exponent = 2 * sum(lk[i][j] for i in range(N) for j in range(i + 1, N))
    val = int_pow(UG, exponent).scale(math.factorial(N))
    for comp in comps:
        val = val * sublink_homfly(beta, comp)
    return val
