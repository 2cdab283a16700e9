"""
Braid words on n strands and the combinatorics read off from them.

A braid word is read left to right, which is bottom to top in a diagram. Strands
are numbered by their bottom position. The letter +i is sigma_i (a positive crossing
between positions i and i+1), -i its inverse.

Permutations are tuples of images on {1..n}: ``p[j - 1] == p(j)``. The underlying
permutation of a braid sends a bottom position to the top position of the same
strand, so ``p_{beta sigma_i} = s_i o p_beta``.

Strand sets come in two flavours. A *bottom* set names strands by where they start;
a *top* set names them by where they end. ``remove_strands_top`` and
``linking_count(top=True)`` follow the recursions that peel letters off the right
end of the word, which track top sets. The two agree on sets fixed by the
permutation, which is all the invariants ever need.
"""

from __future__ import annotations

import dataclasses
import random
import re
from typing import Iterable, Sequence

Permutation = tuple[int, ...]


class BraidParseError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got n={self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(f"letter {x} out of range for n={self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("cannot concatenate braids on different numbers of strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __str__(self) -> str:
        body = " ".join(str(x) for x in self.letters)
        return f"n={self.strands}; {body}".rstrip()


_HEADER = re.compile(r"^\s*n\s*=\s*(-?\d+)\s*;(.*)$", re.S)


def parse(text: str) -> BraidWord:
    """Parse ``"n=3; 1 -2 1"`` or a bare ``"1 -2 1"`` (strand count inferred)."""
    m = _HEADER.match(text)
    n = None
    body = text
    if m:
        n = int(m.group(1))
        body = m.group(2)
    letters = []
    for tok in body.split():
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise BraidParseError(f"malformed token {tok!r}")
        x = int(tok)
        if x == 0:
            raise BraidParseError("generator index 0 is not allowed")
        letters.append(x)
    if n is None:
        n = 1 + max((abs(x) for x in letters), default=0)
    if n < 1:
        raise BraidParseError(f"strand count must be positive, got {n}")
    try:
        return BraidWord(n, tuple(letters))
    except ValueError as exc:
        raise BraidParseError(str(exc)) from None


# -- permutations ----------------------------------------------------------

def perm_identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """The composite p o q (apply q first)."""
    return tuple(p[q[j] - 1] for j in range(len(q)))


def perm_inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for j, pj in enumerate(p, start=1):
        inv[pj - 1] = j
    return tuple(inv)


def perm_cycles(p: Permutation) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = []
        j = start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j - 1]
        out.append(tuple(sorted(cyc)))
    return out


def swap_set(J: Iterable[int], i: int) -> frozenset[int]:
    """s_i(J)."""
    out = set()
    for j in J:
        out.add(i + 1 if j == i else i if j == i + 1 else j)
    return frozenset(out)


def permutation(beta: BraidWord) -> Permutation:
    pos = list(range(1, beta.strands + 1))  # pos[strand-1] = current position
    for x in beta.letters:
        i = abs(x)
        for s in range(beta.strands):
            if pos[s] == i:
                pos[s] = i + 1
            elif pos[s] == i + 1:
                pos[s] = i
    return tuple(pos)


def components(beta: BraidWord) -> list[tuple[int, ...]]:
    return perm_cycles(permutation(beta))


# -- strand removal and linking --------------------------------------------

def _check_subset(beta: BraidWord, J, allow_empty: bool = True) -> frozenset[int]:
    J = frozenset(J)
    if not J and not allow_empty:
        raise ValueError("cannot keep zero strands: B_0 is not modelled")
    if any(j < 1 or j > beta.strands for j in J):
        raise ValueError(f"{sorted(J)} is not a subset of 1..{beta.strands}")
    return J


def _rank(S: frozenset[int], i: int) -> int:
    return sum(1 for j in S if j <= i)


def remove_strands_bottom(beta: BraidWord, J: Iterable[int]) -> BraidWord:
    """Erase every strand whose bottom position is outside J."""
    S = _check_subset(beta, J, allow_empty=False)
    size = len(S)
    out = []
    for x in beta.letters:
        i = abs(x)
        a, b = i in S, (i + 1) in S
        if a and b:
            out.append(_rank(S, i) if x > 0 else -_rank(S, i))
        elif a or b:
            S = swap_set(S, i)
    return BraidWord(size, tuple(out))


def remove_strands_top(beta: BraidWord, J: Iterable[int]) -> BraidWord:
    """Erase every strand whose top position is outside J (recursion on the last letter)."""
    S = _check_subset(beta, J, allow_empty=False)
    size = len(S)
    rev = []
    for x in reversed(beta.letters):
        i = abs(x)
        if i in S and (i + 1) in S:
            k = _rank(S, i)
            rev.append(k if x > 0 else -k)
        else:
            S = swap_set(S, i)
    return BraidWord(size, tuple(reversed(rev)))


def linking_count(beta: BraidWord, J: Iterable[int], top: bool = False) -> int:
    """Signed number of crossings between strands in J and strands outside J."""
    S = _check_subset(beta, J)
    total = 0
    letters = reversed(beta.letters) if top else beta.letters
    for x in letters:
        i = abs(x)
        if (i in S) != ((i + 1) in S):
            total += 1 if x > 0 else -1
            S = swap_set(S, i)
    return total


def partition_linking(beta: BraidWord, parts: Sequence[Iterable[int]], top: bool = False) -> int:
    twice = sum(linking_count(beta, part, top=top) for part in parts)
    if twice % 2:
        raise ValueError("odd total mixed-crossing count; parts do not form a partition")
    return twice // 2


def linking_matrix(beta: BraidWord) -> list[list[int]]:
    """Standard linking numbers between the closure's components (ordered as ``components``)."""
    comps = components(beta)
    label = {}
    for c, cyc in enumerate(comps):
        for j in cyc:
            label[j] = c
    at = list(range(1, beta.strands + 1))  # at[pos-1] = strand at that position
    twice = [[0] * len(comps) for _ in comps]
    for x in beta.letters:
        i = abs(x)
        a, b = label[at[i - 1]], label[at[i]]
        if a != b:
            sgn = 1 if x > 0 else -1
            twice[a][b] += sgn
            twice[b][a] += sgn
        at[i - 1], at[i] = at[i], at[i - 1]
    for row in twice:
        for c, val in enumerate(row):
            if val % 2:
                raise AssertionError("odd inter-component crossing count")
            row[c] = val // 2
    return twice


# -- Markov moves and sampling ---------------------------------------------

def conjugate(beta: BraidWord, i: int) -> BraidWord:
    """sigma_i^{-1} beta sigma_i."""
    if not 1 <= i <= beta.strands - 1:
        raise ValueError(f"generator {i} out of range for n={beta.strands}")
    return BraidWord(beta.strands, (-i,) + beta.letters + (i,))


def stabilize(beta: BraidWord, sign: int = 1) -> BraidWord:
    """beta sigma_n^{+-1} on n + 1 strands."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = beta.strands
    return BraidWord(n + 1, beta.letters + (sign * n,))


def random_braid(n: int, length: int, seed: int | random.Random) -> BraidWord:
    if n < 1 or length < 0:
        raise ValueError("need n >= 1 and length >= 0")
    if n == 1 and length > 0:
        raise ValueError("B_1 has no generators")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
    return BraidWord(n, letters)
