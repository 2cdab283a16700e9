"""
The Hecke algebra H_n in the permutation basis {T_w}, its Markov trace, and HOMFLYPT.

Generators satisfy g_i^2 = u^2 + u v g_i, hence g_i^{-1} = u^{-2} g_i - u^{-1} v.
A basis permutation w is a one-line tuple; right multiplication by g_i acts on
positions i, i+1, and T_w g_i = T_{w s_i} exactly when w(i) < w(i+1).

The trace is normalised by tau_1(1) = 1. The Markov axioms then force
tau_{n+1}(x) = Z tau_n(x) for x in H_n, with Z = (u^{-1} - u) v^{-1}.
"""

from __future__ import annotations

import functools
from typing import Iterable, Mapping

from .braid import BraidWord, Permutation, perm_cycles, perm_identity, permutation
from .laurent import ONE, ZERO, LaurentPoly, monomial

U2 = monomial(1, 2, 0, 0)
UV = monomial(1, 1, 1, 0)
U_INV2 = monomial(1, -2, 0, 0)
NEG_UINV_V = monomial(-1, -1, 1, 0)
Z = monomial(1, -1, -1, 0) - monomial(1, 1, -1, 0)


def _swap(w: Permutation, i: int) -> Permutation:
    """w o s_i: exchange the entries at positions i and i+1."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def length(w: Permutation) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


@functools.lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Canonical reduced word: w = v s_{n-1} s_{n-2} ... s_m with v in S_{n-1}, recursively."""
    n = len(w)
    if n <= 1:
        return ()
    m = w.index(n) + 1
    rest = w
    for i in range(m, n):
        rest = _swap(rest, i)
    return reduced_word(rest[:-1]) + tuple(range(n - 1, m - 1, -1))


def word_to_perm(word: Iterable[int], n: int) -> Permutation:
    w = perm_identity(n)
    for i in word:
        w = _swap(w, i)
    return w


@functools.lru_cache(maxsize=None)
def _basis_times_gen(w: Permutation, i: int) -> tuple[tuple[Permutation, LaurentPoly], ...]:
    ws = _swap(w, i)
    if w[i - 1] < w[i]:
        return ((ws, ONE),)
    return ((ws, U2), (w, UV))


def _accumulate(acc: dict, key, coeff: LaurentPoly) -> None:
    s = acc.get(key)
    s = coeff if s is None else s + coeff
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class HeckeElement:
    """Sparse element of H_n: mapping from permutations of {1..n} to Laurent coefficients."""

    __slots__ = ("level", "_terms")

    def __init__(self, level: int, terms: Mapping[Permutation, LaurentPoly] | None = None):
        if level < 1:
            raise ValueError(f"H_n needs n >= 1, got {level}")
        self.level = level
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != level or sorted(w) != list(range(1, level + 1)):
                raise ValueError(f"{w} is not a permutation of 1..{level}")
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly.constant(c)
            if c:
                clean[w] = c
        self._terms = clean

    @classmethod
    def _raw(cls, level: int, terms: dict) -> HeckeElement:
        obj = cls.__new__(cls)
        obj.level = level
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, w: Permutation, coeff: LaurentPoly = ONE) -> HeckeElement:
        return cls(len(w), {tuple(w): coeff})

    @property
    def terms(self) -> dict[Permutation, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.level == other.level and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.level, frozenset(self._terms.items())))

    def __add__(self, other: HeckeElement) -> HeckeElement:
        _same_level(self, other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _accumulate(acc, w, c)
        return HeckeElement._raw(self.level, acc)

    def __neg__(self) -> HeckeElement:
        return HeckeElement._raw(self.level, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, c: LaurentPoly) -> HeckeElement:
        if not c:
            return HeckeElement._raw(self.level, {})
        return HeckeElement._raw(self.level, {w: x * c for w, x in self._terms.items() if x * c})

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other if isinstance(other, LaurentPoly) else LaurentPoly.constant(other))
        return mul(self, other)

    __rmul__ = __mul__

    def embed(self, level: int) -> HeckeElement:
        """Image under the inclusion H_n -> H_level (extra strands fixed)."""
        if level < self.level:
            raise ValueError("can only embed into a larger Hecke algebra")
        tail = tuple(range(self.level + 1, level + 1))
        return HeckeElement._raw(level, {w + tail: c for w, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=lambda w: (length(w), w)):
            parts.append(f"({self._terms[w]})*T{list(w)}")
        return " + ".join(parts)

    __repr__ = __str__


def _same_level(x: HeckeElement, y: HeckeElement) -> None:
    if x.level != y.level:
        raise ValueError(f"level mismatch: H_{x.level} vs H_{y.level}")


def identity(n: int) -> HeckeElement:
    return HeckeElement(n, {perm_identity(n): ONE})


def mul_gen(x: HeckeElement, i: int, sign: int = 1) -> HeckeElement:
    """x * g_i^{sign}."""
    if not 1 <= i <= x.level - 1:
        raise ValueError(f"generator {i} out of range for H_{x.level}")
    acc: dict[Permutation, LaurentPoly] = {}
    for w, c in x._terms.items():
        for w2, k in _basis_times_gen(w, i):
            _accumulate(acc, w2, c * k)
    if sign > 0:
        return HeckeElement._raw(x.level, acc)
    # g^{-1} = u^{-2} g - u^{-1} v
    for w, c in list(acc.items()):
        acc[w] = c * U_INV2
    for w, c in x._terms.items():
        _accumulate(acc, w, c * NEG_UINV_V)
    return HeckeElement._raw(x.level, acc)


def from_braid(beta: BraidWord) -> HeckeElement:
    x = identity(beta.strands)
    for letter in beta.letters:
        x = mul_gen(x, abs(letter), 1 if letter > 0 else -1)
    return x


@functools.lru_cache(maxsize=None)
def basis_product(v: Permutation, w: Permutation) -> tuple[tuple[Permutation, LaurentPoly], ...]:
    """T_v T_w in the permutation basis."""
    x = HeckeElement._raw(len(v), {v: ONE})
    for i in reduced_word(w):
        x = mul_gen(x, i, 1)
    return tuple(x._terms.items())


def mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    _same_level(x, y)
    acc: dict[Permutation, LaurentPoly] = {}
    for v, a in x._terms.items():
        for w, b in y._terms.items():
            ab = a * b
            for p, c in basis_product(v, w):
                _accumulate(acc, p, ab * c)
    return HeckeElement._raw(x.level, acc)


# -- Markov trace ----------------------------------------------------------

def _tau(w: Permutation, cache: dict | None) -> LaurentPoly:
    if cache is not None and w in cache:
        return cache[w]
    n = len(w)
    if n == 1:
        val = ONE
    elif w[-1] == n:
        val = Z * _tau(w[:-1], cache)
    else:
        # w = v s_{n-1} c' with v in S_{n-1} and c' = s_{n-2} ... s_m; rotate c' to the front.
        m = w.index(n) + 1
        rest = w
        for i in range(m, n):
            rest = _swap(rest, i)
        v = rest[:-1]
        c_prime = word_to_perm(range(n - 2, m - 1, -1), n - 1)
        val = ZERO
        for p, c in basis_product(c_prime, v):
            val = val + c * _tau(p, cache)
    if cache is not None:
        cache[w] = val
    return val


_TAU_CACHE: dict[Permutation, LaurentPoly] = {}


def trace_basis(w: Permutation, memo: bool = True) -> LaurentPoly:
    # dict item assignment is atomic, and every insert for a key stores the same value
    return _tau(tuple(w), _TAU_CACHE if memo else None)


def markov_trace(x: HeckeElement, memo: bool = True) -> LaurentPoly:
    total = ZERO
    for w, c in x._terms.items():
        total = total + c * trace_basis(w, memo)
    return total


def homfly(beta: BraidWord) -> LaurentPoly:
    return markov_trace(from_braid(beta))


# -- independent oracle ----------------------------------------------------

class OracleBoundExceeded(ValueError):
    pass


def _first_bad_crossing(n: int, word: tuple[int, ...]) -> tuple[int | None, int]:
    """
    Walk the closure component by component (ordered by smallest strand), each from
    the bottom of its smallest strand. Return the first crossing whose first visit is
    an under-pass, or None if the diagram is descending, plus the component count.

    Over-strand convention: for +i the strand entering at position i is over; for -i
    the strand entering at position i + 1.
    """
    perm = permutation(BraidWord(n, word))
    cycles = perm_cycles(perm)
    seen: set[int] = set()
    for cyc in cycles:
        start = cyc[0]
        pos = start
        while True:
            for t, x in enumerate(word):
                i = abs(x)
                if pos == i or pos == i + 1:
                    over = (pos == i) if x > 0 else (pos == i + 1)
                    if t not in seen:
                        if not over:
                            return t, len(cycles)
                        seen.add(t)
                    pos = i + 1 if pos == i else i
            if pos == start:
                break
    return None, len(cycles)


def skein_trace_oracle(beta: BraidWord, max_length: int = 14) -> LaurentPoly:
    """
    HOMFLYPT by switching crossings until the closure diagram is descending.

    Each switch uses g = u^2 g^{-1} + u v or g^{-1} = u^{-2} g - u^{-1} v on the
    letter; a descending diagram is a k-component unlink worth Z^{k-1}. This shares
    no code with the permutation-basis trace and is exponential in the word length.
    """
    if len(beta.letters) > max_length:
        raise OracleBoundExceeded(f"word length {len(beta.letters)} exceeds oracle bound {max_length}")
    n = beta.strands
    memo: dict[tuple[int, ...], LaurentPoly] = {}

    def value(word: tuple[int, ...]) -> LaurentPoly:
        if word in memo:
            return memo[word]
        t, k = _first_bad_crossing(n, word)
        if t is None:
            res = Z ** (k - 1)
        else:
            x = word[t]
            switched = word[:t] + (-x,) + word[t + 1:]
            smoothed = word[:t] + word[t + 1:]
            if x > 0:
                res = U2 * value(switched) + UV * value(smoothed)
            else:
                res = U_INV2 * value(switched) + NEG_UINV_V * value(smoothed)
        memo[word] = res
        return res

    return value(beta.letters)
