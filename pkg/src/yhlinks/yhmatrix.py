"""
Matrix model of the Yokonuma-Hecke algebra Y_{d,n}.

Y_{d,n} is realised as a direct sum over compositions mu of n into d parts of matrix
algebras over H_{mu_1} (x) ... (x) H_{mu_d}, rows and columns indexed by ordered set
partitions of shape mu. Matrices are stored sparsely as ``{(row, col): Entry}``; the
block of an entry is the shape of its row.

An ``Entry`` is an element of Z[xi] (x) H^mu, where xi is a primitive d-th root of
unity kept symbolic. Its terms are keyed by (root exponent, tuple of factor
permutations). Exponents are reduced modulo the d-th cyclotomic polynomial so that
equality of entries is equality of algebra elements. A level-0 factor is the empty
permutation ``()`` and stands for the scalar ring.

Products follow (AB)_{I,K} = sum_J A_{I,J} B_{J,K}.
"""

from __future__ import annotations

import functools
from typing import Iterable, Mapping

from . import hecke
from .braid import (
    BraidWord,
    Permutation,
    partition_linking,
    perm_identity,
    perm_inverse,
    permutation,
    remove_strands_top,
)
from .hecke import HeckeElement, basis_product
from .laurent import ONE, ZERO, LaurentPoly, int_pow, monomial
from .setpart import (
    OrderedSetPartition,
    act,
    all_partitions,
    format_partition,
    part_of,
    shape,
    swap_partition,
)

Perms = tuple[Permutation, ...]
Key = tuple[int, Perms]

U = monomial(1, 1, 0, 0)
UG = monomial(1, 1, 0, 1)
G = monomial(1, 0, 0, 1)


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Integer coefficients of the d-th cyclotomic polynomial, constant term first."""
    num = [-1] + [0] * (d - 1) + [1]
    for k in range(1, d):
        if d % k == 0:
            num = _exact_divide(num, list(cyclotomic(k)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c = num[shift + len(den) - 1]  # den is monic
        q[shift] = c
        for k, dk in enumerate(den):
            num[shift + k] -= c * dk
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return q


def _canonical(terms: dict[Key, LaurentPoly], d: int) -> dict[Key, LaurentPoly]:
    phi = cyclotomic(d)
    top = len(phi) - 1
    if any(r >= top for r, _ in terms):
        acc = dict(terms)
        for r in range(d - 1, top - 1, -1):
            for (rr, perms), c in list(acc.items()):
                if rr != r:
                    continue
                del acc[(rr, perms)]
                # xi^r = -xi^{r-top} * (phi_0 + ... + phi_{top-1} xi^{top-1})
                for k in range(top):
                    if phi[k]:
                        key = (r - top + k, perms)
                        acc[key] = acc.get(key, ZERO) - c.scale(phi[k])
        terms = acc
    return {k: c for k, c in terms.items() if c}


class Entry:
    """Sparse element of Z[xi_d] (x) H_{mu_1} (x) ... (x) H_{mu_d}."""

    __slots__ = ("d", "_terms")

    def __init__(self, d: int, terms: Mapping[Key, LaurentPoly]):
        self.d = d
        acc: dict[Key, LaurentPoly] = {}
        for (r, p), c in terms.items():
            key = (r % d, tuple(p))
            acc[key] = acc[key] + c if key in acc else c
        self._terms = _canonical(acc, d)

    @classmethod
    def scalar(cls, d: int, mu: Iterable[int], c: LaurentPoly = ONE, root: int = 0) -> Entry:
        return cls(d, {(root, tuple(perm_identity(m) for m in mu)): c})

    @classmethod
    def tensor(cls, d: int, factors: Iterable[HeckeElement | None], c: LaurentPoly = ONE) -> Entry:
        """c * (x_1 (x) ... (x) x_d); ``None`` marks a level-0 scalar factor."""
        acc: dict[Perms, LaurentPoly] = {(): c}
        for x in factors:
            items = [((), ONE)] if x is None else list(x.items())
            nxt: dict[Perms, LaurentPoly] = {}
            for perms, a in acc.items():
                for w, b in items:
                    nxt[perms + (w,)] = a * b
            acc = nxt
        return cls(d, {(0, perms): coeff for perms, coeff in acc.items()})

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Entry):
            return NotImplemented
        return self.d == other.d and self._terms == other._terms

    def __add__(self, other: Entry) -> Entry:
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, ZERO) + c
        return Entry(self.d, acc)

    def __neg__(self) -> Entry:
        return Entry(self.d, {k: -c for k, c in self._terms.items()})

    def scale(self, c: LaurentPoly) -> Entry:
        return Entry(self.d, {k: x * c for k, x in self._terms.items()})

    def __mul__(self, other: Entry) -> Entry:
        acc: dict[Key, LaurentPoly] = {}
        for (r1, p1), a in self._terms.items():
            for (r2, p2), b in other._terms.items():
                ab = a * b
                prods = [basis_product(v, w) if v else (((), ONE),) for v, w in zip(p1, p2)]
                partial: dict[Perms, LaurentPoly] = {(): ab}
                for options in prods:
                    nxt: dict[Perms, LaurentPoly] = {}
                    for perms, c in partial.items():
                        for w, k in options:
                            nxt[perms + (w,)] = c * k
                    partial = nxt
                r = (r1 + r2) % self.d
                for perms, c in partial.items():
                    key = (r, perms)
                    acc[key] = acc.get(key, ZERO) + c
        return Entry(self.d, acc)

    def root_exponents(self) -> set[int]:
        return {r for r, _ in self._terms}

    def tensor_trace(self) -> LaurentPoly:
        """(tau_{mu_1} (x) ... (x) tau_{mu_d}) of an entry free of roots of unity."""
        total = ZERO
        for (r, perms), c in self._terms.items():
            if r:
                raise ValueError("tensor trace of an entry involving roots of unity is not Z-valued")
            t = c
            for w in perms:
                if w:
                    t = t * hecke.trace_basis(w)
            total = total + t
        return total

    def format(self) -> str:
        by_root: dict[int, list[str]] = {}
        for (r, perms), c in sorted(self._terms.items()):
            tens = " (x) ".join(f"T{list(w)}" for w in perms)
            by_root.setdefault(r, []).append(f"({c})*{tens}")
        return "; ".join(f"xi^{r}: " + " + ".join(v) for r, v in sorted(by_root.items()))

    def __repr__(self) -> str:
        return f"Entry({self.format()})"


class SparseBlockMatrix:
    """Element of the direct sum of Mat_mu(H^mu), stored as {(row, col): Entry}."""

    def __init__(self, d: int, n: int, entries: Mapping[tuple[OrderedSetPartition, OrderedSetPartition], Entry] = None):
        self.d = d
        self.n = n
        self.entries = {}
        for (row, col), e in (entries or {}).items():
            if shape(row) != shape(col):
                raise ValueError(f"row {row} and column {col} have different shapes")
            if e:
                self.entries[(row, col)] = e

    @classmethod
    def identity(cls, d: int, n: int) -> SparseBlockMatrix:
        return cls(d, n, {(I, I): Entry.scalar(d, shape(I)) for I in all_partitions(n, d)})

    @property
    def blocks(self) -> dict[tuple[int, ...], dict]:
        out: dict[tuple[int, ...], dict] = {}
        for (row, col), e in self.entries.items():
            out.setdefault(shape(row), {})[(row, col)] = e
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseBlockMatrix):
            return NotImplemented
        return (self.d, self.n) == (other.d, other.n) and self.entries == other.entries

    def _check(self, other: SparseBlockMatrix) -> None:
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError(f"shape mismatch: Y_{{{self.d},{self.n}}} vs Y_{{{other.d},{other.n}}}")

    def __add__(self, other: SparseBlockMatrix) -> SparseBlockMatrix:
        self._check(other)
        acc = dict(self.entries)
        for k, e in other.entries.items():
            acc[k] = acc[k] + e if k in acc else e
        return SparseBlockMatrix(self.d, self.n, acc)

    def __sub__(self, other: SparseBlockMatrix) -> SparseBlockMatrix:
        return self + other.scale(LaurentPoly.constant(-1))

    def scale(self, c: LaurentPoly) -> SparseBlockMatrix:
        return SparseBlockMatrix(self.d, self.n, {k: e.scale(c) for k, e in self.entries.items()})

    def __matmul__(self, other: SparseBlockMatrix) -> SparseBlockMatrix:
        return matmul(self, other)

    def is_monomial(self) -> bool:
        rows = [r for r, _ in self.entries]
        cols = [c for _, c in self.entries]
        return len(set(rows)) == len(rows) and len(set(cols)) == len(cols)

    def dump(self) -> str:
        """One line per (entry, root exponent): ``mu | row | col | root_exp | tensor``."""
        lines = []
        order = {I: k for k, I in enumerate(all_partitions(self.n, self.d))}
        for (row, col) in sorted(self.entries, key=lambda rc: (order[rc[0]], order[rc[1]])):
            e = self.entries[(row, col)]
            for r in sorted(e.root_exponents()):
                tens = " + ".join(
                    f"({c})*" + " (x) ".join(f"T{list(w)}" for w in perms)
                    for (rr, perms), c in sorted(e.items()) if rr == r
                )
                mu = ",".join(map(str, shape(row)))
                lines.append(
                    f"({mu}) | {format_partition(row)} | {format_partition(col)} | {r} | {tens}"
                )
        return "\n".join(lines)


def matmul(A: SparseBlockMatrix, B: SparseBlockMatrix) -> SparseBlockMatrix:
    A._check(B)
    by_row: dict[OrderedSetPartition, list] = {}
    for (J, K), e in B.entries.items():
        by_row.setdefault(J, []).append((K, e))
    acc: dict = {}
    for (I, J), a in A.entries.items():
        for K, b in by_row.get(J, ()):
            prod = a * b
            acc[(I, K)] = acc[(I, K)] + prod if (I, K) in acc else prod
    return SparseBlockMatrix(A.d, A.n, acc)


# -- generator images ------------------------------------------------------

def _check_index(k: int, lo: int, hi: int) -> None:
    if not lo <= k <= hi:
        raise ValueError(f"index {k} out of range {lo}..{hi}")


def _local_generator(I: OrderedSetPartition, i: int, sign: int, d: int) -> Entry:
    """1 (x) ... (x) g_k^{sign} (x) ... (x) 1 with g_k in the factor holding i and i+1."""
    a = part_of(I, i)
    k = sum(1 for j in I[a] if j <= i)
    factors = []
    for b, part in enumerate(I):
        if not part:
            factors.append(None)
        elif b == a:
            factors.append(hecke.mul_gen(hecke.identity(len(part)), k, sign))
        else:
            factors.append(hecke.identity(len(part)))
    return Entry.tensor(d, factors)


@functools.lru_cache(maxsize=None)
def gen_image_t(j: int, d: int, n: int) -> SparseBlockMatrix:
    _check_index(j, 1, n)
    return SparseBlockMatrix(d, n, {
        (I, I): Entry.scalar(d, shape(I), root=part_of(I, j)) for I in all_partitions(n, d)
    })


def _g_like(i: int, sign: int, d: int, n: int, mixed: LaurentPoly) -> SparseBlockMatrix:
    _check_index(i, 1, n - 1)
    entries = {}
    for I in all_partitions(n, d):
        J = swap_partition(I, i)
        if J != I:
            entries[(I, J)] = Entry.scalar(d, shape(I), mixed)
        else:
            entries[(I, I)] = _local_generator(I, i, sign, d)
    return SparseBlockMatrix(d, n, entries)


@functools.lru_cache(maxsize=None)
def gen_image_g(i: int, sign: int, d: int, n: int) -> SparseBlockMatrix:
    return _g_like(i, sign, d, n, int_pow(U, sign))


@functools.lru_cache(maxsize=None)
def e_image(i: int, d: int, n: int) -> SparseBlockMatrix:
    _check_index(i, 1, n - 1)
    return SparseBlockMatrix(d, n, {
        (I, I): Entry.scalar(d, shape(I))
        for I in all_partitions(n, d) if part_of(I, i) == part_of(I, i + 1)
    })


@functools.lru_cache(maxsize=None)
def delta_gen_image(i: int, sign: int, d: int, n: int) -> SparseBlockMatrix:
    """Image of (gamma + (1 - gamma) e_i) g_i, or of its inverse for sign = -1."""
    return _g_like(i, sign, d, n, int_pow(UG, sign))


def psi_delta_bruteforce(beta: BraidWord, d: int) -> SparseBlockMatrix:
    M = SparseBlockMatrix.identity(d, beta.strands)
    for x in beta.letters:
        M = M @ delta_gen_image(abs(x), 1 if x > 0 else -1, d, beta.strands)
    return M


def closed_entry(beta: BraidWord, I: OrderedSetPartition, d: int) -> Entry:
    """(u gamma)^{l_I} F_{I_1}(beta) (x) ... (x) F_{I_d}(beta), with I read as top positions."""
    l = partition_linking(beta, I, top=True)
    factors = [hecke.from_braid(remove_strands_top(beta, part)) if part else None for part in I]
    return Entry.tensor(d, factors, int_pow(UG, l))


def psi_delta_closed(beta: BraidWord, d: int) -> SparseBlockMatrix:
    """
    Closed form of the image of a braid: column I carries one entry, in row p^{-1}(I).

    ``p`` maps bottom positions to top positions, so p^{-1}(I) is the bottom set
    of the strands that end at I.
    """
    p_inv = perm_inverse(permutation(beta))
    return SparseBlockMatrix(d, beta.strands, {
        (act(p_inv, I), I): closed_entry(beta, I, d) for I in all_partitions(beta.strands, d)
    })


# -- relation checking -----------------------------------------------------

def check_relations(d: int, n: int, g=None, t=None, e=None, max_size: int = 5000) -> dict[str, bool]:
    """
    Verify the defining relations of Y_{d,n} on generator images by exact equality.

    ``g``, ``t`` and ``e`` may replace the image constructors (signature as
    ``gen_image_g``, ``gen_image_t``, ``e_image``), e.g. to run a negative control.
    """
    g = g or gen_image_g
    t = t or gen_image_t
    e = e or e_image
    if d ** n > max_size:
        raise ValueError(f"Y_{{{d},{n}}} has {d ** n} index partitions; raise max_size to check it")
    one = SparseBlockMatrix.identity(d, n)
    U2 = monomial(1, 2, 0, 0)
    UV = monomial(1, 1, 1, 0)
    res: dict[str, bool] = {}

    def record(name: str, ok: bool) -> None:
        res[name] = res.get(name, True) and ok

    for i in range(1, n):
        gi = g(i, 1, d, n)
        for j in range(i + 2, n):
            gj = g(j, 1, d, n)
            record("g_i g_j = g_j g_i", gi @ gj == gj @ gi)
        if i + 1 < n:
            gk = g(i + 1, 1, d, n)
            record("g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}", gi @ gk @ gi == gk @ gi @ gk)
        ei = e(i, d, n)
        record("g_i^2 = u^2 + u v e_i g_i", gi @ gi == one.scale(U2) + (ei @ gi).scale(UV))
        record("g_i g_i^{-1} = 1", gi @ g(i, -1, d, n) == one and g(i, -1, d, n) @ gi == one)
        record("e_i^2 = e_i", ei @ ei == ei)
        total = None
        for s in range(1, d + 1):
            term = one
            for _ in range(s):
                term = term @ t(i, d, n)
            for _ in range(s * (d - 1)):  # t^{-s} = t^{s(d-1)}
                term = term @ t(i + 1, d, n)
            total = term if total is None else total + term
        record("d e_i = sum_s t_i^s t_{i+1}^{-s}", ei.scale(LaurentPoly.constant(d)) == total)
        for j in range(1, n + 1):
            sj = i + 1 if j == i else i if j == i + 1 else j
            record("g_i t_j = t_{s_i(j)} g_i", gi @ t(j, d, n) == t(sj, d, n) @ gi)
    for j in range(1, n + 1):
        tj = t(j, d, n)
        for k in range(1, n + 1):
            record("t_i t_j = t_j t_i", tj @ t(k, d, n) == t(k, d, n) @ tj)
        power = one
        for _ in range(d):
            power = power @ tj
        record("t_j^d = 1", power == one)
    return res
