"""Seeded randomized consistency suites, shared by ``yhlinks selfcheck`` and the tests."""

from __future__ import annotations

import dataclasses
import itertools
import random
from typing import Callable, Iterator

from . import hecke
from .braid import (
    BraidWord,
    components,
    conjugate,
    linking_matrix,
    perm_inverse,
    permutation,
    random_braid,
    remove_strands_bottom,
    remove_strands_top,
    stabilize,
)
from .hecke import HeckeElement
from .invariants import td_via_matrix, td_via_sublinks, top_formula
from .laurent import LaurentPoly, monomial
from .yhmatrix import check_relations, psi_delta_bruteforce, psi_delta_closed


@dataclasses.dataclass(frozen=True)
class Bounds:
    max_n: int = 4
    max_d: int = 3
    max_len: int = 8
    trials: int = 100
    seed: int = 42


@dataclasses.dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, what: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = what()

    @property
    def ok(self) -> bool:
        return self.failed == 0


def sample_braids(rng: random.Random, count: int, max_n: int, max_len: int, min_n: int = 1) -> Iterator[BraidWord]:
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        length = rng.randint(0, max_len) if n > 1 else 0
        yield random_braid(n, length, rng)


def all_words(n: int, max_len: int) -> Iterator[BraidWord]:
    letters = [x for i in range(1, n) for x in (i, -i)]
    for length in range(max_len + 1):
        if n == 1 and length:
            return
        for w in itertools.product(letters, repeat=length):
            yield BraidWord(n, w)


def random_hecke(rng: random.Random, n: int, max_terms: int = 4) -> HeckeElement:
    perms = list(itertools.permutations(range(1, n + 1)))
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = monomial(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(-2, 2), rng.randint(-2, 2))
        w = rng.choice(perms)
        terms[w] = terms.get(w, LaurentPoly()) + c
    return HeckeElement(n, terms)


def suite_closed_form(b: Bounds) -> SuiteResult:
    res = SuiteResult("closed form = brute-force matrix product")
    rng = random.Random(b.seed)
    for beta in sample_braids(rng, b.trials, b.max_n, b.max_len):
        d = rng.randint(1, b.max_d)
        M = psi_delta_bruteforce(beta, d)
        res.record(M == psi_delta_closed(beta, d) and M.is_monomial(), lambda: f"{beta}, d={d}")
    return res


def suite_routes(b: Bounds) -> SuiteResult:
    res = SuiteResult("T_d matrix route = sublink route")
    rng = random.Random(b.seed + 1)
    for beta in sample_braids(rng, b.trials, b.max_n, b.max_len):
        for d in range(1, b.max_d + 1):
            res.record(td_via_matrix(beta, d) == td_via_sublinks(beta, d), lambda: f"{beta}, d={d}")
    return res


def suite_t1(b: Bounds) -> SuiteResult:
    res = SuiteResult("T_1 = HOMFLYPT")
    rng = random.Random(b.seed + 2)
    for beta in sample_braids(rng, b.trials, b.max_n, b.max_len):
        res.record(td_via_matrix(beta, 1) == hecke.homfly(beta), lambda: str(beta))
    return res


def suite_markov(b: Bounds) -> SuiteResult:
    res = SuiteResult("T_d invariant under Markov moves")
    rng = random.Random(b.seed + 3)
    for beta in sample_braids(rng, b.trials, b.max_n, b.max_len, min_n=2):
        i = rng.randint(1, beta.strands - 1)
        moved = [conjugate(beta, i), stabilize(beta, 1), stabilize(beta, -1)]
        for d in range(1, b.max_d + 1):
            base = td_via_matrix(beta, d)
            res.record(all(td_via_matrix(m, d) == base for m in moved), lambda: f"{beta}, d={d}")
    return res


def suite_vanishing_top(b: Bounds) -> SuiteResult:
    res = SuiteResult("vanishing above #components, top formula at #components")
    rng = random.Random(b.seed + 4)
    for beta in sample_braids(rng, b.trials, b.max_n, b.max_len):
        N = len(components(beta))
        val = td_via_sublinks(beta, N)
        ok = val == top_formula(beta, linking_matrix(beta)) and td_via_matrix(beta, N) == val
        ok = ok and all(not td_via_matrix(beta, d) for d in range(N + 1, N + 3))
        res.record(ok, lambda: str(beta))
    return res


def suite_relations(b: Bounds) -> SuiteResult:
    res = SuiteResult("defining relations of Y_{d,n}")
    for d in range(1, b.max_d + 1):
        for n in range(1, b.max_n + 1):
            if d ** n > 100:
                continue
            for name, ok in check_relations(d, n).items():
                res.record(ok, lambda: f"{name} at d={d}, n={n}")
    return res


def suite_strand_duality(b: Bounds) -> SuiteResult:
    res = SuiteResult("top removal = bottom removal of preimage")
    rng = random.Random(b.seed + 5)
    for beta in sample_braids(rng, b.trials, b.max_n, b.max_len):
        J = [j for j in range(1, beta.strands + 1) if rng.random() < 0.5] or [1]
        p_inv = perm_inverse(permutation(beta))
        bottom = remove_strands_bottom(beta, [p_inv[j - 1] for j in J])
        res.record(remove_strands_top(beta, J) == bottom, lambda: f"{beta}, J={J}")
    return res


def suite_oracle(b: Bounds) -> SuiteResult:
    res = SuiteResult("HOMFLYPT = crossing-switch oracle")
    rng = random.Random(b.seed + 6)
    for beta in sample_braids(rng, b.trials, min(b.max_n, 4), min(b.max_len, 8)):
        res.record(hecke.homfly(beta) == hecke.skein_trace_oracle(beta), lambda: str(beta))
    return res


def suite_trace(b: Bounds) -> SuiteResult:
    res = SuiteResult("Markov trace axioms")
    rng = random.Random(b.seed + 7)
    for _ in range(b.trials):
        n = rng.randint(1, b.max_n)
        x, y = random_hecke(rng, n), random_hecke(rng, n)
        ok = hecke.markov_trace(x * y) == hecke.markov_trace(y * x)
        up = x.embed(n + 1)
        for sign in (1, -1):
            ok = ok and hecke.markov_trace(hecke.mul_gen(up, n, sign)) == hecke.markov_trace(x)
        res.record(ok, lambda: f"x={x}, y={y}")
    return res


SUITES = [
    suite_closed_form,
    suite_routes,
    suite_t1,
    suite_markov,
    suite_vanishing_top,
    suite_relations,
    suite_strand_duality,
    suite_oracle,
    suite_trace,
]


def run_all(bounds: Bounds) -> list[SuiteResult]:
    return [suite(bounds) for suite in SUITES]
