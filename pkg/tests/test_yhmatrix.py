import cmath
import random

import pytest
from hypothesis import given, settings

from conftest import braids
from yhlinks import hecke
from yhlinks.braid import BraidWord, perm_inverse, permutation
from yhlinks.checks import all_words
from yhlinks.laurent import ONE, LaurentPoly, monomial
from yhlinks.setpart import act, all_partitions
from yhlinks.yhmatrix import (
    Entry,
    SparseBlockMatrix,
    _g_like,
    check_relations,
    cyclotomic,
    delta_gen_image,
    e_image,
    gen_image_g,
    gen_image_t,
    matmul,
    psi_delta_bruteforce,
    psi_delta_closed,
)

u = monomial(1, 1)
g = monomial(1, 0, 0, 1)
ug = monomial(1, 1, 0, 1)


def identity(d, n):
    return SparseBlockMatrix.identity(d, n)


def g1_local(level=2):
    return hecke.mul_gen(hecke.identity(level), 1)


@pytest.mark.parametrize("d", range(1, 13))
def test_cyclotomic_vanishes_at_primitive_root(d):
    phi = cyclotomic(d)
    xi = cmath.exp(2j * cmath.pi / d)
    assert phi[-1] == 1
    assert abs(sum(c * xi**k for k, c in enumerate(phi))) < 1e-9


def test_cyclotomic_known():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)


def test_t_image_examples():
    assert gen_image_t(2, 1, 3) == identity(1, 3)
    T = gen_image_t(1, 2, 1)
    assert T.entries == {
        (((1,), ()), ((1,), ())): Entry.scalar(2, (1, 0)),
        (((), (1,)), ((), (1,))): Entry.scalar(2, (0, 1), root=1),
    }
    # with d = 2 the root xi is -1
    assert T.entries[(((), (1,)), ((), (1,)))] == Entry.scalar(2, (0, 1), LaurentPoly.constant(-1))
    for d in (2, 3, 4):
        P = identity(d, 2)
        for _ in range(d):
            P = P @ gen_image_t(1, d, 2)
        assert P == identity(d, 2)


def test_g_image_examples():
    G = gen_image_g(1, 1, 2, 2)
    mixed = {k: e for k, e in G.blocks[(1, 1)].items()}
    assert mixed == {
        (((1,), (2,)), ((2,), (1,))): Entry.scalar(2, (1, 1), u),
        (((2,), (1,)), ((1,), (2,))): Entry.scalar(2, (1, 1), u),
    }
    assert G.blocks[(2, 0)] == {(((1, 2), ()), ((1, 2), ())): Entry.tensor(2, [g1_local(), None])}
    assert G @ gen_image_g(1, -1, 2, 2) == identity(2, 2)


def test_e_image_examples():
    assert e_image(1, 1, 3) == identity(1, 3)
    E = e_image(1, 2, 2)
    assert set(E.entries) == {(((1, 2), ()), ((1, 2), ())), (((), (1, 2)), ((), (1, 2)))}
    for d, n in [(2, 2), (2, 3), (3, 3)]:
        for i in range(1, n):
            assert e_image(i, d, n) @ e_image(i, d, n) == e_image(i, d, n)


@pytest.mark.parametrize("d,n", [(1, 2), (2, 2), (2, 3), (3, 3), (3, 2), (2, 4)])
def test_delta_image_is_the_defining_product(d, n):
    one = identity(d, n)
    for i in range(1, n):
        E = e_image(i, d, n)
        coeff = one.scale(g) + E - E.scale(g)  # gamma + (1 - gamma) e_i
        expected = coeff @ gen_image_g(i, 1, d, n)
        assert delta_gen_image(i, 1, d, n) == expected
        assert delta_gen_image(i, 1, d, n) @ delta_gen_image(i, -1, d, n) == one


def test_delta_examples():
    D = delta_gen_image(1, 1, 2, 2)
    assert all(e == Entry.scalar(2, (1, 1), ug) for e in D.blocks[(1, 1)].values())
    assert delta_gen_image(1, 1, 1, 2) == gen_image_g(1, 1, 1, 2)
    assert psi_delta_bruteforce(BraidWord(2, (1, -1)), 2) == identity(2, 2)


def test_matmul_examples():
    A = delta_gen_image(2, 1, 2, 3)
    assert A @ identity(2, 3) == A == identity(2, 3) @ A
    G = gen_image_g(1, 1, 2, 2)
    rhs = identity(2, 2).scale(monomial(1, 2)) + (e_image(1, 2, 2) @ G).scale(monomial(1, 1, 1))
    assert G @ G == rhs
    B = delta_gen_image(1, -1, 2, 3)
    assert matmul(A, B).is_monomial()
    with pytest.raises(ValueError):
        matmul(A, identity(2, 2))


def test_bruteforce_examples():
    assert psi_delta_bruteforce(BraidWord(3), 2) == identity(2, 3)
    M = psi_delta_bruteforce(BraidWord(2, (1, 1)), 2)
    sq = Entry.scalar(2, (1, 1), monomial(1, 2, 0, 2))
    assert M.blocks[(1, 1)] == {(((1,), (2,)), ((1,), (2,))): sq, (((2,), (1,)), ((2,), (1,))): sq}


def test_closed_examples():
    assert psi_delta_closed(BraidWord(3), 3) == identity(3, 3)
    C = psi_delta_closed(BraidWord(2, (1,)), 2)
    assert C.entries[(((1, 2), ()), ((1, 2), ()))] == Entry.tensor(2, [g1_local(), None])
    C = psi_delta_closed(BraidWord(2, (1, 1)), 2)
    assert C.entries[(((1,), (2,)), ((1,), (2,)))] == Entry.scalar(2, (1, 1), monomial(1, 2, 0, 2))


def test_closed_equals_bruteforce_exhaustive_small():
    for n in (1, 2, 3):
        for beta in all_words(n, 4):
            for d in (1, 2, 3):
                assert psi_delta_closed(beta, d) == psi_delta_bruteforce(beta, d), (beta, d)


@settings(max_examples=40)
@given(braids(max_n=4, max_len=8))
def test_closed_equals_bruteforce_random(beta):
    for d in (1, 2, 3):
        assert psi_delta_closed(beta, d) == psi_delta_bruteforce(beta, d)


@settings(max_examples=40)
@given(braids(max_n=4, max_len=8))
def test_support_is_graph_of_permutation(beta):
    p_inv = perm_inverse(permutation(beta))
    for d in (1, 2):
        M = psi_delta_bruteforce(beta, d)
        assert M.is_monomial()
        assert set(M.entries) == {(act(p_inv, I), I) for I in all_partitions(beta.strands, d)}


def test_multiplicativity():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(2, 4)
        a = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))))
        b = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))))
        d = rng.randint(1, 3)
        assert psi_delta_bruteforce(a * b, d) == psi_delta_bruteforce(a, d) @ psi_delta_bruteforce(b, d)


@pytest.mark.parametrize("d,n", [(1, 3), (2, 2), (2, 3), (3, 3), (2, 4), (4, 2), (6, 2)])
def test_relations_hold(d, n):
    report = check_relations(d, n)
    assert report and all(report.values()), report


def test_relations_negative_control():
    def corrupt_g(i, sign, d, n):
        return _g_like(i, sign, d, n, monomial(1, 2 * sign))
    report = check_relations(2, 3, g=corrupt_g)
    assert not report["g_i^2 = u^2 + u v e_i g_i"]
    assert report["t_j^d = 1"]


def test_dump_format():
    lines = psi_delta_closed(BraidWord(2, (1, 1)), 2).dump().splitlines()
    assert lines[0] == "(2,0) | {1,2}|{} | {1,2}|{} | 0 | (u^2)*T[1, 2] (x) T[] + (u*v)*T[2, 1] (x) T[]"
    assert lines[1] == "(1,1) | {1}|{2} | {1}|{2} | 0 | (u^2*g^2)*T[1] (x) T[1]"
    assert len(lines) == 4
    assert all(len(line.split(" | ")) == 5 for line in lines)
