import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import braids
from yhlinks import invariants
from yhlinks.braid import BraidWord, components, conjugate, linking_matrix, stabilize
from yhlinks.hecke import Z, homfly
from yhlinks.invariants import (
    RouteMismatch,
    enumerate_families,
    family_linking,
    td,
    td_via_matrix,
    td_via_sublinks,
    top_formula,
)
from yhlinks.laurent import ONE, ZERO, LaurentPoly, monomial

HOPF = BraidWord(2, (1, 1))
NEG_HOPF = BraidWord(2, (-1, -1))
TREFOIL = BraidWord(2, (1, 1, 1))
UNLINK2 = BraidWord(2)


def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_td_matrix_examples():
    for beta in (TREFOIL, HOPF, BraidWord(3, (1, -2, 1, -2))):
        assert td_via_matrix(beta, 1) == homfly(beta)
    assert td_via_matrix(HOPF, 2) == monomial(2, 2, 0, 2)
    assert td_via_matrix(TREFOIL, 2) == ZERO


def test_bruteforce_model_agrees():
    for beta in (HOPF, TREFOIL, BraidWord(3, (1, 1, 2, -1, 2)), BraidWord(3)):
        for d in (1, 2, 3):
            assert td_via_matrix(beta, d, model="bruteforce") == td_via_matrix(beta, d)


def test_enumerate_families_examples():
    assert len(enumerate_families(HOPF, 2)) == 1
    assert len(enumerate_families(BraidWord(3), 2)) == 3
    assert enumerate_families(TREFOIL, 2) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_family_counts_are_stirling(n):
    for d in range(1, n + 2):
        assert len(enumerate_families(BraidWord(n), d)) == stirling2(n, d)


def test_family_linking_examples():
    (fam,) = enumerate_families(HOPF, 2)
    assert family_linking(HOPF, fam) == 2
    (fam,) = enumerate_families(UNLINK2, 2)
    assert family_linking(UNLINK2, fam) == 0
    (fam,) = enumerate_families(NEG_HOPF, 2)
    assert family_linking(NEG_HOPF, fam) == -2


def test_td_sublinks_examples():
    assert td_via_sublinks(HOPF, 2) == monomial(2, 2, 0, 2)
    assert td_via_sublinks(UNLINK2, 2) == LaurentPoly.constant(2)
    # three-component unlink, d = 2: three families, each z * 1, times 2!
    assert td_via_sublinks(BraidWord(3), 2) == (Z * 3).scale(2)


def test_top_formula_example():
    # sigma_1^3 sigma_2^2: trefoil on {1,2} linked once with an unknot
    beta = BraidWord(3, (1, 1, 1, 2, 2))
    trefoil_p = homfly(TREFOIL)
    assert td(beta, 2) == monomial(2, 2, 0, 2) * trefoil_p
    assert top_formula(beta, linking_matrix(beta)) == monomial(2, 2, 0, 2) * trefoil_p


def test_td_dispatch_examples():
    assert td(BraidWord(1), 1, "both") == ONE
    assert td(HOPF, 2, "both") == monomial(2, 2, 0, 2)
    assert td(TREFOIL, 2, "both") == ZERO
    with pytest.raises(ValueError):
        td(HOPF, 2, "nope")
    with pytest.raises(ValueError):
        td_via_matrix(HOPF, 0)


def test_route_mismatch_is_reported(monkeypatch):
    monkeypatch.setattr(invariants, "td_via_sublinks", lambda beta, d: ONE)
    with pytest.raises(RouteMismatch):
        td(HOPF, 2, "both")


def test_d_larger_than_n():
    assert td(HOPF, 3) == ZERO
    assert td(BraidWord(1), 4) == ZERO


def test_unknot_representatives():
    for beta in (BraidWord(1), BraidWord(2, (1,)), BraidWord(3, (1, 2)), BraidWord(3, (-2, 1))):
        assert td(beta, 1) == ONE


@settings(max_examples=80)
@given(braids(max_n=5, max_len=10))
def test_routes_agree(beta):
    for d in (1, 2, 3):
        assert td_via_matrix(beta, d) == td_via_sublinks(beta, d)


@settings(max_examples=40)
@given(braids(min_n=2, max_n=4, max_len=8), st.data())
def test_markov_invariance(beta, data):
    i = data.draw(st.integers(1, beta.strands - 1))
    for d in (1, 2, 3):
        t = td_via_matrix(beta, d)
        assert td_via_matrix(conjugate(beta, i), d) == t
        assert td_via_matrix(stabilize(beta, 1), d) == t
        assert td_via_matrix(stabilize(beta, -1), d) == t


@given(braids(max_n=5, max_len=10))
def test_vanishing_and_top(beta):
    N = len(components(beta))
    assert td_via_matrix(beta, N + 1) == ZERO
    assert td_via_matrix(beta, N) == top_formula(beta, linking_matrix(beta))


@given(braids(max_n=5, max_len=10), st.integers(1, 3))
def test_integrality(beta, d):
    t = td_via_matrix(beta, d)
    assert all(c % math.factorial(d) == 0 for _, c in t.items())


@given(braids(max_n=5, max_len=10))
def test_t1_is_gamma_free(beta):
    assert td_via_matrix(beta, 1).degrees(2) <= {0}


def test_threaded_sum_is_order_independent():
    beta = BraidWord(5, (1, 2, -3, 4, 1, -2))
    assert td_via_sublinks(beta, 2, workers=4) == td_via_sublinks(beta, 2)
