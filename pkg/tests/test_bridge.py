from itertools import product

import numpy as np

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperkit.bridge import (balance_matrix, boxplus_I_hypergroup, boxplus_nabla,
                             check_assumption_hyper1, check_closed_chain,
                             check_hypersystem_product, compare_boxplus, elimination_profile,
                             find_isomorphism, hypersystem_of, large_set_ideal, recover_hyperring,
                             retraction_suite, table_diff)
from hyperkit.carrier import (ClosureCapExceeded, DomainError, HyperTable, PreconditionError,
                              System)
from hyperkit.catalog import build, viro_multigroup
from hyperkit.families import supertropical_window
from hyperkit.hyper import check_hypergroup, integers_mod, quotient_hyperring

HYPERFIELDS = ["krasner", "signs", "fp-mod-g:5:1,4", "fp-mod-g:7:1,6", "fp-mod-g:13:1,3,9"]


def brute_closure(H):
    """Subsets reachable from singletons by setwise ⊞, as frozensets of ids."""
    def plus(A, B):
        return frozenset(c for a in A for b in B for c in H.add(a, b))
    seen = {frozenset([a]) for a in range(H.n)}
    grew = True
    while grew:
        grew = False
        for A, B in product(list(seen), repeat=2):
            C = plus(A, B)
            if C not in seen:
                seen.add(C)
                grew = True
    return seen


@pytest.mark.parametrize("name", HYPERFIELDS)
def test_hypersystem_is_the_closure(name):
    H = build(name)
    S = hypersystem_of(H)
    assert {frozenset(m) for m in S.members} == brute_closure(H)
    assert len(S.tangible) == H.n - 1


@pytest.mark.parametrize("name", HYPERFIELDS)
def test_recover_and_retraction(name):
    H = build(name)
    S = hypersystem_of(H)
    assert recover_hyperring(S) == H
    assert retraction_suite(H).passed
    assert check_closed_chain(S).passed


@pytest.mark.parametrize("name", HYPERFIELDS)
def test_boxplus_nabla_returns_the_hypersum(name):
    H = build(name)
    S = hypersystem_of(H)
    pos = {S.index(H.labels[a] if a != H.zero else H.labels[H.zero]): a for a in range(H.n)}
    for a, b in product(S.tangible0, repeat=2):
        got = sorted(pos[x] for x in boxplus_nabla(S, [a, b]))
        assert tuple(got) == H.add(pos[a], pos[b])


def test_profiles():
    rep = elimination_profile(hypersystem_of(build("krasner")))
    for name in ("tangibly_balanced", "balance_elimination", "nabla_inversion_left",
                 "nabla_inversion_right"):
        assert rep[name].passed
    # 1 and {0,1} balance the same tangibles
    assert rep["faithfully_balanced"].witness == ("1", "{0,1}")
    S = hypersystem_of(quotient_hyperring(integers_mod(11), [1, 10]))
    I = large_set_ideal(S, 4)
    bad = elimination_profile(S, I)
    assert not bad["tangibly_balanced"].passed
    with pytest.raises(PreconditionError):
        recover_hyperring(S, I)


def test_balance_matrix_is_symmetric_on_hypersystems():
    S = hypersystem_of(build("signs"))
    B, U = balance_matrix(S)
    assert not U.any()
    assert (B == B.T).all()


def test_viro_has_no_hypersystem():
    with pytest.raises(DomainError):
        hypersystem_of(viro_multigroup())


def test_closure_cap_is_honoured():
    with pytest.raises(ClosureCapExceeded):
        hypersystem_of(quotient_hyperring(integers_mod(11), [1, 10]), cap=10)


def test_table_diff_reports_changes():
    K = build("krasner")
    K2 = HyperTable(K.labels, K.zero, K.one, K.neg, [[[0], [1]], [[1], [1]]], K.mul, validate=False)
    d = table_diff(K, K2)
    assert d and d[0][0] == "add" and d[0][1:3] == ("1", "1")
    assert table_diff(K, K) == []


def test_isomorphism_search_negative():
    assert find_isomorphism(hypersystem_of(build("krasner")), hypersystem_of(build("signs"))) is None
    # same addition, but 1·1 is defined only in the second window
    assert find_isomorphism(supertropical_window([0, 1]), supertropical_window([1, 2])) is None
    assert find_isomorphism(supertropical_window([0, 1]), supertropical_window([1, 2]),
                            check_mul=False) is not None


@settings(max_examples=15, deadline=None)
@given(st.permutations(range(5)))
def test_isomorphism_finds_relabelled_copy(perm):
    S = supertropical_window([0, 1])
    R = S.restrict(range(S.n))
    inv = np.argsort(perm)
    P = System([S.labels[inv[i]] + "'" for i in range(5)], perm[S.zero],
               [perm[t] for t in S.tangible], np.array(perm)[S.add_table[np.ix_(inv, inv)]],
               np.array(perm)[S.neg_table[inv]], None)
    f = find_isomorphism(R, P, check_mul=False)
    assert f is not None and [f[i] for i in range(5)] == list(perm)


def test_hyper1_and_boxplus_I():
    S = hypersystem_of(build("signs"))
    rep = check_assumption_hyper1(S)
    assert rep.passed
    H = boxplus_I_hypergroup(S)
    assert check_hypergroup(H).passed
    # on hypersystems inclusion and balance select the same tangibles
    for name in HYPERFIELDS:
        assert compare_boxplus(hypersystem_of(build(name))) == []


def test_hypersystem_product_modes():
    assert check_hypersystem_product(build("krasner")).passed
    S = hypersystem_of(build("signs"))
    assert S.product_mode == "setwise"
