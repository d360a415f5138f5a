from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from hyperkit.carrier import HyperTable
from hyperkit.catalog import build, viro_multigroup
from hyperkit.hyper import (check_double_distributivity, check_hypergroup, check_hyperring,
                            check_reversibility_equivalence, cyclic_subgroups, integers_mod,
                            is_hyperfield, quotient_hyperring)

PRIMES = [2, 3, 5, 7, 11, 13]


def power_closure(p, g):
    G, x = {1}, g % p
    while x not in G:
        G.add(x)
        x = x * g % p
    return sorted(G)


def oracle_quotient(p, G):
    """Cosets and sums straight from arithmetic mod p."""
    cosets = sorted({tuple(sorted(a * g % p for g in G)) for a in range(p)})
    of = {x: c for c in cosets for x in c}
    add = {(c, d): {of[(x + y) % p] for x in c for y in d} for c in cosets for d in cosets}
    return cosets, add


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 12))
def test_quotient_matches_arithmetic(p, g):
    G = power_closure(p, g if g % p else 1)
    H = quotient_hyperring(integers_mod(p), G)
    cosets, add = oracle_quotient(p, G)
    assert H.n == len(cosets)
    rep = {c[0]: c for c in cosets}
    for i, j in product(range(H.n), repeat=2):
        ci, cj = rep[int(H.labels[i])], rep[int(H.labels[j])]
        got = {rep[int(H.labels[k])] for k in H.add(i, j)}
        assert got == add[(ci, cj)]
    assert check_hyperring(H).passed
    assert is_hyperfield(H)


def test_subgroup_counts():
    # the unit group of F_p is cyclic: one subgroup per divisor of p − 1
    for p in PRIMES:
        divisors = [d for d in range(1, p) if (p - 1) % d == 0]
        assert len(cyclic_subgroups(integers_mod(p))) == len(divisors)


def test_krasner_and_signs():
    for name in ("krasner", "signs"):
        H = build(name)
        assert check_hyperring(H).passed
        assert check_double_distributivity(H).passed


def test_viro_fails_only_reversibility():
    rep = check_hypergroup(viro_multigroup())
    assert [a.name for a in rep.failures()] == ["reversibility"]
    eq = check_reversibility_equivalence(viro_multigroup())
    assert eq["agreement"].passed


def test_broken_associativity_is_caught():
    # 1 ⊞ 1 = {1} with 0 neutral but 1 its own negative: (1⊞1)⊞1 = {1} while
    # reversibility demands 0 ∈ 1 ⊞ 1
    H = HyperTable(["0", "1"], 0, 1, [0, 1], [[[0], [1]], [[1], [1]]], [[0, 0], [0, 1]])
    rep = check_hypergroup(H)
    assert not rep.passed
    assert rep.failures()[0].witness is not None


def test_field_as_hyperring():
    H = quotient_hyperring(integers_mod(7), [1])
    assert all(len(H.add(i, j)) == 1 for i in range(7) for j in range(7))
    assert check_hyperring(H).passed
