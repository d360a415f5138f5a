from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperkit.bridge import find_isomorphism, hypersystem_of
from hyperkit.carrier import UNDEF, DomainError, ResourceError
from hyperkit.catalog import build
from hyperkit.constructions import (check_second_kind_sum, check_trythis1, direct_sum,
                                    layer_second_kind, layered, layered_formula_mismatches,
                                    layered_hyper, matrix_system, matrix_unit, monomials,
                                    poly_mul, polynomial_system, symmetrize, symmetrize_bipotent,
                                    tangible_reversibility, truncate_naturals)
from hyperkit.families import (maxplus_window, phase_window, phased_tropical_contains,
                               viro_contains, weak_phase_window)
from hyperkit.systems import cancellative, check_system, check_triple, generation

grade_sets = st.lists(st.integers(-2, 3), min_size=1, max_size=3, unique=True)


def test_truncated_naturals():
    N = truncate_naturals(3)
    assert [N.label(N.add(2, x)) for x in range(4)] == ["2", "3", "3", "3"]
    assert N.label(N.mul(2, 2)) == "3"
    with pytest.raises(DomainError):
        truncate_naturals(0)


def test_symmetrize_is_componentwise():
    A = truncate_naturals(2)
    S = symmetrize(A)
    assert S.n == 9
    for x, y in product(range(S.n), repeat=2):
        (a, b), (c, d) = S.values[x], S.values[y]
        assert S.values[S.add(x, y)] == (A.add(a, c), A.add(b, d))
    for x in range(S.n):
        a, b = S.values[x]
        assert S.values[S.neg(x)] == (b, a)


def signed(label):
    """'(g,-inf)' -> (+, g); '(-inf,g)' -> (−, g); '(g,g)' -> (•, g)."""
    a, b = label[1:-1].split(",")
    if a == b:
        return ("0", None) if a == "-inf" else ("o", Fraction(a))
    return ("+", Fraction(a)) if b == "-inf" else ("-", Fraction(b))


def signed_sum(x, y):
    if x[0] == "0" or y[0] == "0":
        return y if x[0] == "0" else x
    if x[1] != y[1]:
        return x if x[1] > y[1] else y
    return x if x[0] == y[0] else ("o", x[1])


@settings(max_examples=25, deadline=None)
@given(grade_sets)
def test_symmetrized_maxplus_is_signed_tropical(gs):
    S = symmetrize_bipotent(maxplus_window(gs))
    assert S.n == 3 * len(gs) + 1
    for x, y in product(range(S.n), repeat=2):
        assert signed(S.label(S.add(x, y))) == signed_sum(signed(S.label(x)), signed(S.label(y)))
    assert check_system(S).passed


def test_symmetrize_bipotent_needs_bipotence():
    with pytest.raises(DomainError):
        symmetrize_bipotent(truncate_naturals(3))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), grade_sets)
def test_layered_sum_is_grade_lexicographic(k, gs):
    L = truncate_naturals(k)
    S = layered(L, gs)
    assert S.n == 1 + k * len(gs)
    for x, y in product(range(1, S.n), repeat=2):
        (l1, g1), (l2, g2) = S.values[x], S.values[y]
        want = (l1, g1) if g1 > g2 else (l2, g2) if g2 > g1 else (L.add(l1, l2), g1)
        assert S.values[S.add(x, y)] == want


def test_layered_krasner_and_signs():
    G = [0, 1, 2]
    assert find_isomorphism(layered(hypersystem_of(build("krasner")), G),
                            build("supertropical")) is not None


@pytest.mark.parametrize("make,contains", [(phase_window, phased_tropical_contains),
                                           (weak_phase_window, viro_contains)])
def test_layered_hyper_matches_direct_formulas(make, contains):
    S = layered_hyper(make(4), [0, 1])
    assert layered_formula_mismatches(S, contains) == []
    assert tangible_reversibility(S).passed


def test_layered_hyper_needs_sets():
    with pytest.raises(DomainError):
        layered_hyper(truncate_naturals(2), [0])


def test_trythis1_bijection():
    rep = check_trythis1(truncate_naturals(4), layered(truncate_naturals(4), [0, 1, 2]))
    assert rep.passed
    # 𝟘 plus (L∖0) × T with T = {1@g : g ∈ G}
    assert rep.extra["classes"] == 1 + 4 * 3


@pytest.mark.parametrize("L", [truncate_naturals(3), hypersystem_of(build("signs"))],
                         ids=["N<=3", "signs"])
def test_second_kind_layering(L):
    A = symmetrize_bipotent(maxplus_window([0, 1, 2]))
    S = layer_second_kind(L, A)
    assert check_triple(S).passed
    assert check_second_kind_sum(S, L, A).passed


def test_second_kind_layering_rejects_first_kind():
    with pytest.raises(DomainError):
        layer_second_kind(truncate_naturals(2), build("supertropical"))


def test_direct_sum_options():
    A = symmetrize_bipotent(maxplus_window([0, 1, 2]))
    two = direct_sum([A, A], 2)
    assert two.n == A.n ** 2
    assert len(generation(two)) == two.n
    one = direct_sum([A, A], 1)
    assert len(generation(one)) < one.n             # diagonal tangibles miss (a, 0)
    three = direct_sum([A, A], 3)
    assert len(three.tangible) == (len(A.tangible) + 1) ** 2 - 1
    assert direct_sum([]).n == 1
    with pytest.raises(DomainError):
        direct_sum([A, A], 4)


def brute_poly(A, p, q, degcap):
    """Coefficient dict product by direct double loop (1 variable)."""
    out = {}
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            if a == A.zero or b == A.zero:
                continue
            c = A.mul(a, b)
            if c != A.zero:
                out[i + j] = A.add(out.get(i + j, A.zero), c)
    return [out.get(d, A.zero) for d in range(degcap + 1)] if max(out, default=0) <= degcap else None


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3),
       st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_poly_mul_matches_convolution(p, q):
    A = truncate_naturals(2)
    mons = monomials(1, 2)
    mpos = {m: i for i, m in enumerate(mons)}
    want = brute_poly(A, p, q, 2)
    if want is None:
        with pytest.raises(ResourceError):
            poly_mul(A, mons, mpos, tuple(p), tuple(q))
    else:
        assert list(poly_mul(A, mons, mpos, tuple(p), tuple(q))) == want


def test_polynomial_system():
    P = polynomial_system(truncate_naturals(2), 1, 2)
    assert P.n == 27 and check_system(P).passed
    with pytest.raises(ResourceError):
        polynomial_system(truncate_naturals(2), 2, 4)


def test_matrix_system_is_not_cancellative():
    A = truncate_naturals(2)
    M = matrix_system(A, 2)
    assert M.n == 81
    r = cancellative(M)
    assert not r.passed
    a, c1, c2 = (M.index(x) for x in r.witness)
    assert c1 != c2 and M.mul(a, c1) == M.mul(a, c2)
    e12 = matrix_unit(M, A, {(0, 1): 1})
    assert e12 != UNDEF and M.mul(e12, e12) == M.zero
