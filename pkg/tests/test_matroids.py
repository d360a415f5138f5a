import random
from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperkit.bridge import hypersystem_of
from hyperkit.carrier import DomainError, ResourceError, UnsupportedError
from hyperkit.catalog import build
from hyperkit.families import phase_window, supertropical_window
from hyperkit.matroids import (GPMap, Rationals, bases, check_exchange, check_gp, chirotope_oracle,
                               det_gauss, matroid_report, minors_gp_map, parity,
                               random_rational_matrix, rational_minors, sign_of, sign_route,
                               signed_det, valuation_oracle, valuation_route, vp)

PS = hypersystem_of(build("signs"))
SID = {1: PS.index("1"), -1: PS.index("-1"), 0: PS.index("0")}
SGN = {v: k for k, v in SID.items()}

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.lists(st.lists(small, min_size=m, max_size=m),
                                                    min_size=m, max_size=m)))
def test_leibniz_matches_elimination(M):
    assert signed_det(Rationals, M) == det_gauss(M)


def test_parity():
    assert [parity(p) for p in permutations(range(3))] == [0, 1, 1, 0, 0, 1]


def test_det_against_numpy():
    rng = np.random.default_rng(3)
    for _ in range(20):
        A = rng.integers(-4, 5, size=(4, 4))
        assert det_gauss([[Fraction(int(x)) for x in row] for row in A]) == round(np.linalg.det(A))


def test_vp():
    assert vp(Fraction(18), 3) == 2
    assert vp(Fraction(2, 27), 3) == -3
    assert vp(Fraction(5), 3) == 0
    with pytest.raises(DomainError):
        vp(0, 3)


def brute_sign_plucker(chi, n, m):
    """Every 3-or-more-term signed GP relation must contain 0 in its hypersum."""
    for e in product(range(n), repeat=m + 1):
        for f in product(range(n), repeat=m - 1):
            signs = set()
            for i in range(m + 1):
                left = chi(tuple(e[j] for j in range(m + 1) if j != i))
                right = chi((e[i],) + f)
                s = (-1) ** i * left * right
                if s:
                    signs.add(s)
            if len(signs) == 1:
                return False
    return True


def chi_from(vals):
    def chi(t):
        if len(set(t)) < len(t):
            return 0
        order = sorted(range(len(t)), key=lambda k: t[k])
        v = vals[tuple(sorted(t))]
        return -v if parity(order) else v
    return chi


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(4, 2), (5, 2), (4, 3)]).flatmap(
    lambda nm: st.tuples(st.just(nm), st.lists(st.sampled_from([-1, 0, 1]),
                                               min_size=len(list(combinations(range(nm[0]), nm[1]))),
                                               max_size=len(list(combinations(range(nm[0]), nm[1])))))))
def test_sign_plucker_matches_brute_force(data):
    (n, m), signs = data
    tuples = list(combinations(range(n), m))
    vals = dict(zip(tuples, signs))
    b = GPMap.from_sorted(PS, n, m, {t: SID[v] for t, v in vals.items()})
    r = check_gp(b)
    assert r["plucker"].passed == brute_sign_plucker(chi_from(vals), n, m)
    assert r["alternating"].passed and r["repeated_null"].passed
    assert r["tangible_value"].passed == any(signs)


def test_realizable_maps_pass():
    rng = random.Random(11)
    S = supertropical_window(range(-15, 16))
    for _ in range(10):
        A = random_rational_matrix(rng, 2, 4)
        b = sign_route(PS, A)
        assert check_gp(b).passed
        assert {t: SGN[b(*t)] for t in combinations(range(4), 2)} == chirotope_oracle(A)
        v = valuation_route(S, A, 3)
        assert check_gp(v).passed and check_exchange(v).passed


def test_rational_minors_satisfy_classical_plucker():
    rng = random.Random(5)
    A = random_rational_matrix(rng, 2, 4)
    p = rational_minors(A)
    # p12 p34 − p13 p24 + p14 p23 = 0
    assert p[(0, 1)] * p[(2, 3)] - p[(0, 2)] * p[(1, 3)] + p[(0, 3)] * p[(1, 2)] == 0


def test_exchange_does_not_imply_plucker_for_signs():
    # all +1 except b(1,3) = −1: the relation on {0,1,2,3} has three positive terms
    vals = {t: SID[1] for t in combinations(range(4), 2)}
    vals[(1, 3)] = SID[-1]
    b = GPMap.from_sorted(PS, 4, 2, vals)
    assert not check_gp(b)["plucker"].passed
    assert check_gp(b)["plucker"].witness == ((0, 1, 2), (3,))


def test_exchange_needs_bipotent_cancellative():
    P = phase_window(4)
    one = P.index("e0")
    b = GPMap.from_sorted(P, 3, 1, {(0,): one, (1,): one, (2,): one})
    with pytest.raises(UnsupportedError):
        check_exchange(b)
    rep = matroid_report(b)
    assert rep["exchange"].informational


def test_cancellation_lands_in_null():
    # columns chosen so the 2×2 minor 1·1 − 1·1 cancels exactly
    A = [[Fraction(1), Fraction(1), Fraction(3)], [Fraction(1), Fraction(1), Fraction(1)]]
    S = supertropical_window(range(-4, 5))
    o = valuation_oracle(A, 3)
    assert o[(0, 1)]["cancelled"] and o[(0, 1)]["valuation"] is None
    b = valuation_route(S, A, 3)
    assert S.label(b(0, 1)) == "0v"
    assert bases(b) == [(0, 2), (1, 2)]


def test_sign_of_and_limits():
    assert [sign_of(x) for x in (Fraction(-2), 0, Fraction(1, 3))] == [-1, 0, 1]
    with pytest.raises(ResourceError):
        GPMap(PS, 9, 1, np.zeros(9))
    with pytest.raises(ResourceError):
        signed_det(Rationals, [[Fraction(1)] * 9] * 9)


def test_minors_need_a_tangible_value():
    S = supertropical_window([0, 1])
    with pytest.raises(DomainError):
        minors_gp_map(S, [[S.zero, S.zero], [S.zero, S.zero]])
