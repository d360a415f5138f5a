import pytest

from hyperkit.carrier import (UNDEF, ClosureCapExceeded, DomainError, HyperTable, System,
                              ValidationError, canonical_subset, closure_cap, closure_under,
                              from_mask, to_mask)
from hyperkit.families import supertropical_window


def test_canonical_subset_sorts_and_dedups():
    assert canonical_subset([3, 1, 3, 0]) == (0, 1, 3)
    with pytest.raises(DomainError):
        canonical_subset([0, 5], n=3)


def test_masks_round_trip():
    for members in [(), (0,), (1, 4, 7)]:
        assert from_mask(to_mask(members)) == members


def test_closure_under_addition_mod_7():
    items = closure_under([3], lambda a, b: (a + b) % 7)
    assert sorted(items) == list(range(7))
    assert items[0] == 3


def test_closure_cap_env(monkeypatch):
    monkeypatch.setenv("HK_CLOSURE_CAP", "4")
    assert closure_cap() == 4
    with pytest.raises(ClosureCapExceeded) as e:
        closure_under([1], lambda a, b: a + b)
    assert len(e.value.partial) == 5
    monkeypatch.setenv("HK_CLOSURE_CAP", "lots")
    with pytest.raises(DomainError):
        closure_cap()


def test_hypertable_validation():
    ok = HyperTable(["0", "1"], 0, 1, [0, 1], [[[0], [1]], [[1], [0, 1]]], [[0, 0], [0, 1]])
    assert ok.add(1, 1) == (0, 1)
    with pytest.raises(ValidationError):           # 0 is not neutral
        HyperTable(["0", "1"], 0, 1, [0, 1], [[[1], [1]], [[1], [0, 1]]])
    with pytest.raises(ValidationError):           # not commutative
        HyperTable(["0", "1", "2"], 0, None, [0, 2, 1],
                   [[[0], [1], [2]], [[1], [2], [0]], [[2], [1], [1]]])
    with pytest.raises(ValidationError):           # duplicate labels
        HyperTable(["0", "0"], 0, None, [0, 1], [[[0], [1]], [[1], [0]]])


def test_system_validation_and_access():
    S = System(["0", "a", "b"], 0, [1], [[0, 1, 2], [1, 2, 2], [2, 2, 2]], [0, 1, 2])
    assert S.sum(1, 1, 1) == 2 and S.circ(1) == 2
    assert S.label(UNDEF) == "<out>"
    with pytest.raises(ValidationError):
        System(["0", "a"], 0, [0], [[0, 1], [1, 1]], [0, 1])
    with pytest.raises(ValidationError):           # (a+a)+b ≠ a+(a+b)
        System(["0", "a", "b"], 0, [1], [[0, 1, 2], [1, 1, 0], [2, 0, 2]], [0, 1, 2])


def test_find_outside_window_is_undef():
    from fractions import Fraction
    S = supertropical_window([0, 1])
    assert S.find((Fraction(1), False)) != UNDEF
    assert S.find((Fraction(5), False)) == UNDEF
    assert S.windowed and S.total_add and not S.total_mul      # 1·1 = 2 leaves the window


def test_restrict_marks_escapes():
    S = supertropical_window([0, 1, 2])
    keep = [S.index(x) for x in ("0", "0v", "1", "1v")]
    R = S.restrict(keep)
    assert R.n == 5
    one = R.index("1")
    assert R.mul(one, one) == UNDEF
    assert R.label(R.add(one, R.index("0v"))) == "1"
