import pytest

from hyperkit.catalog import build, catalog_list, get_entry, self_check

NAMES = [e.name for e in catalog_list()]
REQUIRED = ["krasner", "signs", "viro-multigroup", "supertropical", "symmetrized-maxplus",
            "sign-semiring", "phase", "weak-phase", "triangle", "characteristic-triple",
            "z-hyperfield"]


def test_required_entries_present_in_stable_order():
    assert set(REQUIRED) <= set(NAMES)
    assert NAMES == [e.name for e in catalog_list()]
    assert any(n.startswith("fp-mod-g:") for n in NAMES)
    assert any(n.startswith("layered-n:") for n in NAMES)
    assert catalog_list("") == catalog_list()
    assert [e.name for e in catalog_list("phase")] == ["phase", "weak-phase"]


@pytest.mark.parametrize("name", NAMES)
def test_entry_passes_its_own_expectations(name):
    reports, bad = self_check(get_entry(name))
    assert bad == [], bad


def test_negative_fixtures_are_flagged():
    for name in ("viro-multigroup", "z-hyperfield"):
        e = get_entry(name)
        assert e.negative and any(v is False for v in e.expected.values())


def test_parametric_entries():
    assert build("fp-mod-g:7:1,6").n == 4
    assert build("layered-n:2").n == 1 + 2 * 2
    with pytest.raises(KeyError):
        get_entry("no-such-thing")


def test_build_is_memoized():
    assert build("krasner") is build("krasner")
