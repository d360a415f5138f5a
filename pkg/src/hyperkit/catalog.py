"""Built-in structures with their expected verdicts.

Each entry records what the verification suites must observe; negative fixtures
(counterexamples) carry expected failures and are checked just like the rest.
"""
import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bridge import (check_assumption_hyper1, elimination_profile, hypersystem_of,
                     retraction_suite)
from .carrier import HKError, HyperTable, System, UNDEF
from .constructions import layered, symmetrize_bipotent, truncate_naturals
from .families import (maxplus_window, phase_window, supertropical_window, triangle_window,
                       weak_phase_window)
from .hyper import (check_double_distributivity, check_hypergroup, check_hyperring,
                    check_reversibility_equivalence, hyper_from_rows, integers_mod,
                    quotient_hyperring)
from .report import AxiomResult, Report
from .systems import SurpassSpec, check_system, check_triple, classify

SUITES = ("axioms", "classify", "profile")


@dataclass
class CatalogEntry:
    name: str
    kind: str                    # "hyper" or "system"
    build: object                # zero-argument callable
    note: str
    expected: dict = field(default_factory=dict)   # "suite:check" -> verdict
    negative: bool = False

    def summary(self):
        d = {"name": self.name, "kind": self.kind, "note": self.note}
        if self.negative:
            d["negative"] = True
        fails = sorted(k for k, v in self.expected.items() if not v)
        if fails:
            d["expected_failures"] = fails
        return d


# -- finite tables ------------------------------------------------------------------------

def _mul_rows(labels, rule):
    return {(a, b): rule(a, b) for a in labels for b in labels}


def krasner():
    return hyper_from_rows(["0", "1"], {("0", "0"): ["0"], ("0", "1"): ["1"], ("1", "1"): ["0", "1"]},
                           _mul_rows(["0", "1"], lambda a, b: "1" if a == b == "1" else "0"),
                           {"0": "0", "1": "1"}, name="krasner")


def signs():
    labels = ["0", "1", "-1"]
    add = {("0", "0"): ["0"], ("0", "1"): ["1"], ("0", "-1"): ["-1"], ("1", "1"): ["1"],
           ("-1", "-1"): ["-1"], ("1", "-1"): ["0", "1", "-1"]}

    def m(a, b):
        if "0" in (a, b):
            return "0"
        return "1" if a == b else "-1"
    return hyper_from_rows(labels, add, _mul_rows(labels, m), {"0": "0", "1": "-1", "-1": "1"},
                           name="signs")


def viro_multigroup():
    """M = {0,1,2}: 1⊞1 = 2, 1⊞2 = {0,1}, 2⊞2 = {1,2}; −1 = 2."""
    add = [[[0], [1], [2]], [[1], [2], [0, 1]], [[2], [0, 1], [1, 2]]]
    return HyperTable(["0", "1", "2"], 0, None, [0, 2, 1], add, None, name="viro-multigroup")


def fp_mod_g(p, G):
    return quotient_hyperring(integers_mod(p), G)


def sign_semiring():
    """L = {0, 1, −1, ∞} with ∞ absorbing sums of opposite signs."""
    labels = ["0", "1", "-1", "inf"]
    add = np.array([[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]])
    mul = np.array([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 3, 3]])
    return System(labels, 0, [1, 2], add, [0, 2, 1, 3], mul, one=1, name="sign-semiring")


def characteristic_triple():
    """F4 with identity negation: a first-kind triple where 1 + 1 + 1 = 1."""
    # F4 = {0, 1, w, w^2 = w + 1}
    add = np.array([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    mul = np.array([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]])
    return System(["0", "1", "w", "w2"], 0, [1, 2, 3], add, [0, 1, 2, 3], mul, one=1,
                  name="characteristic-triple")


def z_hyperfield(bound=4):
    """ℤ on [−B, B] with usual sum, T = {±1} and equality as surpassing relation."""
    vals = [0] + [s * k for k in range(1, bound + 1) for s in (1, -1)]
    pos = {v: i for i, v in enumerate(vals)}
    n = len(vals)
    add = np.full((n, n), UNDEF, dtype=np.int64)
    mul = np.full((n, n), UNDEF, dtype=np.int64)
    for i, x in enumerate(vals):
        for j, y in enumerate(vals):
            add[i, j] = pos.get(x + y, UNDEF)
            mul[i, j] = pos.get(x * y, UNDEF)
    return System([str(v) for v in vals], 0, [pos[1], pos[-1]], add, [pos[-v] for v in vals], mul,
                  surpass=SurpassSpec.explicit((i, i) for i in range(n)), one=pos[1],
                  name="z-hyperfield[%d]" % bound, values=vals, scope="window")


def naturals_max(m=4):
    """ℕ_max on {0..m}: max addition, clipped product, T = {1}; used as layers below."""
    r = np.arange(m + 1)
    return System([str(i) for i in range(m + 1)], 0, [1], np.maximum(r[:, None], r[None, :]), r,
                  np.minimum(r[:, None] * r[None, :], m), one=1, name="Nmax<=%d" % m)


def layered_fixture(bullet, m=6, grades=(0, 1)):
    """ℕ-layered window with the two layer orders of the truncated example.

    bullet 1: (k1,a) ⪯ (k2,a) iff k1 = k2 = 1 or 2 ≤ k1 ≤ k2;
    bullet 2: (k1,a) ⪯ (k2,a) iff k1 = k2, or k1 = 1 and k2 ≥ 4.
    Across grades, and above 𝟘, an element surpasses iff its layer is at least 2.
    """
    base = layered(truncate_naturals(m), grades)

    def layer_leq(k1, k2):
        if bullet == 1:
            return k1 == k2 == 1 or 2 <= k1 <= k2
        return k1 == k2 or (k1 == 1 and k2 >= 4)

    def lay(i):
        return int(base.labels[i].split("@")[0])
    pairs = [(base.zero, base.zero)]
    for j in range(base.n):
        if j == base.zero:
            continue
        k2, g2 = lay(j), base.values[j][1]
        if k2 >= 2:
            pairs.append((base.zero, j))
        for i in range(base.n):
            if i == base.zero:
                continue
            k1, g1 = lay(i), base.values[i][1]
            if (g1 < g2 and k2 >= 2) or (g1 == g2 and layer_leq(k1, k2)):
                pairs.append((i, j))
    return System(base.labels, base.zero, base.tangible, base.add_table, base.neg_table,
                  base.mul_table, surpass=SurpassSpec.explicit(pairs), one=base.one,
                  name="layered-fixture-%d" % bullet, values=base.values, scope="window")


# -- entries ---------------------------------------------------------------------------------

HYPERRING_OK = {"axioms:associativity": True, "axioms:reversibility": True,
                "axioms:hypernegative": True, "axioms:single_distributivity": True}

_ENTRIES = [
    CatalogEntry("krasner", "hyper", krasner, "the Krasner hyperfield {0,1} with 1⊞1 = {0,1}",
                 {**HYPERRING_OK, "axioms:hyperfield": True, "axioms:double_distributivity": True,
                  "classify:kind:first": True, "classify:bipotent": True,
                  "profile:tangibly_balanced": True, "profile:retraction_equal": True}),
    CatalogEntry("signs", "hyper", signs, "the hyperfield of signs {0,1,−1}",
                 {**HYPERRING_OK, "axioms:hyperfield": True, "axioms:double_distributivity": True,
                  "classify:kind:second": True, "classify:bipotent": True,
                  "classify:regular": True, "profile:retraction_equal": True}),
    CatalogEntry("fp-mod-g:5:1,4", "hyper", lambda: fp_mod_g(5, [1, 4]),
                 "quotient hyperfield F5/{±1}",
                 {**HYPERRING_OK, "axioms:hyperfield": True, "profile:retraction_equal": True}),
    CatalogEntry("fp-mod-g:11:1,10", "hyper", lambda: fp_mod_g(11, [1, 10]),
                 "quotient hyperfield F11/{±1}; tangible balancing fails for a larger ideal",
                 {**HYPERRING_OK, "axioms:hyperfield": True, "profile:retraction_equal": True,
                  "profile:tangibly_balanced": True}),
    CatalogEntry("viro-multigroup", "hyper", viro_multigroup,
                 "Viro's multigroup: not a hypergroup (reversibility fails)",
                 {"axioms:reversibility": False, "axioms:hypernegative": True,
                  "axioms:negation_additive": False, "axioms:agreement": True}, negative=True),
    CatalogEntry("supertropical", "system", lambda: supertropical_window([0, 1, 2]),
                 "supertropical window, grades {0,1,2}",
                 {"axioms:system": True, "classify:kind:first": True,
                  "classify:strongly_bipotent": True, "classify:shallow": True}),
    CatalogEntry("symmetrized-maxplus", "system",
                 lambda: symmetrize_bipotent(maxplus_window([0, 1, 2]), name="symmetrized-maxplus"),
                 "symmetrized max-plus window, grades {0,1,2}",
                 {"axioms:system": True, "classify:kind:second": True, "classify:bipotent": True,
                  "classify:shallow": True}),
    CatalogEntry("sign-semiring", "system", sign_semiring, "the sign semiring L = {0,1,−1,∞}",
                 {"axioms:system": True, "classify:kind:second": True, "classify:bipotent": True,
                  "classify:regular": True}),
    CatalogEntry("layered-n:3", "system", lambda: layered(truncate_naturals(3), [0, 1]),
                 "ℕ truncated at 3, layered over grades {0,1}",
                 {"axioms:system": True, "classify:kind:first": True, "classify:bipotent": True,
                  "classify:shallow": False}),
    CatalogEntry("phase", "system", lambda: phase_window(4),
                 "phase hypersystem, cones on the 4th roots of unity",
                 {"axioms:system": True, "classify:kind:second": True, "classify:regular": True,
                  "classify:geometric": True}),
    CatalogEntry("weak-phase", "system", lambda: weak_phase_window(4),
                 "weak phase hypersystem, closed arcs on the 4th roots of unity",
                 {"axioms:system": True, "classify:kind:second": True}),
    CatalogEntry("triangle", "system", lambda: triangle_window(4),
                 "triangle hypersystem over ℤ≥0, intervals up to 4",
                 {"axioms:system": True, "classify:kind:first": True}),
    CatalogEntry("characteristic-triple", "system", characteristic_triple,
                 "F4 with identity negation: first kind, e′ = 1",
                 {"axioms:generation": True, "axioms:tangible_quasizero": True,
                  "classify:kind:first": True, "classify:bipotent": False}),
    CatalogEntry("z-hyperfield", "system", z_hyperfield,
                 "ℤ with T = {±1}: 2 ∇ 2 but 2 balances no tangible",
                 {"axioms:generation": True, "profile:tangibly_balanced": False}, negative=True),
    CatalogEntry("layered-fixture-1", "system", lambda: layered_fixture(1),
                 "ℕ-layered window, first layer order: the ⊞ nonemptiness condition fails",
                 {"axioms:additive": False, "profile:hyper1_nonempty": False}, negative=True),
    CatalogEntry("layered-fixture-2", "system", lambda: layered_fixture(2),
                 "ℕ-layered window, second layer order: the ⊞ nonemptiness condition fails",
                 {"axioms:reflexive": True, "axioms:additive": False, "profile:hyper1_nonempty": False},
                 negative=True),
    CatalogEntry("layered-nmax", "system", lambda: layered(naturals_max(4), [0, 1]),
                 "ℕ_max layers: T does not span, so this is not a triple",
                 {"axioms:generation": False, "axioms:tangible_quasizero": False,
                  "axioms:tangible_equality": False, "axioms:system": False}, negative=True),
]

_PARAM = re.compile(r"^fp-mod-g:(\d+):([\d,]+)$")
_LAYERED = re.compile(r"^layered-n:(\d+)$")


def catalog_list(pattern=None):
    """Entries in stable order, optionally filtered by a substring."""
    if not pattern:
        return list(_ENTRIES)
    return [e for e in _ENTRIES if pattern in e.name]


def get_entry(name):
    for e in _ENTRIES:
        if e.name == name:
            return e
    m = _PARAM.match(name)
    if m:
        p, G = int(m.group(1)), [int(x) for x in m.group(2).split(",")]
        return CatalogEntry(name, "hyper", lambda: fp_mod_g(p, G), "quotient hyperring",
                            {**HYPERRING_OK, "profile:retraction_equal": True})
    m = _LAYERED.match(name)
    if m:
        k = int(m.group(1))
        return CatalogEntry(name, "system", lambda: layered(truncate_naturals(k), [0, 1]),
                            "ℕ truncated at %d, layered" % k, {"axioms:system": True})
    raise KeyError(name)


@lru_cache(maxsize=None)
def build(name):
    """Memoized structure for a catalog name (treat the result as immutable)."""
    return get_entry(name).build()


# -- verification ------------------------------------------------------------------------

def run_suites(obj, suite="all", entry=None):
    """Reports per suite for a HyperTable or a System."""
    suites = SUITES if suite == "all" else (suite,)
    out = {}
    if isinstance(obj, HyperTable):
        for s in suites:
            if s == "axioms":
                if obj.one is None or (obj.mul == UNDEF).all():
                    rep = check_hypergroup(obj)
                    eq = check_reversibility_equivalence(obj)
                    rep.add(eq["negation_additive"])
                    rep.add(eq["agreement"])
                else:
                    rep = check_hyperring(obj)
                    dd = check_double_distributivity(obj)
                    dd.informational = True
                    rep.add(dd)
                out[s] = rep
            elif s == "classify":
                try:
                    S = hypersystem_of(obj)
                    out[s] = classify(S).to_report("Phi(%s)" % obj.name)
                except HKError as e:
                    out[s] = _error_report(obj.name, e)
            elif s == "profile":
                try:
                    rep = elimination_profile(hypersystem_of(obj))
                    if obj.one is not None:
                        rep.extend(retraction_suite(obj))
                    out[s] = rep
                except HKError as e:
                    out[s] = _error_report(obj.name, e)
    else:
        for s in suites:
            if s == "axioms":
                rep = check_system(obj)
                if "generation" not in rep:
                    rep.extend(check_triple(obj))
                out[s] = rep
            elif s == "classify":
                out[s] = classify(obj).to_report(obj.name)
            elif s == "profile":
                rep = elimination_profile(obj)
                if entry is not None and any(k.startswith("profile:hyper1") for k in entry.expected):
                    rep.extend(check_assumption_hyper1(obj))
                out[s] = rep
    return out


def _error_report(name, err):
    rep = Report(name)
    rep.add(AxiomResult("error", False, str(err)))
    return rep


def compare_expected(entry, reports):
    """Mismatches between observed reports and the entry's expected verdicts.

    Listed checks must agree; in the axioms suite an unlisted (non-informational)
    failure is also a mismatch.
    """
    bad = []
    for key, want in sorted(entry.expected.items()):
        suite, check = key.split(":", 1)
        if suite not in reports:
            continue
        rep = reports[suite]
        if check.startswith("kind:"):
            got = any(a.name == check for a in rep.axioms)
        elif check in rep:
            got = bool(rep[check].passed)
        else:
            bad.append((key, want, "missing"))
            continue
        if got != want:
            bad.append((key, want, got))
    if "axioms" in reports:
        listed = {k.split(":", 1)[1] for k in entry.expected if k.startswith("axioms:")}
        for a in reports["axioms"].failures():
            if a.name not in listed:
                bad.append(("axioms:" + a.name, True, False))
    return bad


def self_check(entry, suite="all"):
    obj = entry.build()
    reports = run_suites(obj, suite, entry)
    return reports, compare_expected(entry, reports)
