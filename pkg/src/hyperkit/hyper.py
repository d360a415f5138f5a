"""Axiom checks for hypergroups, multirings, hyperrings and hyperfields.

Every check walks its quantifiers in lexicographic id order and reports the
first failing tuple, so witnesses are deterministic.
"""
from itertools import product

import numpy as np

from .carrier import (UNDEF, DomainError, HyperTable, closure_under, from_mask,
                      set_label)
from .report import AxiomResult, Report, scan


def _lab(H, *xs):
    return tuple(H.labels[x] for x in xs)


def _sl(H, mask):
    return set_label(H.labels[x] for x in from_mask(mask))


def _assoc(H):
    n = H.n

    def test(a, b, c):
        left = H.elem_plus_mask(c, H.add_mask[a][b])
        right = H.elem_plus_mask(a, H.add_mask[b][c])
        return left == right
    return scan("associativity", product(range(n), repeat=3), test, show=lambda t: _lab(H, *t))


def check_hypergroup(H):
    """Def. of a hypergroup: associativity, neutral zero, unique hypernegatives, reversibility."""
    n = H.n
    rep = Report(H.name, scope=H.scope)
    rep.add(_assoc(H))
    rep.add(scan("neutral_zero", range(n), lambda a: H.add_mask[H.zero][a] == 1 << a,
                 show=lambda a: _lab(H, a)))

    def hyperneg(a):
        xs = [x for x in range(n) if H.add_mask[a][x] >> H.zero & 1]
        return xs == [H.neg[a]]
    r = rep.add(scan("hypernegative", range(n), hyperneg, show=lambda a: _lab(H, a)))
    if not r.passed:
        a = H.index(r.witness[0])
        r.note = "0 ∈ %s ⊞ x for x in %s" % (H.labels[a], set_label(
            H.labels[x] for x in range(n) if H.add_mask[a][x] >> H.zero & 1))

    def rev(a1, a2, a3):
        lhs = bool(H.add_mask[a2][a3] >> a1 & 1)
        rhs = bool(H.add_mask[a1][H.neg[a2]] >> a3 & 1)
        return lhs == rhs
    rep.add(scan("reversibility", product(range(n), repeat=3), rev, show=lambda t: _lab(H, *t)))
    return rep


def check_multiplication(H):
    """Monoid multiplication, absorbing zero, and the multiring/hyperring distributive laws."""
    n = H.n
    M = H.mul
    rep = Report(H.name, scope=H.scope)

    def massoc(a, b, c):
        ab, bc = M[a, b], M[b, c]
        if ab == UNDEF or bc == UNDEF or M[ab, c] == UNDEF or M[a, bc] == UNDEF:
            return None
        return M[ab, c] == M[a, bc]
    rep.add(scan("mul_associative", product(range(n), repeat=3), massoc, show=lambda t: _lab(H, *t)))
    if H.one is None:
        rep.add(AxiomResult("mul_unit", False, None, note="no unit declared"))
    else:
        u = H.one
        rep.add(scan("mul_unit", range(n),
                     lambda a: M[u, a] == a and M[a, u] == a, show=lambda a: _lab(H, a)))

    def absorb(a, b):
        if a != H.zero and b != H.zero:
            return None
        p = M[a, b]
        return None if p == UNDEF else p == H.zero
    rep.add(scan("absorbing_zero", product(range(n), repeat=2), absorb, show=lambda t: _lab(H, *t)))

    def dist(strict, length):
        def test(a, *ss):
            left = H.scale_mask(a, H.sum_mask(*ss))
            right = H.sum_mask(*[M[a, s] for s in ss]) if all(M[a, s] != UNDEF for s in ss) else None
            rleft = _rscale(H, H.sum_mask(*ss), a)
            rright = H.sum_mask(*[M[s, a] for s in ss]) if all(M[s, a] != UNDEF for s in ss) else None
            if left is None or right is None or rleft is None or rright is None:
                return None
            if strict:
                return left == right and rleft == rright
            return left & ~right == 0 and rleft & ~rright == 0
        return test
    rep.add(scan("distributive_inclusion", product(range(n), repeat=3), dist(False, 2),
                 show=lambda t: _lab(H, *t)))
    r2 = scan("single_distributivity", product(range(n), repeat=3), dist(True, 2),
              show=lambda t: _lab(H, *t))
    if r2.passed:
        r3 = scan("single_distributivity", product(range(n), repeat=4), dist(True, 3),
                  show=lambda t: _lab(H, *t))
        r3.checked += r2.checked
        r3.skipped += r2.skipped
        r2 = r3
    r2.note = "sums of length 2 and 3"
    rep.add(r2)
    rep.add(scan("mul_commutative", product(range(n), repeat=2),
                 lambda a, b: None if M[a, b] == UNDEF or M[b, a] == UNDEF else M[a, b] == M[b, a],
                 show=lambda t: _lab(H, *t), informational=True))
    rep.add(_field_check(H))
    return rep


def _rscale(H, mask, a):
    out = 0
    for s in from_mask(mask):
        p = H.mul[s, a]
        if p == UNDEF:
            return None
        out |= 1 << int(p)
    return out


def _field_check(H):
    """Nonzero elements form an abelian group under multiplication."""
    M = H.mul
    nz = [a for a in range(H.n) if a != H.zero]
    if H.one is None:
        return AxiomResult("hyperfield", False, None, note="no unit", informational=True)
    for a, b in product(nz, repeat=2):
        p = M[a, b]
        if p == UNDEF:
            continue
        if p == H.zero:
            return AxiomResult("hyperfield", False, _lab(H, a, b), note="zero divisor",
                               informational=True)
        if p != M[b, a]:
            return AxiomResult("hyperfield", False, _lab(H, a, b), note="not commutative",
                               informational=True)
    for a in nz:
        if not any(M[a, b] == H.one for b in nz):
            return AxiomResult("hyperfield", False, _lab(H, a), note="no inverse", informational=True)
    return AxiomResult("hyperfield", True, checked=len(nz) ** 2, informational=True)


def check_hyperring(H):
    rep = check_hypergroup(H)
    rep.extend(check_multiplication(H))
    return rep


def is_hyperfield(H):
    rep = check_hyperring(H)
    return rep.passed and rep["hyperfield"].passed


def check_double_distributivity(H):
    """(a0⊞a1)(b0⊞b1) against a0b0⊞a1b0⊞a0b1⊞a1b1, the left side taken setwise."""
    M = H.mul
    n = H.n
    found = {}

    def test(a0, a1, b0, b1):
        left = H.setwise_mul_mask(H.add_mask[a0][a1], H.add_mask[b0][b1])
        prods = [M[a0, b0], M[a1, b0], M[a0, b1], M[a1, b1]]
        if left is None or UNDEF in prods:
            return None
        right = H.sum_mask(*prods)
        if left != right:
            found["setwise"] = _sl(H, left)
            found["distributed"] = _sl(H, right)
            return False
        return True
    r = scan("double_distributivity", product(range(n), repeat=4), test, show=lambda t: _lab(H, *t))
    if found:
        r.note = "setwise %s, distributed %s" % (found["setwise"], found["distributed"])
    return r


def generated_masks(H, cap=None):
    """⟨H⟩: masks of the submonoid of P*(H) generated by the singletons."""
    seed = [1 << a for a in range(H.n)]
    return closure_under(seed, H.set_plus_mask, cap)


def check_reversibility_equivalence(H, cap=None):
    """Reversibility iff S ↦ −S is additive on ⟨H⟩ (Prop. on reversibility)."""
    rep = Report(H.name, scope=H.scope)
    rev = check_hypergroup(H)["reversibility"]
    rep.add(rev)
    subsets = generated_masks(H, cap)
    # the pairs (a, −a) come first: they give the paper's form of the witness
    pairs = [(1 << a, 1 << H.neg[a]) for a in range(H.n)]
    pairs += [(s, t) for s in subsets for t in subsets]
    detail = {}

    def additive(s, t):
        lhs = H.neg_mask(H.set_plus_mask(s, t))
        rhs = H.set_plus_mask(H.neg_mask(s), H.neg_mask(t))
        if lhs != rhs:
            detail.update({"S1": _sl(H, s), "S2": _sl(H, t),
                           "-(S1+S2)": _sl(H, lhs), "(-S1)+(-S2)": _sl(H, rhs)})
            return False
        return True
    r = scan("negation_additive", pairs, additive)
    if not r.passed:
        r.witness = detail
    rep.add(r)
    rep.add(AxiomResult("agreement", rev.passed == r.passed, None if rev.passed == r.passed
                        else {"reversibility": rev.passed, "negation_additive": r.passed}))
    return rep


def check_regular_hypergroup(H, cap=None):
    """Every S in ⟨H⟩ containing some a and −a also contains 0."""
    subsets = generated_masks(H, cap)

    def test(s):
        if s >> H.zero & 1:
            return True
        return not any(s >> H.neg[a] & 1 for a in from_mask(s))
    return scan("regular", subsets, test, show=lambda s: _sl(H, s))


def negation_is_scalar(H):
    """−a = (−1)·a for all a (holds in every multiring)."""
    if H.one is None:
        return AxiomResult("neg_is_minus_one_times", False, None, note="no unit")
    m1 = H.neg[H.one]
    return scan("neg_is_minus_one_times", range(H.n),
                lambda a: None if H.mul[m1, a] == UNDEF else H.mul[m1, a] == H.neg[a],
                show=lambda a: _lab(H, a))


# -- rings and quotients ------------------------------------------------------

class Ring:
    """A finite commutative ring given by single-valued tables."""

    def __init__(self, labels, zero, one, add, mul, name="ring"):
        self.labels = tuple(str(x) for x in labels)
        self.n = len(self.labels)
        self.zero, self.one = zero, one
        self.add = np.array(add, dtype=np.int64)
        self.mul = np.array(mul, dtype=np.int64)
        self.name = name
        self.neg = [int(np.where(self.add[a] == zero)[0][0]) for a in range(self.n)]

    def units(self):
        return [a for a in range(self.n) if (self.mul[a] == self.one).any()]


def integers_mod(n):
    r = np.arange(n)
    return Ring([str(i) for i in range(n)], 0, 1 % n, (r[:, None] + r[None, :]) % n,
                (r[:, None] * r[None, :]) % n, name="Z/%d" % n)


def cyclic_subgroups(R):
    """All multiplicative subgroups of the unit group of R (as sorted tuples)."""
    units = R.units()
    found = set()
    # subgroups of a finite abelian group are generated by at most its rank; units
    # of the small rings used here are covered by closures of pairs of elements
    for g, h in product(units, repeat=2):
        S = {R.one}
        frontier = [R.one]
        while frontier:
            x = frontier.pop()
            for y in (int(R.mul[x, g]), int(R.mul[x, h])):
                if y not in S:
                    S.add(y)
                    frontier.append(y)
        found.add(tuple(sorted(S)))
    return sorted(found, key=lambda s: (len(s), s))


def quotient_hyperring(R, G):
    """R/G: cosets aG with [a]⊞[a′] = {[x+x′] : x ∈ aG, x′ ∈ a′G}."""
    G = sorted(set(int(g) for g in G))
    units = set(R.units())
    if not G or R.one not in G:
        raise DomainError("G must contain 1")
    for g in G:
        if g not in units:
            raise DomainError("%s is not invertible in %s" % (R.labels[g], R.name))
        for h in G:
            if int(R.mul[g, h]) not in G:
                raise DomainError("G is not closed under multiplication")
    coset_of = {}
    cosets = []
    for a in range(R.n):
        if a in coset_of:
            continue
        c = tuple(sorted({int(R.mul[a, g]) for g in G}))
        for x in c:
            coset_of[x] = len(cosets)
        cosets.append(c)
    k = len(cosets)
    add = [[sorted({coset_of[int(R.add[x, y])] for x in cosets[i] for y in cosets[j]})
            for j in range(k)] for i in range(k)]
    mul = [[coset_of[int(R.mul[cosets[i][0], cosets[j][0]])] for j in range(k)] for i in range(k)]
    neg = [coset_of[R.neg[cosets[i][0]]] for i in range(k)]
    labels = [R.labels[c[0]] for c in cosets]
    gl = ",".join(R.labels[g] for g in G)
    return HyperTable(labels, coset_of[R.zero], coset_of[R.one], neg, add, mul,
                      name="%s/{%s}" % (R.name, gl))


def hyper_from_rows(labels, add_rows, mul_rows, neg, zero="0", one="1", name="hyper", validate=True):
    """Build a HyperTable from label-keyed dictionaries (used by the catalog)."""
    idx = {l: i for i, l in enumerate(labels)}
    n = len(labels)
    add = [[None] * n for _ in range(n)]
    for (a, b), vals in add_rows.items():
        s = [idx[v] for v in vals]
        add[idx[a]][idx[b]] = s
        add[idx[b]][idx[a]] = s
    mul = [[idx[mul_rows[(a, b)]] for b in labels] for a in labels]
    return HyperTable(labels, idx[zero], idx[one], [idx[neg[l]] for l in labels], add, mul,
                      name=name, validate=validate)
