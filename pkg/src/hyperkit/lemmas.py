"""Structural lemmas of the theory, run as exhaustive checks on finite tables and windows.

Each function returns an AxiomResult.  When a lemma's hypotheses fail on the given
table the result passes vacuously with ``checked == 0`` and a note saying why.
"""
from itertools import product

from .carrier import UNDEF, DomainError, UnsupportedError
from .report import AxiomResult, Report, scan
from .systems import (SurpassSpec, _unit_elems, bipotent, cancellative, check_surpassing_axioms,
                      classify, generation, heights, ideal_relation, irreducible, is_submodule,
                      is_trivial, kind, null_set, preorder_leq, quasi_zeros, regular,
                      uniform_presentation, uniquely_quasi_negated)


def _lab(S, *xs):
    return tuple(S.label(x) for x in xs)


def _vacuous(name, why):
    return AxiomResult(name, True, None, 0, 0, "vacuous: " + why)


def _ideal(S, I):
    return tuple(sorted(set(null_set(S) if I is None else I)))


def _minus_in(S, Iset, b1, b2):
    d = S.minus(b1, b2)
    return None if d == UNDEF else d in Iset


# -- balance -------------------------------------------------------------------------

def nab4_i(S, I=None):
    """Uniquely negated over I: tangibles balance iff they are equal."""
    I = _ideal(S, I)
    if not uniquely_quasi_negated(S, S.tangible_list, I).passed:
        return _vacuous("nab4_i", "not uniquely negated over I")
    if not set(quasi_zeros(S)) <= set(I):
        return _vacuous("nab4_i", "I does not contain the quasi-zeros")
    Iset = set(I)

    def test(a1, a2):
        r = _minus_in(S, Iset, a1, a2)
        return None if r is None else r == (a1 == a2)
    T = S.tangible_list
    return scan("nab4_i", product(T, T), test, show=lambda t: _lab(S, *t))


def nab4_ii(S, I=None):
    """(b1 + b2) ∇ b3 iff b1 ∇ (b3 (−) b2)."""
    Iset = set(_ideal(S, I))
    n = S.n

    def test(b1, b2, b3):
        s = S.add(b1, b2)
        t = S.minus(b3, b2)
        if UNDEF in (s, t):
            return None
        x, y = _minus_in(S, Iset, s, b3), _minus_in(S, Iset, b1, t)
        if x is None or y is None:
            return None
        return x == y
    return scan("nab4_ii", product(range(n), repeat=3), test, show=lambda t: _lab(S, *t))


def nablprec(S, I=None):
    """b1 ⪯_I b2 implies b1 ∇_I b2 (I a submodule containing A°)."""
    I = _ideal(S, I)
    sub = is_submodule(S, I)
    if not sub.passed:
        return _vacuous("nablprec", "I is not a submodule (%s)" % (sub.witness,))
    R = ideal_relation(S, I)
    Iset = set(I)
    pairs = [(int(i), int(j)) for i in range(S.n) for j in range(S.n) if R[i, j]]

    def test(b1, b2):
        return _minus_in(S, Iset, b2, b1)
    return scan("nablprec", pairs, test, show=lambda t: _lab(S, *t))


def newsys(S, I=None):
    """T0 uniquely quasi-negated over I implies ⪯_I is a surpassing relation with Null = I.

    The converse is recorded in the note (informational only).
    """
    I = _ideal(S, I)
    sub = is_submodule(S, I)
    if not sub.passed:
        return _vacuous("newsys", "I is not a submodule (%s)" % (sub.witness,))
    spec = SurpassSpec.ideal(I)
    rep = check_surpassing_axioms(S, spec)
    surpassing = all(a.passed for a in rep.axioms if not a.informational and a.name != "system")
    uqn = uniquely_quasi_negated(S, S.tangible0, I)
    nulls_ok = tuple(null_set(S, spec)) == tuple(I)
    note = "converse %s" % ("holds" if surpassing <= uqn.passed else "fails")
    if not uqn.passed:
        return AxiomResult("newsys", True, None, 1, 0, "vacuous: T0 not uniquely quasi-negated; " + note)
    ok = surpassing and nulls_ok
    w = None
    if not ok:
        w = [a.name for a in rep.failures() if a.name != "system"] or ["null_set"]
    return AxiomResult("newsys", ok, w, 1, 0, note)


def biphom1(S, I=None):
    """a ⪯_I c and a′ ⪯_I c′ imply aa′ ⪯_I cc′ (I an ideal of a semiring window)."""
    I = _ideal(S, I)
    if not is_submodule(S, I).passed:
        return _vacuous("biphom1", "I is not a submodule")
    for x in I:
        for y in range(S.n):
            p = S.mul(x, y)
            if p != UNDEF and p not in I:
                return _vacuous("biphom1", "I is not closed under the product")
    R = ideal_relation(S, I)
    pairs = [(int(i), int(j)) for i in range(S.n) for j in range(S.n) if R[i, j]]

    def test(p, q):
        (a, c), (a1, c1) = p, q
        x, y = S.mul(a, a1), S.mul(c, c1)
        if UNDEF in (x, y):
            return None
        return bool(R[x, y])
    return scan("biphom1", product(pairs, pairs), test,
                show=lambda t: _lab(S, *t[0], *t[1]))


# -- heights and bipotence ---------------------------------------------------------------

def ht2(S):
    """∘-idempotent (−)-bipotent: height ≤ 3; with e′ ∈ {e, 𝟙}: ∘-idempotent and shallow."""
    e, e1 = _unit_elems(S)
    if e is None or e == UNDEF or e1 == UNDEF:
        return _vacuous("ht2", "no unit in the table")
    if not bipotent(S).passed:
        return _vacuous("ht2", "not (−)-bipotent")
    prof = classify(S)
    checked = 0
    if S.circ(e) == e:
        checked += 1
        h = heights(S)
        if len(h) < S.n:
            return _vacuous("ht2", "T does not generate")
        worst = max(h, key=lambda b: (h[b], -b))
        if h[worst] > 3:
            return AxiomResult("ht2", False, ("height", S.label(worst), h[worst]), checked)
    if e1 in (e, S.one):
        checked += 1
        if not (prof.circ_idempotent.passed and prof.shallow.passed):
            bad = prof.circ_idempotent if not prof.circ_idempotent.passed else prof.shallow
            return AxiomResult("ht2", False, (bad.name, bad.witness), checked)
    if not checked:
        return _vacuous("ht2", "neither ∘-idempotent nor e′ ∈ {e, 𝟙}")
    return AxiomResult("ht2", True, None, checked)


def _bip_canc(S):
    return bipotent(S).passed and cancellative(S).passed


def _tpart(S, b):
    try:
        return uniform_presentation(S, b).tangible
    except (DomainError, UnsupportedError):
        return None


def neg3(S):
    """Cancellative (−)-bipotent: b′_T ≠ ±b_T gives (b+b′, b(−)b′) = (b, b) or the mirror."""
    if not _bip_canc(S):
        return _vacuous("neg3", "not bipotent and cancellative")
    tp = {b: _tpart(S, b) for b in range(S.n) if b != S.zero}

    def test(b, b1):
        t, t1 = tp.get(b), tp.get(b1)
        if t is None or t1 is None or t1 in (t, S.neg(t)):
            return None
        s, d, d1 = S.add(b, b1), S.minus(b, b1), S.minus(b1, b)
        if UNDEF in (s, d, d1):
            return None
        return (s == b and d == b) or (s == b1 and d1 == b1)
    return scan("neg3", product(range(S.n), repeat=2), test, show=lambda t: _lab(S, *t))


def leq_order0(S):
    """Cancellative (−)-bipotent, c ≤ c′: distinct tangible parts give c + c′ = c′; in the
    second kind, equal parts up to sign give c′ ∈ {c°, ±c}."""
    if not _bip_canc(S):
        return _vacuous("leq_order0", "not bipotent and cancellative")
    second = kind(S)[0] == "second"
    tp = {b: _tpart(S, b) for b in range(S.n) if b != S.zero}

    def test(c, c1):
        t, t1 = tp.get(c), tp.get(c1)
        if t is None or t1 is None or not preorder_leq(S, c, c1):
            return None
        if t1 not in (t, S.neg(t)):
            s = S.add(c, c1)
            return None if s == UNDEF else s == c1
        if second:
            return c1 in (S.circ(c), c, S.neg(c))
        return None
    return scan("leq_order0", product(range(S.n), repeat=2), test, show=lambda t: _lab(S, *t))


# -- regularity and geometry -----------------------------------------------------------------

def hyp0(S):
    """Metatangible systems of the second kind are (−)-regular."""
    if kind(S)[0] != "second":
        return _vacuous("hyp0", "not of the second kind")
    prof = classify(S)
    if not prof.metatangible.passed:
        return _vacuous("hyp0", "not metatangible")
    r = regular(S)
    return AxiomResult("hyp0", r.passed, r.witness, r.checked, r.skipped)


def rev122_iii(S):
    """No (T,(−))-nontrivial triple is both metatangible and strongly geometric."""
    if is_trivial(S):
        return _vacuous("rev122_iii", "trivial")
    prof = classify(S)
    both = prof.metatangible.passed and prof.strongly_geometric.passed
    return AxiomResult("rev122_iii", not both, S.name if both else None, 1)


def geom1(S):
    """When T generates, every nonzero T-irreducible element is tangible."""
    if len(generation(S)) < S.n:
        return _vacuous("geom1", "T does not generate")

    def test(c):
        if c == S.zero or c in S.tangible:
            return None
        return not irreducible(S, c)[0]
    return scan("geom1", range(S.n), test, show=lambda c: _lab(S, c))


def remark111(S, I=None):
    """a ∇ b with a tangible implies a ⪯ b (holds for some families only; informational)."""
    Iset = set(_ideal(S, I))
    from .systems import relation
    R = relation(S)

    def test(a, b):
        r = _minus_in(S, Iset, a, b)
        if r is None:
            return None
        return not r or bool(R[a, b])
    r = scan("remark111", product(S.tangible_list, range(S.n)), test,
             show=lambda t: _lab(S, *t), informational=True)
    return r


LEMMAS = {
    "nab4_i": nab4_i, "nab4_ii": nab4_ii, "nablprec": nablprec, "newsys": newsys,
    "biphom1": biphom1, "ht2": ht2, "neg3": neg3, "leq_order0": leq_order0, "hyp0": hyp0,
    "rev122_iii": rev122_iii, "geom1": geom1,
}
_TAKES_I = {"nab4_i", "nab4_ii", "nablprec", "newsys", "biphom1"}


def lemma_suite(S, I=None, names=None):
    rep = Report(S.name + " (lemmas)", scope=S.scope)
    for name in names or LEMMAS:
        f = LEMMAS[name]
        rep.add(f(S, I) if name in _TAKES_I else f(S))
    return rep
