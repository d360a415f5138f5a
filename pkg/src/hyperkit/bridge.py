"""Hyperrings to systems (Φ) and back (Ψ via ⊞_∇), elimination axioms, ⊞_⪯ / ⊞_I,
Assumption-style checks for the ⊞_I hypergroup, isomorphism search, retraction tests.
"""
from itertools import product

import numpy as np

from .carrier import (UNDEF, DomainError, HyperTable, PreconditionError, System, closure_under,
                      from_mask, to_mask)
from .hyper import check_double_distributivity, check_hypergroup
from .report import AxiomResult, Report, scan
from .systems import SurpassSpec, ideal_relation, null_set, relation


def _lab(S, *xs):
    return tuple(S.label(x) for x in xs)


# -- Φ: hypersystems -----------------------------------------------------------

def hypersystem_of(H, distributed=False, cap=None):
    """System ⟨H⟩ of subsets generated by the singletons, ordered by inclusion.

    Product: setwise when H is doubly distributive, the distributed product when
    ``distributed`` is set, otherwise only the tangible action.
    """
    pres = {}
    for a in range(H.n):
        pres[1 << a] = (a,)

    def step(x, y):
        z = H.set_plus_mask(x, y)
        if z not in pres:
            pres[z] = pres[x] + pres[y]
        return z
    items = closure_under([1 << a for a in range(H.n)], step, cap)
    idx = {m: i for i, m in enumerate(items)}
    n = len(items)
    neg = []
    for m in items:
        nm = H.neg_mask(m)
        if nm not in idx:
            raise DomainError("⟨H⟩ is not closed under negation at %s"
                              % H.subset_label(from_mask(m)))
        neg.append(idx[nm])
    add = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(items):
        for j in range(i, n):
            add[i, j] = add[j, i] = idx[H.set_plus_mask(x, items[j])]
    mul = np.full((n, n), UNDEF, dtype=np.int64)
    dd = check_double_distributivity(H).passed
    mode = "setwise" if dd else ("distributed" if distributed else "action")
    for i, x in enumerate(items):
        for j, y in enumerate(items):
            single = (x & (x - 1)) == 0 or (y & (y - 1)) == 0
            if mode == "distributed" and not single:
                prods = [int(H.mul[a, b]) for a in pres[x] for b in pres[y]]
                if UNDEF in prods:
                    continue
                p = H.sum_mask(*prods)
            elif mode == "setwise" or single:
                p = H.setwise_mul_mask(x, y)
            else:
                continue
            if p is not None and p in idx:
                mul[i, j] = idx[p]
    members = [from_mask(m) for m in items]
    S = System([H.subset_label(m) for m in members], idx[1 << H.zero],
               [idx[1 << a] for a in range(H.n) if a != H.zero], add, neg, mul,
               surpass=SurpassSpec.inclusion(),
               one=None if H.one is None else idx[1 << H.one],
               name="Phi(%s)" % H.name, members=members, scope=H.scope)
    S.product_mode = mode
    S.base = H
    return S


def large_set_ideal(S, min_size, base=None):
    """A_Null together with the elements whose underlying set has at least ``min_size`` members."""
    if S.members is None:
        raise DomainError("%s has no set-valued elements" % S.name)
    base = null_set(S) if base is None else base
    return tuple(sorted(set(base) | {i for i in range(S.n) if len(S.members[i]) >= min_size}))


# -- balance matrices and the elimination profile --------------------------------

def balance_matrix(S, I=None):
    """B[b1, b2] = (b1 (−) b2 ∈ I); entries leaving the window are False and flagged in U."""
    I = null_set(S) if I is None else I
    inI = np.zeros(S.n + 1, dtype=bool)
    inI[list(I)] = True
    D = S.add_table[:, S.neg_table]
    U = D == UNDEF
    B = inI[np.where(U, S.n, D)]
    return B, U


def elimination_profile(S, I=None):
    """Tangibly balanced, tangible balance elimination, ∇-inversion (left/right), faithfulness."""
    B, U = balance_matrix(S, I)
    n = S.n
    T0 = S.tangible0
    T0a = np.array(T0)
    rep = Report(S.name + " (elimination)", scope=S.scope)
    if I is not None:
        rep.extra["I"] = [S.label(x) for x in sorted(I)]

    def tb(b1, b2):
        if U[b1, b2]:
            return None
        if not B[b1, b2]:
            return True
        return bool((B[T0a, b1] & B[T0a, b2]).any())
    rep.add(scan("tangibly_balanced", product(range(n), repeat=2), tb, show=lambda t: _lab(S, *t)))

    def be(b1, b2):
        if U[b1, b2]:
            return None
        if B[b1, b2]:
            return True
        hits = B[b1, T0a] & B[T0a, b2]
        return not hits.any()
    r = scan("balance_elimination", product(range(n), repeat=2), be, show=lambda t: t)
    if not r.passed:
        b1, b2 = r.witness
        a = int(T0a[np.flatnonzero(B[b1, T0a] & B[T0a, b2])[0]])
        r.witness = _lab(S, b1, a, b2)
    rep.add(r)
    for side in ("left", "right"):
        def inv(a, b, a1, side=side):
            p = S.mul(a, b) if side == "left" else S.mul(b, a)
            if p == UNDEF or U[p, a1]:
                return None
            if not B[p, a1]:
                return True
            for c in T0:
                q = S.mul(a, c) if side == "left" else S.mul(c, a)
                if q == a1 and B[b, c]:
                    return True
            return False
        rep.add(scan("nabla_inversion_" + side, product(T0, range(n), T0), inv,
                     show=lambda t: _lab(S, *t)))
    Tl = S.tangible_list
    sig = {}
    witness = None
    for b in range(n):
        key = tuple(B[Tl, b].tolist())
        if key in sig and witness is None:
            witness = _lab(S, sig[key], b)
        sig.setdefault(key, b)
    rep.add(AxiomResult("faithfully_balanced", witness is None, witness, checked=n))
    return rep


def boxplus_nabla(S, operands, I=None):
    """{a ∈ T0 : a ∇ Σ operands}."""
    s = S.sum(*operands)
    if s == UNDEF:
        raise DomainError("sum leaves the window")
    B, U = balance_matrix(S, I)
    return tuple(a for a in S.tangible0 if B[a, s])


def recover_hyperring(S, I=None, require="hyperring"):
    """Ψ(S): T0 with ⊞_∇ and the inherited product."""
    prof = elimination_profile(S, I)
    need = ["tangibly_balanced", "balance_elimination"]
    if require == "hyperring":
        need += ["nabla_inversion_left", "nabla_inversion_right"]
    bad = [x for x in need if not prof[x].passed]
    if bad:
        raise PreconditionError("recovery needs %s" % ", ".join(bad), prof)
    T0 = S.tangible0
    pos = {x: i for i, x in enumerate(T0)}
    B, U = balance_matrix(S, I)
    T0a = np.array(T0)
    add = [[[pos[a] for a in T0a[B[T0a, S.add(x, y)]]] for y in T0] for x in T0]
    mul = np.full((len(T0), len(T0)), UNDEF, dtype=np.int64)
    for i, x in enumerate(T0):
        for j, y in enumerate(T0):
            p = S.mul(x, y)
            if p == UNDEF:
                continue
            if p not in pos:
                raise DomainError("product %s·%s = %s leaves T0" % (_lab(S, x, y) + (S.label(p),)))
            mul[i, j] = pos[p]
    one = pos.get(S.one) if S.one is not None else None
    return HyperTable([S.label(x) for x in T0], pos[S.zero], one, [pos[S.neg(x)] for x in T0],
                      add, mul, name="Psi(%s)" % S.name, scope=S.scope)


def check_closed_chain(S, I=None):
    """(b1⊞b2)⊞b3 ⊆ b1⊞b2⊞b3 and the reverse, over tangible triples."""
    B, U = balance_matrix(S, I)
    T0 = S.tangible0
    T0a = np.array(T0)
    rep = Report(S.name + " (⊞_∇ chain)", scope=S.scope)
    fwd, back = [], []
    for a1, a2, a3 in product(T0, repeat=3):
        s12 = S.add(a1, a2)
        s = S.add(s12, a3)
        if s == UNDEF:
            continue
        triple = set(T0a[B[T0a, s]].tolist())
        nested = set()
        for c in T0a[B[T0a, s12]].tolist():
            t = S.add(c, a3)
            if t != UNDEF:
                nested |= set(T0a[B[T0a, t]].tolist())
        if not nested <= triple:
            fwd.append((a1, a2, a3))
        if not triple <= nested:
            back.append((a1, a2, a3))
    rep.add(AxiomResult("nested_in_triple", not fwd, _lab(S, *fwd[0]) if fwd else None))
    rep.add(AxiomResult("triple_in_nested", not back, _lab(S, *back[0]) if back else None))
    return rep


def retraction_suite(H, cap=None):
    """ΨΦ(H) against H under a ↦ {a}, plus faithfulness of Φ(H)."""
    S = hypersystem_of(H, cap=cap)
    rep = Report("retraction(%s)" % H.name, scope=H.scope)
    rep.extra["hypersystem_size"] = S.n
    try:
        H2 = recover_hyperring(S)
    except PreconditionError as e:
        rep.add(AxiomResult("recoverable", False, [a.name for a in e.report.failures()]))
        return rep
    same = H2 == H
    diff = None if same else table_diff(H, H2)
    rep.add(AxiomResult("retraction_equal", same, diff))
    prof = elimination_profile(S)
    f = prof["faithfully_balanced"]
    rep.add(AxiomResult("faithfully_balanced", f.passed, f.witness, informational=True))
    return rep


def table_diff(H1, H2):
    """Entries where two hypertables disagree (by label), least first."""
    out = []
    if H1.labels != H2.labels:
        return [("labels", list(H1.labels), list(H2.labels))]
    for i, j in product(range(H1.n), repeat=2):
        if H1.add_mask[i][j] != H2.add_mask[i][j]:
            out.append(("add", H1.labels[i], H1.labels[j],
                        H1.subset_label(H1.add(i, j)), H2.subset_label(H2.add(i, j))))
        if H1.mul[i, j] != H2.mul[i, j]:
            out.append(("mul", H1.labels[i], H1.labels[j]))
    if H1.neg != H2.neg:
        out.append(("neg",))
    if (H1.zero, H1.one) != (H2.zero, H2.one):
        out.append(("zero/one",))
    return out


# -- ⊞_⪯, ⊞_I and the ⊞_I hypergroup ---------------------------------------------

def boxplus_order(S, operands, variant="preceq", I=None, include_zero=False):
    """{a ∈ T : a ⪯ Σ operands} (or ⪯_I); with include_zero, 𝟘 is also admitted."""
    s = S.sum(*operands)
    if s == UNDEF:
        raise DomainError("sum leaves the window")
    R = relation(S) if variant == "preceq" else ideal_relation(S, null_set(S) if I is None else I)
    pool = S.tangible0 if include_zero else S.tangible_list
    return tuple(a for a in pool if R[a, s])


def check_assumption_hyper1(S, I=None):
    """Conditions (1)-(3) over T; on success the ⊞_I hypergroup on T0 is built and checked."""
    R = relation(S)
    RI = R if I is None else ideal_relation(S, I)
    T = S.tangible_list
    Ta = np.array(T, dtype=np.int64)
    rep = Report(S.name + " (⊞_I)", scope=S.scope)

    def c1(a0, a1):
        s = S.add(a0, a1)
        return None if s == UNDEF else bool(RI[Ta, s].any())
    rep.add(scan("hyper1_nonempty", product(T, T), c1, show=lambda t: _lab(S, *t)))

    def c2(ap, a1, a2, a3):
        s = S.sum(a1, a2, a3)
        s12 = S.add(a1, a2)
        if UNDEF in (s, s12):
            return None
        if not R[ap, s]:
            return True
        for c in T:
            t = S.add(c, a3)
            if RI[c, s12] and t != UNDEF and RI[ap, t]:
                return True
        return False
    rep.add(scan("hyper1_left", product(T, repeat=4), c2, show=lambda t: _lab(S, *t)))

    def c3(ap, a1, a2, a3):
        s = S.sum(a1, a2, a3)
        s23 = S.add(a2, a3)
        if UNDEF in (s, s23):
            return None
        if not RI[ap, s]:
            return True
        for c in T:
            t = S.add(a1, c)
            if RI[c, s23] and t != UNDEF and RI[ap, t]:
                return True
        return False
    rep.add(scan("hyper1_right", product(T, repeat=4), c3, show=lambda t: _lab(S, *t)))
    if rep.passed:
        H = boxplus_I_hypergroup(S, I)
        hg = check_hypergroup(H)
        rep.add(AxiomResult("boxplus_I_hypergroup", hg.passed,
                            None if hg.passed else [(a.name, a.witness) for a in hg.failures()]))
        rep.extra["hypergroup"] = H
    return rep


def boxplus_I_hypergroup(S, I=None):
    """T0 with a ⊞_I b = {c ∈ T0 : c ⪯_I a + b}."""
    RI = relation(S) if I is None else ideal_relation(S, I)
    T0 = S.tangible0
    pos = {x: i for i, x in enumerate(T0)}
    T0a = np.array(T0)
    add = []
    for x in T0:
        row = []
        for y in T0:
            s = S.add(x, y)
            row.append([] if s == UNDEF else [pos[c] for c in T0a[RI[T0a, s]].tolist()])
        add.append(row)
    mul = np.full((len(T0), len(T0)), UNDEF, dtype=np.int64)
    for i, x in enumerate(T0):
        for j, y in enumerate(T0):
            p = S.mul(x, y)
            if p in pos:
                mul[i, j] = pos[p]
    return HyperTable([S.label(x) for x in T0], pos[S.zero],
                      pos.get(S.one) if S.one is not None else None,
                      [pos[S.neg(x)] for x in T0], add, mul, name="boxplus_I(%s)" % S.name,
                      scope=S.scope, validate=False)


def compare_boxplus(S, I=None):
    """Where ⊞_⪯ (with 𝟘 admitted) and ⊞_∇ disagree on tangible pairs; no claim either way."""
    out = []
    for a, b in product(S.tangible0, repeat=2):
        if b < a:
            continue
        try:
            x = boxplus_order(S, [a, b], include_zero=True)
            y = boxplus_nabla(S, [a, b], I)
        except DomainError:
            continue
        if x != y:
            out.append((S.label(a), S.label(b), [S.label(c) for c in x], [S.label(c) for c in y]))
    return out


# -- isomorphism search ----------------------------------------------------------

def _signature(S):
    R = relation(S)
    from .systems import heights
    h = heights(S)
    T = S.tangible_list
    sig = []
    for x in range(S.n):
        sig.append((x == S.zero, x in S.tangible, h.get(x, -1), S.neg(x) == x,
                    int(R[x].sum()), int(R[:, x].sum()),
                    sum(1 for t in T if S.add(x, t) == x),
                    sum(1 for t in T if S.add(x, t) == t),
                    int((S.add_table[x] == x).sum())))
    return sig


def find_isomorphism(S1, S2, check_mul=True):
    """Bijection S1 → S2 preserving 𝟘, T, +, (−), ⪯ and (where both define it) the product.

    Backtracks over the images of tangibles and propagates through sums.  Returns a
    list f with f[i] the image of i, or None.
    """
    if S1.n != S2.n or len(S1.tangible) != len(S2.tangible):
        return None
    sig1, sig2 = _signature(S1), _signature(S2)
    if sorted(sig1) != sorted(sig2):
        return None
    R1, R2 = relation(S1), relation(S2)
    T = S1.tangible_list
    cands = {t: [u for u in S2.tangible_list if sig2[u] == sig1[t]] for t in T}
    order = sorted(T, key=lambda t: len(cands[t]))

    def extend(f):
        f = dict(f)
        queue = list(f)
        while queue:
            x = queue.pop()
            for t in T:
                if t not in f:
                    continue
                s = S1.add(x, t)
                if s == UNDEF:
                    continue
                img = S2.add(f[x], f[t])
                if s in f:
                    if f[s] != img:
                        return None
                else:
                    f[s] = img
                    queue.append(s)
        return f

    def full_check(f):
        if len(f) != S1.n or len(set(f.values())) != S1.n:
            return False
        g = np.array([f[i] for i in range(S1.n)])
        if not np.array_equal(S2.add_table[np.ix_(g, g)], g_map(S1.add_table, g)):
            return False
        if not np.array_equal(S2.neg_table[g], g_map(S1.neg_table, g)):
            return False
        if not np.array_equal(R2[np.ix_(g, g)], R1):
            return False
        if {int(g[t]) for t in S1.tangible} != set(S2.tangible):
            return False
        if check_mul:
            m1 = g_map(S1.mul_table, g)
            m2 = S2.mul_table[np.ix_(g, g)]
            both = (S1.mul_table != UNDEF) & (m2 != UNDEF)
            if not np.array_equal(m1[both], m2[both]):
                return False
        return True

    def rec(k, f):
        if k == len(order):
            g = extend(f)
            if g is not None and full_check(g):
                return g
            return None
        t = order[k]
        if t in f:
            return rec(k + 1, f)
        used = set(f.values())
        for u in cands[t]:
            if u in used:
                continue
            nt, nu = S1.neg(t), S2.neg(u)
            if (nt == t) != (nu == u):
                continue
            g = dict(f)
            g[t] = u
            if nt != t:
                if nt in g and g[nt] != nu:
                    continue
                if nt not in g and nu in used:
                    continue
                g[nt] = nu
            if not _partial_ok(S1, S2, g, T):
                continue
            res = rec(k + 1, g)
            if res is not None:
                return res
        return None
    f = rec(0, {S1.zero: S2.zero})
    return None if f is None else [f[i] for i in range(S1.n)]


def g_map(table, g):
    out = np.where(table == UNDEF, UNDEF, g[np.where(table == UNDEF, 0, table)])
    return out


def _partial_ok(S1, S2, f, T):
    for a in f:
        for b in f:
            s = S1.add(a, b)
            if s in f and f[s] != S2.add(f[a], f[b]):
                return False
    return True


def isomorphic(S1, S2, check_mul=True):
    return find_isomorphism(S1, S2, check_mul) is not None


def check_hypersystem_product(H, cap=None):
    """Setwise product on ⟨H⟩ versus the distributed one; witness pair where they differ."""
    S = hypersystem_of(H, distributed=True, cap=cap)
    rep = Report("products(%s)" % H.name, scope=H.scope)
    w = None
    for i in range(S.n):
        for j in range(S.n):
            a, b = S.members[i], S.members[j]
            sw = H.setwise_mul_mask(to_mask(a), to_mask(b))
            d = S.mul(i, j)
            if sw is None or d == UNDEF:
                continue
            if sw != to_mask(S.members[d]):
                w = {"S": S.label(i), "T": S.label(j), "setwise": H.subset_label(from_mask(sw)),
                     "distributed": S.label(d)}
                break
        if w:
            break
    rep.add(AxiomResult("products_agree", w is None, w))
    return rep
