"""Triples, surpassing relations, balance, classification, heights, the pre-order ≤,
fuzzy-ring axioms and preunit-induced multiplication.

All quantifiers run over the finite table (or window).  Instances whose operands or
results leave a window are skipped and counted, never guessed.
"""
from dataclasses import dataclass
from itertools import product

import numpy as np

from .carrier import UNDEF, DomainError, PreconditionError, UnsupportedError
from .report import AxiomResult, Report, scan


@dataclass(frozen=True)
class SurpassSpec:
    variant: str                      # circ | ideal | explicit | inclusion
    members: frozenset = frozenset()  # ideal
    pairs: frozenset = frozenset()    # explicit

    @classmethod
    def circ(cls):
        return cls("circ")

    @classmethod
    def ideal(cls, members):
        return cls("ideal", members=frozenset(int(x) for x in members))

    @classmethod
    def explicit(cls, pairs):
        return cls("explicit", pairs=frozenset((int(a), int(b)) for a, b in pairs))

    @classmethod
    def inclusion(cls):
        return cls("inclusion")

    def normalized(self, S):
        """Relation as a frozenset of pairs, for comparing specs across variants."""
        R = relation(S, self)
        return frozenset(map(tuple, np.argwhere(R).tolist()))


def _lab(S, *xs):
    return tuple(S.label(x) for x in xs)


# -- quasi-zeros, relations, null sets -----------------------------------------

def quasi_zeros(S):
    """A° = {b (−) b}."""
    out = {S.circ(b) for b in S.elements}
    out.discard(UNDEF)
    return tuple(sorted(out))


def ideal_relation(S, I):
    """b1 ⪯_I b2 iff b2 = b1 + c for some c ∈ I."""
    n = S.n
    R = np.zeros((n, n), dtype=bool)
    rows = np.arange(n)
    for c in I:
        col = S.add_table[:, c]
        ok = col != UNDEF
        R[rows[ok], col[ok]] = True
    return R


def relation(S, spec=None):
    """Boolean matrix of ⪯ (cached on the table)."""
    spec = S.surpass if spec is None else spec
    key = ("rel", spec)
    R = S.cache.get(key)
    if R is not None:
        return R
    n = S.n
    if spec.variant == "circ":
        R = ideal_relation(S, quasi_zeros(S))
    elif spec.variant == "ideal":
        R = ideal_relation(S, sorted(spec.members))
    elif spec.variant == "explicit":
        R = np.zeros((n, n), dtype=bool)
        for a, b in spec.pairs:
            R[a, b] = True
    elif spec.variant == "inclusion":
        if S.members is None:
            raise DomainError("inclusion surpassing needs set-valued elements")
        M = S.members
        R = np.array([[M[i] <= M[j] for j in range(n)] for i in range(n)], dtype=bool)
    else:
        raise DomainError("unknown surpass variant %r" % spec.variant)
    R.setflags(write=False)
    S.cache[key] = R
    return R


def surpasses(S, spec, b1, b2):
    """b1 ⪯ b2."""
    return bool(relation(S, spec)[b1, b2])


def null_set(S, spec=None):
    """A_Null = {b : 𝟘 ⪯ b}."""
    R = relation(S, spec)
    return tuple(int(x) for x in np.flatnonzero(R[S.zero]))


def is_submodule(S, I):
    """I is closed under + and the T-action and contains A°; returns an AxiomResult."""
    I = set(I)
    for c in quasi_zeros(S):
        if c not in I:
            return AxiomResult("ideal_submodule", False, ("missing quasi-zero", S.label(c)))
    for b, c in product(sorted(I), repeat=2):
        s = S.add(b, c)
        if s != UNDEF and s not in I:
            return AxiomResult("ideal_submodule", False, ("sum", S.label(b), S.label(c)))
    for a in S.tangible_list:
        for c in sorted(I):
            p = S.mul(a, c)
            if p != UNDEF and p not in I:
                return AxiomResult("ideal_submodule", False, ("action", S.label(a), S.label(c)))
    return AxiomResult("ideal_submodule", True)


def uniquely_quasi_negated(S, subset, I, name="uniquely_quasi_negated"):
    """a (−) a′ ∈ I for a, a′ in subset implies a = a′."""
    Iset = set(I)

    def test(a, b):
        d = S.minus(a, b)
        if d == UNDEF:
            return None
        return a == b or d not in Iset
    subset = sorted(subset)
    return scan(name, product(subset, repeat=2), test, show=lambda t: _lab(S, *t))


# -- triples -------------------------------------------------------------------

def generation(S):
    """Elements reachable from T0 by iterated addition (BFS, depth ≤ n)."""
    T0 = S.tangible0
    seen = set(T0)
    frontier = list(T0)
    depth = 0
    while frontier and depth < S.n:
        nxt = []
        for b in frontier:
            for a in S.tangible_list:
                c = S.add(b, a)
                if c != UNDEF and c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
        depth += 1
    return seen


def check_triple(S):
    rep = Report(S.name, scope=S.scope)
    n = S.n
    rep.add(scan("neg_involution", range(n), lambda b: S.neg(S.neg(b)) == b,
                 show=lambda b: _lab(S, b)))

    def neg_add(b1, b2):
        s = S.add(b1, b2)
        t = S.add(S.neg(b1), S.neg(b2))
        if s == UNDEF or t == UNDEF:
            return None
        return S.neg(s) == t
    rep.add(scan("neg_additive", product(range(n), repeat=2), neg_add, show=lambda t: _lab(S, *t)))

    def neg_action(a, b):
        ab, nab, anb = S.mul(a, b), S.mul(S.neg(a), b), S.mul(a, S.neg(b))
        if UNDEF in (ab, nab, anb):
            return None
        return S.neg(ab) == nab == anb
    rep.add(scan("neg_action", product(S.tangible_list, range(n)), neg_action,
                 show=lambda t: _lab(S, *t)))
    T = S.tangible_list
    prods = [S.mul(a, b) for a in T for b in T]
    if prods and UNDEF not in prods:
        rep.add(scan("tangible_monoid", product(T, T), lambda a, b: S.mul(a, b) in S.tangible,
                     show=lambda t: _lab(S, *t)))
    reached = generation(S)
    missing = [b for b in range(n) if b not in reached]
    rep.add(AxiomResult("generation", not missing, S.label(missing[0]) if missing else None,
                        checked=n, note="%d unreached" % len(missing) if missing else ""))
    qz = set(quasi_zeros(S))
    rep.add(scan("tangible_quasizero", S.tangible0, lambda a: a == S.zero or a not in qz,
                 show=lambda a: _lab(S, a)))
    return rep


def check_surpassing_axioms(S, spec=None):
    """Def. of a surpassing relation, plus the strong variant and the system condition."""
    spec = S.surpass if spec is None else spec
    R = relation(S, spec)
    n = S.n
    rep = Report(S.name, scope=S.scope)
    rep.extra["surpass"] = spec.variant
    rep.add(scan("reflexive", range(n), lambda b: R[b, b], show=lambda b: _lab(S, b)))
    RR = (R.astype(np.int64) @ R.astype(np.int64)) > 0
    bad = np.argwhere(RR & ~R)
    if len(bad):
        i, k = bad[0]
        j = int(np.flatnonzero(R[i] & R[:, k])[0])
        rep.add(AxiomResult("transitive", False, _lab(S, i, j, k)))
    else:
        rep.add(AxiomResult("transitive", True, checked=int(R.sum())))
    pairs = [tuple(map(int, p)) for p in np.argwhere(R)]

    def additive(p, q, c):
        x, y = S.add(p, c), S.add(q, c)
        if x == UNDEF or y == UNDEF:
            return None
        return R[x, y]
    rep.add(scan("additive", ((p, q, c) for (p, q) in pairs for c in range(n)), additive,
                 show=lambda t: _lab(S, *t)))

    def action(a, p, q):
        x, y = S.mul(a, p), S.mul(a, q)
        if x == UNDEF or y == UNDEF:
            return None
        return R[x, y]
    rep.add(scan("action", ((a, p, q) for a in S.tangible_list for (p, q) in pairs), action,
                 show=lambda t: _lab(S, *t)))
    rep.add(scan("zero_below_quasizeros", range(n),
                 lambda b: None if S.circ(b) == UNDEF else R[S.zero, S.circ(b)],
                 show=lambda b: _lab(S, b)))
    rep.add(scan("neg_monotone", pairs, lambda p, q: R[S.neg(p), S.neg(q)],
                 show=lambda t: _lab(S, *t)))
    T0 = S.tangible0
    rep.add(scan("tangible_equality", product(T0, T0), lambda a, b: a == b or not R[a, b],
                 show=lambda t: _lab(S, *t)))
    rep.add(scan("strong", ((b, a) for a in S.tangible_list for b in range(n)),
                 lambda b, a: b == a or not R[b, a], show=lambda t: _lab(S, *t),
                 informational=True))
    nulls = null_set(S, spec)
    r = uniquely_quasi_negated(S, T0, nulls, name="system")
    rep.add(r)
    return rep


def check_system(S, spec=None):
    rep = check_triple(S)
    rep.extend(check_surpassing_axioms(S, spec))
    return rep


# -- balance ------------------------------------------------------------------

@dataclass
class BalanceContext:
    system: object
    I: tuple = None

    def __post_init__(self):
        if self.I is None:
            self.I = null_set(self.system)
        self.I = tuple(sorted(set(self.I)))
        self._Iset = frozenset(self.I)

    def balances(self, b1, b2):
        d = self.system.minus(b1, b2)
        if d == UNDEF:
            return None
        return d in self._Iset

    def contains(self, b):
        return b in self._Iset


def balances(ctx, b1, b2):
    """b1 ∇_I b2 iff b1 (−) b2 ∈ I (None when the difference leaves the window)."""
    return ctx.balances(b1, b2)


# -- heights and classification ------------------------------------------------

def heights(S):
    """Minimal number of tangibles summing to each element (0 for 𝟘)."""
    key = ("heights",)
    h = S.cache.get(key)
    if h is not None:
        return h
    h = {S.zero: 0}
    frontier = [S.zero]
    k = 0
    while frontier:
        k += 1
        nxt = []
        for b in frontier:
            for a in S.tangible_list:
                c = S.add(b, a)
                if c != UNDEF and c not in h:
                    h[c] = k
                    nxt.append(c)
        frontier = nxt
    S.cache[key] = h
    return h


def height(S, c):
    h = heights(S)
    if c not in h:
        raise DomainError("%s is not a sum of tangibles" % S.label(c))
    return h[c]


def bipotent(S):
    key = ("bipotent",)
    if key in S.cache:
        return S.cache[key]

    def test(a, b):
        if b == S.neg(a):
            return None
        s = S.add(a, b)
        return None if s == UNDEF else s in (a, b)
    T = S.tangible_list
    S.cache[key] = scan("bipotent", product(T, T), test, show=lambda t: _lab(S, *t))
    return S.cache[key]


def cancellative(S):
    """a c1 = a c2 with a ∈ T forces c1 = c2 (on defined products)."""
    key = ("cancellative",)
    if key in S.cache:
        return S.cache[key]
    checked = skipped = 0
    res = None
    for a in S.tangible_list:
        row = S.mul_table[a]
        first = {}
        hit = None
        for c, x in enumerate(row.tolist()):
            if x == UNDEF:
                continue
            if x in first:
                cand = (first[x], c)
                # least pair in (c1, c2) order
                if hit is None or cand < hit:
                    hit = cand
            else:
                first[x] = c
        n_def = int((row != UNDEF).sum())
        checked += n_def * (n_def - 1) // 2
        skipped += S.n * (S.n - 1) // 2 - n_def * (n_def - 1) // 2
        if hit is not None:
            res = AxiomResult("cancellative", False, _lab(S, a, *hit), checked, skipped)
            break
    if res is None:
        res = AxiomResult("cancellative", True, None, checked, skipped)
    S.cache[key] = res
    return res


def irreducible(S, c, strong=False):
    """c = a + b with a ∈ T forces b = c or a = c (strong: b = c = a)."""
    for a in S.tangible_list:
        for b in range(S.n):
            if S.add(a, b) == c:
                if strong and not (b == c == a):
                    return False, (a, b)
                if not strong and not (b == c or a == c):
                    return False, (a, b)
    return True, None


def _unit_elems(S):
    """e = 𝟙(−)𝟙, e′ = e + 𝟙 (None without a unit)."""
    if S.one is None:
        return None, None
    e = S.circ(S.one)
    return e, S.add(e, S.one)


def is_trivial(S):
    """Def. of (T,(−))-triviality: T = {𝟙} or T = {𝟙, (−)𝟙}."""
    T = S.tangible
    if not T:
        return True
    a = min(T)
    return T <= {a, S.neg(a)}


@dataclass
class TripleProfile:
    kind: str
    kind_witness: object
    bipotent: AxiomResult
    strongly_bipotent: AxiomResult
    metatangible: AxiomResult
    shallow: AxiomResult
    circ_idempotent: AxiomResult
    geometric: AxiomResult
    strongly_geometric: AxiomResult
    regular: AxiomResult
    uniquely_negated: AxiomResult
    e: object
    e_prime: object
    height_bound: object
    scope: str = "exhaustive"

    FLAGS = ("bipotent", "strongly_bipotent", "metatangible", "shallow", "circ_idempotent",
             "geometric", "strongly_geometric", "regular", "uniquely_negated")

    def flags(self):
        return {f: bool(getattr(self, f).passed) for f in self.FLAGS}

    def to_report(self, name):
        rep = Report(name, scope=self.scope)
        rep.add(AxiomResult("kind:" + self.kind, True, self.kind_witness, informational=True))
        for f in self.FLAGS:
            r = getattr(self, f)
            rep.add(AxiomResult(f, r.passed, r.witness, r.checked, r.skipped, r.note, True))
        rep.extra["e"] = self.e
        rep.extra["e_prime"] = self.e_prime
        rep.extra["height_bound"] = self.height_bound
        return rep


def kind(S):
    T = S.tangible_list
    fixed = [a for a in T if S.neg(a) == a]
    moved = [a for a in T if S.neg(a) != a]
    if not moved:
        return "first", None
    if not fixed:
        return "second", None
    return "mixed-witness", _lab(S, fixed[0], moved[0])


def regular(S, nulls=None):
    """(−)-regularity (second kind): (−)a1+a2+a3 ⪰ 𝟘 and a1+a2+a3 ⪰ 𝟘 force a2 = (−)a3."""
    k, _ = kind(S)
    if k != "second":
        return AxiomResult("regular", False, None, note="defined for second kind; kind is %s" % k)
    N = set(null_set(S) if nulls is None else nulls)
    T = S.tangible_list

    def test(a1, a2, a3):
        x = S.sum(S.neg(a1), a2, a3)
        y = S.sum(a1, a2, a3)
        if x == UNDEF or y == UNDEF:
            return None
        if x in N and y in N:
            return a2 == S.neg(a3)
        return True
    return scan("regular", product(T, T, T), test, show=lambda t: _lab(S, *t))


def classify(S):
    """Profile flags by exhaustive scan, with witnesses on the negative side."""
    T = S.tangible_list
    k, kw = kind(S)
    bip = bipotent(S)
    e, e1 = _unit_elems(S)
    if e is None:
        # no unit in the table: use the per-tangible forms a°, a° + a
        def sb(a):
            c = S.circ(a)
            return None if c == UNDEF or S.add(c, a) == UNDEF else S.add(c, a) == c
        sbr = scan("strongly_bipotent", T, sb, show=lambda a: _lab(S, a), note="per tangible")

        def ci(a):
            c = S.circ(a)
            return None if c == UNDEF or S.circ(c) == UNDEF else S.circ(c) == c
        cir = scan("circ_idempotent", T, ci, show=lambda a: _lab(S, a), note="per tangible")
    else:
        sbr = AxiomResult("strongly_bipotent", e == e1, None if e == e1 else _lab(S, e, e1))
        cir = AxiomResult("circ_idempotent", S.circ(e) == e,
                          None if S.circ(e) == e else _lab(S, e, S.circ(e)))
    if not bip.passed and sbr.passed:
        sbr = AxiomResult("strongly_bipotent", False, bip.witness, note="not bipotent")
    qz = quasi_zeros(S)
    un = uniquely_quasi_negated(S, T, qz, name="uniquely_negated")

    def mt(a, b):
        if b == S.neg(a):
            return None
        s = S.add(a, b)
        return None if s == UNDEF else s in S.tangible
    met = scan("metatangible", product(T, T), mt, show=lambda t: _lab(S, *t))
    if met.passed and not un.passed:
        met = AxiomResult("metatangible", False, un.witness, note="not uniquely negated")
    Tcirc = {S.circ(a) for a in T} | set(S.tangible0)
    sh = scan("shallow", range(S.n), lambda b: b in Tcirc, show=lambda b: _lab(S, b))

    def geo(strong):
        name = "strongly_geometric" if strong else "geometric"
        for a in T:
            ok, w = irreducible(S, a, strong)
            if not ok:
                return AxiomResult(name, False, _lab(S, a, *w))
        return AxiomResult(name, True, checked=len(T))
    h = heights(S)
    unreached = [b for b in range(S.n) if b not in h]
    hb = ("unbounded", S.label(unreached[0])) if unreached else max(h.values())
    return TripleProfile(k, kw, bip, sbr, met, sh, cir, geo(False), geo(True), regular(S), un,
                         None if e is None else S.label(e), None if e1 is None else S.label(e1),
                         hb, scope=S.scope)


# -- uniform presentation and the pre-order -----------------------------------------

@dataclass(frozen=True)
class UniformPresentation:
    m: int
    tangible: int
    circ: bool = False     # b = b_T° rather than m·b_T


def _require_bipotent_cancellative(S):
    key = ("bip-canc",)
    ok = S.cache.get(key)
    if ok is None:
        b, c = bipotent(S), cancellative(S)
        ok = (b.passed and c.passed, b if not b.passed else c)
        S.cache[key] = ok
    if not ok[0]:
        raise UnsupportedError("%s is not bipotent and cancellative (%s fails at %s)"
                               % (S.name, ok[1].name, ok[1].witness))


def multiple(S, m, a):
    return S.sum(*([a] * m))


def uniform_presentation(S, b):
    """b = m·b_T (m ≠ 2) or b = b_T° (m = 2)."""
    _require_bipotent_cancellative(S)
    if b == S.zero:
        raise DomainError("𝟘 has no uniform presentation")
    m = height(S, b)
    for a in S.tangible_list:
        if multiple(S, m, a) == b:
            return UniformPresentation(m, a)
    if m == 2:
        for a in S.tangible_list:
            if S.circ(a) == b:
                return UniformPresentation(2, a, circ=True)
    raise DomainError("no uniform presentation found for %s" % S.label(b))


def preorder_leq(S, c, c2):
    """c ≤ c′ iff c + d = c′ or (−)c + d = c′ for some d."""
    row = S.add_table[c]
    nrow = S.add_table[S.neg(c)]
    return bool((row == c2).any() or (nrow == c2).any())


def irreducible_core(S, strong=False):
    """Sub-triple generated by the (strongly) T-irreducible tangibles."""
    keep_t = [a for a in S.tangible_list if irreducible(S, a, strong)[0]]
    span = {S.zero} | set(keep_t)
    frontier = list(span)
    while frontier:
        nxt = []
        for b in frontier:
            for a in keep_t:
                c = S.add(b, a)
                if c != UNDEF and c not in span:
                    span.add(c)
                    nxt.append(c)
        frontier = nxt
    span |= {S.neg(x) for x in span}
    return S.restrict(span, tangible=keep_t, name=S.name + "|irr")


# -- fuzzy rings -----------------------------------------------------------------

def check_fuzzy_ring(A, eps, K0):
    """Fuzzy-ring axioms (1)-(4) and coherence; products leaving a window are skipped."""
    K = set(K0)
    one = A.one
    if one is None:
        raise PreconditionError("a unit is required")
    if one in K:
        raise PreconditionError("K0 must be a proper ideal (contains 𝟙)")
    n = A.n
    M = A.mul
    rep = Report(A.name + " (fuzzy)", scope=A.scope)

    def ideal_ok():
        for x, y in product(sorted(K), repeat=2):
            s = A.add(x, y)
            if s != UNDEF and s not in K:
                return False, ("sum", A.label(x), A.label(y))
        for a in range(n):
            for x in sorted(K):
                p = M(a, x)
                if p != UNDEF and p not in K:
                    return False, ("product", A.label(a), A.label(x))
        return True, None
    ok, w = ideal_ok()
    if not ok:
        raise PreconditionError("K0 is not an ideal: %s" % (w,))
    units = [a for a in range(n) if any(M(a, b) == one and M(b, a) == one for b in range(n))]
    rep.add(AxiomResult("eps_squared", M(eps, eps) == one, None if M(eps, eps) == one
                        else _lab(A, eps)))
    uset = set(units)

    def ax2(a):
        s = A.add(one, a)
        if s == UNDEF:
            return None
        return (a == eps) == (a in uset and s in K)
    rep.add(scan("axiom2", range(n), ax2, show=lambda a: _lab(A, a)))

    def ax3(a1, a2, a3, a4):
        s, t = A.add(a1, a2), A.add(a3, a4)
        if s == UNDEF or t == UNDEF or s not in K or t not in K:
            return None if UNDEF in (s, t) else True
        x = A.add(M(a1, a3), M(eps, M(a2, a4)))
        return None if x == UNDEF else x in K
    rep.add(scan("axiom3", product(range(n), repeat=4), ax3, show=lambda t: _lab(A, *t)))

    def ax4(a1, a2, a3, a4):
        s = A.add(a1, M(a2, A.add(a3, a4)))
        if s == UNDEF:
            return None
        if s not in K:
            return True
        x = A.sum(a1, M(a2, a3), M(a2, a4))
        return None if x == UNDEF else x in K
    rep.add(scan("axiom4", product(range(n), repeat=4), ax4, show=lambda t: _lab(A, *t)))
    span = {A.zero} | set(units)
    frontier = list(span)
    while frontier:
        nxt = []
        for b in frontier:
            for u in units:
                c = A.add(b, u)
                if c != UNDEF and c not in span:
                    span.add(c)
                    nxt.append(c)
        frontier = nxt
    missing = [b for b in range(n) if b not in span]
    rep.add(AxiomResult("coherent", not missing, A.label(missing[0]) if missing else None,
                        informational=True))
    return rep


# -- preunits ------------------------------------------------------------------

def _presentations(S, u, cap=None):
    """For each element, every shortest presentation Σ a_i u as a sorted tuple of tangibles."""
    Tu = {}
    for a in S.tangible_list:
        Tu[a] = S.mul(a, u)
    pres = {S.zero: [()]}
    frontier = [(S.zero, ())]
    level = 0
    while frontier and level < S.n:
        level += 1
        nxt = {}
        for b, p in frontier:
            for a in S.tangible_list:
                if p and a < p[-1]:
                    continue
                c = S.add(b, Tu[a])
                if c == UNDEF:
                    continue
                if c in pres and len(pres[c][0]) < level:
                    continue
                nxt.setdefault(c, set()).add(p + (a,))
        frontier = []
        for c, ps in nxt.items():
            if c not in pres or len(pres[c][0]) == level:
                pres.setdefault(c, [])
                for p in sorted(ps):
                    if p not in pres[c]:
                        pres[c].append(p)
                        frontier.append((c, p))
    return pres


def preunit_induced_mul(S, u):
    """(Σ a_i u)(Σ a′_j u) = Σ (a_i a′_j) u for a preunit u; returns (table, report).

    Needs the left and right T-action in ``S.mul``.  Raises DomainError naming the
    violated preunit clause.
    """
    T = S.tangible_list
    for a in T:
        if S.mul(a, u) != S.mul(u, a) or S.mul(a, u) == UNDEF:
            raise DomainError("preunit: a u = u a fails at %s" % S.label(a))
    for a, b in product(T, T):
        if a < b and S.mul(a, u) == S.mul(b, u):
            raise DomainError("preunit: a u = a′ u forces a = a′ fails at %s" % (_lab(S, a, b),))
    pres = _presentations(S, u)
    missing = [b for b in range(S.n) if b not in pres]
    if missing:
        raise DomainError("preunit: T u does not span, %s unreached" % S.label(missing[0]))
    n = S.n
    table = np.full((n, n), UNDEF, dtype=np.int64)
    rep = Report(S.name + " (preunit product)", scope=S.scope)
    clash = None
    for x in range(n):
        for y in range(n):
            vals = set()
            for px in pres[x]:
                for py in pres[y]:
                    terms = [S.mul(S.mul(a, b), u) for a in px for b in py]
                    vals.add(S.sum(*terms) if terms else S.zero)
            if len(vals) > 1 and clash is None:
                clash = _lab(S, x, y)
            table[x, y] = min(vals)
    rep.add(AxiomResult("well_defined", clash is None, clash))
    M = table

    def assoc(x, y, z):
        a, b = M[x, y], M[y, z]
        if UNDEF in (a, b) or UNDEF in (M[a, z], M[x, b]):
            return None
        return M[a, z] == M[x, b]
    rep.add(scan("associative", product(range(n), repeat=3), assoc, show=lambda t: _lab(S, *t)))

    def dist(x, y, z):
        l, r = M[x, S.add(y, z)] if S.add(y, z) != UNDEF else UNDEF, S.add(M[x, y], M[x, z])
        l2 = M[S.add(y, z), x] if S.add(y, z) != UNDEF else UNDEF
        r2 = S.add(M[y, x], M[z, x])
        if UNDEF in (l, r, l2, r2):
            return None
        return l == r and l2 == r2
    rep.add(scan("distributive", product(range(n), repeat=3), dist, show=lambda t: _lab(S, *t)))
    rep.add(scan("unit", range(n), lambda x: M[u, x] == x and M[x, u] == x, show=lambda x: _lab(S, x)))
    return table, rep
