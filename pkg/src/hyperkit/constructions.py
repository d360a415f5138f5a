"""Symmetrization, layered extensions, truncation, direct sums, convolution systems."""
from fractions import Fraction
from itertools import product

import numpy as np

from .carrier import UNDEF, DomainError, ResourceError, System
from .report import AxiomResult, Report, scan
from .systems import SurpassSpec, kind, relation, uniform_presentation

ZERO = ("0",)


def _build(elems, zero, tangible, addf, negf, mulf, label, *, surpass=None, one=None, name,
           members=None, scope="exhaustive", relf=None):
    """Tabulate element-level functions (which return None when undefined)."""
    idx = {v: i for i, v in enumerate(elems)}
    n = len(elems)
    add = np.full((n, n), UNDEF, dtype=np.int64)
    mul = np.full((n, n), UNDEF, dtype=np.int64)
    for i, x in enumerate(elems):
        for j in range(i, n):
            s = addf(x, elems[j])
            add[i, j] = add[j, i] = UNDEF if s is None else idx.get(s, UNDEF)
        for j, y in enumerate(elems):
            p = mulf(x, y)
            if p is not None:
                mul[i, j] = idx.get(p, UNDEF)
    neg = [idx[negf(x)] for x in elems]
    if relf is not None:
        surpass = SurpassSpec.explicit((i, j) for i, x in enumerate(elems)
                                       for j, y in enumerate(elems) if relf(x, y))
    S = System([label(x) for x in elems], idx[zero], [idx[t] for t in tangible], add, neg, mul,
               surpass=surpass, one=None if one is None else idx.get(one), name=name,
               members=members, values=elems, scope=scope)
    return S


def _u(x):
    return None if x == UNDEF else x


# -- truncated naturals ----------------------------------------------------------

def truncate_naturals(m):
    """ℕ with sums and products clipped at m; identity negation, T = {1}."""
    if m < 1:
        raise DomainError("truncation point must be positive")
    r = np.arange(m + 1)
    add = np.minimum(r[:, None] + r[None, :], m)
    mul = np.minimum(r[:, None] * r[None, :], m)
    return System([str(i) for i in range(m + 1)], 0, [1], add, r, mul, one=1,
                  name="N<=%d" % m)


# -- symmetrization -----------------------------------------------------------------

def symmetrize(A, name=None):
    """A × A with pointwise sum, switch negation and the twist product."""
    elems = [(i, j) for i in range(A.n) for j in range(A.n)]
    z = A.zero
    T = [(t, z) for t in A.tangible_list] + [(z, t) for t in A.tangible_list]

    def add(x, y):
        a, b = A.add(x[0], y[0]), A.add(x[1], y[1])
        return None if UNDEF in (a, b) else (a, b)

    def mul(x, y):
        p = A.add(A.mul(x[0], y[0]), A.mul(x[1], y[1]))
        q = A.add(A.mul(x[0], y[1]), A.mul(x[1], y[0]))
        return None if UNDEF in (p, q) else (p, q)
    one = (A.one, z) if A.one is not None else None
    return _build(elems, (z, z), T, add, lambda x: (x[1], x[0]), mul,
                  lambda x: "(%s,%s)" % (A.label(x[0]), A.label(x[1])),
                  surpass=SurpassSpec.circ(), one=one, name=name or "sym(%s)" % A.name,
                  scope=A.scope)


def symmetrize_bipotent(A, name=None):
    """{(𝟘,𝟘)} ∪ T̂ ∪ T̂° with the case-split addition for a bipotent tangible set."""
    T = A.tangible_list
    for a, b in product(T, T):
        s = A.add(a, b)
        if s != UNDEF and s not in (a, b):
            raise DomainError("T is not bipotent: %s + %s = %s" % (A.label(a), A.label(b), A.label(s)))
    z = A.zero
    elems = [(z, z)] + [(t, z) for t in T] + [(z, t) for t in T] + [(t, t) for t in T]

    def mag(x):
        if x[0] == z:
            return x[1], -1
        return x[0], (1 if x[1] == z else 0)

    def make(m, s):
        return (m, z) if s == 1 else ((z, m) if s == -1 else (m, m))

    def add(x, y):
        if x == (z, z):
            return y
        if y == (z, z):
            return x
        (m1, s1), (m2, s2) = mag(x), mag(y)
        if m1 == m2:
            return x if s1 == s2 else make(m1, 0)
        s = A.add(m1, m2)
        if s == UNDEF:
            return None
        return x if s == m1 else y

    def mul(x, y):
        if x == (z, z) or y == (z, z):
            return (z, z)
        (m1, s1), (m2, s2) = mag(x), mag(y)
        m = A.mul(m1, m2)
        if m == UNDEF:
            return None
        if m == z:
            return (z, z)
        return make(m, s1 * s2)
    one = (A.one, z) if A.one is not None else None
    return _build(elems, (z, z), elems[1:1 + 2 * len(T)], add, lambda x: (x[1], x[0]), mul,
                  lambda x: "(%s,%s)" % (A.label(x[0]), A.label(x[1])),
                  surpass=SurpassSpec.circ(), one=one, name=name or "symb(%s)" % A.name,
                  scope=A.scope)


# -- layered extensions ---------------------------------------------------------------

def _grades(G):
    return sorted({g if isinstance(g, Fraction) else Fraction(g) for g in G})


def _fmtg(g):
    return str(g.numerator) if g.denominator == 1 else "%d/%d" % (g.numerator, g.denominator)


def layered(L, G, name=None, surpass="layered"):
    """L ⋊ 𝒢 over a finite grade window: grade-lexicographic sum, absorbing 𝟘.

    ``L`` is a System whose zero is not used as a layer.  The surpassing relation is
    the layered one induced from L (``surpass="circ"`` uses ⪯_∘ instead).
    """
    G = _grades(G)
    Gs = set(G)
    layers = [l for l in range(L.n) if l != L.zero]
    elems = [ZERO] + [(l, g) for g in G for l in layers]
    RL = relation(L)

    def add(x, y):
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        if x[1] != y[1]:
            return x if x[1] > y[1] else y
        s = L.add(x[0], y[0])
        if s == UNDEF:
            return None
        if s == L.zero:
            raise DomainError("layers %s and %s sum to zero" % (L.label(x[0]), L.label(y[0])))
        return (s, x[1])

    def neg(x):
        return x if x == ZERO else (L.neg(x[0]), x[1])

    def mul(x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        p = L.mul(x[0], y[0])
        g = x[1] + y[1]
        if p == UNDEF or g not in Gs:
            return None
        return ZERO if p == L.zero else (p, g)

    def rel(x, y):
        if x == ZERO:
            return y == ZERO or RL[L.zero, y[0]]
        if y == ZERO:
            return False
        if x[1] < y[1]:
            return RL[L.zero, y[0]]
        return x[1] == y[1] and RL[x[0], y[0]]
    one = (L.one, Fraction(0)) if L.one is not None and Fraction(0) in Gs else None
    T = [(l, g) for g in G for l in L.tangible_list]
    return _build(elems, ZERO, T, add, neg, mul,
                  lambda x: "0" if x == ZERO else "%s@%s" % (L.label(x[0]), _fmtg(x[1])),
                  one=one, name=name or "%s x| %s" % (L.name, "[" + ",".join(map(_fmtg, G)) + "]"),
                  scope="window", relf=rel if surpass == "layered" else None,
                  surpass=SurpassSpec.circ())


def layered_hyper(L, G, name=None):
    """L ⋊ 𝒢 for L a hyperfield system: same tables, with null layers read as spilling
    to every lower grade; surpassing is inclusion of the resulting point sets."""
    if L.members is None:
        raise DomainError("layered_hyper needs set-valued layers")
    S = layered(L, G, name=name or "%s x|h %s" % (L.name, "[" + ",".join(map(_fmtg, _grades(G))) + "]"))
    (z,) = tuple(L.members[L.zero])
    universe = sorted(set().union(*L.members) - {z}, key=repr)
    members = []
    for v in S.values:
        if v == ZERO:
            members.append(frozenset([("0",)]))
            continue
        X, a = v
        pts = {(p, a) for p in L.members[X] if p != z}
        if z in L.members[X]:
            pts |= {(p, g) for p in universe for g in _grades(G) if g < a}
            pts.add(("0",))
        members.append(frozenset(pts))
    out = System(S.labels, S.zero, S.tangible, S.add_table, S.neg_table, S.mul_table,
                 surpass=SurpassSpec.inclusion(), one=S.one, name=S.name, members=members,
                 values=S.values, scope=S.scope)
    out.layer_system = L
    return out


def tangible_reversibility(S):
    """a1 ⪯ a2 + a3 iff a3 ⪯ a1 + (−)a2 over tangible triples (hyperfield reversibility)."""
    R = relation(S)

    def test(a1, a2, a3):
        s, t = S.add(a2, a3), S.add(a1, S.neg(a2))
        if UNDEF in (s, t):
            return None
        return bool(R[a1, s]) == bool(R[a3, t])
    T = S.tangible_list
    return scan("reversibility", product(T, T, T), test,
                show=lambda t: tuple(S.label(x) for x in t))


def layered_formula_mismatches(S, contains):
    """Compare a layered hyper window with a direct hyperfield formula on tangible pairs.

    ``contains(a, b, x)`` decides x ∈ a ⊞ b with points (angle, grade) and None for 0.
    Returns the list of disagreements (empty when the window matches).
    """
    L = S.layer_system

    def point(i):
        v = S.values[i]
        return (L.values[v[0]][1], v[1])
    T = S.tangible_list
    out = []
    for a, b in product(T, T):
        s = S.add(a, b)
        if s == UNDEF:
            continue
        for x in sorted(S.members[s] | _universe(S), key=repr):
            px = None if x == ("0",) else x
            if px is not None and px[0] == "0":
                continue
            got = x in S.members[s]
            want = contains(point(a), point(b), px)
            if got != want:
                out.append((S.label(a), S.label(b), x, got, want))
    return out


def _universe(S):
    out = set()
    for m in S.members:
        out |= m
    return out


# -- ℕ-layer bijection and second-kind layering -------------------------------------------

def check_trythis1(L, A):
    """L ⋊ T0 against (L × A)/((mℓ, a) ≡ (ℓ, m a)) on the window.

    Classes are built by union-find over the generating pairs; the map (ℓ, b) ↦
    (m_b·ℓ, b_T) from the uniform presentation must be constant on classes and a
    bijection from classes onto (L∖0) × T ∪ {𝟘}.
    """
    rep = Report("trythis1(%s, %s)" % (L.name, A.name), scope=A.scope)
    pairs = [(l, b) for l in range(L.n) if l != L.zero for b in range(A.n)]
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        parent[find(p)] = find(q)

    def mult(m, x, S):
        return S.sum(*([x] * m)) if m else S.zero
    for l, b in pairs:
        for m in range(1, max(L.n, A.n) + 1):
            ml, mb = mult(m, l, L), mult(m, b, A)
            if UNDEF in (ml, mb) or ml == L.zero:
                continue
            union((ml, b), (l, mb))
    zero_pairs = [p for p in pairs if p[1] == A.zero]
    for p in zero_pairs[1:]:
        union(p, zero_pairs[0])

    def image(l, b):
        if b == A.zero:
            return ZERO
        up = uniform_presentation(A, b)
        ml = mult(up.m, l, L)
        return None if ml == UNDEF else (ml, up.tangible)
    classes = {}
    bad = None
    for p in pairs:
        img = image(*p)
        r = find(p)
        if r in classes and classes[r] != img and bad is None:
            bad = (p, classes[r], img)
        classes.setdefault(r, img)
    rep.add(AxiomResult("well_defined", bad is None, None if bad is None else str(bad)))
    imgs = list(classes.values())
    target = {ZERO} | {(l, t) for l in range(L.n) if l != L.zero for t in A.tangible_list}
    inj = len(set(imgs)) == len(imgs)
    rep.add(AxiomResult("injective", inj))
    missing = target - set(imgs)
    rep.add(AxiomResult("surjective", not missing, sorted(missing, key=repr)[0] if missing else None))
    rep.extra["classes"] = len(classes)
    return rep


def layer_second_kind(L, A, name=None):
    """L ⋊ A for a (−)-bipotent triple A of the second kind, by canonical representatives.

    Classes of (ℓ, b) under (ℓ,(−)b) ≡ ((−)′ℓ, b) and ((1(−)1)ℓ, b) ≡ (ℓ, b°) are
    represented as (ℓ, p) with p the chosen representative of b_T up to sign.
    """
    k, _ = kind(A)
    if k != "second":
        raise DomainError("A must be of the second kind, is %s" % k)
    P = sorted({min(t, A.neg(t)) for t in A.tangible_list})
    circ_of = {A.circ(p): p for p in P}
    layers = [l for l in range(L.n) if l != L.zero]
    elems = [ZERO] + [(l, p) for p in P for l in layers]

    def canon(l, b):
        if b == A.zero or l == L.zero:
            return ZERO
        if b in P:
            return (l, b)
        if A.neg(b) in P:
            return (L.neg(l), A.neg(b))
        if b in circ_of:
            lc = L.circ(l)
            return None if lc == UNDEF else canon(lc, circ_of[b])
        raise DomainError("%s has no presentation (m(−)n)·b_T" % A.label(b))

    def add(x, y):
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        if x[1] == y[1]:
            s = L.add(x[0], y[0])
            if s == UNDEF:
                return None
            return canon(s, x[1])
        s = A.add(x[1], y[1])
        if s == UNDEF:
            return None
        return x if s == x[1] else y

    def mul(x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        l, b = L.mul(x[0], y[0]), A.mul(x[1], y[1])
        if UNDEF in (l, b):
            return None
        return canon(l, b)
    T = [(l, p) for p in P for l in L.tangible_list]
    S = _build(elems, ZERO, T, add, lambda x: x if x == ZERO else (L.neg(x[0]), x[1]), mul,
               lambda x: "0" if x == ZERO else "%s@%s" % (L.label(x[0]), A.label(x[1])),
               surpass=SurpassSpec.circ(), name=name or "%s x| %s" % (L.name, A.name),
               scope="window")
    S.canon = canon
    return S


def check_second_kind_sum(S, L, A):
    """The four-case sum on raw representatives agrees with the canonical sum."""
    canon = S.canon
    raw = [(l, b) for l in range(L.n) if l != L.zero for b in range(A.n) if b != A.zero]

    def split(b):
        # b = (m (−) n) b_T with (m, n) ∈ {(1,0), (1,1)}
        if b in A.tangible:
            return 1, 0, b
        for t in A.tangible_list:
            if A.circ(t) == b:
                return 1, 1, t
        return None

    def coeff(m, n, l):
        return l if n == 0 else L.circ(l)

    def test(x, y):
        (l1, b1), (l2, b2) = x, y
        s1, s2 = split(b1), split(b2)
        if s1 is None or s2 is None:
            return None
        (m1, n1, t1), (m2, n2, t2) = s1, s2
        if t1 == t2:
            l = L.add(coeff(m1, n1, l1), coeff(m2, n2, l2))
            want = None if l == UNDEF else canon(l, t1)
        elif t1 == A.neg(t2):
            c2 = coeff(m2, n2, l2) if n2 else L.neg(l2)
            l = L.add(coeff(m1, n1, l1), c2)
            want = None if l == UNDEF else canon(l, t1)
        else:
            s = A.add(b1, b2)
            if s == UNDEF:
                return None
            want = canon(l1, b1) if s == b1 else canon(l2, b2)
        cx, cy = canon(l1, b1), canon(l2, b2)
        if None in (want, cx, cy):
            return None
        got = S.add(S.find(cx), S.find(cy))
        if got == UNDEF or S.find(want) == UNDEF:
            return None
        return got == S.find(want)
    return scan("representative_independence", product(raw, raw), test,
                show=lambda t: tuple("%s@%s" % (L.label(l), A.label(b)) for l, b in t))


# -- direct sums ------------------------------------------------------------------------

def direct_sum(parts, t_option=2, name=None):
    """⊕ parts with componentwise operations; tangibles per the chosen option."""
    parts = list(parts)
    if not parts:
        return System(["0"], 0, [], [[0]], [0], [[0]], name=name or "zero-module")
    elems = list(product(*[range(P.n) for P in parts]))
    zero = tuple(P.zero for P in parts)
    k = len(parts)
    if t_option == 1:
        labs = {P.labels for P in parts}
        if len(labs) != 1:
            raise DomainError("option 1 needs equal summands")
        T = [tuple([t] * k) for t in parts[0].tangible_list]
    elif t_option == 2:
        T = []
        for i, P in enumerate(parts):
            for t in P.tangible_list:
                x = list(zero)
                x[i] = t
                T.append(tuple(x))
    elif t_option == 3:
        T = [x for x in product(*[P.tangible0 for P in parts]) if x != zero]
    else:
        raise DomainError("t_option must be 1, 2 or 3")
    rels = [relation(P) for P in parts]

    def add(x, y):
        s = tuple(P.add(a, b) for P, a, b in zip(parts, x, y))
        return None if UNDEF in s else s

    def mul(x, y):
        s = tuple(P.mul(a, b) for P, a, b in zip(parts, x, y))
        return None if UNDEF in s else s
    S = _build(elems, zero, T, add, lambda x: tuple(P.neg(a) for P, a in zip(parts, x)), mul,
               lambda x: "(" + ",".join(P.label(a) for P, a in zip(parts, x)) + ")",
               one=tuple(P.one for P in parts) if all(P.one is not None for P in parts) else None,
               name=name or "+".join(P.name for P in parts),
               relf=lambda x, y: all(R[a, b] for R, a, b in zip(rels, x, y)),
               scope=parts[0].scope)
    return S


# -- convolution systems ----------------------------------------------------------------

def monomials(nvars, degcap):
    out = [m for m in product(range(degcap + 1), repeat=nvars) if sum(m) <= degcap]
    return sorted(out, key=lambda m: (sum(m), tuple(-x for x in m)))


def polynomial_system(A, nvars=1, degcap=4, limit=20000, name=None):
    """Polynomials over A in nvars variables truncated at total degree degcap.

    Products whose support passes degcap are undefined in the table (and
    ``poly_mul`` raises).  𝒯 = monomials with a tangible coefficient.
    """
    mons = monomials(nvars, degcap)
    size = A.n ** len(mons)
    if size > limit:
        raise ResourceError("%d polynomials exceed the limit %d" % (size, limit))
    elems = list(product(range(A.n), repeat=len(mons)))
    mpos = {m: i for i, m in enumerate(mons)}
    z = tuple([A.zero] * len(mons))
    T = [x for x in elems if sum(c != A.zero for c in x) == 1
         and all(c == A.zero or c in A.tangible for c in x)]

    def add(x, y):
        s = tuple(A.add(a, b) for a, b in zip(x, y))
        return None if UNDEF in s else s

    def mul(x, y):
        try:
            return poly_mul(A, mons, mpos, x, y)
        except (DomainError, ResourceError):
            return None

    def label(x):
        terms = []
        for m, c in zip(mons, x):
            if c == A.zero:
                continue
            mon = "*".join(("x%d" % i if nvars > 1 else "x") + ("^%d" % e if e > 1 else "")
                           for i, e in enumerate(m) if e)
            terms.append(A.label(c) + ("*" + mon if mon else ""))
        return " + ".join(terms) if terms else "0"
    one = None
    if A.one is not None:
        one = list(z)
        one[mpos[tuple([0] * nvars)]] = A.one
        one = tuple(one)
    S = _build(elems, z, T, add, lambda x: tuple(A.neg(c) for c in x), mul, label,
               surpass=SurpassSpec.circ(), one=one,
               name=name or "%s[x;%d,%d]" % (A.name, nvars, degcap), scope="window")
    S.monomials = mons
    return S


def poly_mul(A, mons, mpos, x, y):
    out = [A.zero] * len(mons)
    for m1, c1 in zip(mons, x):
        if c1 == A.zero:
            continue
        for m2, c2 in zip(mons, y):
            if c2 == A.zero:
                continue
            m = tuple(a + b for a, b in zip(m1, m2))
            p = A.mul(c1, c2)
            if p == UNDEF:
                raise DomainError("coefficient product leaves the window")
            if p == A.zero:
                continue
            if m not in mpos:
                raise ResourceError("degree %d passes the cap" % sum(m))
            s = A.add(out[mpos[m]], p)
            if s == UNDEF:
                raise DomainError("coefficient sum leaves the window")
            out[mpos[m]] = s
    return tuple(out)


def matrix_system(A, n=2, tangibles="support1", limit=20000, name=None):
    """M_n(A) with entrywise sum and the convolution (matrix) product.

    ``tangibles="support1"`` takes matrices with exactly one nonzero entry, in 𝒯;
    ``"monomial"`` takes monomial matrices with tangible entries instead.
    """
    size = A.n ** (n * n)
    if size > limit:
        raise ResourceError("%d matrices exceed the limit %d" % (size, limit))
    elems = list(product(range(A.n), repeat=n * n))
    z = tuple([A.zero] * (n * n))
    if tangibles == "support1":
        T = [x for x in elems if sum(c != A.zero for c in x) == 1
             and all(c == A.zero or c in A.tangible for c in x)]
    elif tangibles == "monomial":
        T = []
        for x in elems:
            nz = [(i // n, i % n) for i, c in enumerate(x) if c != A.zero]
            if (len(nz) == n and len({r for r, _ in nz}) == n and len({c for _, c in nz}) == n
                    and all(c in A.tangible for c in x if c != A.zero)):
                T.append(x)
    else:
        raise DomainError("unknown tangible option %r" % tangibles)

    def add(x, y):
        s = tuple(A.add(a, b) for a, b in zip(x, y))
        return None if UNDEF in s else s

    def mul(x, y):
        out = []
        for i in range(n):
            for j in range(n):
                acc = A.zero
                for k in range(n):
                    acc = A.add(acc, A.mul(x[i * n + k], y[k * n + j]))
                if acc == UNDEF:
                    return None
                out.append(acc)
        return tuple(out)
    one = None
    if A.one is not None:
        one = tuple(A.one if i % (n + 1) == 0 else A.zero for i in range(n * n))

    def label(x):
        return "[" + ";".join(",".join(A.label(x[i * n + j]) for j in range(n)) for i in range(n)) + "]"
    S = _build(elems, z, T, add, lambda x: tuple(A.neg(c) for c in x), mul, label,
               surpass=SurpassSpec.circ(), one=one,
               name=name or "M%d(%s)" % (n, A.name), scope=A.scope)
    S.size = n
    return S


def matrix_unit(S, A, entries):
    """Matrix of S with the given {(i, j): A-id} entries (0-based)."""
    n = S.size
    x = [A.zero] * (n * n)
    for (i, j), c in entries.items():
        x[i * n + j] = c
    return S.find(tuple(x))
