"""Matroids over systems: signed determinants, Grassmann–Plücker maps, exchange."""
from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np

from .carrier import UNDEF, DomainError, ResourceError, UnsupportedError
from .report import AxiomResult, Report, scan
from .systems import bipotent, cancellative, null_set, preorder_leq

MAX_DET = 8
MAX_N, MAX_M = 8, 4


def parity(perm):
    """0 for even permutations, 1 for odd ones."""
    p = list(perm)
    odd = 0
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            odd ^= 1
    return odd


class Rationals:
    """ℚ with the operations signed_det needs (zero, add, mul, neg)."""
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def neg(x):
        return -x


def signed_det(S, M):
    """Σ_π (−)^{sgn π} Π M[i, π(i)] by Leibniz expansion (S: System or Rationals)."""
    m = len(M)
    if m > MAX_DET:
        raise ResourceError("determinant of size %d exceeds %d" % (m, MAX_DET))
    if any(len(row) != m for row in M):
        raise DomainError("matrix is not square")
    acc = S.zero
    for perm in permutations(range(m)):
        term = S.one if hasattr(S, "one") and S.one is not None else None
        if term is None:
            raise DomainError("a unit is required")
        for i, j in enumerate(perm):
            term = S.mul(term, M[i][j])
            if term == UNDEF and S is not Rationals:
                raise DomainError("product leaves the window")
        if parity(perm):
            term = S.neg(term)
        acc = S.add(acc, term)
        if acc == UNDEF and S is not Rationals:
            raise DomainError("sum leaves the window")
    return acc


# -- GP maps --------------------------------------------------------------------------------

class GPMap:
    """b : E^m → A, stored on every tuple (ids of S; UNDEF marks values outside a window)."""

    def __init__(self, S, n, m, values):
        if n > MAX_N or m > MAX_M:
            raise ResourceError("n ≤ %d and m ≤ %d are supported" % (MAX_N, MAX_M))
        self.S, self.n, self.m = S, n, m
        self.values = np.asarray(values, dtype=np.int64).reshape((n,) * m)
        self.values.setflags(write=False)

    @classmethod
    def from_sorted(cls, S, n, m, sorted_values, repeat=None):
        """Extend values on increasing tuples by alternation; repeated indices get ``repeat``."""
        repeat = S.zero if repeat is None else repeat
        V = np.full((n,) * m, repeat, dtype=np.int64)
        for t in product(range(n), repeat=m):
            if len(set(t)) < m:
                continue
            order = sorted(range(m), key=lambda k: t[k])
            v = sorted_values[tuple(sorted(t))]
            V[t] = S.neg(v) if parity(order) and v != UNDEF else v
        return cls(S, n, m, V)

    def __call__(self, *t):
        return int(self.values[t])

    def scaled(self, a):
        """a·b for a tangible a."""
        M = self.S.mul_table[a]
        V = np.where(self.values == UNDEF, UNDEF, M[np.where(self.values == UNDEF, 0, self.values)])
        return GPMap(self.S, self.n, self.m, V)

    def labels(self):
        L = self.S.label
        return {",".join(map(str, t)): L(self(*t)) for t in combinations(range(self.n), self.m)}


def minors_gp_map(S, A):
    """b(i1..im) = signed_det of the chosen columns of the m×n grid A (ids of S)."""
    m, n = len(A), len(A[0])
    V = np.full((n,) * m, UNDEF, dtype=np.int64)
    for t in product(range(n), repeat=m):
        V[t] = signed_det(S, [[A[r][c] for c in t] for r in range(m)])
    b = GPMap(S, n, m, V)
    if not any(b(*t) in S.tangible for t in combinations(range(n), m)):
        raise DomainError("no maximal minor is tangible")
    return b


def rational_minors(A):
    """Exact maximal minors of a rational matrix (Leibniz), keyed by increasing column tuples."""
    m, n = len(A), len(A[0])
    return {t: signed_det(Rationals, [[Fraction(A[r][c]) for c in t] for r in range(m)])
            for t in combinations(range(n), m)}


def image_gp_map(S, n, m, minors, f):
    """GP map over S from classical minors pushed through f : ℚ → S."""
    return GPMap.from_sorted(S, n, m, {t: f(v) for t, v in minors.items()})


# -- vectorized sweeps ------------------------------------------------------------------------

def _ext(S):
    """Tables with an extra index n standing for 'outside the window'."""
    n = S.n
    add = np.full((n + 1, n + 1), n, dtype=np.int64)
    mul = np.full((n + 1, n + 1), n, dtype=np.int64)
    add[:n, :n] = np.where(S.add_table == UNDEF, n, S.add_table)
    mul[:n, :n] = np.where(S.mul_table == UNDEF, n, S.mul_table)
    neg = np.append(S.neg_table, n)
    return add, mul, neg


def _plucker_terms(b, e0):
    """c_i for fixed e0 over all (e1..em, f2..fm); shape (m+1, n^m, n^(m-1)) flattened."""
    S, n, m = b.S, b.n, b.m
    add, mul, neg = _ext(S)
    V = np.where(b.values == UNDEF, S.n, b.values)
    grid = np.indices((n,) * (2 * m - 1)).reshape(2 * m - 1, -1)
    e = [np.full(grid.shape[1], e0)] + [grid[k] for k in range(m)]
    f = [grid[m + k] for k in range(m - 1)]
    terms = []
    for i in range(m + 1):
        left = V[tuple(e[j] for j in range(m + 1) if j != i)]
        right = V[(e[i],) + tuple(f)]
        c = mul[left, right]
        terms.append(c)
    return terms, e, f, add, neg


def _tuple_labels(e, f, k):
    return (tuple(int(x[k]) for x in e), tuple(int(x[k]) for x in f))


def check_gp(b, strict=False):
    """Conditions (i)-(iv) of a Grassmann–Plücker map; strict mode also requires values in T0."""
    S, n, m = b.S, b.n, b.m
    rep = Report("GP(%s, n=%d, m=%d)" % (S.name, n, m), scope=S.scope)
    nulls = np.zeros(S.n + 1, dtype=bool)
    nulls[list(null_set(S))] = True
    tuples = list(product(range(n), repeat=m))
    rep.add(AxiomResult("tangible_value", any(b(*t) in S.tangible for t in tuples),
                        None, len(tuples)))
    rep.add(scan("repeated_null", [t for t in tuples if len(set(t)) < m],
                 lambda *t: None if b(*t) == UNDEF else bool(nulls[b(*t)])))

    def alt(t, perm):
        v, w = b(*t), b(*(t[k] for k in perm))
        if UNDEF in (v, w):
            return None
        return w == (S.neg(v) if parity(perm) else v)
    perms = list(permutations(range(m)))
    rep.add(scan("alternating", ((t, p) for t in tuples for p in perms), alt,
                 show=lambda t, p: (t, p)))
    if strict:
        T0 = set(S.tangible0)
        rep.add(scan("values_in_T0", tuples, lambda *t: b(*t) in T0))
    bad = None
    checked = skipped = 0
    for e0 in range(n):
        terms, e, f, add, neg = _plucker_terms(b, e0)
        acc = np.full(terms[0].shape, S.zero, dtype=np.int64)
        for i, c in enumerate(terms):
            acc = add[acc, neg[c] if i % 2 else c]
        out = acc == S.n
        ok = nulls[acc] | out
        checked += int((~out).sum())
        skipped += int(out.sum())
        if not ok.all() and bad is None:
            k = int(np.flatnonzero(~ok)[0])
            bad = _tuple_labels(e, f, k)
    rep.add(AxiomResult("plucker", bad is None, bad, checked, skipped))
    return rep


def bases(b):
    """Sets {e1..em} with b(e1..em) tangible, as sorted tuples."""
    return [t for t in combinations(range(b.n), b.m) if b(*t) in b.S.tangible]


def leq_matrix(S):
    key = ("leq",)
    L = S.cache.get(key)
    if L is None:
        L = np.zeros((S.n + 1, S.n + 1), dtype=bool)
        for c in range(S.n):
            for c2 in range(S.n):
                L[c, c2] = preorder_leq(S, c, c2)
        S.cache[key] = L
    return L


def check_exchange(b):
    """For b(e1..em)·b(e0,f2..fm) tangible, some 1 ≤ i ≤ m has c_0 ≤ c_i (the ≤ pre-order)."""
    S = b.S
    bp, cn = bipotent(S), cancellative(S)
    if not (bp.passed and cn.passed):
        bad = bp if not bp.passed else cn
        raise UnsupportedError("exchange needs a bipotent cancellative carrier (%s fails at %s)"
                               % (bad.name, bad.witness))
    L = leq_matrix(S)
    tang = np.zeros(S.n + 1, dtype=bool)
    tang[S.tangible_list] = True
    bad = None
    checked = skipped = 0
    found = {}
    for e0 in range(b.n):
        terms, e, f, _, _ = _plucker_terms(b, e0)
        c0 = terms[0]
        hit = np.zeros(c0.shape, dtype=bool)
        out = np.zeros(c0.shape, dtype=bool)
        first = np.full(c0.shape, -1)
        for i in range(1, b.m + 1):
            h = L[c0, terms[i]]
            first = np.where((first < 0) & h, i, first)
            hit |= h
            out |= terms[i] == S.n
        # undecidable when no term is found and some term left the window
        live = tang[c0] & (hit | ~out)
        skipped += int((tang[c0] & ~live).sum())
        checked += int(live.sum())
        for i in range(1, b.m + 1):
            found[i] = found.get(i, 0) + int((live & (first == i)).sum())
        fail = live & ~hit
        if fail.any() and bad is None:
            bad = _tuple_labels(e, f, int(np.flatnonzero(fail)[0]))
    r = AxiomResult("exchange", bad is None, bad, checked, skipped)
    r.note = "first i found: " + ", ".join("%d×%d" % (v, k) for k, v in sorted(found.items()) if v)
    return r


def matroid_report(b, strict=False, exchange=True):
    rep = check_gp(b, strict)
    rep.extra["bases"] = [list(t) for t in bases(b)]
    if exchange:
        try:
            rep.add(check_exchange(b))
        except UnsupportedError as e:
            rep.add(AxiomResult("exchange", False, None, note=str(e), informational=True))
    return rep


# -- oracles ----------------------------------------------------------------------------------

def det_gauss(A):
    """Exact determinant by fraction Gaussian elimination (independent of signed_det)."""
    M = [[Fraction(x) for x in row] for row in A]
    m = len(M)
    det = Fraction(1)
    for c in range(m):
        piv = next((r for r in range(c, m) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, m):
            k = M[r][c] / M[c][c]
            if k:
                M[r] = [x - k * y for x, y in zip(M[r], M[c])]
    return det


def sign_of(x):
    return (x > 0) - (x < 0)


def chirotope_oracle(A):
    m, n = len(A), len(A[0])
    return {t: sign_of(det_gauss([[A[r][c] for c in t] for r in range(m)]))
            for t in combinations(range(n), m)}


def vp(x, p):
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise DomainError("valuation of 0")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def valuation_oracle(A, p):
    """Per minor: (value of the exact minor or None when it is 0, least term valuation,
    number of terms attaining it, cancelled flag)."""
    m, n = len(A), len(A[0])
    out = {}
    for t in combinations(range(n), m):
        sub = [[Fraction(A[r][c]) for c in t] for r in range(m)]
        d = det_gauss(sub)
        vals = []
        for perm in permutations(range(m)):
            prod_ = Fraction(1)
            for i, j in enumerate(perm):
                prod_ *= sub[i][j]
            if prod_:
                vals.append(vp(prod_, p))
        low = min(vals) if vals else None
        vd = vp(d, p) if d else None
        cancelled = d == 0 or (low is not None and vd > low)
        out[t] = {"valuation": vd, "low": low, "ties": vals.count(low) if vals else 0,
                  "cancelled": cancelled}
    return out


# -- routes from rational matrices --------------------------------------------------------------

def random_rational_matrix(rng, m, n, p=3, spread=3, units=(1, 2, 4, 5, 7, 8, -1, -2, -4, -5)):
    """Entries u·p^k with k uniform in [-spread, spread]; u ranges over p-adic units."""
    return [[Fraction(rng.choice(units)) * Fraction(p) ** rng.randint(-spread, spread)
             for _ in range(n)] for _ in range(m)]


def sign_route(S, A):
    """Classical minors pushed to signs; S has carrier labels '0', '1', '-1'."""
    m, n = len(A), len(A[0])
    lab = {0: S.index("0"), 1: S.index("1"), -1: S.index("-1")}
    return image_gp_map(S, n, m, rational_minors(A), lambda x: lab[sign_of(x)])


def valuation_route(S, A, p):
    """Entrywise tangible of grade −v_p, then minors computed in the supertropical window S."""
    grid = [[S.zero if x == 0 else S.find((Fraction(-vp(x, p)), False)) for x in row] for row in A]
    if any(x == UNDEF for row in grid for x in row):
        raise DomainError("an entry's grade lies outside the window")
    return minors_gp_map(S, grid)
