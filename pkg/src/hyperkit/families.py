"""Symbolic (infinite) carriers and their finite sample windows.

A family supplies operations on encoded values; ``materialize`` closes a seed list
under addition and negation inside a declared bound and returns a ``System`` whose
out-of-window results are UNDEF.  All scalars are ``Fraction``s.
"""
from fractions import Fraction

import numpy as np

from .carrier import UNDEF, ClosureCapExceeded, DomainError, System, closure_cap
from .systems import SurpassSpec

ZERO = ("0",)


def frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _fmt(q):
    q = frac(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


class Family:
    """Base class: subclasses define zero, add, neg, mul, is_tangible, label."""
    name = "family"
    surpass = "circ"          # circ | inclusion | leq
    one = None

    def mul(self, x, y):
        return None

    def key(self, x):
        return repr(x)

    def admit(self, x):
        return True

    def members(self, x):
        raise DomainError("%s has no set interpretation" % self.name)

    def leq(self, x, y):
        raise DomainError("%s has no explicit order" % self.name)


def materialize(fam, seeds, name=None, cap=None, scope=None, extra=()):
    """Close ``seeds`` (plus zero) under + and (−) within ``fam.admit``; build the window."""
    cap = closure_cap() if cap is None else cap
    elems = []
    seen = set()

    def push(v):
        if v in seen or not fam.admit(v):
            return
        seen.add(v)
        elems.append(v)
        if len(elems) > cap:
            raise ClosureCapExceeded(cap, list(elems))
    for v in [fam.zero, *seeds, *extra]:
        push(v)
    i = 0
    closed = True
    while i < len(elems):
        x = elems[i]
        push(fam.neg(x))
        for y in elems[:i + 1]:
            s = fam.add(x, y)
            if fam.admit(s):
                push(s)
            else:
                closed = False
        i += 1
    elems.sort(key=fam.key)
    idx = {v: k for k, v in enumerate(elems)}
    n = len(elems)
    add = np.full((n, n), UNDEF, dtype=np.int64)
    mul = np.full((n, n), UNDEF, dtype=np.int64)
    for a, x in enumerate(elems):
        for b, y in enumerate(elems):
            if b >= a:
                add[a, b] = add[b, a] = idx.get(fam.add(x, y), UNDEF)
            p = fam.mul(x, y)
            if p is not None:
                mul[a, b] = idx.get(p, UNDEF)
    neg = [idx[fam.neg(x)] for x in elems]
    members = None
    if fam.surpass == "circ":
        spec = SurpassSpec.circ()
    elif fam.surpass == "inclusion":
        spec = SurpassSpec.inclusion()
        members = [fam.members(x) for x in elems]
    else:
        spec = SurpassSpec.explicit((a, b) for a, x in enumerate(elems)
                                    for b, y in enumerate(elems) if fam.leq(x, y))
    one = idx.get(fam.one) if fam.one is not None else None
    if scope is None:
        scope = "window" if not closed or (mul == UNDEF).any() else "window(closed)"
    return System([fam.label(x) for x in elems], idx[fam.zero],
                  [idx[x] for x in elems if fam.is_tangible(x)], add, neg, mul,
                  surpass=spec, one=one, name=name or fam.name, members=members,
                  values=elems, scope=scope)


# -- supertropical and max-plus -------------------------------------------------

class Supertropical(Family):
    """Standard supertropical semiring over (ℚ, +): values (grade, ghost) or zero."""
    name = "supertropical"

    def __init__(self, grades=None):
        self.grades = None if grades is None else frozenset(frac(g) for g in grades)
        self.zero = ZERO
        self.one = (Fraction(0), False)

    def admit(self, x):
        return x == ZERO or self.grades is None or x[0] in self.grades

    def add(self, x, y):
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        if x[0] != y[0]:
            return max(x, y)
        return (x[0], True)

    def neg(self, x):
        return x

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        return (x[0] + y[0], x[1] or y[1])

    def is_tangible(self, x):
        return x != ZERO and not x[1]

    def label(self, x):
        return "-inf" if x == ZERO else _fmt(x[0]) + ("v" if x[1] else "")

    def key(self, x):
        return (-1, 0, 0) if x == ZERO else (0, x[0], x[1])

    def tangible(self, g):
        return (frac(g), False)

    def ghost(self, g):
        return (frac(g), True)


def supertropical_window(grades, name=None):
    fam = Supertropical(grades)
    return materialize(fam, [fam.tangible(g) for g in sorted(fam.grades)],
                       name=name or "supertropical%s" % _gl(grades))


class MaxPlus(Family):
    """(ℚ ∪ {−∞}, max, +) with the identity negation and every nonzero element tangible."""
    name = "maxplus"

    def __init__(self, grades=None):
        self.grades = None if grades is None else frozenset(frac(g) for g in grades)
        self.zero = ZERO
        self.one = Fraction(0)

    def admit(self, x):
        return x == ZERO or self.grades is None or x in self.grades

    def add(self, x, y):
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        return max(x, y)

    def neg(self, x):
        return x

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        return x + y

    def is_tangible(self, x):
        return x != ZERO

    def label(self, x):
        return "-inf" if x == ZERO else _fmt(x)

    def key(self, x):
        return (0, Fraction(-10**9)) if x == ZERO else (1, x)


def maxplus_window(grades, name=None):
    fam = MaxPlus(grades)
    return materialize(fam, sorted(fam.grades), name=name or "maxplus%s" % _gl(grades))


def _gl(grades):
    return "[" + ",".join(_fmt(g) for g in sorted(frac(g) for g in grades)) + "]"


# -- phase cones ----------------------------------------------------------------

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _mod1(q):
    return q - (q.numerator // q.denominator)


def hull_of_angles(angles):
    """Closed convex cone generated by unit vectors at the given angles (turns).

    Returns ("0",), ("ray",a), ("arc",a,w) with 0<w<1/2, ("line",a) with a<1/2,
    ("half",a), or ("all",).
    """
    pts = sorted({_mod1(frac(a)) for a in angles})
    if not pts:
        return ZERO
    if len(pts) == 1:
        return ("ray", pts[0])
    gaps = [(pts[(i + 1) % len(pts)] - pts[i]) % 1 for i in range(len(pts))]
    g = max(gaps)
    i = gaps.index(g)
    start = pts[(i + 1) % len(pts)]
    width = 1 - g
    if width < HALF:
        return ("arc", start, width)
    if width == HALF:
        if len(pts) == 2:
            return ("line", min(pts[0], pts[1]) if pts[0] < HALF else pts[0] - HALF)
        return ("half", start)
    return ("all",)


def cone_gens(x):
    kind = x[0]
    if kind == "0":
        return []
    if kind == "ray":
        return [x[1]]
    if kind in ("arc", "carc"):
        return [x[1], _mod1(x[1] + x[2])]
    if kind == "pt":
        return [x[1]]
    if kind == "line":
        return [x[1], x[1] + HALF]
    if kind == "half":
        return [x[1], _mod1(x[1] + QUARTER), _mod1(x[1] + HALF)]
    return [Fraction(0), Fraction(1, 3), Fraction(2, 3)]


class Phase(Family):
    """Hypersystem of the phase hyperfield: relative interiors of closed convex cones.

    Elements are encoded by their cone; ``members`` samples the point set on a grid of
    ``resolution`` angles (plus the marker "0" when 𝟘 belongs to it).  The product is
    the distributed one (cone hull of products), which makes a semiring.
    """
    name = "phase"
    surpass = "inclusion"

    def __init__(self, resolution=8):
        self.resolution = resolution
        self.zero = ZERO
        self.one = ("ray", Fraction(0))

    def add(self, x, y):
        return hull_of_angles(cone_gens(x) + cone_gens(y))

    def neg(self, x):
        if x[0] in ("0", "all"):
            return x
        if x[0] == "line":
            return x
        return (x[0], _mod1(x[1] + HALF)) + x[2:]

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        return hull_of_angles([g + h for g in cone_gens(x) for h in cone_gens(y)])

    def is_tangible(self, x):
        return x[0] == "ray"

    def contains(self, x, theta):
        """θ (an angle, or "0") lies in the point set of x."""
        k = x[0]
        if theta == "0":
            return k in ("0", "line", "all")
        t = _mod1(frac(theta))
        if k == "ray":
            return t == x[1]
        if k == "arc":
            return 0 < _mod1(t - x[1]) < x[2]
        if k == "line":
            return t in (x[1], x[1] + HALF)
        if k == "half":
            return 0 < _mod1(t - x[1]) < HALF
        return k == "all"

    def sample(self):
        return ["0"] + [Fraction(i, self.resolution) for i in range(self.resolution)]

    def members(self, x):
        return frozenset(t for t in self.sample() if self.contains(x, t))

    def label(self, x):
        k = x[0]
        if k == "0":
            return "0"
        if k == "all":
            return "H"
        if k == "ray":
            return "e" + _fmt(x[1])
        if k == "arc":
            return "(%s,%s)" % (_fmt(x[1]), _fmt(x[1] + x[2]))
        if k == "line":
            return "line" + _fmt(x[1])
        return "half" + _fmt(x[1])

    def key(self, x):
        order = {"0": 0, "ray": 1, "arc": 2, "line": 3, "half": 4, "all": 5}
        return (order[x[0]],) + tuple(x[1:])

    def ray(self, a):
        return ("ray", _mod1(frac(a)))


def phase_window(k, name=None):
    """Cones with generators on the k-th roots of unity; closed under + and the product.

    Generators and their negatives sit on the 2k-grid; sampling on the 4k-grid puts a
    point inside every open arc between neighbours, so inclusion of sampled sets is
    inclusion of cones.
    """
    fam = Phase(resolution=4 * k)
    return materialize(fam, [fam.ray(Fraction(i, k)) for i in range(k)], name=name or "phase%d" % k)


class WeakPhase(Phase):
    """Hypersystem of the weak phase hyperfield: points, closed arcs under 1/2 turn, everything."""
    name = "weak-phase"

    def __init__(self, resolution=8):
        super().__init__(resolution)
        self.one = ("pt", Fraction(0))

    def add(self, x, y):
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        if x[0] == "all" or y[0] == "all":
            return ("all",)
        if self._meets(x, self.neg(y)):
            return ("all",)
        h = hull_of_angles(cone_gens(x) + cone_gens(y))
        if h[0] == "ray":
            return ("pt", h[1])
        if h[0] == "arc":
            return ("carc", h[1], h[2])
        return ("all",)

    def _meets(self, x, y):
        return any(self.contains(x, t) for t in cone_gens(y)) or \
            any(self.contains(y, t) for t in cone_gens(x))

    def neg(self, x):
        if x[0] in ("0", "all"):
            return x
        return (x[0], _mod1(x[1] + HALF)) + x[2:]

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        acc = ZERO
        for g in cone_gens(x):
            for h in cone_gens(y):
                acc = self.add(acc, ("pt", _mod1(g + h)))
        return acc

    def is_tangible(self, x):
        return x[0] == "pt"

    def contains(self, x, theta):
        k = x[0]
        if theta == "0":
            return k in ("0", "all")
        t = _mod1(frac(theta))
        if k == "pt":
            return t == x[1]
        if k == "carc":
            return _mod1(t - x[1]) <= x[2]
        return k == "all"

    def label(self, x):
        k = x[0]
        if k == "0":
            return "0"
        if k == "all":
            return "H"
        if k == "pt":
            return "e" + _fmt(x[1])
        return "[%s,%s]" % (_fmt(x[1]), _fmt(x[1] + x[2]))

    def key(self, x):
        order = {"0": 0, "pt": 1, "carc": 2, "all": 3}
        return (order[x[0]],) + tuple(x[1:])

    def ray(self, a):
        return ("pt", _mod1(frac(a)))


def weak_phase_window(k, name=None):
    fam = WeakPhase(resolution=4 * k)
    return materialize(fam, [fam.ray(Fraction(i, k)) for i in range(k)],
                       name=name or "weak-phase%d" % k)


class ArcSet:
    """Finite union of points and open arcs on the circle, plus an optional zero.

    Used for setwise products of phase point sets, which need not be cones.
    """

    def __init__(self, zero=False, points=(), arcs=(), full=False):
        self.zero = zero
        self.points = frozenset(_mod1(frac(p)) for p in points)
        self.arcs = tuple((_mod1(frac(a)), frac(w)) for a, w in arcs)
        self.full = full

    @classmethod
    def of(cls, x):
        k = x[0]
        if k == "0":
            return cls(zero=True)
        if k == "ray":
            return cls(points=[x[1]])
        if k == "arc":
            return cls(arcs=[(x[1], x[2])])
        if k == "line":
            return cls(zero=True, points=[x[1], x[1] + HALF])
        if k == "half":
            return cls(arcs=[(x[1], HALF)])
        return cls(zero=True, full=True)

    def contains(self, theta):
        if theta == "0":
            return self.zero
        if self.full:
            return True
        t = _mod1(frac(theta))
        return t in self.points or any(0 < _mod1(t - a) < w for a, w in self.arcs)

    def times(self, other):
        """Setwise product {st}."""
        zero = self.zero or other.zero
        if (self.full and (other.points or other.arcs or other.full)) or \
                (other.full and (self.points or self.arcs)):
            return ArcSet(zero=zero, full=True)
        pts = [p + q for p in self.points for q in other.points]
        arcs = [(p + a, w) for p in self.points for a, w in other.arcs]
        arcs += [(p + a, w) for p in other.points for a, w in self.arcs]
        full = False
        for a, w in self.arcs:
            for b, v in other.arcs:
                if w + v >= 1:
                    full = True
                arcs.append((a + b, w + v))
        return ArcSet(zero=zero, points=pts, arcs=arcs, full=full)

    def sample_points(self):
        """Angles where membership can change: endpoints and arc midpoints."""
        out = set(self.points)
        for a, w in self.arcs:
            out |= {a, _mod1(a + w), _mod1(a + w / 2), _mod1(a + w / 4), _mod1(a + 3 * w / 4)}
        return out

    def describe(self):
        parts = (["0"] if self.zero else []) + ["e" + _fmt(p) for p in sorted(self.points)]
        parts += ["(%s,%s)" % (_fmt(a), _fmt(a + w)) for a, w in sorted(self.arcs)]
        return "S1∪{0}" if self.full and self.zero else ("S1" if self.full else " ∪ ".join(parts))


def phase_product_discrepancy(k=4):
    """Least (S, T) in the k-window whose setwise product differs from the distributed one.

    Returns a dict witness, or None.  Pairs are scanned in window order.
    """
    S = phase_window(k)
    fam = Phase(resolution=4 * k)
    vals = S.values
    for i, x in enumerate(vals):
        for j, y in enumerate(vals):
            dist = fam.mul(x, y)
            setwise = ArcSet.of(x).times(ArcSet.of(y))
            cand = setwise.sample_points() | ArcSet.of(dist).sample_points() | {"0"}
            cand |= {Fraction(t, 8 * k) for t in range(8 * k)}
            for t in sorted(cand, key=lambda c: (-1,) if c == "0" else (0, c)):
                if setwise.contains(t) != ArcSet.of(dist).contains(t):
                    return {"S": S.label(i), "T": S.label(j), "setwise": setwise.describe(),
                            "distributed": S.label(S.find(dist)) if S.find(dist) != UNDEF
                            else fam.label(dist),
                            "point": "0" if t == "0" else "e" + _fmt(t),
                            "in_setwise": setwise.contains(t)}
    return None


# -- triangle hyperfield over ℤ≥0 ---------------------------------------------------

class Triangle(Family):
    """Hypersystem of the triangle hyperfield restricted to ℤ≥0.

    Elements are integer intervals (lo, hi) with lo = 0 or hi − lo even; the window
    keeps hi ≤ bound.  The tangible action scales intervals; products of two
    non-tangible intervals are left undefined.
    """
    name = "triangle"
    surpass = "inclusion"

    def __init__(self, bound):
        self.bound = bound
        self.zero = (0, 0)
        self.one = (1, 1)

    def admit(self, x):
        return x[1] <= self.bound

    def add(self, x, y):
        return (max(0, x[0] - y[1], y[0] - x[1]), x[1] + y[1])

    def neg(self, x):
        return x

    def mul(self, x, y):
        if x[0] == x[1]:
            return (x[0] * y[0], x[0] * y[1])
        if y[0] == y[1]:
            return (y[0] * x[0], y[0] * x[1])
        return None

    def is_tangible(self, x):
        return x[0] == x[1] > 0

    def members(self, x):
        return frozenset(range(x[0], x[1] + 1))

    def label(self, x):
        return str(x[0]) if x[0] == x[1] else "[%d,%d]" % x

    def key(self, x):
        return (x[0] != x[1], x[1], x[0])


def triangle_window(bound, name=None):
    fam = Triangle(bound)
    return materialize(fam, [(a, a) for a in range(1, bound + 1)],
                       name=name or "triangle%d" % bound)


# -- layered phase formulas (direct definitions, for comparison) ------------------------

def phased_tropical_contains(a, b, x):
    """x ∈ a ⊞ b in the phased tropical hyperfield; points are (u, α), zero is None."""
    if a is None:
        return x == b
    if b is None:
        return x == a
    (u, al), (v, be) = a, b
    if al > be or a == b:
        return x == a
    if al < be:
        return x == b
    if _mod1(u - v) != HALF:
        if x is None:
            return False
        lo, w = (u, _mod1(v - u)) if _mod1(v - u) < HALF else (v, _mod1(u - v))
        return x[1] == al and 0 < _mod1(x[0] - lo) < w
    if x is None:
        return True
    return x in (a, (_mod1(u + HALF), al)) or x[1] < al


def viro_contains(a, b, x):
    """x ∈ a ⊞ b in Viro's complex hyperfield, same encoding."""
    if a is None:
        return x == b
    if b is None:
        return x == a
    (u, al), (v, be) = a, b
    if al > be or a == b:
        return x == a
    if al < be:
        return x == b
    if _mod1(u - v) != HALF:
        if x is None:
            return False
        lo, w = (u, _mod1(v - u)) if _mod1(v - u) < HALF else (v, _mod1(u - v))
        return x[1] == al and _mod1(x[0] - lo) <= w
    return x is None or x[1] <= al
