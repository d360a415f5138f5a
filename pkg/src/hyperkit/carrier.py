"""Finite carriers: subsets, the closure engine, hyperstructure tables and system tables.

Elements of a finite carrier are dense integer ids 0..n-1 with unique text labels.
Multivalued results are SubsetVal tuples (sorted, no duplicates).  Internally the
hyper tables also keep bitmasks, since unions of masks are cheap.
"""
import os
from itertools import product

import numpy as np

UNDEF = -1
DEFAULT_CAP = 2 ** 20


class HKError(Exception):
    pass


class ParseError(HKError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(msg if line is None else "line %d: %s" % (line, msg))


class ValidationError(HKError):
    def __init__(self, axiom, witness=None, msg=""):
        self.axiom = axiom
        self.witness = witness
        text = "%s fails" % axiom
        if witness is not None:
            text += " at %r" % (witness,)
        if msg:
            text += ": " + msg
        super().__init__(text)


class DomainError(HKError):
    pass


class UnsupportedError(HKError):
    pass


class ResourceError(HKError):
    pass


class ClosureCapExceeded(ResourceError):
    def __init__(self, cap, partial):
        self.cap = cap
        self.partial = partial
        super().__init__("closure exceeded cap of %d elements" % cap)


class PreconditionError(HKError):
    def __init__(self, msg, report=None):
        self.report = report
        super().__init__(msg)


def closure_cap():
    raw = os.environ.get("HK_CLOSURE_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise DomainError("HK_CLOSURE_CAP must be an integer, got %r" % raw)
    return DEFAULT_CAP


# -- subsets ----------------------------------------------------------------

def canonical_subset(raw, n=None):
    """Sorted, deduplicated tuple of ids.  With ``n`` given, ids must lie in range(n)."""
    out = tuple(sorted(set(int(x) for x in raw)))
    if n is not None and out and (out[0] < 0 or out[-1] >= n):
        bad = [x for x in out if x < 0 or x >= n]
        raise DomainError("element ids %s not in a carrier of size %d" % (bad, n))
    return out


def to_mask(members):
    m = 0
    for x in members:
        m |= 1 << x
    return m


def from_mask(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def closure_under(seed, step, cap=None):
    """Least collection containing ``seed`` and closed under the binary ``step``.

    Worklist iteration; items come back in discovery order, seed first.  Raises
    ClosureCapExceeded (carrying the partial closure) if more than ``cap`` items
    would be produced.
    """
    cap = closure_cap() if cap is None else cap
    items = []
    seen = set()
    for s in seed:
        if s not in seen:
            seen.add(s)
            items.append(s)
    if len(items) > cap:
        raise ClosureCapExceeded(cap, items)
    i = 0
    while i < len(items):
        x = items[i]
        for j in range(i + 1):
            y = items[j]
            for z in (step(x, y), step(y, x)):
                if z not in seen:
                    seen.add(z)
                    items.append(z)
                    if len(items) > cap:
                        raise ClosureCapExceeded(cap, items)
        i += 1
    return items


def set_label(labels):
    return "{" + ",".join(labels) + "}"


def parse_set_label(label):
    """Inverse of set_label; a plain label denotes a singleton."""
    if label.startswith("{") and label.endswith("}"):
        body = label[1:-1]
        return frozenset(body.split(",")) if body else frozenset()
    return frozenset([label])


def _unique_labels(labels):
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        seen = set()
        for x in labels:
            if x in seen:
                raise ValidationError("unique labels", x)
            seen.add(x)
    return labels


# -- hyperstructure tables ----------------------------------------------------

class HyperTable:
    """(H, ⊞, 0, ·, 1) given by explicit tables.

    ``add[i][j]`` is an iterable of ids, ``mul[i][j]`` an id (UNDEF allowed for
    windows of infinite hyperfields).
    """

    def __init__(self, labels, zero, one, neg, add, mul=None, name="hyper", scope="exhaustive",
                 validate=True):
        self.labels = _unique_labels(labels)
        n = self.n = len(self.labels)
        self.zero = int(zero)
        self.one = None if one is None else int(one)
        self.name = name
        self.scope = scope
        self.neg = tuple(int(x) for x in neg)
        if len(self.neg) != n:
            raise ValidationError("neg total", None, "neg has %d entries for %d elements" % (len(self.neg), n))
        self.add_mask = [[to_mask(canonical_subset(add[i][j], n)) for j in range(n)] for i in range(n)]
        if mul is None:
            self.mul = np.full((n, n), UNDEF, dtype=np.int64)
        else:
            self.mul = np.array(mul, dtype=np.int64).reshape(n, n)
        self._index = {l: i for i, l in enumerate(self.labels)}
        self._elem_plus = {}
        if not (0 <= self.zero < n) or (self.one is not None and not 0 <= self.one < n):
            raise ValidationError("zero/one in carrier")
        if any(not 0 <= x < n for x in self.neg):
            raise ValidationError("neg total")
        if ((self.mul < UNDEF) | (self.mul >= n)).any():
            raise ValidationError("mul ids in range")
        if validate:
            self._validate()

    def _validate(self):
        n = self.n
        for i, j in product(range(n), repeat=2):
            if self.add_mask[i][j] == 0:
                raise ValidationError("nonempty sums", (self.labels[i], self.labels[j]))
            if self.add_mask[i][j] != self.add_mask[j][i]:
                raise ValidationError("commutative addition", (self.labels[i], self.labels[j]))
        for i in range(n):
            if not 0 <= self.neg[i] < n or self.neg[self.neg[i]] != i:
                raise ValidationError("neg involution", (self.labels[i],))
            if self.add_mask[i][self.zero] != 1 << i:
                raise ValidationError("neutral zero", (self.labels[i],))
        for i in range(n):
            for x in (self.mul[self.zero, i], self.mul[i, self.zero]):
                if x != UNDEF and x != self.zero:
                    raise ValidationError("absorbing zero", (self.labels[self.zero], self.labels[i]))

    def __repr__(self):
        return "HyperTable(%s, %d elements)" % (self.name, self.n)

    def __eq__(self, other):
        if not isinstance(other, HyperTable):
            return NotImplemented
        return (self.labels == other.labels and self.zero == other.zero and self.one == other.one
                and self.neg == other.neg and self.add_mask == other.add_mask
                and np.array_equal(self.mul, other.mul))

    def __hash__(self):
        return hash((self.labels, self.zero, self.one, self.neg))

    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise DomainError("no element labelled %r in %s" % (label, self.name))

    def add(self, i, j):
        return from_mask(self.add_mask[i][j])

    def elem_plus_mask(self, i, mask):
        """Mask of i ⊞ S."""
        key = (i, mask)
        out = self._elem_plus.get(key)
        if out is None:
            out = 0
            row = self.add_mask[i]
            m, k = mask, 0
            while m:
                if m & 1:
                    out |= row[k]
                m >>= 1
                k += 1
            self._elem_plus[key] = out
        return out

    def set_plus_mask(self, m1, m2):
        out = 0
        k = 0
        while m1:
            if m1 & 1:
                out |= self.elem_plus_mask(k, m2)
            m1 >>= 1
            k += 1
        return out

    def sum_mask(self, *elems):
        """Mask of e1 ⊞ e2 ⊞ ... (left to right)."""
        if not elems:
            return 1 << self.zero
        acc = 1 << elems[0]
        for e in elems[1:]:
            acc = self.elem_plus_mask(e, acc)
        return acc

    def neg_mask(self, mask):
        return to_mask(self.neg[x] for x in from_mask(mask))

    def setwise_mul_mask(self, m1, m2):
        """{s t : s ∈ S1, t ∈ S2}; None if some product is undefined."""
        out = 0
        for s in from_mask(m1):
            for t in from_mask(m2):
                p = int(self.mul[s, t])
                if p == UNDEF:
                    return None
                out |= 1 << p
        return out

    def scale_mask(self, a, mask):
        return self.setwise_mul_mask(1 << a, mask)

    def subset_label(self, members):
        members = tuple(members)
        if len(members) == 1:
            return self.labels[members[0]]
        return set_label(self.labels[x] for x in members)

    @property
    def total_mul(self):
        return bool((self.mul != UNDEF).all())


# -- system tables --------------------------------------------------------------

class System:
    """A finite (A, T, (−), ⪯) table, possibly a window of an infinite family.

    ``add`` and ``mul`` are n×n arrays of ids; UNDEF marks results that leave the
    window (windows record this rather than truncating).  ``mul`` holds the full
    product where known and at least the T-action rows.  ``members`` (optional)
    gives each element as a frozenset, used by the inclusion surpassing relation;
    ``values`` are the symbolic encodings when the table is a window.
    """

    def __init__(self, labels, zero, tangible, add, neg, mul=None, *, surpass=None, one=None,
                 name="system", members=None, values=None, scope="exhaustive", validate=True):
        from .systems import SurpassSpec
        self.labels = _unique_labels(labels)
        n = self.n = len(self.labels)
        self.zero = int(zero)
        self.one = None if one is None else int(one)
        self.tangible = frozenset(int(x) for x in tangible)
        self.add_table = np.array(add, dtype=np.int64).reshape(n, n)
        self.neg_table = np.array(neg, dtype=np.int64).reshape(n)
        if mul is None:
            self.mul_table = np.full((n, n), UNDEF, dtype=np.int64)
        else:
            self.mul_table = np.array(mul, dtype=np.int64).reshape(n, n)
        self.surpass = surpass if surpass is not None else SurpassSpec.circ()
        self.name = name
        self.members = None if members is None else tuple(frozenset(m) for m in members)
        self.values = tuple(values) if values is not None else None
        self.scope = scope
        self._index = {l: i for i, l in enumerate(self.labels)}
        self._vindex = None if self.values is None else {v: i for i, v in enumerate(self.values)}
        self.cache = {}
        if validate:
            self._validate()

    def _validate(self):
        n, A, N = self.n, self.add_table, self.neg_table
        lab = self.labels
        if self.zero in self.tangible:
            raise ValidationError("zero not tangible", (lab[self.zero],))
        if not all(0 <= t < n for t in self.tangible):
            raise ValidationError("tangible ids in range")
        if ((A < UNDEF) | (A >= n)).any() or ((self.mul_table < UNDEF) | (self.mul_table >= n)).any():
            raise ValidationError("table ids in range")
        bad = np.argwhere(A != A.T)
        if len(bad):
            i, j = bad[0]
            raise ValidationError("commutative addition", (lab[i], lab[j]))
        for i in range(n):
            if not 0 <= N[i] < n or N[N[i]] != i:
                raise ValidationError("neg involution", (lab[i],))
            if A[i, self.zero] not in (i, UNDEF):
                raise ValidationError("zero neutral", (lab[i],))
        # associativity, one row at a time
        for i in range(n):
            left = A[i]                      # i + j
            ok = left != UNDEF
            lhs = np.full((n, n), UNDEF, dtype=np.int64)
            lhs[ok] = A[left[ok]]           # (i + j) + k
            rhs = np.where(A != UNDEF, A[i][np.where(A == UNDEF, 0, A)], UNDEF)  # i + (j + k)
            both = (lhs != UNDEF) & (rhs != UNDEF)
            diff = np.argwhere(both & (lhs != rhs))
            if len(diff):
                j, k = diff[0]
                raise ValidationError("associative addition", (lab[i], lab[j], lab[k]))

    def __repr__(self):
        return "System(%s, %d elements, %d tangible)" % (self.name, self.n, len(self.tangible))

    def __eq__(self, other):
        if not isinstance(other, System):
            return NotImplemented
        return (self.labels == other.labels and self.zero == other.zero and self.one == other.one
                and self.tangible == other.tangible
                and np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.neg_table, other.neg_table)
                and np.array_equal(self.mul_table, other.mul_table)
                and self.surpass.normalized(self) == other.surpass.normalized(other))

    def __hash__(self):
        return hash((self.labels, self.zero, self.tangible))

    # element access
    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise DomainError("no element labelled %r in %s" % (label, self.name))

    def find(self, value):
        """Id of a symbolic value, or UNDEF when it lies outside the window."""
        if self._vindex is None:
            raise DomainError("%s carries no symbolic values" % self.name)
        return self._vindex.get(value, UNDEF)

    def label(self, i):
        return "<out>" if i == UNDEF else self.labels[i]

    @property
    def elements(self):
        return range(self.n)

    @property
    def tangible0(self):
        return sorted(self.tangible | {self.zero})

    @property
    def tangible_list(self):
        return sorted(self.tangible)

    def is_tangible(self, i):
        return i in self.tangible

    # operations (UNDEF propagates)
    def add(self, i, j):
        if i == UNDEF or j == UNDEF:
            return UNDEF
        return int(self.add_table[i, j])

    def sum(self, *xs):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
            if acc == UNDEF:
                return UNDEF
        return acc

    def neg(self, i):
        return UNDEF if i == UNDEF else int(self.neg_table[i])

    def minus(self, i, j):
        """i (−) j"""
        return self.add(i, self.neg(j))

    def circ(self, i):
        return self.minus(i, i)

    def mul(self, i, j):
        if i == UNDEF or j == UNDEF:
            return UNDEF
        return int(self.mul_table[i, j])

    @property
    def total_add(self):
        return bool((self.add_table != UNDEF).all())

    @property
    def total_mul(self):
        return bool((self.mul_table != UNDEF).all())

    @property
    def windowed(self):
        return self.scope != "exhaustive"

    def restrict(self, keep, tangible=None, name=None):
        """Sub-table on the ids in ``keep`` (must contain zero); results leaving it become UNDEF."""
        keep = sorted(set(keep) | {self.zero})
        pos = {old: new for new, old in enumerate(keep)}
        remap = np.full(self.n + 1, UNDEF, dtype=np.int64)
        for old, new in pos.items():
            remap[old] = new
        sub = np.ix_(keep, keep)
        add = remap[self.add_table[sub]]
        mul = remap[self.mul_table[sub]]
        neg = [pos.get(int(self.neg_table[i]), UNDEF) for i in keep]
        if UNDEF in neg:
            raise DomainError("restriction not closed under negation")
        tangible = self.tangible if tangible is None else tangible
        from .systems import SurpassSpec
        sp = self.surpass
        if sp.variant == "ideal":
            sp = SurpassSpec.ideal(pos[x] for x in sp.members if x in pos)
        elif sp.variant == "explicit":
            sp = SurpassSpec.explicit((pos[a], pos[b]) for a, b in sp.pairs if a in pos and b in pos)
        return System([self.labels[i] for i in keep], pos[self.zero],
                      [pos[t] for t in tangible if t in pos], add, neg, mul, surpass=sp,
                      one=pos.get(self.one) if self.one is not None else None,
                      name=name or self.name + "|sub",
                      members=None if self.members is None else [self.members[i] for i in keep],
                      values=None if self.values is None else [self.values[i] for i in keep],
                      scope=self.scope)
