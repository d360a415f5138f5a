"""HSF: the JSON exchange format for hyper tables and system tables.

    {"kind": "hyper" | "system", "carrier": [...], "zero": "0", "one": "1",
     "neg": {"a": "b", ...}, "add": {"a,b": [...], ...}, "mul": {"a,b": "c", ...},
     "tangible": [...], "surpass": {...}, "members": {"a": [...], ...}}

Only pairs (a, b) with a at or before b in carrier order are written; readers accept
either order.  Labels may themselves contain commas: a key "x,y" is split at the
unique comma where both halves are carrier labels.
"""
import json

import numpy as np

from .carrier import UNDEF, HyperTable, ParseError, System, ValidationError
from .systems import SurpassSpec

KEYS = {"kind", "carrier", "zero", "one", "neg", "add", "mul", "tangible", "surpass", "members",
        "name"}
REQUIRED = {"kind", "carrier", "zero", "neg", "add"}


def _line_of(text, needle):
    if text is None:
        return None
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def _split_key(key, idx, text):
    hits = [i for i, ch in enumerate(key) if ch == ","
            and key[:i] in idx and key[i + 1:] in idx]
    if len(hits) != 1:
        why = "no" if not hits else "ambiguous"
        raise ParseError("%s split of pair key %r" % (why, key), _line_of(text, json.dumps(key)))
    i = hits[0]
    return idx[key[:i]], idx[key[i + 1:]]


def loads(text):
    """Parse an HSF document into a validated HyperTable or System."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno) from None
    return from_dict(doc, text)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def from_dict(doc, text=None):
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1)
    unknown = sorted(set(doc) - KEYS)
    if unknown:
        raise ParseError("unknown key %r" % unknown[0], _line_of(text, json.dumps(unknown[0])))
    missing = sorted(REQUIRED - set(doc))
    if missing:
        raise ParseError("missing key %r" % missing[0], 1)
    kind = doc["kind"]
    if kind not in ("hyper", "system"):
        raise ParseError("kind must be 'hyper' or 'system'", _line_of(text, '"kind"'))
    labels = [str(x) for x in doc["carrier"]]
    if len(set(labels)) != len(labels):
        raise ValidationError("unique labels", None, "duplicate carrier label")
    idx = {l: i for i, l in enumerate(labels)}
    n = len(labels)

    def lab(x, where):
        if x not in idx:
            raise ParseError("%s refers to unknown element %r" % (where, x),
                             _line_of(text, json.dumps(x)))
        return idx[x]
    zero = lab(doc["zero"], "zero")
    one = lab(doc["one"], "one") if doc.get("one") is not None else None
    neg_doc = doc["neg"]
    if set(neg_doc) != set(labels):
        raise ValidationError("neg total", None, "neg must map every element")
    neg = [lab(neg_doc[l], "neg") for l in labels]
    add = [[None] * n for _ in range(n)]
    for key, val in doc["add"].items():
        i, j = _split_key(key, idx, text)
        vals = val if isinstance(val, list) else [val]
        ids = sorted({lab(v, "add") for v in vals})
        for a, b in ((i, j), (j, i)):
            if add[a][b] is not None and add[a][b] != ids:
                raise ValidationError("commutative addition", (labels[i], labels[j]))
            add[a][b] = ids
    mul = np.full((n, n), UNDEF, dtype=np.int64)
    for key, val in doc.get("mul", {}).items():
        i, j = _split_key(key, idx, text)
        mul[i, j] = lab(val, "mul")
    name = doc.get("name", "hsf")
    if kind == "hyper":
        for i in range(n):
            for j in range(n):
                if add[i][j] is None:
                    raise ValidationError("total addition", (labels[i], labels[j]))
        if "tangible" in doc or "surpass" in doc or "members" in doc:
            raise ParseError("hyper tables take no tangible/surpass/members keys",
                             _line_of(text, '"tangible"') or _line_of(text, '"surpass"'))
        return HyperTable(labels, zero, one, neg, add, mul, name=name)
    table = np.full((n, n), UNDEF, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if add[i][j] is not None:
                if len(add[i][j]) != 1:
                    raise ValidationError("single-valued addition", (labels[i], labels[j]))
                table[i, j] = add[i][j][0]
    tangible = [lab(t, "tangible") for t in doc.get("tangible", [l for l in labels if idx[l] != zero])]
    surpass = _surpass_from(doc.get("surpass"), lab)
    members = None
    if "members" in doc:
        md = doc["members"]
        if set(md) != set(labels):
            raise ValidationError("members total", None, "members must cover the carrier")
        members = [frozenset(md[l]) for l in labels]
    return System(labels, zero, tangible, table, neg, mul, surpass=surpass, one=one, name=name,
                  members=members)


def _surpass_from(d, lab):
    if d is None:
        return SurpassSpec.circ()
    v = d.get("variant")
    if v == "circ":
        return SurpassSpec.circ()
    if v == "inclusion":
        return SurpassSpec.inclusion()
    if v == "ideal":
        return SurpassSpec.ideal(lab(x, "surpass") for x in d.get("members", []))
    if v == "explicit":
        return SurpassSpec.explicit((lab(a, "surpass"), lab(b, "surpass")) for a, b in d.get("pairs", []))
    raise ParseError("unknown surpass variant %r" % v)


def _member_key(x):
    return json.dumps(x, default=str) if not isinstance(x, str) else x


def to_dict(obj):
    L = obj.labels
    n = len(L)
    d = {"kind": "hyper" if isinstance(obj, HyperTable) else "system", "name": obj.name,
         "carrier": list(L), "zero": L[obj.zero]}
    if obj.one is not None:
        d["one"] = L[obj.one]
    if isinstance(obj, HyperTable):
        d["neg"] = {L[i]: L[obj.neg[i]] for i in range(n)}
        d["add"] = {"%s,%s" % (L[i], L[j]): [L[x] for x in obj.add(i, j)]
                    for i in range(n) for j in range(i, n)}
        M = obj.mul
    else:
        d["neg"] = {L[i]: L[obj.neg(i)] for i in range(n)}
        d["add"] = {"%s,%s" % (L[i], L[j]): [L[obj.add(i, j)]]
                    for i in range(n) for j in range(i, n) if obj.add(i, j) != UNDEF}
        M = obj.mul_table
    d["mul"] = {"%s,%s" % (L[i], L[j]): L[int(M[i, j])]
                for i in range(n) for j in range(n) if M[i, j] != UNDEF}
    if isinstance(obj, System):
        d["tangible"] = [L[t] for t in obj.tangible_list]
        sp = obj.surpass
        if sp.variant in ("circ", "inclusion"):
            d["surpass"] = {"variant": sp.variant}
        elif sp.variant == "ideal":
            d["surpass"] = {"variant": "ideal", "members": [L[x] for x in sorted(sp.members)]}
        else:
            d["surpass"] = {"variant": "explicit", "pairs": [[L[a], L[b]] for a, b in sorted(sp.pairs)]}
        if obj.members is not None:
            d["members"] = {L[i]: sorted(_member_key(x) for x in obj.members[i]) for i in range(n)}
    return d


def dumps(obj):
    return json.dumps(to_dict(obj), indent=1, ensure_ascii=False)


def dump(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj) + "\n")
