"""Verification reports: per-axiom outcomes with least witnesses."""
import json
from dataclasses import dataclass, field


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: object = None
    checked: int = 0
    skipped: int = 0          # instances whose operands or results left the window
    note: str = ""
    informational: bool = False   # recorded, but not part of the overall verdict

    def to_dict(self):
        d = {"name": self.name, "pass": bool(self.passed), "witness": _jsonable(self.witness)}
        if self.checked:
            d["checked"] = self.checked
        if self.skipped:
            d["skipped"] = self.skipped
        if self.note:
            d["note"] = self.note
        if self.informational:
            d["informational"] = True
        return d

    def __bool__(self):
        return bool(self.passed)


@dataclass
class Report:
    structure: str
    axioms: list = field(default_factory=list)
    scope: str = "exhaustive"
    extra: dict = field(default_factory=dict)

    def add(self, result):
        self.axioms.append(result)
        return result

    def extend(self, other):
        self.axioms.extend(other.axioms)
        if other.scope != "exhaustive":
            self.scope = other.scope
        return self

    def __getitem__(self, name):
        for a in self.axioms:
            if a.name == name:
                return a
        raise KeyError(name)

    def __contains__(self, name):
        return any(a.name == name for a in self.axioms)

    @property
    def passed(self):
        return all(a.passed for a in self.axioms if not a.informational)

    def failures(self):
        return [a for a in self.axioms if not a.passed and not a.informational]

    def verdicts(self):
        return {a.name: bool(a.passed) for a in self.axioms}

    def to_dict(self):
        d = {"structure": self.structure, "axioms": [a.to_dict() for a in self.axioms]}
        if self.scope != "exhaustive":
            d["scope"] = self.scope
        for k in sorted(self.extra):
            d[k] = _jsonable(self.extra[k])
        return d

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def summary(self):
        lines = ["%s (%s)" % (self.structure, self.scope)]
        for a in self.axioms:
            mark = "pass" if a.passed else "FAIL"
            w = "" if a.passed or a.witness is None else "  witness=%s" % (_jsonable(a.witness),)
            lines.append("  %-32s %s%s" % (a.name, mark, w))
        return "\n".join(lines)


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    return str(x)


def scan(name, instances, test, show=None, **kw):
    """Run ``test`` over instances in order; stop at the first failure.

    ``test`` returns True, False, or None (instance not applicable / out of window).
    The first failing instance is the lexicographically least witness when the
    instances are produced in lexicographic order.  ``show`` maps the failing
    instance to its printable witness.
    """
    checked = skipped = 0
    for inst in instances:
        r = test(*inst) if isinstance(inst, tuple) else test(inst)
        if r is None:
            skipped += 1
            continue
        checked += 1
        if not r:
            return AxiomResult(name, False, show(inst) if show else inst, checked, skipped, **kw)
    return AxiomResult(name, True, None, checked, skipped, **kw)
