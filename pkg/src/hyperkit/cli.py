"""The ``hk`` command line.

Exit codes: 0 match / pass, 1 mismatch or failed step, 2 usage, 3 resource limit.
"""
import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import hsf
from .bridge import (elimination_profile, hypersystem_of, large_set_ideal, recover_hyperring,
                     retraction_suite, table_diff)
from .carrier import (HKError, HyperTable, ParseError, PreconditionError, ResourceError, System,
                      ValidationError)
from .catalog import build, catalog_list, compare_expected, get_entry, run_suites
from .constructions import (direct_sum, layered, layered_hyper, matrix_system, polynomial_system,
                            symmetrize, symmetrize_bipotent, truncate_naturals)
from .families import supertropical_window
from .hyper import integers_mod, quotient_hyperring
from .matroids import (GPMap, bases, check_exchange, check_gp, minors_gp_map, sign_route,
                       valuation_route)
from .report import AxiomResult, Report, _jsonable

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(payload, out=None):
    text = json.dumps(_jsonable(payload), indent=2, ensure_ascii=False, sort_keys=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _write_structure(obj, out=None):
    if out:
        hsf.dump(obj, out)
    else:
        print(hsf.dumps(obj))


def resolve(target):
    """A catalog name or an HSF path; returns (object, catalog entry or None)."""
    if os.path.exists(target):
        return hsf.load(target), None
    try:
        return build(target), get_entry(target)
    except KeyError:
        raise UsageError("unknown target %r (not a file or catalog name)" % target) from None


def as_system(obj, distributed=False):
    return hypersystem_of(obj, distributed=distributed) if isinstance(obj, HyperTable) else obj


def _ideal(S, min_size):
    return None if not min_size else large_set_ideal(S, min_size)


# -- commands ----------------------------------------------------------------------------------

def cmd_catalog(args):
    _emit([e.summary() for e in catalog_list(args.filter)], args.out)
    return EXIT_OK


def cmd_verify(args):
    obj, entry = resolve(args.target)
    reports = run_suites(obj, args.suite, entry)
    if entry is not None:
        bad = compare_expected(entry, reports)
        verdict = not bad
    else:
        bad = []
        verdict = all(r.passed for r in reports.values())
    _emit({"target": args.target, "suite": args.suite,
           "reports": {k: v.to_dict() for k, v in reports.items()},
           "mismatches": [list(b) for b in bad],
           "verdict": "match" if verdict else "mismatch"}, args.out)
    return EXIT_OK if verdict else EXIT_MISMATCH


def _construct(sub, inputs, opts):
    def one():
        if len(inputs) != 1:
            raise UsageError("%s takes one input" % sub)
        return resolve(inputs[0])[0]
    grades = [Fraction(g) for g in opts.get("grades", "0,1,2").split(",")]
    if sub == "symmetrize":
        return symmetrize(as_system(one()))
    if sub == "symmetrize-bipotent":
        return symmetrize_bipotent(as_system(one()))
    if sub == "layered":
        return layered(as_system(one()), grades)
    if sub == "layered-hyper":
        return layered_hyper(as_system(one()), grades)
    if sub == "truncate":
        return truncate_naturals(int(opts["m"]))
    if sub == "direct-sum":
        return direct_sum([as_system(resolve(x)[0]) for x in inputs], int(opts.get("option", 2)))
    if sub == "poly":
        return polynomial_system(as_system(one()), int(opts.get("nvars", 1)),
                                 int(opts.get("degcap", 4)))
    if sub == "matrix":
        return matrix_system(as_system(one()), int(opts.get("n", 2)))
    raise UsageError("unknown construction %r" % sub)


def cmd_construct(args):
    opts = {k: v for k, v in vars(args).items() if v is not None}
    inputs = args.inputs or []
    if args.sub == "truncate":
        if not inputs:
            raise UsageError("truncate needs m")
        opts["m"] = inputs[0]
        inputs = []
    _write_structure(_construct(args.sub, inputs, opts), args.out)
    return EXIT_OK


def cmd_bridge(args):
    obj, _ = resolve(args.input)
    if args.sub == "to-system":
        if not isinstance(obj, HyperTable):
            raise UsageError("to-system needs a hyper table")
        _write_structure(hypersystem_of(obj, distributed=args.distributed), args.out)
        return EXIT_OK
    if args.sub == "recover":
        S = as_system(obj)
        _write_structure(recover_hyperring(S, _ideal(S, args.ideal_min_size)), args.out)
        return EXIT_OK
    if args.sub == "retraction":
        rep = retraction_suite(obj)
        _emit(rep.to_dict(), args.out)
        return EXIT_OK if rep.passed else EXIT_MISMATCH
    if args.sub == "profile":
        S = as_system(obj)
        rep = elimination_profile(S, _ideal(S, args.ideal_min_size))
        _emit(rep.to_dict(), args.out)
        return EXIT_OK
    if args.sub == "diff":
        other, _ = resolve(args.other)
        d = table_diff(obj, other)
        _emit({"equal": not d, "diff": d}, args.out)
        return EXIT_OK if not d else EXIT_MISMATCH
    raise UsageError("unknown bridge command %r" % args.sub)


# -- matroid files -------------------------------------------------------------------------------

_WINDOW = re.compile(r"^supertropical-window:(-?\d+):(-?\d+)$")


def _system_for(name):
    m = _WINDOW.match(name)
    if m:
        return supertropical_window(range(int(m.group(1)), int(m.group(2)) + 1))
    return as_system(resolve(name)[0])


def gp_from_doc(doc):
    S = _system_for(doc["system"])
    n, m = int(doc["n"]), int(doc["m"])
    vals = {}
    for key, lab in doc["values"].items():
        t = tuple(int(x) for x in key.split(","))
        vals[t] = S.index(lab)
    return GPMap.from_sorted(S, n, m, vals)


def gp_to_doc(b, system):
    return {"system": system, "n": b.n, "m": b.m, "values": b.labels()}


def matrix_to_gp(doc):
    """{"system": s, "matrix": [[labels]]} or {"rational": [[q]], "route": "sign"|"valuation", ...}.

    The valuation route reads "p" and either "system" or "grades": [lo, hi], the latter
    naming the supertropical window on lo..hi; an entry q goes to the tangible of grade -v_p(q).
    """
    if "matrix" in doc:
        S = _system_for(doc["system"])
        A = [[S.index(x) for x in row] for row in doc["matrix"]]
        return minors_gp_map(S, A), doc["system"]
    A = [[Fraction(x) for x in row] for row in doc["rational"]]
    if doc.get("route", "sign") == "sign":
        system = doc.get("system", "signs")
        return sign_route(_system_for(system), A), system
    p = int(doc.get("p", 3))
    if "grades" in doc:
        lo, hi = (int(g) for g in doc["grades"])
        S = supertropical_window(range(lo, hi + 1))
        system = "supertropical-window:%d:%d" % (lo, hi)
    else:
        system = doc["system"]
        S = _system_for(system)
    return valuation_route(S, A, p), system


def cmd_matroid(args):
    with open(args.input, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno) from None
    if args.sub == "from-matrix":
        b, system = matrix_to_gp(doc)
        _emit(gp_to_doc(b, system), args.out)
        return EXIT_OK
    b = gp_from_doc(doc)
    if args.sub == "check":
        rep = check_gp(b, strict=args.strict)
        rep.extra["bases"] = [list(t) for t in bases(b)]
        _emit(rep.to_dict(), args.out)
        return EXIT_OK if rep.passed else EXIT_MISMATCH
    if args.sub == "exchange":
        r = check_exchange(b)
        _emit(r.to_dict(), args.out)
        return EXIT_OK if r.passed else EXIT_MISMATCH
    if args.sub == "bases":
        _emit([list(t) for t in bases(b)], args.out)
        return EXIT_OK
    raise UsageError("unknown matroid command %r" % args.sub)


# -- pipelines ----------------------------------------------------------------------------------

def _step(op, cur, st):
    """Apply one pipeline step; returns (new current object, report dict or None)."""
    def need(kind):
        if cur is None or not isinstance(cur, kind):
            raise HKError("%s needs a %s as current structure" % (op, kind.__name__))
        return cur
    if op == "catalog":
        return build(st["name"]), None
    if op == "load":
        return hsf.load(st["path"]), None
    if op == "quotient":
        return quotient_hyperring(integers_mod(int(st["p"])), [int(g) for g in st["G"]]), None
    if op == "to-system":
        return hypersystem_of(need(HyperTable), distributed=st.get("distributed", False)), None
    if op == "recover":
        S = need(System)
        return recover_hyperring(S, _ideal(S, st.get("ideal_min_size"))), None
    if op == "profile":
        S = as_system(cur)
        return cur, elimination_profile(S, _ideal(S, st.get("ideal_min_size")))
    if op == "retraction":
        return cur, retraction_suite(need(HyperTable))
    if op == "verify":
        reps = run_suites(cur, st.get("suite", "axioms"))
        merged = Report(getattr(cur, "name", "structure"))
        for r in reps.values():
            merged.extend(r)
        return cur, merged
    if op == "diff":
        other = resolve(st["with"])[0]
        d = table_diff(need(HyperTable), other)
        rep = Report("diff")
        rep.add(AxiomResult("equal", not d, d or None))
        return cur, rep
    if op in ("symmetrize", "symmetrize-bipotent", "layered", "layered-hyper", "poly", "matrix"):
        opts = {k: str(v) for k, v in st.items() if k not in ("op", "expect")}
        if "grades" in st and not isinstance(st["grades"], str):
            opts["grades"] = ",".join(map(str, st["grades"]))
        fn = {"symmetrize": symmetrize, "symmetrize-bipotent": symmetrize_bipotent}
        if op in fn:
            return fn[op](as_system(cur)), None
        grades = [Fraction(g) for g in opts.get("grades", "0,1,2").split(",")]
        if op == "layered":
            return layered(as_system(cur), grades), None
        if op == "layered-hyper":
            return layered_hyper(as_system(cur), grades), None
        if op == "poly":
            return polynomial_system(as_system(cur), int(opts.get("nvars", 1)),
                                     int(opts.get("degcap", 4))), None
        return matrix_system(as_system(cur), int(opts.get("n", 2))), None
    if op == "truncate":
        return truncate_naturals(int(st["m"])), None
    raise HKError("unknown pipeline op %r" % op)


def run_pipeline(doc, workdir):
    """Run the steps; returns (exit code, list of step records)."""
    steps = doc.get("steps", []) if isinstance(doc, dict) else doc
    os.makedirs(workdir, exist_ok=True)
    cur = None
    records = []
    for i, st in enumerate(steps):
        op = st.get("op")
        try:
            cur, rep = _step(op, cur, st)
        except (ResourceError, PreconditionError, HKError) as e:
            records.append({"step": i, "op": op, "error": str(e)})
            return (EXIT_RESOURCE if isinstance(e, ResourceError) else EXIT_MISMATCH), records
        rec = {"step": i, "op": op}
        if cur is not None:
            path = os.path.join(workdir, "step%02d-%s.hsf" % (i, op))
            hsf.dump(cur, path)
            rec["artifact"] = os.path.basename(path)
        if rep is not None:
            rec["report"] = rep.to_dict()
            expect = st.get("expect", {})
            bad = {}
            for name, want in expect.items():
                if name == "witness":
                    continue
                got = rep[name].passed if name in rep else None
                if got != want:
                    bad[name] = {"expected": want, "observed": got}
            if "witness" in expect:
                name, w = expect["witness"]
                got = _jsonable(rep[name].witness) if name in rep else None
                if got != w:
                    bad["witness:" + name] = {"expected": w, "observed": got}
            if bad:
                rec["mismatch"] = bad
                records.append(rec)
                records.append({"step": i, "op": op, "error": "expectation mismatch"})
                return EXIT_MISMATCH, records
        records.append(rec)
    return EXIT_OK, records


def cmd_pipeline(args):
    with open(args.script, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno) from None
    workdir = args.workdir or (doc.get("workdir") if isinstance(doc, dict) else None) \
        or os.path.splitext(args.script)[0] + ".work"
    code, records = run_pipeline(doc, workdir)
    _emit({"pipeline": os.path.basename(args.script), "steps": records,
           "status": "ok" if code == EXIT_OK else "failed"}, args.out)
    if code != EXIT_OK:
        failed = records[-1]
        print("step %d (%s) failed: %s" % (failed["step"], failed["op"], failed.get("error")),
              file=sys.stderr)
    return code


# -- entry point ----------------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="hk", description="hyperrings, triples and systems")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("catalog", help="list built-in structures")
    c.add_argument("--filter")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_catalog)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("target")
    v.add_argument("--suite", choices=("axioms", "classify", "profile", "all"), default="all")
    v.add_argument("--out")
    v.set_defaults(fn=cmd_verify)

    k = sub.add_parser("construct", help="build a structure from others")
    k.add_argument("sub", choices=("symmetrize", "symmetrize-bipotent", "layered", "layered-hyper",
                                   "truncate", "direct-sum", "poly", "matrix"))
    k.add_argument("inputs", nargs="*")
    k.add_argument("--grades")
    k.add_argument("--option")
    k.add_argument("--nvars")
    k.add_argument("--degcap")
    k.add_argument("--n")
    k.add_argument("--out")
    k.set_defaults(fn=cmd_construct)

    b = sub.add_parser("bridge", help="hyperrings to systems and back")
    b.add_argument("sub", choices=("to-system", "recover", "retraction", "profile", "diff"))
    b.add_argument("input")
    b.add_argument("other", nargs="?")
    b.add_argument("--distributed", action="store_true")
    b.add_argument("--ideal-min-size", type=int)
    b.add_argument("--out")
    b.set_defaults(fn=cmd_bridge)

    m = sub.add_parser("matroid", help="Grassmann-Plucker maps")
    m.add_argument("sub", choices=("from-matrix", "check", "exchange", "bases"))
    m.add_argument("input")
    m.add_argument("--strict", action="store_true")
    m.add_argument("--out")
    m.set_defaults(fn=cmd_matroid)

    q = sub.add_parser("pipeline", help="run a JSON pipeline")
    q.add_argument("script")
    q.add_argument("--workdir")
    q.add_argument("--out")
    q.set_defaults(fn=cmd_pipeline)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "bridge" and args.sub == "diff" and not args.other:
        parser.error("diff needs two inputs")
    try:
        return args.fn(args)
    except UsageError as e:
        print("hk: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValidationError, OSError) as e:
        print("hk: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as e:
        print("hk: %s" % e, file=sys.stderr)
        return EXIT_RESOURCE
    except HKError as e:
        print("hk: %s" % e, file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
