import json
import subprocess
import sys

import pytest

from hyperkit import hsf
from hyperkit.catalog import build
from hyperkit.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_lists_krasner(capsys):
    code, out, _ = run(["catalog"], capsys)
    names = [e["name"] for e in json.loads(out)]
    assert code == 0 and "krasner" in names and "viro-multigroup" in names
    code, out, _ = run(["catalog", "--filter", "fp-mod"], capsys)
    assert all("fp-mod" in e["name"] for e in json.loads(out))


@pytest.mark.parametrize("target", ["krasner", "viro-multigroup", "z-hyperfield", "layered-nmax"])
def test_verify_catalog_targets_match(target, capsys):
    code, out, _ = run(["verify", target, "--suite", "all"], capsys)
    assert code == 0, out
    assert json.loads(out)["verdict"] == "match"


def test_verify_unknown_target_is_usage_error(capsys):
    code, _, err = run(["verify", "missing-name"], capsys)
    assert code == 2 and "unknown target" in err


def test_verify_file(tmp_path, capsys):
    good = tmp_path / "signs.hsf"
    hsf.dump(build("signs"), good)
    assert run(["verify", str(good), "--suite", "axioms"], capsys)[0] == 0
    bad = tmp_path / "viro.hsf"
    hsf.dump(build("viro-multigroup"), bad)
    assert run(["verify", str(bad), "--suite", "axioms"], capsys)[0] == 1


def test_verify_parse_error(tmp_path, capsys):
    p = tmp_path / "broken.hsf"
    p.write_text('{"kind": "hyper", "carrier": ["0"], "zero": "0", "neg": {"0": "0"},\n'
                 ' "add": {"0,0": ["0"]}, "bogus": 1}\n')
    code, _, err = run(["verify", str(p)], capsys)
    assert code == 2 and "line 2" in err


def test_closure_cap_gives_exit_3(monkeypatch, capsys):
    monkeypatch.setenv("HK_CLOSURE_CAP", "5")
    code, _, _ = run(["bridge", "to-system", "fp-mod-g:11:1,10"], capsys)
    assert code == 3


def test_reports_are_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / ("r%d.json" % k)
        assert main(["verify", "signs", "--out", str(p)]) == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_bridge_commands(tmp_path, capsys):
    s = tmp_path / "s.hsf"
    assert main(["bridge", "to-system", "signs", "--out", str(s)]) == 0
    assert hsf.load(s).n == 4
    r = tmp_path / "r.hsf"
    assert main(["bridge", "recover", str(s), "--out", str(r)]) == 0
    assert run(["bridge", "diff", str(r), "signs"], capsys)[0] == 0
    assert run(["bridge", "diff", "krasner", "signs"], capsys)[0] == 1
    code, out, _ = run(["bridge", "retraction", "krasner"], capsys)
    assert code == 0 and json.loads(out)["hypersystem_size"] == 3
    code, out, _ = run(["bridge", "profile", "fp-mod-g:11:1,10", "--ideal-min-size", "4"], capsys)
    prof = {a["name"]: a for a in json.loads(out)["axioms"]}
    assert prof["tangibly_balanced"]["witness"] == ["{0,2}", "{1,5}"]


@pytest.mark.parametrize("argv,size", [
    (["symmetrize", "layered-n:1"], 9),
    (["symmetrize-bipotent", "sign-semiring"], None),
    (["layered", "krasner", "--grades", "0,1"], 5),
    (["layered-hyper", "phase", "--grades", "0"], None),
    (["truncate", "3"], 4),
    (["poly", "layered-n:1", "--degcap", "1"], 9),
    (["matrix", "layered-n:1", "--n", "2"], 81),
])
def test_construct(argv, size, tmp_path, capsys):
    out = tmp_path / "c.hsf"
    code, _, err = run(["construct"] + argv + ["--out", str(out)], capsys)
    if argv[0] == "symmetrize-bipotent":
        assert code == 1 and "bipotent" in err      # ∞ + ∞ is not in {∞}
        return
    assert code == 0, err
    if size is not None:
        assert hsf.load(out).n == size


def test_construct_direct_sum(tmp_path, capsys):
    t = tmp_path / "t.hsf"
    assert main(["construct", "truncate", "1", "--out", str(t)]) == 0
    code, out, _ = run(["construct", "direct-sum", str(t), str(t), "--option", "2"], capsys)
    assert code == 0 and len(json.loads(out)["carrier"]) == 4


def test_matroid_commands(tmp_path, capsys):
    src = tmp_path / "m.json"
    src.write_text(json.dumps({"rational": [[1, 2, 0, 1, 3], [0, 1, 1, -1, 2], [2, 0, 1, 1, -1]],
                               "route": "sign"}))
    g = tmp_path / "g.json"
    assert main(["matroid", "from-matrix", str(src), "--out", str(g)]) == 0
    code, out, _ = run(["matroid", "check", str(g)], capsys)
    assert code == 0 and json.loads(out)["bases"]
    code, out, _ = run(["matroid", "bases", str(g)], capsys)
    assert [0, 1, 2] in json.loads(out)
    v = tmp_path / "v.json"
    v.write_text(json.dumps({"rational": [[1, 3, 0, 9, "1/3"], [0, 1, 2, -1, 6], [5, 0, 1, 1, -3]],
                             "route": "valuation", "p": 3, "grades": [-12, 12]}))
    gv = tmp_path / "gv.json"
    assert main(["matroid", "from-matrix", str(v), "--out", str(gv)]) == 0
    assert run(["matroid", "exchange", str(gv)], capsys)[0] == 0
    # the sign hypersystem is bipotent and cancellative too, so exchange applies
    assert run(["matroid", "exchange", str(g)], capsys)[0] == 0


def test_matroid_label_grid(tmp_path, capsys):
    src = tmp_path / "grid.json"
    src.write_text(json.dumps({"system": "supertropical", "matrix": [["0", "1", "-inf"],
                                                                     ["-inf", "0", "0"]]}))
    code, out, _ = run(["matroid", "from-matrix", str(src)], capsys)
    assert code == 0
    assert json.loads(out)["values"]["0,1"] == "0"


def pipeline(tmp_path, steps):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"steps": steps}))
    return main(["pipeline", str(p), "--workdir", str(tmp_path / "work"),
                 "--out", str(tmp_path / "report.json")])


def test_pipeline_f11(tmp_path):
    code = pipeline(tmp_path, [{"op": "quotient", "p": 11, "G": [1, 10]}, {"op": "to-system"},
                               {"op": "profile", "ideal_min_size": 4,
                                "expect": {"tangibly_balanced": False,
                                           "witness": ["tangibly_balanced", ["{0,2}", "{1,5}"]]}}])
    assert code == 0
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["status"] == "ok" and len(rep["steps"]) == 3
    assert (tmp_path / "work" / "step01-to-system.hsf").exists()


def test_pipeline_krasner_recover(tmp_path):
    assert pipeline(tmp_path, [{"op": "catalog", "name": "krasner"}, {"op": "to-system"},
                               {"op": "recover"},
                               {"op": "diff", "with": "krasner", "expect": {"equal": True}}]) == 0


def test_empty_pipeline(tmp_path):
    assert pipeline(tmp_path, []) == 0


def test_pipeline_aborts_with_step_index(tmp_path, capsys):
    code = pipeline(tmp_path, [{"op": "catalog", "name": "krasner"},
                               {"op": "recover"}, {"op": "to-system"}])
    assert code == 1
    assert "step 1 (recover)" in capsys.readouterr().err
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["steps"][-1]["step"] == 1 and rep["status"] == "failed"


def test_pipeline_expectation_mismatch(tmp_path):
    assert pipeline(tmp_path, [{"op": "catalog", "name": "krasner"},
                               {"op": "retraction", "expect": {"retraction_equal": False}}]) == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["bridge", "diff", "krasner"])
    assert e.value.code == 2


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "hyperkit.cli", "verify", "krasner", "--suite",
                        "axioms"], capture_output=True, text=True)
    assert r.returncode == 0 and '"verdict": "match"' in r.stdout
