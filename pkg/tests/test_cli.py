import io
import json

import pytest

from roughspan.cli import run
from roughspan.formats import format_fuzzy_set
from roughspan.table1 import sentence_approximations

SIX = "id,a\n1,x\n2,x\n3,y\n4,y\n5,z\n6,z\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_span_delta_prime(files):
    code, out, _ = call("span", "--table", files("t.csv", SIX), "--attrs", "a", "--set", "1,2,3",
                        "--measure", "delta-prime", "--w1", "0.5")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == pytest.approx(0.5)
    assert payload["measure"] == "delta_prime"


def test_span_complete_with_full_set(files):
    code, out, _ = call("span", "--table", files("t.csv", SIX), "--set", "1,2,3,4,5,6",
                        "--measure", "complete", "--w1", "0.3", "--include-full-set")
    assert code == 0 and json.loads(out)["value"] == pytest.approx(1.3)


def test_approx(files):
    code, out, _ = call("approx", "--table", files("t.csv", SIX), "--attrs", "a", "--set", "3,1,2")
    payload = json.loads(out)
    assert payload["lower"] == ["1", "2"]
    assert payload["upper"] == ["1", "2", "3", "4"]
    assert payload["boundary"] == ["3", "4"]
    assert payload["accuracy"] == 0.5


def test_approx_empty_set_has_null_accuracy(files):
    _, out, _ = call("approx", "--table", files("t.csv", SIX), "--set", "")
    assert json.loads(out)["accuracy"] is None


def test_json_is_deterministic(files):
    t = files("t.csv", SIX)
    a = call("approx", "--table", t, "--set", "1,2,3")[1]
    b = call("approx", "--table", t, "--set", "3,2,1")[1]
    assert a == b
    keys = list(json.loads(a))
    assert keys == sorted(keys)


def test_spanning_set(files):
    code, out, _ = call("spanning-set", "--table", files("t.csv", SIX), "--attrs", "a",
                        "--measure", "delta-prime", "--w1", "0.5", "--max-size", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["value"] == pytest.approx(1 / 3)
    assert payload["optimal"] is True


@pytest.mark.parametrize("solver", ["greedy", "local"])
def test_spanning_set_heuristics(files, solver):
    code, out, _ = call("spanning-set", "--table", files("t.csv", SIX), "--solver", solver,
                        "--max-size", "2", "--seed", "1")
    assert code == 0 and json.loads(out)["optimal"] is False


def test_fuzzy_span_from_files(files):
    lower, upper = sentence_approximations("S2")
    code, out, _ = call("fuzzy-span", "--lower", files("l.csv", format_fuzzy_set(lower)),
                        "--upper", files("u.csv", format_fuzzy_set(upper)), "--w1", "0.9")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(0.7954, abs=5e-4)


def test_fuzzy_approx_and_span_from_relation(files):
    rel = files("r.csv", "id,x,y\nx,1,0.3\ny,0.3,1\n")
    fset = files("f.csv", "id,grade\nx,1\ny,0.5\n")
    code, out, _ = call("fuzzy-approx", "--relation", rel, "--set", fset, "--def", "I",
                        "--validate", "strict")
    payload = json.loads(out)
    assert code == 0
    assert payload["lower"] == {"x": pytest.approx(0.7), "y": 0.5}
    assert payload["validation"]["valid"] is True
    code, out, _ = call("fuzzy-span", "--relation", rel, "--set", fset, "--def", "I", "--w1", "0.5")
    assert json.loads(out)["value"] == pytest.approx(0.5 * 1.2 / 2 + 0.5 * 1.5 / 2)


def test_fuzzy_approx_definitions_two_and_three(files):
    fset = files("f.csv", "id,grade\nx,0.2\ny,0.9\n")
    gran = files("g.csv", "id,grade\nx,1\ny,0.4\n")
    part = files("p.csv", "id,c1,c2\nx,1,0\ny,0,1\n")
    _, out, _ = call("fuzzy-approx", "--set", fset, "--granule", gran, "--def", "II")
    assert json.loads(out)["upper"] == {"x": 0.4, "y": 0.4}
    _, out, _ = call("fuzzy-approx", "--set", fset, "--partition", part, "--def", "III")
    assert json.loads(out)["lower"] == {"x": 0.2, "y": 0.9}


def test_strict_validation_failure_is_domain_error(files):
    rel = files("r.csv", "id,a,b,c\na,1,0.9,0.1\nb,0.9,1,0.9\nc,0.1,0.9,1\n")
    fset = files("f.csv", "id,grade\na,1\nb,0\nc,0\n")
    code, out, err = call("fuzzy-approx", "--relation", rel, "--set", fset, "--validate", "strict")
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "InvalidFuzzyRelation"
    code, out, _ = call("fuzzy-approx", "--relation", rel, "--set", fset, "--validate", "warn")
    assert code == 0
    assert ["a", "c", "b"] in [v["witness"] for v in json.loads(out)["validation"]["violations"]]


def test_select(files):
    table = files("d.csv", "id,key,noise,#decision\n1,p,u,A\n2,p,v,A\n3,q,v,B\n4,q,u,B\n")
    code, out, _ = call("select", "--table", table, "--w1", "0.8")
    payload = json.loads(out)
    assert code == 0 and payload["selected"] == ["key"] and payload["mean_accuracy"] == 1.0


def test_select_without_decision(files):
    code, _, err = call("select", "--table", files("t.csv", SIX))
    assert code == 1 and json.loads(err)["error"] == "MissingDecision"


def test_repro_table1_json():
    code, out, _ = call("repro-table1")
    payload = json.loads(out)
    assert code == 0
    assert payload["matched_published"] == 12 and payload["total"] == 14
    errata = [c for c in payload["cells"] if c["erratum"]]
    assert [(c["sentence"], c["expected"]) for c in errata] == [("S1", 0.6846), ("S2", 0.8140)]
    assert all(c["pass"] for c in payload["cells"])


def test_repro_table1_report():
    code, out, _ = call("repro-table1", "--format", "report")
    assert code == 0
    assert "12/14" in out and "0.6846" in out and "0.8141" in out


def test_report_format_rounds(files):
    _, out, _ = call("span", "--table", files("t.csv", SIX), "--set", "1,2,3", "--measure", "delta",
                     "--format", "report")
    assert "value: 0.3333" in out


@pytest.mark.parametrize("argv", [["nope"], ["span", "--bogus"], ["span", "--table", "t.csv"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        call(*argv)
    assert exc.value.code == 2


def test_domain_errors_exit_1(files):
    t = files("t.csv", SIX)
    for argv in (["approx", "--table", t, "--set", "9"],
                 ["approx", "--table", t, "--attrs", "zz", "--set", "1"],
                 ["span", "--table", t, "--set", "1", "--w1", "2"],
                 ["approx", "--table", "/nonexistent.csv", "--set", "1"],
                 ["approx", "--table", files("bad.csv", "id,a\n1,x\n1,y\n"), "--set", "1"],
                 ["fuzzy-span", "--lower", t]):
        code, out, err = call(*argv)
        assert code == 1 and out == ""
        assert set(json.loads(err)) == {"error", "message"}


def test_module_entry_point(tmp_path):
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "roughspan", "repro-table1"], capture_output=True,
                          text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True
