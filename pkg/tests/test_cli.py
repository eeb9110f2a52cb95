import json
import subprocess
import sys

import pytest

from invseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def payload(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)["results"]


def test_count(capsys):
    assert payload(capsys, "count", "(-,>,-)", "--n", "7")["count"] == 429
    assert payload(capsys, "count", "--words", "210,100", "--n", "7")["count"] == 2958
    assert payload(capsys, "count", "(=,=,!=)", "--n", "5")["count"] == 120
    assert payload(capsys, "count", "(>,-,-)", "--n", "5", "--prefix")["terms"] == [1, 2, 6, 20, 70]


def test_exit_codes(capsys):
    assert run(capsys, "count", "(x", "--n", "3")[0] == 2
    assert run(capsys, "count", "012", "--n", "11")[0] == 3
    assert run(capsys, "count", "012", "--n", "11", "--limit", "11")[0] == 0
    assert run(capsys, "classify", "--max-n", "10")[0] == 3
    assert run(capsys, "verify", "--bijection", "nope", "--n", "3")[0] == 2
    assert run(capsys, "verify", "--table", "9")[0] == 2
    assert run(capsys, "stats", "011", "--n", "4", "--stat", "foo")[0] == 2
    assert run(capsys, "sequence", "nope", "3")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_verify(capsys):
    assert payload(capsys, "verify", "--bijection", "phi", "--n", "7")["passed"]
    assert payload(capsys, "verify", "--table", "3")["passed"]
    code, out, _ = run(capsys, "verify", "--bijection", "map_2958D", "--n", "4")
    assert code == 1
    assert [[0, 1, 0, 1], [0, 1, 0, 1]] in json.loads(out)["results"]["checks"][1]["counterexamples"]["outside_codomain"]


def test_stats(capsys):
    rows = payload(capsys, "stats", "011", "--n", "6", "--stat", "zeros")["histogram"]
    assert [r["count"] for r in rows] == [1, 31, 90, 65, 15, 1]
    rows = payload(capsys, "stats", "(>,<=,-)", "--n", "5", "--stat", "dist")["histogram"]
    assert [r["count"] for r in rows] == [1, 16, 38, 16, 1]
    rows = payload(capsys, "stats", "021", "--n", "6", "--stat", "asc")["histogram"]
    counts = [r["count"] for r in rows]
    assert counts == counts[::-1]
    joint = payload(capsys, "stats", "011", "--n", "4", "--stat", "zeros", "--joint", "last")
    assert joint["total"] == 15


def test_sequence_and_fingerprint(capsys):
    assert payload(capsys, "sequence", "semi_baxter", "7")["terms"][-1] == 2958
    hits = payload(capsys, "fingerprint", "(>,-,<=)", "8")["matches"]
    assert [h["id"] for h in hits] == ["A106228"]
    assert payload(capsys, "fingerprint", "--terms", "3,1,4,15,9,26,5")["matches"] == []


def test_classify(capsys, tmp_path):
    out = tmp_path / "report.json"
    res = payload(capsys, "classify", "--max-n", "9", "--out", str(out))
    assert res["summary"].endswith("63 Wilf classes at n=9")
    report = json.loads(out.read_text())
    assert report["labels"]["(-,>,-)"] == "429A"


def test_csv(capsys):
    code, out, _ = run(capsys, "stats", "011", "--n", "4", "--stat", "zeros", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["zeros,count", "1,1", "2,7", "3,6", "4,1"]
    code, out, _ = run(capsys, "count", "(-,>,-)", "--n", "4", "--prefix", "--format", "csv")
    assert out.splitlines() == ["n,a_n", "1,1", "2,2", "3,5", "4,14"]


def test_output_is_deterministic(capsys):
    first = run(capsys, "table", "2")[1]
    second = run(capsys, "table", "2", "--jobs", "4")[1]
    assert first == second


@pytest.mark.parametrize("jobs", ["1", "4", "16"])
def test_jobs_do_not_change_numbers(capsys, jobs):
    assert payload(capsys, "count", "210,100", "--n", "9", "--jobs", jobs)["count"] == 112657


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "invseq.cli", "count", "(-,>,-)", "--n", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["count"] == 132
