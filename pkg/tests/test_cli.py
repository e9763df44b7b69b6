import json

import pytest

from lcfree.cli import main
from lcfree.harness import CHECKS, Report
from lcfree.generators import complete_k53, linear_cycle_gen
from lcfree.textformat import emit, parse


@pytest.fixture
def write(tmp_path):
    def _write(h, name="h.txt"):
        p = tmp_path / name
        p.write_text(h if isinstance(h, str) else emit(h))
        return str(p)
    return _write


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr()


def test_indep_on_k53(capsys, write):
    code, out = run(capsys, ["indep", write(complete_k53(1))])
    data = json.loads(out.out)
    assert code == 0
    assert data["size"] == 2 and data["trace"]


def test_cycle_on_generated_cycle(capsys, write):
    code, out = run(capsys, ["cycle", write(linear_cycle_gen(3))])
    data = json.loads(out.out)
    assert code == 0 and len(data["certificate"]) == 3


def test_alpha_cap_gives_budget_code(capsys, write):
    code, _ = run(capsys, ["alpha", write("30 0\n")])
    assert code == 3


def test_alpha_small(capsys, write):
    code, out = run(capsys, ["alpha", write(complete_k53(1))])
    assert code == 0 and json.loads(out.out)["alpha"] == 2


def test_parse_error_gives_usage_code(capsys, write):
    code, out = run(capsys, ["analyze", write("3 1\n0 0 1\n")])
    assert code == 2 and "line 2" in out.err


def test_missing_file(capsys):
    assert run(capsys, ["cycle", "/nonexistent/file.txt"])[0] == 2


def test_bad_subcommand(capsys):
    assert run(capsys, ["frobnicate"])[0] == 2


def test_analyze(capsys, write):
    code, out = run(capsys, ["analyze", write(complete_k53(2))])
    data = json.loads(out.out)
    assert code == 0
    assert data["cycle_free"] and data["alpha_bound_holds"]
    assert data["n"] == 10 and data["m"] == 20 and data["min_strong_degree"] == 2


def test_color_and_partition(capsys, write):
    path = write(complete_k53(1))
    code, out = run(capsys, ["color", path])
    colors = json.loads(out.out)["colors"]
    assert code == 0 and sorted(colors.count(c) for c in (1, 2, 3)) == [1, 2, 2]
    code, out = run(capsys, ["partition", path])
    assert code == 0 and json.loads(out.out)["count"] == 2


@pytest.mark.parametrize(
    "argv, n, m",
    [
        (["gen", "k53", "2"], 10, 20),
        (["gen", "star", "5"], 5, 6),
        (["gen", "tight", "5"], 7, 10),
        (["gen", "path", "2"], 5, 2),
        (["gen", "cyclegen", "3"], 6, 3),
        (["gen", "random", "6", "7", "--seed", "4"], 6, 7),
        (["gen", "randomfree", "6", "0", "--seed", "4"], 6, 0),
    ],
)
def test_gen(capsys, argv, n, m):
    code, out = run(capsys, argv)
    h = parse(out.out)
    assert code == 0 and (h.n, h.m) == (n, m)


def test_gen_wrong_arity(capsys):
    assert run(capsys, ["gen", "random", "6"])[0] == 2


def test_gen_bad_param(capsys):
    assert run(capsys, ["gen", "tight", "4"])[0] == 2


def test_check_report_keys(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out = run(capsys, ["check", "alpha", "--corpus", "k53(copies=1..2),star(n=5..6)",
                             "--out", str(out_file)])
    data = json.loads(out.out)
    assert code == 0
    assert list(data) == ["check", "corpus", "instances", "violations", "stats", "budget_exhausted"]
    assert data["instances"] == 4
    assert json.loads(out_file.read_text()) == data


def test_check_prob1_filters_k53(capsys):
    code, out = run(capsys, ["check", "prob1", "--corpus", "k53(copies=1)"])
    assert code == 0 and json.loads(out.out)["stats"]["excluded_k53"] == 1


def test_check_violation_exit_code(capsys, monkeypatch):
    def fake(corpus, **kwargs):
        return Report("alpha", corpus.description, 1,
                      [{"label": "x", "instance": "3 0\n", "details": "planted"}])
    monkeypatch.setitem(CHECKS, "alpha", fake)
    code, out = run(capsys, ["check", "alpha", "--corpus", "star(n=3)"])
    assert code == 1 and json.loads(out.out)["violations"][0]["details"] == "planted"


def test_check_budget_exit_code(capsys):
    code, out = run(capsys, ["check", "alpha", "--corpus", "star(n=9)", "--budget", "1"])
    assert code == 3 and json.loads(out.out)["budget_exhausted"] == 1


def test_check_bad_corpus(capsys):
    assert run(capsys, ["check", "alpha", "--corpus", "nosuch(n=3)"])[0] == 2
