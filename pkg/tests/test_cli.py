import json

import pytest

from pathseq.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_gen(capsys):
    assert run(capsys, "gen", "--family", "star", "--n", "4", "--format", "graph6")[:2] == (0, "Cs\n")
    status, out, _ = run(capsys, "gen", "--family", "lollipop", "--n1", "4", "--n2", "3",
                         "--format", "edge-list")
    lines = out.splitlines()
    assert status == 0 and lines[0] == "6" and len(lines) == 7


@pytest.mark.parametrize("argv, fragment", [
    (["gen", "--family", "cycle", "--n", "2"], "n >= 3"),
    (["gen", "--family", "kite", "--n1", "3"], "--n2"),
    (["gen", "--family", "starlike"], "--branches"),
    (["gen", "--family", "starlike", "--branches", "1,0"], "trailing zero"),
])
def test_gen_invalid(capsys, argv, fragment):
    status, _, err = run(capsys, *argv)
    assert status == 2 and fragment in err


def test_unknown_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gen", "--family", "wheel", "--n", "5"])
    assert info.value.code == 2


def test_seq(capsys, tmp_path):
    assert run(capsys, "seq", "--family", "kite", "--n1", "4", "--n2", "2",
               "--method", "formula")[:2] == (0, "5,7,15,18,6\n")
    k13 = tmp_path / "k13.g6"
    k13.write_text("Cs\n")
    assert run(capsys, "seq", "-i", str(k13), "--method", "dp")[:2] == (0, "4,3,3\n")
    assert run(capsys, "seq", "--family", "complete", "--n", "3", "--method", "dfs")[:2] == (0, "3,3,3\n")
    edges = tmp_path / "claw.txt"
    edges.write_text("4\n0 1\n0 2\n0 3\n")
    assert run(capsys, "seq", "-i", str(edges))[:2] == (0, "4,3,3\n")
    many = tmp_path / "many.g6"
    many.write_text("Cs\nC~\n")
    assert run(capsys, "seq", "-i", str(many), "--method", "dfs")[1] == "4,3,3\n4,6,12,12\n"


def test_seq_big_integers_print_losslessly(capsys):
    status, out, _ = run(capsys, "seq", "--family", "complete", "--n", "22", "--method", "formula")
    assert status == 0 and out.strip().endswith(",562000363888803840000")


def test_seq_errors(capsys, tmp_path):
    k13 = tmp_path / "k13.g6"
    k13.write_text("Cs\n")
    assert run(capsys, "seq", "-i", str(k13), "--family", "star", "--n", "4")[0] == 2
    assert run(capsys, "seq", "-i", str(k13), "--method", "formula")[0] == 2
    status, _, err = run(capsys, "seq", "--family", "path", "--n", "15", "--method", "dfs")
    assert status == 2 and "n <= 14" in err
    bad = tmp_path / "bad.g6"
    bad.write_text("C\x7f\n")
    assert run(capsys, "seq", "-i", str(bad))[0] == 2
    assert run(capsys, "seq", "-i", str(tmp_path / "missing.g6"))[0] == 2


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "--family", "lollipop", "--max", "8")
    assert status == 0 and "42/42" in out
    assert run(capsys, "verify", "--family", "starlike", "--max-n", "12")[0] == 0
    status, out, _ = run(capsys, "verify", "--family", "complete", "--max", "1")
    assert status == 0 and "1/1" in out


def test_identify(capsys):
    assert run(capsys, "identify", "--family", "lollipop", "--seq", "6,6,7,8,4,2")[:2] == (
        0, "lollipop n1=4 n2=3\n")
    assert run(capsys, "identify", "--family", "complete", "--seq", "4,3,3")[:2] == (1, "no match\n")
    assert run(capsys, "identify", "--family", "starlike", "--seq", "4,3,3")[:2] == (
        0, "starlike L=(3)\n")
    assert run(capsys, "identify", "--family", "starlike", "--seq", "4,x")[0] == 2
    assert run(capsys, "identify", "--family", "starlike", "--seq", "4,3,0")[0] == 2


def test_collide(capsys, tmp_path):
    status, out, _ = run(capsys, "collide", "--enumerate", "4")
    assert status == 1
    record = json.loads(out)
    assert record["sequence"] == "4,3,3" and sorted(record["members"]) == ["Cs", "Cw"]
    assert run(capsys, "collide", "--enumerate", "4", "--connected-only")[:2] == (0, "")
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    assert run(capsys, "collide", "-i", str(empty))[:2] == (0, "")
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("# two graphs\nCs\nCw\n")
    report = tmp_path / "out.jsonl"
    assert run(capsys, "collide", "-i", str(corpus), "-o", str(report))[0] == 1
    assert json.loads(report.read_text())["sequence"] == "4,3,3"
    assert run(capsys, "collide", "--enumerate", "9")[0] == 2
    assert run(capsys, "collide", "--enumerate", "4", "-i", str(corpus))[0] == 2


def test_collide_deterministic(capsys):
    first = run(capsys, "--jobs", "2", "collide", "--enumerate", "5")
    second = run(capsys, "collide", "--enumerate", "5")
    assert first == second
