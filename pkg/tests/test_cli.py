"""Command line interface exit codes and output."""

import json

from minbr.cli import main


def test_corpus_list(capsys):
    assert main(["corpus", "list"]) == 0
    out = capsys.readouterr().out
    assert "T_O58" in out and "unit_5" in out


def test_corpus_show(capsys):
    assert main(["corpus", "show", "w_state"]) == 0
    assert "dims" in capsys.readouterr().out


def test_corpus_show_unknown(capsys):
    assert main(["corpus", "show", "nope"]) == 2


def test_analyze_corpus_key(capsys):
    assert main(["analyze", "corpus:T_O58"]) == 0
    out = capsys.readouterr().out
    assert "minimal_border_rank" in out
    assert "yes" in out


def test_analyze_file(tmp_path, capsys):
    p = tmp_path / "t.json"
    p.write_text(json.dumps({"dims": [2, 2, 2], "entries": [
        {"i": 1, "j": 1, "k": 1, "v": 1}, {"i": 2, "j": 2, "k": 2, "v": 1}]}))
    assert main(["analyze", str(p)]) == 0


def test_analyze_bad_file(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"dims": [2, 2, 2], "entries": [
        {"i": 1, "j": 1, "k": 1, "v": 1}, {"i": 1, "j": 1, "k": 1, "v": 2}]}))
    assert main(["analyze", str(p)]) == 2
    assert "duplicate" in capsys.readouterr().err


def test_analyze_missing_file(capsys):
    assert main(["analyze", "/no/such/file.json"]) == 2


def test_classify(capsys):
    assert main(["classify", "corpus:T_O56_tilde"]) == 0
    assert "O56" in capsys.readouterr().out


def test_classify_precondition_failure(capsys):
    assert main(["classify", "corpus:unit_5"]) == 3


def test_certify(capsys):
    assert main(["certify", "corpus:T_O58"]) == 0
    out = capsys.readouterr().out
    assert "limit_certificate" in out
    assert "wild" in out


def test_deterministic_output(capsys):
    assert main(["analyze", "corpus:symmetric_cubic"]) == 0
    first = capsys.readouterr().out
    assert main(["analyze", "corpus:symmetric_cubic"]) == 0
    assert capsys.readouterr().out == first
