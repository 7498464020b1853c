import json

import pytest

from bottsam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema"] == 1
    return doc


def test_roots_text(capsys):
    code, out, err = run(capsys, "--type", "A2", "roots")
    assert code == 0
    assert "positive roots: a1, a2, a1 + a2" in out
    assert "longest word: 1 2 1" in out
    assert "longest length: 3" in out


def test_roots_json(capsys):
    doc = run_json(capsys, "--type", "G2", "roots", "--json")
    assert doc["longest_word"] == [1, 2, 1, 2, 1, 2]
    assert len(doc["positive_roots"]) == 6
    assert doc["matrix"] == [[2, -3], [-1, 2]]


def test_flags_may_come_before_or_after_the_command(capsys):
    a = run(capsys, "--type", "A1", "--word", "1", "table")
    b = run(capsys, "table", "--type", "A1", "--word", "1")
    assert a == b


def test_table_a1(capsys):
    code, out, err = run(capsys, "--type", "A1", "--word", "1", "table")
    assert code == 0
    assert out.splitlines() == ["# columns: 0, 1", "0: 1, 1", "1: 0, a1"]


def test_table_json_roundtrip(capsys):
    doc = run_json(capsys, "--type", "A2", "--word", "1,2,1", "table", "--json")
    assert doc["columns"][0] == "000"
    assert doc["rows"]["111"][-1] == "a1^2*a2 + a1*a2^2"
    assert len(doc["rows"]) == 8


def test_product_examples(capsys):
    code, out, _ = run(capsys, "--type", "A2", "--word", "1,2,1", "product", "100", "001")
    assert code == 0
    assert out.strip() == "101: 1"
    code, out, _ = run(capsys, "--type", "A2", "--word", "1,2,1", "product", "001", "001")
    assert code == 0
    assert out.strip() == "001: a1, 101: -2, 011: 1"


def test_product_check_flag(capsys):
    code, out, _ = run(
        capsys, "--type", "A2", "--word", "1,2,1", "product", "001", "001", "--check"
    )
    assert code == 0
    assert "check: closed one-generator rule agrees" in out
    code, out, _ = run(
        capsys, "--type", "A2", "--word", "1,2,1", "product", "110", "011", "--check"
    )
    assert code == 0
    assert "check: skipped" in out


def test_product_json_reimports_as_a_class(capsys):
    doc = run_json(
        capsys, "--type", "A2", "--word", "1,2,1", "product", "001", "001", "--json"
    )
    from bottsam import CohClass, RootSystem

    cls = CohClass.from_json_dict(RootSystem.from_label("A2"), doc)
    assert doc["coords"] == {"001": "a1", "101": "-2", "011": "1"}
    assert cls.to_json_dict()["coords"] == doc["coords"]


def test_product_length_mismatch_is_a_user_error(capsys):
    code, out, err = run(capsys, "--type", "A2", "--word", "1,2,1", "product", "10", "001")
    assert code == 2
    assert "LengthMismatch" in err


def test_restrict(capsys):
    code, out, _ = run(
        capsys, "--type", "A2", "--word", "1,2,1", "restrict", "111", "--class", "001"
    )
    assert code == 0
    assert out.strip() == "a2"


def test_integrate_examples(capsys):
    word = ("--type", "A2", "--word", "1,2,1")
    code, out, _ = run(capsys, *word, "integrate", "100", "--class", "100")
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run(capsys, *word, "integrate", "100", "--class", "000")
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run(capsys, *word, "integrate", "111", "--class", "111")
    assert (code, out.strip()) == (0, "1")


def test_integrate_inline_json_class(capsys):
    spec = json.dumps({"word": [1, 2, 1], "coords": {"110": "a1", "111": "3"}})
    code, out, _ = run(
        capsys, "--type", "A2", "--word", "1,2,1", "integrate", "111", "--class", spec
    )
    assert code == 0
    assert out.strip() == "3"


def test_class_file_input(tmp_path, capsys):
    path = tmp_path / "cls.json"
    path.write_text(json.dumps({"word": [1, 2, 1], "coords": {"001": "1"}}))
    code, out, _ = run(
        capsys, "--type", "A2", "--word", "1,2,1", "restrict", "101", "--class", str(path)
    )
    assert code == 0
    assert out.strip() == "-a1"


def test_billey_examples(capsys):
    code, out, _ = run(capsys, "--type", "A2", "billey", "--w", "1", "--v", "1,2,1")
    assert (code, out.strip()) == (0, "a1 + a2")
    code, out, _ = run(capsys, "--type", "A2", "billey", "--w", "", "--v", "1,2,1")
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run(capsys, "--type", "A2", "billey", "--w", "1,2", "--v", "1,2,1")
    assert (code, out.strip()) == (0, "a1^2 + a1*a2")


def test_billey_verify(capsys):
    code, out, _ = run(
        capsys,
        "--type", "B2", "--word", "1,2,1,2",
        "billey", "--w", "1,2", "--v", "1,2,1,2", "--verify",
    )
    assert code == 0
    assert "verify:" in out
    assert "0 disagree" in out


def test_billey_non_reduced_v_is_a_user_error(capsys):
    code, _, err = run(capsys, "--type", "A2", "billey", "--w", "1", "--v", "1,1")
    assert code == 2
    assert "NotReducedWord" in err


def test_ordinary_relations_and_product(capsys):
    code, out, _ = run(capsys, "--type", "A2", "--word", "1,2,1", "ordinary")
    assert code == 0
    assert out.splitlines() == [
        "x1^2 = 0",
        "x2^2 - x1*x2 = 0",
        "x3^2 + 2*x1*x3 - x2*x3 = 0",
    ]
    code, out, _ = run(
        capsys, "--type", "A2", "--word", "1,2,1", "ordinary", "--product", "001", "001"
    )
    assert code == 0
    assert out.strip() == "-2*x_{101} + x_{011}"


def test_cartan_file_source(tmp_path, capsys):
    path = tmp_path / "b2.json"
    path.write_text(json.dumps({"label": "B2", "matrix": [[2, -1], [-2, 2]]}))
    code, out, _ = run(capsys, "--cartan", str(path), "roots")
    assert code == 0
    assert "a1 + 2*a2" in out


def test_bad_cartan_file_is_a_user_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"matrix": [[3]]}))
    code, _, err = run(capsys, "--cartan", str(path), "roots")
    assert code == 2
    assert "InvalidCartan" in err
    code, _, err = run(capsys, "--cartan", str(tmp_path / "absent.json"), "roots")
    assert code == 2


def test_conflicting_cartan_sources(tmp_path, capsys):
    path = tmp_path / "b2.json"
    path.write_text(json.dumps({"matrix": [[2, -1], [-2, 2]]}))
    code, _, err = run(capsys, "--type", "A2", "--cartan", str(path), "roots")
    assert code == 2


def test_letter_out_of_range_is_a_user_error(capsys):
    code, _, err = run(capsys, "--type", "A2", "--word", "1,3", "table")
    assert code == 2
    assert "IndexOutOfRange" in err


def test_missing_word_is_a_user_error(capsys):
    code, _, err = run(capsys, "--type", "A2", "table")
    assert code == 2


def test_missing_command_is_a_user_error(capsys):
    code, _, err = run(capsys, "--type", "A2")
    assert code == 2


def test_cap_is_enforced_and_adjustable(capsys):
    code, _, err = run(
        capsys, "--type", "A2", "--word", "1,2,1,2,1", "--cap", "4", "table"
    )
    assert code == 2
    assert "CapExceeded" in err
    code, _, _ = run(capsys, "--type", "A2", "--word", "1,2,1,2,1", "table")
    assert code == 0
