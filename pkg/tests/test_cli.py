"""End-to-end checks of the command-line front end.

Each subcommand is a thin wrapper, so most tests compare its output
against the library call it wraps and pin the exit code contract:
0 success, 1 failed verification, 2 invalid input.
"""

import json

import pytest

from cycleiso import card, factorize, import_elements, standard_generators
from cycleiso.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_card_plain(capsys):
    code, out, err = run(capsys, "card", "odi", "4")
    assert code == 0
    assert out == "formula=44\n"
    assert err == ""


def test_card_enumerate_cross_check(capsys):
    code, out, _ = run(capsys, "card", "odi", "4", "--enumerate")
    assert code == 0
    assert out == "formula=44 enumerated=44 PASS\n"


def test_card_json(capsys):
    code, out, _ = run(capsys, "card", "mdi", "5", "--enumerate", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["formula"] == card("mdi", 5) == 182
    assert payload["enumerated"] == 182
    assert payload["match"] is True


def test_card_rejects_small_n(capsys):
    code, out, err = run(capsys, "card", "odi", "2")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_unknown_kind_is_a_usage_error(capsys):
    code, _, err = run(capsys, "card", "xyz", "4")
    assert code == 2
    assert "invalid choice" in err


def test_missing_subcommand_is_a_usage_error(capsys):
    assert run(capsys, *[])[0] == 2


def test_enumerate_to_stdout(capsysbinary):
    code = main(["enumerate", "odi", "3"])
    out = capsysbinary.readouterr().out
    assert code == 0
    lines = out.decode().splitlines()
    assert len(lines) == 20
    assert lines[0] == "n=3;"
    assert all(line.startswith("n=3;") for line in lines)


def test_enumerate_to_file_round_trips(tmp_path, capsys):
    path = tmp_path / "opdi4.jsonl.gz"
    code, out, _ = run(
        capsys, "enumerate", "opdi", "4", "--out", str(path),
        "--format", "jsonl", "--gzip",
    )
    assert code == 0
    assert out == f"wrote 77 elements to {path}\n"
    m = import_elements(path)
    assert m.size == 77


def test_enumerate_workers_do_not_change_the_file(tmp_path, capsys):
    paths = []
    for workers in ("1", "3"):
        path = tmp_path / f"w{workers}.txt"
        run(capsys, "enumerate", "mdi", "4", "--out", str(path),
            "--workers", workers)
        paths.append(path.read_bytes())
    assert paths[0] == paths[1]


def test_greens_summary_and_histogram(capsys):
    code, out, _ = run(capsys, "greens", "odi", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind=odi n=4 relation=J classes=8 crosscheck=PASS"
    assert lines[1] == "class_size,num_classes"
    total = sum(
        size * count
        for size, count in (map(int, line.split(",")) for line in lines[2:])
    )
    assert total == 44


def test_greens_di_skips_the_crosscheck(capsys):
    code, out, _ = run(capsys, "greens", "di", "4", "--relation", "H")
    assert code == 0
    assert "crosscheck" not in out.splitlines()[0]


def test_greens_json(capsys):
    code, out, _ = run(capsys, "greens", "opdi", "4", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema_version"] == 1
    assert payload["classes"] == 6
    assert payload["crosscheck"] is True
    assert sum(s * c for s, c in payload["histogram"]) == 77


def test_classify_key_value_lines(capsys):
    code, out, _ = run(capsys, "classify", "n=5;2>1,4>3,5>4")
    assert code == 0
    got = dict(line.split("=", 1) for line in out.splitlines())
    assert got["element"] == "n=5;2>1,4>3,5>4"
    assert got["rank"] == "3"
    assert got["in_di"] == "true"
    assert got["in_odi"] == "true"
    assert got["in_opdi"] == "true"
    assert got["order_preserving"] == "true"
    assert got["order_reversing"] == "false"
    assert got["extensions"]


def test_classify_rejects_garbage(capsys):
    code, _, err = run(capsys, "classify", "not an element")
    assert code == 2
    assert err.startswith("error:")


def test_extensions_lists_symmetries(capsys):
    code, out, _ = run(capsys, "extensions", "n=5;2>4")
    assert code == 0
    assert out.splitlines() == ["g^2", "h*g^0"]


def test_extensions_of_a_non_isometry_is_empty(capsys):
    code, out, _ = run(capsys, "extensions", "n=5;1>1,2>2,3>5")
    assert code == 0
    assert out == ""


def test_factorize_round_trip(capsys):
    code, out, _ = run(capsys, "factorize", "odi", "n=4;1>2,3>4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("word=")
    assert lines[1] == "roundtrip=PASS"


def test_factorize_json_matches_the_library(capsys):
    from cycleiso import PartialPerm, word_text

    p = PartialPerm.parse("n=5;2>1,4>3,5>4")
    code, out, _ = run(capsys, "factorize", "opdi", "n=5;2>1,4>3,5>4", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["word"] == word_text(factorize(p, "opdi"))
    assert payload["roundtrip"] is True


def test_factorize_non_member_is_invalid_input(capsys):
    code, _, err = run(capsys, "factorize", "odi", "n=4;1>2,2>1")
    assert code == 2
    assert err.startswith("error:")


def test_gens_csv(capsys):
    code, out, _ = run(capsys, "gens", "opdi", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name,element"
    gens = standard_generators("opdi", 5)
    assert lines[1:] == [f"{name},{p}" for name, p in gens]


def test_rank_plain(capsys):
    code, out, _ = run(capsys, "rank", "opdi", "5")
    assert code == 0
    assert out == "rank=4\n"


def test_rank_certified(capsys):
    code, out, _ = run(capsys, "rank", "opdi", "5", "--certify")
    assert code == 0
    assert out == "rank=4 CERTIFIED\n"


def test_rank_certify_n3_uses_the_exhaustive_search(capsys):
    code, out, _ = run(capsys, "rank", "mdi", "3", "--certify", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["rank"] == 3
    assert payload["certified"] is True
    assert payload["requirements"][0]["description"] == "exhaustive minimal-set search"


def test_rank_json_carries_requirements(capsys):
    code, out, _ = run(capsys, "rank", "odi", "5", "--certify", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["certified"] is True
    assert len(payload["requirements"]) == 9
    assert all(r["satisfied"] for r in payload["requirements"])


def test_verify_quick_run(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 13
    assert all(" PASS " in line for line in lines[:-1])
    assert lines[-1] == "all 12 criteria passed"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["passed"] is True
    assert len(payload["criteria"]) == 12
    assert [c["number"] for c in payload["criteria"]] == list(range(1, 13))


def test_verify_rejects_tiny_cap(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "2")
    assert code == 2
    assert err.startswith("error:")
