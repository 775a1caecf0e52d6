import json

import pytest

from sylowrank.cli import (
    EXIT_CAP,
    EXIT_MALFORMED,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    main,
    parse_manifest,
)
from sylowrank.errors import MalformedInput
from sylowrank.serialize import dumps, load
from sylowrank.groups import trivial_group


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_order(capsys):
    code, out, _ = run(capsys, "construct", "--family", "sp", "--n", "4", "--q", "3")
    assert code == EXIT_OK
    assert "order 128" in out.splitlines()


def test_construct_round_trip(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "construct", "--family", "sl", "--n", "4", "--q", "3",
                     "--out", str(path))
    assert code == EXIT_OK
    assert dumps(load(str(path))) == path.read_text()


def test_construct_even_q(capsys):
    code, _, err = run(capsys, "construct", "--family", "sl", "--n", "4", "--q", "4")
    assert code == EXIT_UNSUPPORTED and "error" in err


def test_construct_cap(capsys):
    code, _, _ = run(capsys, "construct", "--family", "sp", "--n", "4", "--q", "3", "--cap", "64")
    assert code == EXIT_CAP


def test_rank(capsys):
    code, out, _ = run(capsys, "rank", "--family", "sl", "--n", "4", "--q", "3")
    assert code == EXIT_OK and "rank 3" in out.splitlines()
    code, out, _ = run(capsys, "rank", "--normal", "--family", "sl", "--n", "4", "--q", "3")
    assert "nrank 2" in out.splitlines()


def test_rank_json_and_base(capsys):
    code, out, _ = run(capsys, "rank", "--normal", "--base", "d,3", "--levels", "1",
                       "--format", "json")
    d = json.loads(out)
    assert code == EXIT_OK and (d["rank"], d["nrank"]) == (4, 4)


def test_rank_trivial_file(tmp_path, capsys):
    path = tmp_path / "one.txt"
    path.write_text(dumps(trivial_group()))
    code, out, _ = run(capsys, "rank", "--file", str(path))
    assert code == EXIT_OK and "rank 0" in out.splitlines()


def test_rank_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("not a group\n")
    code, _, _ = run(capsys, "rank", "--file", str(path))
    assert code == EXIT_MALFORMED


def test_rank_needs_source(capsys):
    code, _, _ = run(capsys, "rank")
    assert code == EXIT_MALFORMED


def test_verify_manifest(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("# one row\nsp 6 3\n")
    code, out, err = run(capsys, "verify-table", str(path))
    row = json.loads(out)
    assert code == EXIT_OK and (row["rank"], row["nrank"]) == (3, 3) and row["match"]
    assert err.startswith("PASS")


def test_verify_manifest_corrupted(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("sp 6 3 3 2\n")
    code, _, _ = run(capsys, "verify-table", str(path), "--format", "text")
    assert code == EXIT_MISMATCH


def test_verify_manifest_over_cap(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("sp 6 3\n")
    code, out, _ = run(capsys, "verify-table", str(path), "--max-order", "512")
    assert code == EXIT_CAP and json.loads(out)["error"] == "cap"


def test_verify_small_all_workers(capsys):
    code1, out1, _ = run(capsys, "verify-table", "--all", "--max-order", "128")
    code2, out2, _ = run(capsys, "verify-table", "--all", "--max-order", "128", "--workers", "2")

    def strip(text):
        rows = [json.loads(line) for line in text.splitlines()]
        for r in rows:
            r.pop("millis")
        return rows

    assert code1 == code2 == EXIT_OK
    assert strip(out1) == strip(out2)


def test_parse_manifest():
    rows = parse_manifest("sl 4 3\n\n  # note\nsp 4 5 2 2  # trailing\n")
    assert [r.spec.label() for r in rows] == ["sl 4 3", "sp 4 5"]
    assert rows[1].expected.rank == 2
    with pytest.raises(MalformedInput):
        parse_manifest("sl 4\n")
    with pytest.raises(MalformedInput):
        parse_manifest("sl four 3\n")


def test_counts_vn(capsys):
    code, out, _ = run(capsys, "counts", "--vn", "2", "3")
    assert code == EXIT_OK and "v = [1, 3, 17]" in out
    code, out, _ = run(capsys, "counts", "--vn", "2", "1", "--format", "json")
    assert json.loads(out)["v"] == [1]


def test_counts_base(capsys):
    code, out, _ = run(capsys, "counts", "--base", "q8,2", "--levels", "1", "--format", "json")
    (row,) = json.loads(out)["levels"]
    assert code == EXIT_OK
    assert row["d"] == row["formula"] == 11
    assert row["coset"] == row["coset_expected"] == 8


def test_bad_workers(capsys):
    code, _, _ = run(capsys, "verify-table", "--all", "--workers", "0")
    assert code == EXIT_MALFORMED
