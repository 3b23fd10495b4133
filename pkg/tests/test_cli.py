import json

from lensknots.cli import run
from lensknots.families import FamilyInstance, instantiate
from lensknots.surgery import link_to_json, unknot, whitehead


def out_of(capsys):
    captured = capsys.readouterr()
    return captured.out, captured.err


def test_family_plain(capsys):
    assert run(["family", "--id", "V", "--k", "-1"]) == 0
    out, _ = out_of(capsys)
    assert "space: L(10,3)" in out
    assert "s=2" in out
    assert "monodromy x^5 y" in out
    assert "pseudo-Anosov" in out
    assert "surgery: whitehead(-2, -5), core component 0" in out


def test_family_vi_plain(capsys):
    assert run(["family", "--id", "VI", "--r", "7", "--q", "2"]) == 0
    out, _ = out_of(capsys)
    assert "space: L(7,2)" in out
    assert "fibered: no" in out
    assert "grid index: 1" in out


def test_family_json_round_trip(capsys):
    assert run(["family", "--id", "III", "--k", "-2", "--json"]) == 0
    out, _ = out_of(capsys)
    assert FamilyInstance.from_dict(json.loads(out)) == instantiate("III", -2)


def test_family_flag_mismatches(capsys):
    assert run(["family", "--id", "I"]) == 2
    assert run(["family", "--id", "VI", "--k", "3"]) == 2
    assert run(["family", "--id", "I", "--k", "1", "--r", "5"]) == 2
    _, err = out_of(capsys)
    assert "error:" in err


def test_verify_small_range(capsys):
    assert run(["verify", "--families", "I,II", "--k-range", "-2..2"]) == 0
    out, _ = out_of(capsys)
    lines = out.strip().splitlines()
    assert len(lines) == 9  # 2 families x 4 nonzero k, plus the tally
    assert all(line.startswith("ok ") for line in lines[:-1])
    assert lines[-1] == "checked 8 instances: all ok"


def test_verify_jobs_byte_identical(capsys):
    assert run(["verify", "--families", "all", "--k-range", "1..3"]) == 0
    solo, _ = out_of(capsys)
    assert run(["verify", "--families", "all", "--k-range", "1..3",
                "--jobs", "2"]) == 0
    pooled, _ = out_of(capsys)
    assert solo == pooled


def test_verify_usage_errors(capsys):
    assert run(["verify", "--families", "IX", "--k-range", "1..2"]) == 2
    assert run(["verify", "--k-range", "whatever"]) == 2
    assert run(["verify", "--k-range", "0..0"]) == 2
    assert run(["verify", "--k-range", "1..2", "--jobs", "0"]) == 2
    out, err = out_of(capsys)
    assert out == "" and err.count("error:") == 4


def test_homology_closed(tmp_path, capsys):
    path = tmp_path / "w.json"
    path.write_text(link_to_json(whitehead("-3", "-4")))
    assert run(["homology", "--link", str(path)]) == 0
    out, _ = out_of(capsys)
    assert "H1 = Z/12" in out
    assert "core order of component 0: 3" in out
    assert "core order of component 1: 4" in out


def test_homology_unfilled_and_infinite(tmp_path, capsys):
    path = tmp_path / "half.json"
    path.write_text(link_to_json(whitehead("-3", None)))
    assert run(["homology", "--link", str(path)]) == 0
    out, _ = out_of(capsys)
    assert "core orders: undefined, components 1 are unfilled" in out

    path.write_text(link_to_json(unknot("0")))
    assert run(["homology", "--link", str(path)]) == 0
    out, _ = out_of(capsys)
    assert "H1 = Z" in out
    assert "core order of component 0: infinite" in out


def test_homology_file_errors(tmp_path, capsys):
    assert run(["homology", "--link", str(tmp_path / "absent.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": 99}')
    assert run(["homology", "--link", str(bad)]) == 2
    _, err = out_of(capsys)
    assert err.count("error:") == 2


def test_mcg_identity(capsys):
    assert run(["mcg", "--word", ""]) == 0
    out, _ = out_of(capsys)
    assert "word: (identity)" in out
    assert "matrix: [[1, 0], [0, 1]]" in out
    assert "class: periodic (order 1)" in out
    assert "bundle H1: Z^3" in out
    assert "conjugacy invariant: identity" in out


def test_mcg_word(capsys):
    assert run(["mcg", "--word", "x^5 y"]) == 0
    out, _ = out_of(capsys)
    assert "trace: -3" in out
    assert "class: pseudo-Anosov (trace -3)" in out
    assert "conjugacy invariant: LR" in out


def test_grid_success(capsys):
    assert run(["grid", "--r", "5", "--q", "1", "--da", "2", "--db", "3"]) == 0
    out, _ = out_of(capsys)
    assert "witness qdot=1" in out
    assert "sequence: 0 1 2 3 4 0" in out


def test_grid_failure_and_usage(capsys):
    assert run(["grid", "--r", "7", "--q", "1", "--da", "2", "--db", "4"]) == 1
    out, _ = out_of(capsys)
    assert out.strip() == "FAILURE"
    assert run(["grid", "--r", "6", "--q", "3", "--da", "2", "--db", "3"]) == 2


def test_enum_graphs(capsys):
    assert run(["enum-graphs", "--t", "2", "--max-parallel", "3",
                "--require-max"]) == 0
    out, _ = out_of(capsys)
    lines = out.strip().splitlines()
    assert lines[0] == "s=3 t=2 arcs=(3,0,0)"
    assert lines[-1] == "count: 4"
    assert run(["enum-graphs", "--t", "2", "--max-parallel", "2"]) == 0
    out, _ = out_of(capsys)
    assert out.strip().splitlines()[-1] == "count: 5"


def test_bad_subcommand_and_help(capsys):
    assert run(["no-such-command"]) == 2
    assert run([]) == 2
    assert run(["--help"]) == 0
    out, _ = out_of(capsys)
    assert "family" in out and "enum-graphs" in out
