import json

import pytest

from bgops.cli import EXIT_ERROR, EXIT_NONZERO, EXIT_ZERO, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out) if out.strip() else None, err


UNIT_Z2 = '{"generators":[{"name":"x","degree":1}],"terms":[{}]}'
UNIT_T1 = '{"generators":[{"name":"y","degree":2}],"terms":[{}]}'


def test_alpha_nonzero(capsys):
    code, doc, _ = run_json(
        capsys, "alpha", "--group", "z2^1", "-k", "2", "--a", "[1,2]", "--b", UNIT_Z2
    )
    assert code == EXIT_NONZERO
    assert doc["zero"] is False
    assert doc["result"]["terms"] == [{"x": 3}]


def test_alpha_zero_result(capsys):
    code, doc, _ = run_json(
        capsys, "alpha", "--group", "t^1", "-k", "1", "--a", "[2]", "--b", UNIT_T1
    )
    assert code == EXIT_ZERO
    assert doc["zero"] is True


def test_alpha_unsupported_pair(capsys):
    code, out, err = run(
        capsys, "alpha", "--group", "su2", "-k", "2", "--a", "[1,1]", "--b", '{"su2":[0]}'
    )
    assert code == EXIT_ERROR
    assert "no computed closed form" in err


def test_alpha_bad_group(capsys):
    code, _, err = run(
        capsys, "alpha", "--group", "d8", "-k", "1", "--a", "[1]", "--b", UNIT_Z2
    )
    assert code == EXIT_ERROR
    assert "not 2 mod 4" in err


def test_alpha_from_file(tmp_path, capsys):
    path = tmp_path / "inputs.json"
    path.write_text(
        json.dumps(
            {"b": {"generators": [{"name": "x", "degree": 1}], "terms": [{"x": 4}]}}
        )
    )
    code, doc, _ = run_json(
        capsys, "alpha", "--group", "z2^1", "-k", "1", "--a", "[3]", "--in", str(path)
    )
    assert code == EXIT_NONZERO
    assert doc["result"]["terms"] == [{"x": 7}]


def test_compose_factors_from_file(tmp_path, capsys):
    path = tmp_path / "inputs.json"
    path.write_text(
        json.dumps(
            {
                "factors": [
                    {"n": 2, "a": [{"gens": [[1]]}]},
                    {"n": 2, "a": [{"gens": [[2]]}]},
                ]
            }
        )
    )
    code, doc, _ = run_json(
        capsys, "compose", "--group", "z2^1", "--in", str(path), "--b", UNIT_Z2
    )
    assert code == EXIT_NONZERO
    assert doc["result"]["terms"] == [{"x": 3}]


def test_phi(capsys):
    code, doc, _ = run_json(
        capsys,
        "phi",
        "--group",
        "z2^1",
        "-n",
        "2",
        "--a",
        '[{"gens":[[1]]}]',
        "--b",
        UNIT_Z2,
    )
    assert code == EXIT_NONZERO
    assert doc["result"]["terms"] == [{"x": 1}]


def test_compose(capsys):
    factors = '[{"n":2,"a":[{"gens":[[1]]}]},{"n":2,"a":[{"gens":[[2]]}]}]'
    code, doc, _ = run_json(
        capsys, "compose", "--group", "z2^1", "--factors", factors, "--b", UNIT_Z2
    )
    assert code == EXIT_NONZERO
    assert doc["result"]["terms"] == [{"x": 3}]


def test_acount(capsys):
    code, doc, _ = run_json(capsys, "acount", "--rows", "3", "--cols", "1,2", "--mode", "exact")
    assert code == EXIT_NONZERO
    assert doc["count"] == 1
    code, doc, _ = run_json(capsys, "acount", "--rows", "1,1", "--cols", "2")
    assert code == EXIT_ZERO
    assert doc["count"] == 0


def test_witness(capsys):
    code, doc, _ = run_json(capsys, "witness", "--group", "su2", "-k", "1", "--a", "[5]")
    assert code == EXIT_NONZERO
    assert doc["witness"] == {"su2": [0]}
    code, doc, _ = run_json(capsys, "witness", "--group", "su2", "-k", "1", "--a", "[4]")
    assert code == EXIT_ZERO
    assert doc["witness"] is None
    assert doc["certified_trivial"] is True


def test_certify_and_flags_after_subcommand(capsys):
    factors = '[{"n":2,"a":[{"gens":[[1]]}]}]'
    code, doc, _ = run_json(
        capsys, "certify", "--target", "AutTwisted", "--group", "z2^1", "--factors", factors
    )
    assert code == EXIT_NONZERO
    assert doc["version"] == "v1"
    assert doc["target"] == "AutTwisted"
    assert doc["N"] == 1
    assert doc["degree"] == 0
    # the json flag may come after the subcommand as well
    code2 = main(
        ["certify", "--target", "AutTwisted", "--group", "z2^1", "--factors", factors, "--json"]
    )
    out = capsys.readouterr().out
    assert code2 == EXIT_NONZERO
    assert json.loads(out)["target"] == "AutTwisted"


def test_certify_hypothesis_violation(capsys):
    factors = '[{"n":2,"a":[{"gens":[[1]]}]}]'
    code, _, err = run(
        capsys, "certify", "--target", "AffF2", "--group", "t^1", "--factors", factors
    )
    assert code == EXIT_ERROR
    assert "elementary abelian" in err


def test_family(capsys):
    code, doc, _ = run_json(capsys, "family", "--u", "1,2", "--f", "1,2")
    assert code == EXIT_NONZERO
    assert doc["N"] == 2
    assert len(doc["certificates"]) == 7
    code, _, err = run(capsys, "family", "--u", "1,3", "--f", "1,2")
    assert code == EXIT_ERROR
    assert "share a 1" in err


def test_stable_image(capsys):
    factors = '[{"n":2,"a":[{"gens":[[1]]}]}]'
    code, doc, _ = run_json(capsys, "stable-image", "--factors", factors, "--k-degree", "1")
    assert code == EXIT_NONZERO
    assert doc["L"] == 2
    assert doc["image"] == [{"gens": [[1]]}]


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "--json", "oracle-check", "--degree-bound", "2")
    assert code == EXIT_NONZERO
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert all(line["pass"] for line in lines)
    names = {line["check"] for line in lines}
    assert "orbit_census" in names
    assert "compsum_vs_closed_form" in names
    assert "t3_identity" in names


def test_t3_verify_command(capsys):
    code, doc, _ = run_json(capsys, "t3-verify", "--n1", "2", "--n2", "2")
    assert code == EXIT_NONZERO
    assert doc["pass"] is True


def test_missing_input_is_an_error(capsys):
    code, _, err = run(capsys, "alpha", "--group", "z2^1", "-k", "1", "--b", UNIT_Z2)
    assert code == EXIT_ERROR
    assert "via --in" in err
