"""Command line tests: grammar round trips, exit codes, json/plain parity,
and the reproduction command with its negative control."""

from __future__ import annotations

import json

from nilorbits import cli, corpus
from nilorbits import partitions as pt


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


def test_bv_dual(capsys):
    code, out, _ = run(capsys, "bv-dual", "[3^3]")
    assert (code, out) == (0, "[3,3,2]")
    code, out, _ = run(capsys, "--json", "bv-dual", "[3,3,1,1,1]")
    assert code == 0 and json.loads(out) == {"partition": "[4,2,2]"}


def test_partition_commands(capsys):
    assert run(capsys, "partition", "transpose", "[3^2,1^4]")[1] == "[6,2,2]"
    assert run(capsys, "partition", "collapse", "[3,1]")[1] == "[2,2]"
    assert run(capsys, "partition", "collapse", "--classical", "[4,1,1]")[1] == "[4,1,1]"
    assert run(capsys, "partition", "expand", "[2,1,1]")[1] == "[2,2]"
    code, out, _ = run(capsys, "partition", "compare", "--order", "lex", "[6,1,1]", "[4,2,2]")
    assert (code, out) == (0, "Greater")
    code, out, _ = run(capsys, "partition", "compare", "[4,1,1]", "[3,3]")
    assert (code, out) == (0, "Incomparable")
    code, out, _ = run(capsys, "partition", "classify", "[2,2,1,1]")
    assert code == 0 and "special_symplectic" in out
    code, out, _ = run(capsys, "--compact", "partition", "transpose", "[3^2,1^4]")
    assert out == "[6,2^2]"


def test_round_trip_everything_printed(capsys):
    for argv in (
        ("bv-dual", "[3,3,1,1,1]"),
        ("partition", "transpose", "[4,1,1]"),
        ("partition", "expand", "[4,1,1]"),
    ):
        _, out, _ = run(capsys, *argv)
        assert pt.format_partition(pt.parse_partition(out)) == out


def test_arthur_commands(capsys):
    psi = "2:3:O#t + 2:1:O#t + 1:1:O#a + 1:1:O#b + 1:1:O#c"
    code, out, _ = run(capsys, "arthur", "eta", "--n", "5", psi)
    assert (code, out) == (0, "[6,2,2]")
    code, out, _ = run(capsys, "arthur", "p-psi", "--n", "4", "3:3:O#t")
    assert (code, out) == (0, "[3,3,3]")
    code, out, _ = run(capsys, "arthur", "classify", "--n", "5", psi)
    assert out.startswith("case2")
    code, out, _ = run(capsys, "arthur", "validate", "--n", "3", "2:3:S#t + 1:1:O#a")
    assert code == 0 and "parity" in out
    code, out, _ = run(capsys, "arthur", "enumerate", "--n", "1")
    assert code == 0 and len(out.splitlines()) == 4


def test_conjecture_command(capsys):
    psi = "2:3:O#t + 1:1:O#a + 1:1:O#b + 1:1:O#c"
    code, out, _ = run(capsys, "conjecture", "check", "--n", "4", "--order", "lex", "[6,1,1]", psi)
    assert code == 0 and out.startswith("ForbiddenPart1")
    code, out, _ = run(capsys, "conjecture", "check", "--n", "4", "[2,2,2,2]", psi)
    assert code == 0 and out.startswith("Allowed")


def test_exponents_commands(capsys):
    assert run(capsys, "exponents", "speh", "--b", "2")[1] == "{-1/2, 1/2}"
    assert run(capsys, "exponents", "twist", "{-1/2,1/2}", "--shift=-1")[1] == "{-3/2, -1/2}"
    assert run(capsys, "exponents", "sq-int", "{-3/2,-1/2}")[1] == "true"
    assert run(capsys, "exponents", "chain", "--b", "2", "{1/4,-1/4}")[1] == "true"
    code, _, err = run(capsys, "exponents", "chain", "--b", "1", "{3/5}")
    assert code == 1 and "(-1/2, 1/2)" in err


def test_descent_commands(capsys):
    code, out, _ = run(
        capsys, "descent", "analyze", "--case", "I", "--a", "2", "--b", "1",
        "--m", "2", "--r", "2", "--generic",
    )
    assert code == 0
    assert out.splitlines() == [
        "k=0: Survives",
        "k=1: VanishCuspidalSupport",
        "k=2: VanishPartitionBound ([8] > [4,2,2] lex)",
    ]
    code, out, _ = run(
        capsys, "--json", "descent", "profile", "--case", "II", "--a", "2",
        "--b", "1", "--m", "1", "--i", "1",
    )
    payload = json.loads(out)
    assert payload["twist"] == "-1" and payload["remainder"] == "tau-sigma-eisenstein"


def test_roots_commands(capsys):
    code, out, _ = run(capsys, "roots", "vp2", "[2,2]")
    assert code == 0 and out.splitlines() == ["2e1", "2e2", "e1+e2"]
    code, out, _ = run(capsys, "--json", "roots", "sequences", "--k", "1", "--b", "1")
    payload = json.loads(out)
    assert payload["n"] == 3 and payload["rows"][0]["x"] == ["e1+e3"]
    code, out, _ = run(capsys, "roots", "exchange-verify", "--k", "1", "--b", "1")
    assert code == 0 and out.count("pass") == 2


def test_error_exit_codes(capsys):
    code, _, err = run(capsys, "partition", "transpose", "[3,oops]")
    assert code == 1 and "oops" in err
    code, _, err = run(capsys, "bv-dual", "[4,3]")
    assert code == 1
    code, _, err = run(capsys, "partition", "collapse", "[6,1,1,1,1]")
    assert code == 2 and "not unique" in err
    assert run(capsys, "frobnicate")[0] == 1  # unknown subcommand
    assert run(capsys, "--help")[0] == 0


def test_json_plain_parity(capsys):
    for argv, key in (
        (("bv-dual", "[3^3]"), "partition"),
        (("partition", "transpose", "[4,1,1]"), "partition"),
        (("partition", "compare", "[2,2]", "[2,2]"), "relation"),
    ):
        _, plain, _ = run(capsys, *argv)
        _, machine, _ = run(capsys, "--json", *argv)
        assert json.loads(machine)[key] == plain


def test_paper_reproduce_filter(capsys):
    code, out, _ = run(capsys, "paper", "reproduce", "--filter", "vp2")
    assert code == 0
    assert "vp2/sanity" in out and "eta/" not in out
    code, _, err = run(capsys, "paper", "reproduce", "--filter", "nomatch")
    assert code == 1 and "nomatch" in err


def test_paper_reproduce_json_parity(capsys):
    code, plain, _ = run(capsys, "paper", "reproduce", "--filter", "exponent")
    code_j, machine, _ = run(capsys, "--json", "paper", "reproduce", "--filter", "exponent")
    assert code == code_j == 0
    records = json.loads(machine)
    assert all(r["ok"] for r in records)
    assert len(records) == len(plain.splitlines()) - 1  # minus the summary line
    for record in records:
        assert f"{record['id']}" in plain


def test_paper_reproduce_negative_control(tmp_path, capsys):
    cases = corpus.build_corpus()
    raw = json.loads(corpus.corpus_to_json(cases))
    keep = [r for r in raw if r["kind"] in ("eta", "collapse-step")][:10]
    keep[0]["expected"] = "[999]"
    bad = tmp_path / "corrupted.json"
    bad.write_text(json.dumps(keep), encoding="utf-8")
    code, out, _ = run(capsys, "paper", "reproduce", "--corpus", str(bad))
    assert code == 2 and "FAIL" in out
    good = tmp_path / "good.json"
    good.write_text(json.dumps(keep[1:]), encoding="utf-8")
    assert run(capsys, "paper", "reproduce", "--corpus", str(good))[0] == 0
    broken = tmp_path / "broken.json"
    broken.write_text("[{\"id\": \"x\"}]", encoding="utf-8")
    assert run(capsys, "paper", "reproduce", "--corpus", str(broken))[0] == 1
