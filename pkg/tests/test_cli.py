import json

import pytest

from freelcs.cli import (
    EX_BUDGET,
    EX_CACHE,
    EX_OK,
    EX_USAGE,
    EX_VERIFY_FAILED,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_hilbert_text(capsys):
    code, out = run(capsys, "hilbert", "--n", "2", "--max-len", "3")
    assert code == EX_OK
    lines = out.splitlines()
    assert lines[0] == "H_2(u,t) ="
    assert lines[-1] == "(4u + 2u^2 + 2u^3)t^3"


def test_hilbert_json_schema(capsys):
    code, out = run(capsys, "hilbert", "--n", "3", "--max-len", "3",
                    "--format", "json")
    assert code == EX_OK
    obj = json.loads(out)
    assert obj["version"] == 1
    cells = {(e["k"], e["l"]): e["dim"] for e in obj["entries"]}
    assert cells[(2, 3)] == 8
    assert cells[(3, 3)] == 8


def test_hilbert_csv(capsys):
    code, out = run(capsys, "hilbert", "--n", "2", "--max-len", "2",
                    "--format", "csv")
    assert code == EX_OK
    assert out.splitlines()[0] == "k,l,dim"
    assert "2,2,1" in out.splitlines()


def test_hilbert_n1(capsys):
    code, out = run(capsys, "hilbert", "--n", "1", "--max-len", "5")
    assert code == EX_OK
    assert out.splitlines()[-1] == "(u)t^5"


def test_deterministic_output(capsys):
    _, first = run(capsys, "hilbert", "--n", "2", "--max-len", "4",
                   "--format", "json")
    _, second = run(capsys, "hilbert", "--n", "2", "--max-len", "4",
                    "--format", "json")
    assert first == second


def test_two_prime_mode_seeded(capsys):
    _, first = run(capsys, "hilbert", "--n", "2", "--max-len", "4",
                   "--field", "two-prime", "--seed", "3", "--format", "json")
    _, second = run(capsys, "hilbert", "--n", "2", "--max-len", "4",
                    "--field", "two-prime", "--seed", "3", "--format", "json")
    assert first == second
    assert len(json.loads(first)["metadata"]["primes"]) == 2


def test_rational_mode(capsys):
    code, out = run(capsys, "hilbert", "--n", "2", "--max-len", "4",
                    "--field", "rational")
    assert code == EX_OK
    assert out.splitlines()[-1] == "(6u + 3u^2 + 4u^3 + 3u^4)t^4"


def test_budget_exit(capsys):
    code = main(["hilbert", "--n", "2", "--max-len", "25"])
    assert code == EX_BUDGET


def test_usage_exits():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "not-a-suite"])
    assert exc.value.code == EX_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["hilbert", "--field", "bogus"])
    assert exc.value.code == EX_USAGE
    assert main([]) == EX_USAGE
    assert main(["hilbert", "--n", "0"]) == EX_USAGE
    assert main(["chars", "--k", "1"]) == EX_USAGE


def test_cache_corruption_exit(tmp_path, capsys):
    cache = str(tmp_path)
    assert main(["hilbert", "--n", "2", "--max-len", "4",
                 "--cache-dir", cache]) == EX_OK
    victim = next(tmp_path.glob("cell_*.bin"))
    victim.write_bytes(b"not a cache file")
    capsys.readouterr()
    assert main(["hilbert", "--n", "2", "--max-len", "4",
                 "--cache-dir", cache]) == EX_CACHE


def test_cache_env_var(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("FREELCS_CACHE_DIR", str(tmp_path))
    assert main(["hilbert", "--n", "2", "--max-len", "3"]) == EX_OK
    assert list(tmp_path.glob("cell_*.bin"))


def test_verify_suites_pass(capsys):
    for argv in (
        ["verify", "theorem-1-3", "--max-len", "6"],
        ["verify", "theorem-1-4", "--max-len", "5"],
        ["verify", "theorem-2-2", "--n", "2", "--max-len", "4"],
        ["verify", "identities", "--n", "3"],
        ["verify", "star-assoc", "--n", "3"],
        ["verify", "lambda2", "--n", "2", "--max-len", "5"],
        ["verify", "oracles", "--n", "2", "--max-len", "6"],
    ):
        code, out = run(capsys, *argv)
        assert code == EX_OK, (argv, out)
        assert "pass" in out


def test_verify_json_report(capsys):
    code, out = run(capsys, "verify", "oracles", "--n", "2", "--max-len",
                    "4", "--format", "json")
    assert code == EX_OK
    obj = json.loads(out)
    assert obj["kind"] == "verification_report"
    assert obj["pass"]
    assert all("expected" in c and "got" in c for c in obj["checks"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    import freelcs.cli as cli

    def broken(args):
        return [{"name": "always fails", "expected": 1, "got": 2,
                 "pass": False}]

    monkeypatch.setitem(cli._SUITES, "oracles", broken)
    code, out = run(capsys, "verify", "oracles")
    assert code == EX_VERIFY_FAILED
    assert "FAIL" in out


def test_chars_text_report(capsys):
    code, out = run(capsys, "chars", "--n", "3", "--k", "3",
                    "--max-len", "5")
    assert code == EX_OK
    assert "dim 8" in out
    assert "(dim 8 at level 3)" in out


def test_chars_trivial_row(capsys):
    code, out = run(capsys, "chars", "--n", "1", "--k", "2", "--max-len",
                    "4")
    assert code == EX_OK
    assert "dim 0" in out
    assert "none" in out


def test_chars_json_report(capsys):
    code, out = run(capsys, "chars", "--n", "2", "--k", "4", "--max-len",
                    "7", "--format", "json")
    assert code == EX_OK
    obj = json.loads(out)
    assert obj["kind"] == "character_report"
    assert obj["fit"]["layers"] == [[3, 4], [2, 5]]
    assert obj["fit"]["ok"]


def test_jobs_flag_matches_serial(tmp_path, capsys):
    _, serial = run(capsys, "hilbert", "--n", "2", "--max-len", "6",
                    "--format", "json")
    _, parallel = run(capsys, "hilbert", "--n", "2", "--max-len", "6",
                      "--jobs", "2", "--cache-dir", str(tmp_path),
                      "--format", "json")
    assert json.loads(serial)["entries"] == json.loads(parallel)["entries"]
