import json

import pytest

from vecasp.cli import EXIT_NO_MODEL, EXIT_OK, EXIT_USAGE, main
from vecasp.parser import read_program
from vecasp.solver import TRACE_HEADER

from conftest import P0_TEXT


@pytest.fixture
def p0_file(tmp_path):
    path = tmp_path / "p0.lp"
    path.write_text(P0_TEXT)
    return str(path)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_solve_prints_model(p0_file, capsys):
    assert main(["solve", p0_file]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "{p,q}"


def test_solve_json(p0_file, capsys):
    assert main(["solve", p0_file, "--json", "--no-timing", "--mode", "stable"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out == {"model": ["p", "q"], "stable": True, "tries": 1, "seconds": 0.0}


def test_solve_without_model(tmp_path, capsys):
    path = write(tmp_path, "odd.lp", "a :- not a.\n")
    assert main(["solve", path, "--max-try", "3", "--max-itr", "10"]) == EXIT_NO_MODEL
    assert "no model" in capsys.readouterr().err
    assert main(["solve", path, "--max-try", "2", "--json"]) == EXIT_NO_MODEL
    assert json.loads(capsys.readouterr().out)["model"] is None


def test_parse_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.lp", "p :- q\n")
    assert main(["solve", path]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_missing_file_and_bad_flags(tmp_path):
    assert main(["solve", str(tmp_path / "nope.lp")]) == EXIT_USAGE
    assert main(["solve"]) == EXIT_USAGE
    assert main(["solve", "x.lp", "--mode", "wellfounded"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE


def test_trace_file(p0_file, tmp_path):
    trace = tmp_path / "trace.csv"
    assert main(["solve", p0_file, "--trace", str(trace), "--seed", "3"]) == EXIT_OK
    lines = trace.read_text().splitlines()
    assert lines[0] == ",".join(TRACE_HEADER)
    assert len(lines) >= 2


def test_parallel_restarts(p0_file, capsys):
    assert main(["solve", p0_file, "--parallel-restarts", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "{p,q}"


def test_oracle_semantics(tmp_path, capsys):
    path = str(tmp_path / "p4.lp")
    assert main(["gen", "p4", "--n", "4", "-o", path]) == EXIT_OK
    assert main(["oracle", path, "--semantics", "supported"]) == EXIT_OK
    assert len(json.loads(capsys.readouterr().out)) == 5
    assert main(["oracle", path]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == [["a0", "a1", "a2", "a3", "a4"]]
    assert main(["oracle", path, "--method", "guess"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == [["a0", "a1", "a2", "a3", "a4"]]
    assert main(["oracle", path, "--method", "guess", "--semantics", "supported"]) == EXIT_USAGE


def test_oracle_ignore_constraints(tmp_path, capsys):
    path = write(tmp_path, "c.lp", "a :- not b.\nb :- not a.\n:- a.\n")
    main(["oracle", path])
    assert json.loads(capsys.readouterr().out) == [["b"]]
    main(["oracle", path, "--ignore-constraints"])
    assert len(json.loads(capsys.readouterr().out)) == 2


def test_enumerate(tmp_path, capsys):
    path = str(tmp_path / "g.lp")
    assert main(["gen", "3col", "--edges", "a-b,a-c,b-c,b-d,d-c", "-o", path]) == EXIT_OK
    assert main(["enumerate", path, "--limit", "10", "--json", "--seed", "1"]) == EXIT_OK
    models = json.loads(capsys.readouterr().out)
    assert len(models) == 6 and len({tuple(m) for m in models}) == 6


def test_precompute_command(tmp_path, capsys):
    src = str(tmp_path / "p5.lp")
    out = str(tmp_path / "p5_reduced.lp")
    main(["gen", "p5", "--n", "10", "--k", "10", "-o", src])
    assert main(["precompute", src, "-o", out]) == EXIT_OK
    report = capsys.readouterr().out
    assert "false_atoms: 10" in report
    assert read_program(out).n == 11


def test_gen_families(tmp_path, capsys):
    assert main(["gen", "3col", "--cycle", "5"]) == EXIT_OK
    assert capsys.readouterr().out.count(":-") > 0
    path = str(tmp_path / "hc.lp")
    assert main(["gen", "hc", "--vertices", "3", "--edges", "1-2,2-3,3-1", "-o", path]) == EXIT_OK
    assert read_program(path).n == 12
    assert main(["gen", "3col"]) == EXIT_USAGE
    assert main(["gen", "hc", "--vertices", "3", "--edges", "1-x"]) == EXIT_USAGE
    assert main(["gen", "p4", "--n", "3"]) == EXIT_USAGE


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "p4", "--sizes", "2", "4", "--runs", "2", "-o", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0].startswith("instance,")
    assert len(lines) == 3
    assert main(["bench", "cycle3col", "--sizes", "10", "--runs", "0"]) == EXIT_USAGE


def test_seeded_output_is_reproducible(p0_file, capsys):
    runs = []
    for _ in range(2):
        main(["solve", p0_file, "--seed", "42", "--json", "--no-timing"])
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]
