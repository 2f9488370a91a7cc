import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from orthomoments.algebra import N, RationalFunctionN
from orthomoments.cli import Request, from_json, main, parse_matrix, render_matrix, run, to_json
from orthomoments.errors import InvalidExponent, ParseError
from orthomoments.integrator import integrate
from orthomoments.powermatrix import make_power_matrix as P


def test_parse_grid_and_json():
    assert parse_matrix("1 1\n1 1") == P([[1, 1], [1, 1]])
    assert parse_matrix("[[2,0,0],[0,2,0],[0,0,2]]") == P([[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert parse_matrix("  2 0; 0 2\n") == P([[2, 0], [0, 2]])


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_matrix("1 x")
    assert (exc.value.line, exc.value.column) == (1, 3)
    with pytest.raises(ParseError) as exc:
        parse_matrix("1 1\n2 2.5")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(ParseError):
        parse_matrix("[[1, 2]")
    with pytest.raises(ParseError):
        parse_matrix("[[1.5]]")
    with pytest.raises(ParseError):
        parse_matrix("   ")
    with pytest.raises(InvalidExponent):
        parse_matrix("-1")


grids = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 9), min_size=c, max_size=c), min_size=1, max_size=5)
)


@given(grids)
def test_parse_render_round_trip(grid):
    m = P(grid)
    assert parse_matrix(render_matrix(m)) == m
    assert parse_matrix(json.dumps(grid)) == m


def test_json_reconstructs_value():
    for grid in ([[1, 1], [1, 1]], [[2, 0, 0], [0, 2, 0], [0, 0, 2]], [[1]], [[0]]):
        f = integrate(P(grid))
        obj = json.loads(json.dumps(to_json(f, 3)))
        assert from_json(obj) == f
        assert obj["validFromN"] == 3


def test_symbolic_output(capsys):
    assert main(["--matrix", "1 1\n1 1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["-1/((N-1)N(N+2))", "valid for N >= 2"]


def test_eval_output(capsys):
    assert main(["--matrix", "[[2,0,0],[0,2,0],[0,0,2]]", "--eval", "5"]) == 0
    assert capsys.readouterr().out.strip() == "19/1890"


def test_matrix_from_file(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 0 0\n0 2 0\n0 0 2\n")
    assert main(["--matrix", str(path), "--format", "expanded"]) == 0
    first = capsys.readouterr().out.splitlines()[0]
    assert first == "(N^2+3N-2)/(N^5+3N^4-8N^3-12N^2+16N)"


def test_json_format(capsys):
    assert main(["--matrix", "1 1; 1 1", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["factored"] == "-1/((N-1)N(N+2))"
    assert obj["validFromN"] == 2
    assert from_json(obj) == RationalFunctionN(-1, (N - 1) * N * (N + 2))


@pytest.mark.parametrize("method", ["auto", "recursion", "two-vector", "ullah"])
def test_methods_agree(method, capsys):
    assert main(["--matrix", "1 1; 1 1", "--method", method]) == 0
    assert capsys.readouterr().out.startswith("-1/((N-1)N(N+2))")


def test_verify_pass(capsys):
    assert main(["--matrix", "2", "--eval", "5", "--mc-samples", "200000", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "exact at N=5: 1/5" in out
    assert "PASS" in out


def test_verify_fail_exit_code(capsys):
    # a deliberately wrong claim: <[[2]]> is not 1/(N+1)
    req = Request(matrix=P([[2]]), mode="verify", eval_n=5, mc_samples=100_000, seed=1)
    import orthomoments.cli as cli

    real = cli._symbolic
    cli._symbolic = lambda r: (RationalFunctionN(1, N + 1), 1)
    try:
        assert run(req) == 1
    finally:
        cli._symbolic = real
    assert "FAIL" in capsys.readouterr().out


def test_unitary_mode(capsys):
    assert main(["--unitary", "--matrix", "4 0"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "3/(4N(N+1))"
    assert main(["--unitary", "--matrix", "4 0", "--eval", "1"]) == 0
    assert capsys.readouterr().out.strip() == "3/8"


@pytest.mark.parametrize("argv", [
    ["--matrix", "1 x"],
    ["--unitary", "--matrix", "2 0 0"],
    ["--unitary", "--matrix", "2 0", "--eval", "2", "--mc-samples", "10"],
    ["--matrix", "2", "--mc-samples", "10"],
    ["--matrix", "1 1; 1 1", "--eval", "1"],
    ["--matrix", "2", "--eval", "3", "--mc-samples", "1"],
    ["--method", "nope", "--matrix", "2"],
    ["--matrix", "70"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orthomoments", "--matrix", "2 0; 0 2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "(N+1)/((N-1)N(N+2))"
