"""Command-line surface: outputs, formats, exit codes."""

import json

import pytest

from magiccount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_cycle_small_rows(capsys):
    code, out, _ = run(capsys, "count", "--cycle", "-n", "1", "-k", "2", "--s-max", "3", "--format", "csv")
    assert code == 0
    assert out == "s,count\n0,1\n1,2\n2,4\n3,6\n"


def test_count_line_convention_rows(capsys):
    code, out, _ = run(capsys, "count", "--line", "-n", "0", "-m", "2", "--s-max", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,1", "1,2", "2,3"]


def test_count_loop_free_odd_cycle(capsys):
    code, out, _ = run(capsys, "count", "--cycle", "-n", "3", "-k", "0,0,0", "--s-max", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,1", "1,0"]


def test_count_brute_agrees_with_fast_path(capsys):
    code, fast, _ = run(capsys, "count", "--cycle", "-n", "2", "-k", "1,2", "--s-max", "5", "--format", "csv")
    assert code == 0
    code, brute, _ = run(capsys, "count", "--cycle", "-n", "2", "-k", "1,2", "--s-max", "5", "--brute", "--format", "csv")
    assert code == 0
    assert fast == brute


def test_count_brute_cap_exit_code(capsys):
    code, _, err = run(capsys, "count", "--cycle", "-n", "4", "-k", "2", "--brute", "--s-max", "2")
    assert code == 3
    assert "exceeds caps" in err


def test_count_bad_loop_vector_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "--cycle", "-n", "3", "-k", "1,2")
    assert code == 2
    assert "loop vector" in err


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--n-max", "10")
    assert code == 0
    assert out.count("pass") == 13


def test_verify_single_identity(capsys):
    code, out, _ = run(capsys, "verify", "--id", "inv-eq-mirror1", "--n-max", "6")
    assert code == 0
    assert "inv-eq-mirror1" in out and "6" in out


def test_verify_unknown_identity_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "--id", "unknown")
    assert code == 2


def test_table_line_rows(capsys):
    code, out, _ = run(capsys, "table", "--el", "--n-max", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == [
        "0,1",
        "1,1",
        "2,1;4;1",
        "3,1;16;37;16;1",
        "4,1;48;351;656;351;48;1",
    ]


def test_table_cycle_single_rows(capsys):
    code, out, _ = run(capsys, "table", "--ec", "-n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "3,1;8;15;8;1"
    code, out, _ = run(capsys, "table", "--ec", "-n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "2,1;1"


def test_fit_match_cases(capsys):
    code, out, _ = run(capsys, "fit", "--cycle", "-n", "3", "-k", "1,1,1")
    assert code == 0
    assert "1/16" in out and "MATCH" in out

    code, out, _ = run(capsys, "fit", "--cycle", "-n", "2", "-k", "1,1")
    assert code == 0
    assert "MATCH" in out

    code, out, _ = run(capsys, "fit", "--cycle", "-n", "1", "-k", "2")
    assert code == 0
    assert "1/8" in out and "MATCH" in out


def test_fit_requires_loops(capsys):
    code, _, err = run(capsys, "fit", "--cycle", "-n", "2", "-k", "1,0")
    assert code == 2
    assert "loop" in err


def test_series_by_vertex_count(capsys):
    code, out, _ = run(capsys, "series", "--line", "-s", "4", "--order", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,5", "1,35"]
    code, out, _ = run(capsys, "series", "--cycle", "-s", "4", "--order", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,5", "1,9"]


def test_series_by_magic_sum(capsys):
    code, out, _ = run(capsys, "series", "--cycle", "-n", "1", "-k", "2", "--order", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,1", "1,2", "2,4", "3,6"]


def test_series_line_by_magic_sum_is_usage_error(capsys):
    code, _, _ = run(capsys, "series", "--line", "-n", "3", "--order", "3")
    assert code == 2


def test_polytope_vertices_text(capsys):
    code, out, _ = run(capsys, "polytope", "-n", "3")
    assert code == 0
    assert "1/2 1/2 1/2" in out
    assert out.count("\n") == 6  # header plus five vertices


def test_polytope_stable_sets(capsys):
    code, out, _ = run(capsys, "polytope", "-n", "3", "--stable", "--format", "json")
    assert code == 0
    assert json.loads(out)["stable_sets"] == [[], [0], [1], [2]]


def test_polytope_simplex_series(capsys):
    code, out, _ = run(capsys, "polytope", "-n", "3", "--series", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,1", "1,3", "2,7"]


def test_polytope_even_series_is_usage_error(capsys):
    code, _, _ = run(capsys, "polytope", "-n", "4", "--series", "2")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--cycle", "-n", "1", "-k", "2", "--s-max", "3", "--format", "json"),
        ("verify", "--id", "inv-eq-mirror1", "--format", "json"),
        ("table", "--ec", "-n", "3", "--format", "json"),
        ("fit", "--cycle", "-n", "3", "-k", "1,1,1", "--format", "json"),
        ("polytope", "-n", "5", "--format", "json"),
    ],
)
def test_json_output_round_trips(capsys, argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    assert code == 0
    rendered = json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"
    assert rendered == out
