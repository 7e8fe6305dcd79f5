import pytest
from click.testing import CliRunner

from affschur import cli, yangian


@pytest.fixture
def run():
    runner = CliRunner()
    return lambda *args: runner.invoke(cli.main, list(args))


def test_compose_examples(run):
    assert run("compose", "merge(1,1)", "split(1,1)").output.strip() == "2*xi([[2]], 1)"
    result = run("compose", "split(1,1)", "merge(1,1)")
    assert result.output.strip() == "xi([[0, 1], [1, 0]], 1) + xi([[1, 0], [0, 1]], 1)"
    assert run("compose", "identity(1,1)", "identity(1,1)").output.strip() == "xi([[1, 0], [0, 1]], 1)"


def test_compose_accepts_serialized_terms(run):
    result = run("compose", "xi([[1, 1]], 1)", "xi([[1], [1]], x1)")
    assert result.exit_code == 0
    assert result.output.strip() == "xi([[2]], x1 + x2 + 1)"


def test_compose_errors_exit_2(run):
    assert run("compose", "merge(1,1)", "merge(1,1)").exit_code == 2
    assert run("compose", "nonsense", "merge(1,1)").exit_code == 2
    assert run("compose", "--n", "3", "merge(1,1)", "split(1,1)").exit_code == 2


def test_drinfeld_output(run):
    result = run("drinfeld", "--n", "1", "--r", "1", "--order", "3", "1", "1")
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "series n=1 r=1 order=3",
        "u^-0 [1|1] xi([[1]], 1)",
        "u^-1 [1|1] xi([[1]], 1)",
        "u^-2 [1|1] xi([[1]], x1)",
        "u^-3 [1|1] xi([[1]], x1^2)",
    ]
    assert run("drinfeld", "--n", "1", "--r", "1", "3", "1").exit_code == 2


def test_series_round_trip():
    T = yangian.drinfeld_image(2, 2, 3)
    for key in T.entries:
        text = cli.format_series(T[key], 2, 2)
        assert cli.parse_series(text) == T[key]
        assert cli.format_series(cli.parse_series(text), 2, 2) == text


def test_dims(run):
    lines = run("dims", "--n", "2", "--r", "2", "--degree", "0").output.splitlines()
    assert lines[-1] == "total\t10"


def test_reps_command(run, tmp_path):
    result = run("reps", "(u-1)^2,(u-1)")
    assert result.exit_code == 0
    assert "segments: [(1,2), (1,1)]" in result.output
    assert "A_1(u) = u^2/(u - 1)^2" in result.output
    path = tmp_path / "seq.txt"
    path.write_text("u-2, 1\n")
    assert "segments: [(2,2)]" in run("reps", str(path)).output
    assert run("reps", "u-1, u-2").exit_code == 2
    assert run("reps", "u^2-2, 1").exit_code == 2


def test_verify_suites(run):
    result = run("verify", "rtt", "--n", "2", "--r", "2", "--order", "5")
    assert result.exit_code == 0 and result.output.startswith("PASS rtt")
    result = run("verify", "reps-roundtrip", "--n", "2", "--r", "2", "--roots", "0,1")
    assert result.exit_code == 0
    assert run("verify", "unknown").exit_code == 2


def test_verify_schur_relations_small(run):
    result = run("verify", "schur-relations", "--max-thickness", "1", "--max-degree", "1", "--order", "3")
    assert result.exit_code == 0
    assert "FAIL" not in result.output


def test_deterministic_output(run):
    args = ("drinfeld", "--n", "2", "--r", "2", "--order", "2", "1", "2")
    assert run(*args).output == run(*args).output
