import json

import pytest
from click.testing import CliRunner

from periodic_partitions import families
from periodic_partitions.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_help(runner):
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for cmd in ("enumerate", "count", "verify", "map"):
        assert cmd in result.output


def test_enumerate(runner):
    result = runner.invoke(main, ["enumerate", "--n", "8", "--family", "cp:r=3,j=1"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["7,1", "4,4", "4,1,1,1,1", "1,1,1,1,1,1,1,1"]


def test_enumerate_generator(runner):
    args = ["enumerate", "--n", "12", "--family", "rp:r=6,s=1+3"]
    plain = runner.invoke(main, args)
    gen = runner.invoke(main, args + ["--generator"])
    assert plain.exit_code == gen.exit_code == 0
    assert plain.output == gen.output
    assert len(plain.output.splitlines()) == 5


def test_enumerate_generator_wrong_family(runner):
    result = runner.invoke(main, ["enumerate", "--n", "5", "--family", "cp:r=3",
                                  "--generator"])
    assert result.exit_code == 2


@pytest.mark.parametrize("args", [
    ["enumerate", "--n", "5", "--family", "zz:r=3"],
    ["enumerate", "--n", "61", "--family", "cp:r=3"],
    ["enumerate", "--n", "-1", "--family", "cp:r=3"],
    ["count", "--family", "cp:r=3", "--n-to", "100"],
    ["verify", "--theorem", "5"],
    ["verify", "--theorem", "3", "--s", "1+2"],
    ["verify", "--theorem", "3", "--r", "3", "--s", "2+1"],
    ["verify", "--theorem", "1", "--n-max", "99"],
    ["map", "--direction", "forward", "--r", "3", "--partition", "1,3"],
    ["map", "--direction", "forward", "--r", "1", "--partition", "3"],
])
def test_usage_errors_exit_2(runner, args):
    assert runner.invoke(main, args).exit_code == 2


def test_count(runner):
    result = runner.invoke(main, ["count", "--family", "rp:r=3,s=1+2",
                                  "--n-from", "8", "--n-to", "10"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "n,count" and lines[-1] == "10,10"


def test_verify_csv_stdout(runner):
    result = runner.invoke(main, ["verify", "--theorem", "3", "--r", "6", "--s", "1+3",
                                  "--variant", "free", "--n-max", "12"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "theorem,params,n,m,left,right,match"
    assert "3,r=6;s=1+3;variant=free,12,,5,5,true" in result.stdout


def test_verify_json_file(runner, tmp_path):
    out = tmp_path / "t4.json"
    result = runner.invoke(main, ["verify", "--theorem", "4", "--r", "2", "--n-max", "6",
                                  "--format", "json", "--out", str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text())["passed"] is True


def test_verify_files_byte_identical(runner, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert runner.invoke(main, ["verify", "--n-max", "8", "--r", "3",
                                    "--out", str(p)]).exit_code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_mismatch_exits_1(runner, monkeypatch):
    real = families.is_cp_pattern

    def broken(lam, pattern, variant=families.Variant.FREE):
        return real(lam, pattern, variant) and lam != (1,) * len(lam)

    monkeypatch.setattr(families, "is_cp_pattern", broken)
    result = runner.invoke(main, ["verify", "--theorem", "3", "--r", "3", "--s", "1+2",
                                  "--variant", "free", "--n-max", "6"])
    assert result.exit_code == 1
    assert ",false" in result.stdout


def test_map_forward(runner):
    result = runner.invoke(main, ["map", "--direction", "forward", "--r", "6",
                                  "--partition", "15,9,7,3,1"])
    assert result.exit_code == 0
    assert result.output.strip() == "7,6,6,4,4,4,2,1,1"


def test_map_inverse_trace(runner):
    result = runner.invoke(main, ["map", "--direction", "inverse", "--r", "6",
                                  "--partition", "12,10,10,9,9,9,7,6,6,3,3,3,2,1,1",
                                  "--trace"])
    assert result.exit_code == 0
    assert "  sequence: 1 1 6 6 6 6 6 6 6 6 6 3" in result.output
    assert result.output.splitlines()[-1] == "result: 21,15,15,13,9,9,7,1,1"


def test_map_trace_error_prints_partial(runner):
    result = runner.invoke(main, ["map", "--direction", "inverse", "--r", "3",
                                  "--partition", "3,3,3", "--trace"])
    assert result.exit_code == 2
    assert "group 1: 3,3,3" in result.output
