import csv
import io
import json

import pytest
from click.testing import CliRunner

from orbifusion.cli import main, run
from orbifusion.labels import parse_label


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args))


def test_fuse_json_matches_expected_document(runner):
    result = invoke(runner, "fuse", "--level", "1", "u:0:1", "u:0:2")
    assert result.exit_code == 0
    assert result.output.strip() == '{"u:0:0": 1}'


def test_fuse_output_is_order_independent(runner):
    ab = invoke(runner, "fuse", "--level", "3", "t1:2:1", "t2:1:0")
    ba = invoke(runner, "fuse", "--level", "3", "t2:1:0", "t1:2:1")
    assert ab.exit_code == ba.exit_code == 0
    assert ab.output == ba.output  # byte-identical


def test_fuse_csv_and_markdown(runner):
    by_fmt = {
        fmt: invoke(runner, "fuse", "--level", "2", "t1:1:0", "t2:1:0", "--format", fmt)
        for fmt in ("csv", "markdown")
    }
    rows = list(csv.reader(io.StringIO(by_fmt["csv"].output)))
    assert rows[0] == ["label", "multiplicity"]
    assert rows[1:] == [["u:0:0", "1"], ["u:2:1", "1"]]
    md = by_fmt["markdown"].output.splitlines()
    assert md[0] == "| module | multiplicity |"
    assert "| L(2,0)^0 | 1 |" in md


def test_qdim_digits(runner):
    result = invoke(runner, "qdim", "--level", "2", "u:1:0", "--digits", "10")
    assert result.exit_code == 0
    assert result.output.strip() == "1.4142135624"
    result = invoke(runner, "qdim", "--level", "1", "u:1:0")
    assert result.output.strip() == "1.000000000000"


def test_dual_and_coeff(runner):
    assert invoke(runner, "dual", "--level", "3", "t1:1:2").output.strip() == "t2:2:2"
    assert invoke(runner, "coeff", "--level", "2", "t1:1:0", "t2:1:0", "u:0:0").output.strip() == "1"
    assert invoke(runner, "coeff", "--level", "2", "u:1:0", "u:1:0", "u:1:0").output.strip() == "0"


def test_glob_document(runner):
    doc = json.loads(invoke(runner, "glob", "--level", "1").output)
    assert doc == {"level": 1, "exact": "18", "numeric": "18.000000000000"}
    doc3 = json.loads(invoke(runner, "glob", "--level", "3").output)
    assert doc3["exact"] == "18x + 36"


def test_catalog_json_round_trips(runner):
    result = invoke(runner, "catalog", "--level", "2")
    doc = json.loads(result.output)
    assert doc["level"] == 2
    modules = doc["modules"]
    assert len(modules) == 27
    for token, row in modules.items():
        label = parse_label(token, 2)          # keys round-trip
        assert parse_label(row["dual"], 2)     # dual column parses too
        assert label.token() == token
        assert "/" in row["weight"] or row["weight"].isdigit()


def test_catalog_level1_weight_column(runner):
    result = invoke(runner, "catalog", "--level", "1")
    weights = [row["weight"] for row in json.loads(result.output)["modules"].values()]
    assert weights == [
        "0", "1", "1", "1/4", "1/4", "9/4",
        "1/36", "49/36", "25/36", "1/9", "4/9", "16/9",
        "1/9", "4/9", "16/9", "1/36", "49/36", "25/36",
    ]


def test_catalog_csv_quotes_commas(runner):
    result = invoke(runner, "catalog", "--level", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0] == ["label", "pretty", "weight", "qdim", "dual", "generator"]
    assert len(rows) == 1 + 27
    by_label = {row[0]: row for row in rows[1:]}
    assert by_label["u:2:1"][5] == "v^{2,1}"   # embedded comma survives


def test_catalog_markdown_uses_pretty_labels(runner):
    lines = invoke(runner, "catalog", "--level", "1", "--format", "markdown").output.splitlines()
    assert lines[0].startswith("| module |")
    assert any("L(1,1)^{T1,2}" in line for line in lines)


def test_catalog_out_writes_file(runner, tmp_path):
    target = tmp_path / "catalog.json"
    result = invoke(runner, "catalog", "--level", "1", "--out", str(target))
    assert result.exit_code == 0
    assert result.output == ""
    assert json.loads(target.read_text())["level"] == 1


def test_verify_all_passes_at_level_one(runner):
    result = invoke(runner, "verify", "--level", "1")
    assert result.exit_code == 0
    lines = [line for line in result.output.splitlines() if line.startswith("suite=")]
    suites = [line.split()[0].removeprefix("suite=") for line in lines]
    assert suites == ["catalog", "unit", "comm", "assoc", "dual", "qdim", "oracle"]
    assert all(line.endswith("PASS") for line in lines)


def test_verify_single_suite_and_seed(runner):
    result = invoke(runner, "verify", "--level", "9", "--suite", "assoc", "--cap", "3", "--seed", "3")
    assert result.exit_code == 0
    assert "sampled" in result.output and "seed 3" in result.output


def test_verify_oracle_needs_level_one(runner):
    result = invoke(runner, "verify", "--level", "2", "--suite", "oracle")
    assert result.exit_code == 2
    assert "level-1" in result.output


def test_usage_errors_exit_two(runner):
    assert invoke(runner, "dual", "--level", "3", "u:4:0").exit_code == 2
    assert invoke(runner, "dual", "--level", "3", "T1:1:2").exit_code == 2
    assert invoke(runner, "dual", "--level", "0", "u:0:0").exit_code == 2
    assert invoke(runner, "verify", "--level", "1", "--suite", "nonsense").exit_code == 2


def test_run_helper_exit_codes(capsys):
    assert run(["fuse", "--level", "1", "u:0:0", "u:0:0"]) == 0
    capsys.readouterr()
    assert run(["fuse", "--level", "1", "u:9:0", "u:0:0"]) == 2
    capsys.readouterr()
