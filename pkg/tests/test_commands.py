import json
import os.path

import click.testing
import pytest

import halfarc.classifier
import halfarc.commands
import halfarc.formats
import halfarc.reports
from halfarc import graphs


@pytest.fixture()
def runner():
    return click.testing.CliRunner(mix_stderr=False)


@pytest.fixture()
def golden(data_dir):
    with open(os.path.join(data_dir, "golden", "analyze_row1_3_5.json")) as stream:
        return json.load(stream)


def project(document):
    """Keeps the parts of an analysis that do not depend on vertex numbering."""
    keys = (
        "basic_type",
        "group_order",
        "independent_pair",
        "is_basic",
        "mode",
        "pair",
        "stabilizer_order",
        "type",
        "vertex_count",
    )
    result = {key: document[key] for key in keys}
    result["witnesses"] = [
        {
            "subgroup": w["subgroup"]["description"],
            "order": w["subgroup"]["order"],
            "degeneracy": w["degeneracy"],
            "cycle_length": w["cycle_length"],
            "orientation": w["orientation"],
            "kernel_order": w["kernel"]["order"],
            "induced_group_order": w["induced_group_order"],
        }
        for w in document["witnesses"]
    ]
    return result


def test_showing_help(runner):
    result = runner.invoke(halfarc.commands.main, ["--help"])
    assert result.exit_code == 0
    assert "half-arc-transitive" in result.output

    for command in ("construct", "export", "analyze", "lemmas", "sweep"):
        result = runner.invoke(halfarc.commands.main, [command, "--help"])
        assert result.exit_code == 0


def test_analyze_matches_golden(runner, golden, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(halfarc.commands.main, ["analyze", "row1", "3", "5"])
    assert result.exit_code == 0
    assert project(json.loads(result.output)) == golden


def test_analyze_is_deterministic(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        first = runner.invoke(halfarc.commands.main, ["analyze", "--mode=fast", "row2", "4", "4"])
        second = runner.invoke(halfarc.commands.main, ["analyze", "--mode=fast", "row2", "4", "4"])
    assert first.exit_code == 0
    assert first.output == second.output


@pytest.mark.parametrize("fmt", ["json", "yaml", "table"])
def test_analyze_all_formats(runner, tmpdir, working_dir, fmt):
    with working_dir(str(tmpdir)):
        result = runner.invoke(
            halfarc.commands.main, ["analyze", "--format={0}".format(fmt), "row5", "3", "3"]
        )
    assert result.exit_code == 0
    assert "independent-cycle" in result.output


def test_analyze_swaps_h_parameters(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(halfarc.commands.main, ["analyze", "row3", "4", "3"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["pair"] == {"family": "row3", "r": 3, "s": 4, "swapped": True}


@pytest.mark.parametrize(
    "args",
    [
        ["analyze", "row5", "4", "4"],
        ["analyze", "row9", "3", "5"],
        ["analyze", "--mode=quick", "row1", "3", "5"],
        ["sweep", "2", "5"],
    ],
)
def test_usage_errors(runner, tmpdir, working_dir, args):
    with working_dir(str(tmpdir)):
        result = runner.invoke(halfarc.commands.main, args)
    assert result.exit_code == 2


def test_element_cap_is_reported(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(
            halfarc.commands.main, ["--max-group-order=10", "analyze", "row1", "3", "5"]
        )
    assert result.exit_code == 1
    assert "more than 10 elements" in result.stderr


def test_construct(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(halfarc.commands.main, ["construct", "row1", "3", "5"])
        assert result.exit_code == 0
        graph = graphs.from_graph6(result.output)
        assert graph.vertex_count == 15

        result = runner.invoke(
            halfarc.commands.main, ["construct", "--output=g.g6", "row4", "4", "4"]
        )
        assert result.exit_code == 0
        with open("g.g6") as stream:
            assert graphs.from_graph6(stream.read()).vertex_count == 8
        with open("g.g6.labels.json") as stream:
            labels = json.load(stream)
        assert labels["kind"] == "labels"
        assert all((i - j) % 2 == 0 for i, j in labels["labels"])


def test_export(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(halfarc.commands.main, ["export", "row3", "3", "4"])
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document["kind"] == "pair"
        assert document["group"]["order"] == 24
        assert "N#" in [entry["name"] for entry in document["named_subgroups"]]

        result = runner.invoke(
            halfarc.commands.main, ["export", "--format=graph6", "row3", "3", "4"]
        )
        assert result.exit_code == 0
        assert result.output.strip() == document["graph"]["graph6"]


def test_lemmas(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(halfarc.commands.main, ["lemmas", "row3", "3", "4"])
        assert result.exit_code == 0
        assert json.loads(result.output)["holds"] is True

        result = runner.invoke(halfarc.commands.main, ["lemmas", "row3", "6", "4"])
        assert result.exit_code == 2

        result = runner.invoke(
            halfarc.commands.main, ["lemmas", "--any-parity", "row3", "6", "4"]
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["case"] == "H(2p,4)"


def test_sweep(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(halfarc.commands.main, ["sweep", "--format=table", "4", "4"])
    assert result.exit_code == 0
    assert "cells: 8  mismatches: 0  violations: 0  skipped: 0" in result.output


def test_configuration_file(runner, data_dir, working_dir):
    configs_dir = os.path.join(data_dir, "configs")
    with working_dir(configs_dir):
        # .halfarc.yaml in the working directory asks for yaml reports
        result = runner.invoke(halfarc.commands.main, ["analyze", "row1", "3", "5"])
        assert result.exit_code == 0
        document = halfarc.formats.FORMATTERS["yaml"].load(result.output)
        assert document["mode"] == "exhaustive"

        result = runner.invoke(
            halfarc.commands.main,
            ["--configuration=settings.json", "analyze", "--format=json", "row1", "3", "5"],
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["mode"] == "fast"

        result = runner.invoke(
            halfarc.commands.main, ["--configuration=invalid.yaml", "analyze", "row1", "3", "5"]
        )
        assert result.exit_code == 2
        assert "invalid configuration" in result.stderr


def test_construct_reports_element_cap(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(
            halfarc.commands.main,
            ["--max-group-order=20", "construct", "--format=json", "row1", "3", "5"],
        )
    assert result.exit_code == 1
    assert isinstance(result.exception, SystemExit)
    assert "Error: group has more than 20 elements" in result.stderr


def test_construct_json_document(runner, tmpdir, working_dir):
    with working_dir(str(tmpdir)):
        result = runner.invoke(
            halfarc.commands.main, ["construct", "--format=json", "row1", "3", "5"]
        )
    assert result.exit_code == 0
    document = json.loads(result.output)
    halfarc.reports.validate(document)
    assert document["kind"] == "pair"
    assert document["graph"]["vertex_count"] == 15


def test_sweep_echoes_violations(runner, tmpdir, working_dir, monkeypatch):
    monkeypatch.setattr(
        halfarc.classifier,
        "check_pair_properties",
        lambda pair, verified, report: ["stabilizer out of range"],
    )
    with working_dir(str(tmpdir)):
        result = runner.invoke(
            halfarc.commands.main, ["sweep", "--workers=1", "--format=table", "3", "3"]
        )
    assert result.exit_code == 1
    assert "violation: row1 (3,3) stabilizer out of range" in result.stderr
