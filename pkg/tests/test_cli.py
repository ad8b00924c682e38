#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.cli.cli import cli
from QBEtools.cli.machine_file import MachineFile, parse_machine_file
from QBEtools.cli.schema import validate_report
from QBEtools.cli.tables import operator_frame, read_operator_csv, to_csv
from QBEtools.exceptions import MachineFileSemanticError, MachineFileSyntaxError
from QBEtools.hilbert import FOURIER, IDENTITY, LatticeShape
from QBEtools.qtm import StepOperator, default_shape, example_machine

from conftest import cyclic_shift

from click.testing import CliRunner
import numpy as np
import pandas as pd
import io
import json
import pytest

HEADER = "machine demo\nheads 1\nlattice 4 open\n"
IDENTITY_RULE = "rule 0 0 0 R 1.0+0.0i 0.0+0.0i 0.0+0.0i 1.0+0.0i\n"


@pytest.fixture
def runner():
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


def _error(result):
    return json.loads(result.stderr.strip().splitlines()[-1])


def test_parse_minimal_file():
    machine = parse_machine_file("machine demo  # a comment\n\nheads 1\nlattice 4 open\n" + IDENTITY_RULE)
    assert machine.name == "demo"
    assert machine.shape == LatticeShape(1, 4, "open")
    assert machine.rules[0].line == 5

    rules = machine.to_rule_table()
    assert rules.name == "demo"
    np.testing.assert_array_equal(rules.rules[0].v, IDENTITY)


def test_parse_eight_digit_fourier():
    a = "0.70710678+0.0i"
    text = HEADER + f"rule 0 0 0 R {a} {a} {a} -{a}\n"
    rules = parse_machine_file(text).to_rule_table()
    np.testing.assert_allclose(rules.rules[0].v, FOURIER, atol=1e-8)


def test_duplicate_program_element():
    with pytest.raises(MachineFileSemanticError) as e:
        parse_machine_file(HEADER + IDENTITY_RULE + IDENTITY_RULE)
    assert e.value.lines == (4, 5)


@pytest.mark.parametrize("text,line,column", [
    (HEADER + "rule 0 0 0 X 1.0+0.0i 0.0+0.0i 0.0+0.0i 1.0+0.0i\n", 4, 12),
    (HEADER + "rule 0 0 0 R 1.0+0.0j 0.0+0.0i 0.0+0.0i 1.0+0.0i\n", 4, 14),
    (HEADER + "rule 0 zero 0 R 1.0+0.0i 0.0+0.0i 0.0+0.0i 1.0+0.0i\n", 4, 8),
    ("machine demo\nhead 1\n", 2, 1),
    ("machine demo extra\n", 1, 14),
    ("machine demo\nheads 1\nlattice 4 torus\n", 3, 11),
])
def test_syntax_errors(text, line, column):
    with pytest.raises(MachineFileSyntaxError) as e:
        parse_machine_file(text)
    assert (e.value.line, e.value.column) == (line, column)


@pytest.mark.parametrize("text,lines", [
    ("machine demo\nheads 1\n", ()),
    (HEADER + "heads 2\n", (2, 4)),
    (HEADER + "rule 0 0 1 R 1.0+0.0i 0.0+0.0i 0.0+0.0i 1.0+0.0i\n", (4,)),
    (HEADER + "rule 0 0 0 R 2.0+0.0i 0.0+0.0i 0.0+0.0i 1.0+0.0i\n", (4,)),
])
def test_semantic_errors(text, lines):
    with pytest.raises(MachineFileSemanticError) as e:
        parse_machine_file(text)
    assert e.value.lines == lines


def test_serialized_machine_reads_back():
    rules = example_machine("tex1")
    machine = MachineFile.from_rule_table(rules, default_shape("tex1"))
    parsed = parse_machine_file(machine.serialize())
    assert parsed.serialize() == machine.serialize()
    for original, read in zip(rules, parsed.to_rule_table()):
        assert original.key == read.key
        np.testing.assert_allclose(read.v, original.v, atol=1e-12)


def test_list_examples(runner):
    result = runner.invoke(cli, ["examples", "list"])
    assert result.exit_code == 0
    for name in ("zero_motion", "bit_rotation", "tex1", "appendix_b", "erasure"):
        assert name in result.stdout


def test_emitted_machine_decides(runner, tmp_path):
    machine = str(tmp_path / "zero.machine")
    result = runner.invoke(cli, ["examples", "emit", "zero_motion", "--output", machine])
    assert result.exit_code == 0

    result = runner.invoke(cli, ["decide", machine])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    validate_report(payload, "verdict")
    assert payload["machine"] == "zero_motion"
    assert payload["verdict"]["ballistic_verdict"] == "ballistic"


def test_negative_verdict_exit_code(runner):
    result = runner.invoke(cli, ["decide", "erasure"])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["verdict"]["ballistic_verdict"] == "not_ballistic"


def test_unknown_machine(runner):
    result = runner.invoke(cli, ["decide", "busy_beaver"])
    assert result.exit_code == 2
    error = _error(result)
    validate_report(error, "error")
    assert error["error"] == "PreconditionError"


def test_bad_flags_file(runner, tmp_path):
    flags = tmp_path / "flags.json"
    flags.write_text(json.dumps({"eps_bogus": 1e-9}))
    result = runner.invoke(cli, ["--config", str(flags), "decide", "zero_motion"])
    assert result.exit_code == 2
    assert _error(result)["error"] == "ConfigError"


def test_counterexample(runner):
    result = runner.invoke(cli, ["counterexample", "--tower", "3"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    validate_report(payload, "counterexample")

    powers = payload["powers"]
    assert [row["partial_isometry"] for row in powers] == [True, True, False, True]
    assert max(powers[2]["initial_residual"], powers[2]["final_residual"]) >= 0.05
    assert powers[3]["norm"] <= 1e-12


def test_spectrum_against_prediction(runner):
    result = runner.invoke(cli, [
        "spectrum", "zero_motion", "--length", "8", "--sector", "00000000", "--predict", "truncated_shift:8",
    ])
    assert result.exit_code == 0, result.stderr
    df = pd.read_csv(io.StringIO(result.stdout))
    assert list(df.columns) == ["index", "energy", "predicted", "residual"]
    assert len(df) == 8
    assert df["residual"].max() < 1e-10


def test_spectrum_mismatch_is_negative(runner):
    result = runner.invoke(cli, [
        "spectrum", "zero_motion", "--length", "4", "--sector", "0000", "--predict", "truncated_shift:3",
    ])
    assert result.exit_code == 1


def test_analyze_with_stable_basis(runner, tmp_path):
    basis = str(tmp_path / "basis.csv")
    result = runner.invoke(cli, ["examples", "basis", "bit_rotation", "--output", basis])
    assert result.exit_code == 0, result.stderr

    result = runner.invoke(cli, ["analyze", "bit_rotation", "--basis", basis])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    validate_report(payload, "analysis")
    assert payload["reports"]["stable"]["verdict"]
    assert payload["reports"]["distinct_path_generating"]["verdict"]
    assert payload["verdict"]["ballistic_verdict"] == "ballistic"


def test_no_built_in_basis(runner):
    result = runner.invoke(cli, ["examples", "basis", "zero_motion"])
    assert result.exit_code == 2


def test_evolve(runner):
    result = runner.invoke(cli, [
        "evolve", "zero_motion", "--length", "4", "--state", "0,0,0000", "--times", "0:10:5",
    ])
    assert result.exit_code == 0, result.stderr
    df = pd.read_csv(io.StringIO(result.stdout))
    assert len(df) == 5
    assert df["leakage"].max() < 1e-9
    assert (df["norm"] - 1).abs().max() < 1e-9


def test_evolve_rejects_bad_state(runner):
    result = runner.invoke(cli, ["evolve", "zero_motion", "--state", "0,9,000000", "--times", "0,1"])
    assert result.exit_code == 2
    assert _error(result)["error"] == "LatticeRangeError"


def test_decompose_sector(runner):
    result = runner.invoke(cli, ["decompose", "zero_motion", "--length", "4", "--sector", "0000"])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    validate_report(payload, "decomposition")
    assert payload["truncated_shifts"] == [{"index": 4, "rank": 4, "copies": 1}]


def test_decompose_operator_csv(runner, tmp_path):
    table = tmp_path / "shift.csv"
    to_csv(operator_frame(cyclic_shift(3)), str(table))
    assert read_operator_csv(str(table)) == cyclic_shift(3)

    result = runner.invoke(cli, ["decompose", str(table)])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["ranks"]["unitary"] == 3
    assert payload["unitary_classification"] == "cycles"


def test_exported_operator_decomposes(runner, tmp_path):
    table = tmp_path / "zero.csv"
    result = runner.invoke(cli, ["examples", "operator", "zero_motion", "--length", "4", "--sector", "0000",
                                 "--output", str(table)])
    assert result.exit_code == 0, result.stderr

    T = read_operator_csv(str(table))
    assert T.dim == 4
    assert T.nnz == 3

    result = runner.invoke(cli, ["decompose", str(table)])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["truncated_shifts"] == [{"index": 4, "rank": 4, "copies": 1}]


def test_exported_operator_of_a_machine_file(runner, tmp_path):
    machine = tmp_path / "rot.machine"
    result = runner.invoke(cli, ["examples", "emit", "bit_rotation", "--length", "3", "--output", str(machine)])
    assert result.exit_code == 0, result.stderr

    result = runner.invoke(cli, ["examples", "operator", str(machine)])
    assert result.exit_code == 0, result.stderr
    T = read_operator_csv(io.StringIO(result.stdout), dim=3 * 2 ** 3)
    assert T.allclose(StepOperator(example_machine("bit_rotation"), LatticeShape(1, 3)).operator, 1e-12)
