#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.config import Config, ToleranceContext
from QBEtools.exceptions import ConfigError, InternalInconsistencyError, QBEError
from QBEtools.utils import (
    PredicateReport,
    fix_phase,
    format_complex_literal,
    group_levels,
    jsonable,
    nearest_unitary,
    parse_complex_literal,
    unitary_residual,
)

from hypothesis import given, settings
from hypothesis import strategies as st
import json
import numpy as np
import pytest


def test_tolerances_must_be_positive():
    with pytest.raises(ConfigError):
        ToleranceContext(eps_proj=0)
    with pytest.raises(ValueError):
        ToleranceContext(eps_zero=-1e-12)


def test_tolerances_from_environment():
    tol = ToleranceContext.from_env({"QBE_EPS_PROJ": "1e-8", "UNRELATED": "x"})
    assert tol.eps_proj == 1e-8
    assert tol.eps_zero == ToleranceContext().eps_zero

    with pytest.raises(ConfigError, match="QBE_EPS_COMM"):
        ToleranceContext.from_env({"QBE_EPS_COMM": "tiny"})


def test_config_precedence(tmp_path):
    flags = tmp_path / "flags.json"
    flags.write_text(json.dumps({"K": 2.5, "eps_eig": 1e-6}))

    config = Config.load(str(flags), environ={"QBE_K": "4", "QBE_DENSE_CAP": "100"})
    assert config.K == 2.5
    assert config.dense_cap == 100
    assert config.tol.eps_eig == 1e-6

    config = Config.load(str(flags), environ={}, K=3.0)
    assert config.K == 3.0


def test_config_rejects_unknown_flags(tmp_path):
    flags = tmp_path / "flags.json"
    flags.write_text(json.dumps({"kappa": 1}))
    with pytest.raises(ConfigError, match="kappa"):
        Config.load(str(flags), environ={})


def test_negative_report_needs_witness():
    with pytest.raises(InternalInconsistencyError):
        PredicateReport(False, {"x": 1.0})

    report = PredicateReport(False, {"x": 1.0}, {"state": 3})
    assert not report
    assert report.to_dict()["witness"] == {"state": 3}


def test_jsonable_converts_numpy_and_complex():
    value = jsonable({"a": np.float64(0.5), "b": 1 + 2j, "c": np.arange(3), "d": {2, 1}})
    assert value == {"a": 0.5, "b": [1.0, 2.0], "c": [0, 1, 2], "d": [1, 2]}
    json.dumps(value)


def test_errors_describe_themselves():
    payload = ConfigError("bad").to_dict()
    assert payload == {"error": "ConfigError", "message": "bad"}
    assert isinstance(ConfigError("bad"), QBEError)


def test_complex_literals():
    assert parse_complex_literal("0.70710678+0.0i") == pytest.approx(0.70710678)
    assert parse_complex_literal("-1.5e-3-2i") == complex(-1.5e-3, -2)
    assert parse_complex_literal("1.0") is None
    assert parse_complex_literal("1+i") is None
    assert format_complex_literal(complex(0, -0.5)) == "0.0-0.5i"


@settings(deadline=None)
@given(st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e6))
def test_complex_literal_is_exact(z):
    assert parse_complex_literal(format_complex_literal(z)) == z


def test_nearest_unitary_repairs_truncated_literals():
    v = np.round(np.array([[1, 1], [1, -1]]) / np.sqrt(2), 8)
    assert 1e-10 < unitary_residual(v) < 1e-6
    assert unitary_residual(nearest_unitary(v)) < 1e-14


def test_fix_phase_and_levels():
    vectors = fix_phase(np.array([[0, 1j], [-1, 0]]))
    assert np.allclose(vectors, [[0, 1], [1, 0]])
    assert group_levels([0.0, 2.0, 1e-9, 2.0 + 1e-10], 1e-8) == [[0, 2], [1, 3]]
