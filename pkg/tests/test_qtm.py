#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import (
    DimensionMismatchError,
    LatticeRangeError,
    NonUnitaryError,
    PreconditionError,
)
from QBEtools.hilbert import (
    FOURIER,
    IDENTITY,
    SIGMA_X,
    ComplexOperator,
    LatticeShape,
    encode,
    head_raise,
    head_shift,
    projector,
    site_unitary,
)
from QBEtools.isometry import (
    extract_paths,
    is_distinct_path_generating,
    is_partial_isometry,
    is_power_partial_isometry,
)
from QBEtools.qtm import (
    BALLISTIC,
    NOT_BALLISTIC,
    PARTIALLY_BALLISTIC,
    UNDECIDED,
    Rule,
    RuleTable,
    StepOperator,
    appendix_b_stable_basis,
    ballistic_subspace,
    bit_action,
    bit_rotation_stable_basis,
    build_step_operator,
    column_norm_decay,
    condition_x,
    decide_ballistic,
    default_shape,
    example_machine,
    gram_conditions,
    is_deterministic,
    iterate_norm_profile,
)

import numpy as np
import json
import pytest


def _operator(name, shape=None):
    shape = default_shape(name) if shape is None else shape
    return StepOperator(example_machine(name), shape).operator


def test_rule_validation():
    assert Rule(0, 0, 0, "right", IDENTITY).d == "R"

    with pytest.raises(LatticeRangeError):
        Rule(0, 2, 0, "R", IDENTITY)
    with pytest.raises(PreconditionError):
        Rule(0, 0, 0, "U", IDENTITY)
    with pytest.raises(DimensionMismatchError):
        Rule(0, 0, 0, "R", np.eye(3))

    with pytest.raises(PreconditionError):
        RuleTable(1, [Rule(0, 0, 0, "R", IDENTITY), Rule(0, 0, 0, "L", SIGMA_X)])
    with pytest.raises(LatticeRangeError):
        RuleTable(1, [Rule(0, 0, 1, "R", IDENTITY)])
    with pytest.raises(NonUnitaryError):
        RuleTable(1, [Rule(0, 0, 0, "R", 2 * IDENTITY)])


def test_machines():
    assert default_shape("tex1") == LatticeShape(2, 8, "open")
    assert default_shape("erasure", length=4) == LatticeShape(1, 4, "cyclic")
    assert example_machine("appendix_b_extended").domain == {(0, 0), (0, 1), (1, 0), (2, 0), (2, 1), (3, 1), (4, 0)}

    with pytest.raises(PreconditionError):
        example_machine("busy_beaver")
    with pytest.raises(PreconditionError):
        default_shape("busy_beaver")


def test_step_operator_shape_checks():
    with pytest.raises(DimensionMismatchError):
        StepOperator(example_machine("tex1"), LatticeShape(1, 4))
    with pytest.raises(PreconditionError):
        StepOperator(example_machine("zero_motion"), LatticeShape(1, 4, spins=False))


def test_zero_motion_is_projected_shift():
    shape = LatticeShape(1, 4)
    U = head_shift(shape)
    expected = ComplexOperator.zero(shape.dim)
    for j in range(shape.length):
        expected = expected + projector(shape, "spin", j, 0).compose(U).compose(projector(shape, "head_pos", j))

    assert _operator("zero_motion", shape).allclose(expected, 1e-12)


def _split_machine_terms(v, shape):
    """ The five terms of the split machine built from head raises, projectors and
        shifts:

        (1) Q₀ Σ P_{0j} U P_j        (2) u Q₀ Σ v_j P_{1j} U† P_j
        (3) u Q₁ Σ P_{0j} U P_j      (4) u Q₂ Σ P_{0j} U P_j
        (5) u² Q₂ Σ P_{1j} U P_j
    """

    U = head_shift(shape)
    u = head_raise(shape)
    Q = [projector(shape, "head_state", l) for l in range(3)]

    def sweep(bit, move, v_site=None):
        total = ComplexOperator.zero(shape.dim)
        for j in range(shape.length):
            term = projector(shape, "spin", j, bit).compose(move).compose(projector(shape, "head_pos", j))
            if v_site is not None:
                term = site_unitary(v_site, j, shape).compose(term)
            total = total + term
        return total

    right_0 = sweep(0, U)
    return [
        Q[0].compose(right_0),
        u.compose(Q[0]).compose(sweep(1, U.adjoint(), v)),
        u.compose(Q[1]).compose(right_0),
        u.compose(Q[2]).compose(right_0),
        u.compose(u).compose(Q[2]).compose(sweep(1, U)),
    ]


def test_split_machine_terms():
    shape = LatticeShape(5, 4)
    total = ComplexOperator.zero(shape.dim)
    for term in _split_machine_terms(FOURIER, shape):
        total = total + term
    assert total.allclose(_operator("appendix_b", shape), 1e-12)


def test_step_operator_moves_the_head():
    shape = LatticeShape(1, 3)
    T = _operator("bit_rotation", shape)
    psi = np.zeros(shape.dim, dtype=complex)
    psi[encode(0, 0, "000", shape)] = 1

    image = T.apply(psi)
    assert image[encode(0, 1, "000", shape)] == pytest.approx(FOURIER[0, 0])
    assert image[encode(0, 1, "001", shape)] == pytest.approx(FOURIER[1, 0])
    assert np.linalg.norm(image) == pytest.approx(1)


@pytest.mark.parametrize("name", ["tex1", "appendix_b", "appendix_b_extended", "zero_motion"])
def test_condition_x_holds(name):
    assert condition_x(example_machine(name))
    assert is_partial_isometry(_operator(name))


def test_condition_x_fails_for_erasure():
    report = condition_x(example_machine("erasure"))
    assert not report
    pairs = report.witness["violating_pairs"]
    assert pairs[0]["pair"] == [[0, 0], [0, 1]]
    assert pairs[0]["reason"] == "bit images overlap"


def test_gram_conditions():
    assert gram_conditions(example_machine("zero_motion"), LatticeShape(1, 4))

    report = gram_conditions(example_machine("erasure"), default_shape("erasure"))
    assert not report
    assert "initial_projection" in report.witness["failing"]
    assert report.witness["largest_cross_pair"] == [[0, 0], [0, 1]]


def test_bit_action():
    assert bit_action(IDENTITY) == "identity"
    assert bit_action(SIGMA_X) == "flip"
    assert bit_action(1j * SIGMA_X) == "flip"
    assert bit_action(-IDENTITY) == "identity"
    assert bit_action(FOURIER) is None

    assert is_deterministic(example_machine("zero_motion"))
    assert is_deterministic(example_machine("erasure"))
    assert is_deterministic(example_machine("appendix_b", SIGMA_X))
    assert not is_deterministic(example_machine("bit_rotation"))


def test_tex1_norm_profile():
    shape = LatticeShape(2, 8)
    psi = np.zeros(shape.dim, dtype=complex)
    psi[encode(0, 2, (1 << 1) | (1 << 5), shape)] = 1

    norms = iterate_norm_profile(_operator("tex1", shape), psi, 9)
    r = 1 / np.sqrt(2)
    np.testing.assert_allclose(norms, [1, 1, 1, 1, 1, r, 0.5, r / 2, r / 2, 0], atol=1e-12)


def test_column_norm_decay():
    assert column_norm_decay(_operator("bit_rotation"), 20) is None

    decay = column_norm_decay(_operator("tex1"), 20)
    assert decay["side"] == "T"
    assert decay["power"] == 3
    assert decay["norm"] == pytest.approx(1 / np.sqrt(2))


def test_decide_erasure():
    verdict = decide_ballistic(example_machine("erasure"), default_shape("erasure"))
    assert verdict.ballistic_verdict == NOT_BALLISTIC
    assert not verdict.partial_isometry
    assert not verdict.condition_x
    assert "merging_states" in verdict.evidence["witness"]
    assert not verdict.is_positive


def test_decide_deterministic_machines():
    verdict = decide_ballistic(example_machine("zero_motion"), default_shape("zero_motion"))
    assert verdict.ballistic_verdict == BALLISTIC
    assert verdict.deterministic
    assert verdict.is_positive

    rules = example_machine("appendix_b", SIGMA_X)
    verdict = decide_ballistic(rules, default_shape("appendix_b"))
    assert verdict.deterministic
    assert verdict.ballistic_verdict in (BALLISTIC, NOT_BALLISTIC)


def test_decide_bit_rotation():
    shape = default_shape("bit_rotation")
    rules = example_machine("bit_rotation")

    verdict = decide_ballistic(rules, shape)
    assert verdict.ballistic_verdict == UNDECIDED
    assert verdict.evidence["steps_searched"] == 20

    verdict = decide_ballistic(rules, shape, basis=bit_rotation_stable_basis(shape=shape))
    assert verdict.ballistic_verdict == BALLISTIC
    assert verdict.evidence["supplied_basis"]["complete"]
    json.dumps(verdict.to_dict())


def test_decide_split_machine():
    shape = LatticeShape(5, 4)
    rules = example_machine("appendix_b")
    assert decide_ballistic(rules, shape).ballistic_verdict == UNDECIDED

    verdict = decide_ballistic(rules, shape, basis=appendix_b_stable_basis(shape=shape))
    assert verdict.ballistic_verdict == BALLISTIC


def test_decide_partially_ballistic():
    verdict = decide_ballistic(example_machine("appendix_b_extended"), default_shape("appendix_b_extended"))
    assert verdict.ballistic_verdict == PARTIALLY_BALLISTIC

    verdict = decide_ballistic(example_machine("tex1"), default_shape("tex1"))
    assert verdict.ballistic_verdict == PARTIALLY_BALLISTIC
    assert verdict.evidence["norm_decay"]["power"] == 3
    assert verdict.evidence["subspace"]["longest_path"] >= 2
    assert verdict.is_positive


def test_ballistic_subspace_of_tex1():
    T = _operator("tex1")
    states, paths = ballistic_subspace(T)
    assert 0 < len(states) < T.dim
    assert paths.states() == set(states.tolist())
    assert max(paths.lengths()) >= 2


def test_bit_rotation_basis():
    shape = LatticeShape(1, 4)
    basis = bit_rotation_stable_basis(shape=shape)
    assert basis.is_complete

    anchored = bit_rotation_stable_basis(shape=shape, anchor=2)
    assert anchored.size == 12
    assert anchored.invariance_residual(_operator("bit_rotation", shape)) <= 1e-12

    with pytest.raises(PreconditionError):
        bit_rotation_stable_basis(shape=LatticeShape(1, 4, "cyclic"))
    with pytest.raises(PreconditionError):
        bit_rotation_stable_basis(shape=shape, anchor=4)


def test_split_machine_basis():
    shape = LatticeShape(5, 4)
    basis = appendix_b_stable_basis(shape=shape)
    assert basis.is_complete
    assert is_distinct_path_generating(_operator("appendix_b", shape), basis)
    assert is_power_partial_isometry(_operator("appendix_b", shape))

    with pytest.raises(PreconditionError):
        appendix_b_stable_basis(shape=LatticeShape(3, 4))


@pytest.mark.parametrize("end,size", [(3, 6), (4, 7)])
def test_split_machine_segment(end, size):
    shape = LatticeShape(5, 8)
    basis = appendix_b_stable_basis(shape=shape, segment=(1, end))
    assert basis.size == size
    assert extract_paths(build_step_operator(example_machine("appendix_b"), shape), basis).lengths() == [size]


def test_segment_must_fit():
    with pytest.raises(PreconditionError):
        appendix_b_stable_basis(shape=LatticeShape(5, 8), segment=(2, 2))
    with pytest.raises(PreconditionError):
        appendix_b_stable_basis(shape=LatticeShape(5, 8), segment=(1, 6))
