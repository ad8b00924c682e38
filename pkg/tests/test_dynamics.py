#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import (
    LatticeRangeError,
    NonBallisticError,
    PreconditionError,
    SpectrumCapError,
)
from QBEtools.dynamics import (
    Evolution,
    all_orientations,
    continuum_limit_check,
    evolve,
    feynman_hamiltonian,
    parse_prediction,
    predicted_eigenvector,
    predicted_spectrum,
    reconstruct_step_operator,
    spectrum,
    verify_spectrum,
    wave_packet,
    width_scan,
)
from QBEtools.halmos_wallen import decompose
from QBEtools.hilbert import ComplexOperator, LatticeShape, encode, spin_sector
from QBEtools.isometry import extract_paths
from QBEtools.qtm import (
    StepOperator,
    appendix_b_stable_basis,
    bit_rotation_stable_basis,
    example_machine,
)
from QBEtools.utils.partial_injection import random_partial_injection

from conftest import cyclic_shift, open_shift

from scipy.linalg import expm
import numpy as np
import pytest

TIMES = np.linspace(0, 50, 20)


def test_truncated_shift_levels():
    H = feynman_hamiltonian(open_shift(8))
    energies = spectrum(H).energies
    predicted = predicted_spectrum("truncated_shift", 8).levels()
    np.testing.assert_allclose(energies, predicted, atol=1e-10)

    d = decompose(open_shift(8))
    report = verify_spectrum(H, d, [predicted_spectrum("truncated_shift", 8)])
    assert report
    assert report.residuals["min_overlap"] == pytest.approx(1)


def test_cycle_levels():
    H = feynman_hamiltonian(cyclic_shift(4))
    np.testing.assert_allclose(spectrum(H).energies, [0, 2, 2, 4], atol=1e-10)
    np.testing.assert_allclose(predicted_spectrum("cycle", 3).levels(), [0, 2, 2, 4], atol=1e-12)

    report = verify_spectrum(H, decompose(cyclic_shift(4)), [predicted_spectrum("cycle", 3)])
    assert report


def test_energy_scale():
    H = feynman_hamiltonian(open_shift(3), K=2.5)
    np.testing.assert_allclose(
        spectrum(H).energies, predicted_spectrum("truncated_shift", 3, K=2.5).levels(), atol=1e-10
    )
    with pytest.raises(PreconditionError):
        feynman_hamiltonian(open_shift(3), K=0)


@pytest.mark.parametrize("W", [1, 4])
def test_bound_bands(W):
    shape = LatticeShape(1, 12)
    sector = spin_sector(shape, (1 << 3) | (1 << (W + 4)))
    T = StepOperator(example_machine("zero_motion"), shape).operator.restrict(sector)

    d = decompose(T)
    H = feynman_hamiltonian(T)
    report = verify_spectrum(H, d, [predicted_spectrum("bound_band", W)])
    assert report
    assert report.residuals["max_deviation"] <= 1e-10
    assert report.details["components"][0]["copies"] == 1


def test_missing_component_fails_verification():
    d = decompose(open_shift(5))
    report = verify_spectrum(feynman_hamiltonian(open_shift(5)), d, [predicted_spectrum("truncated_shift", 4)])
    assert not report
    assert report.witness["failure"] == "no matching component"


def test_predictions():
    prediction = parse_prediction("cycle:3")
    np.testing.assert_allclose(np.sort(prediction.energies), [0, 2, 2, 4], atol=1e-12)

    prediction = parse_prediction("truncated_shift:4:2", K=0.5)
    assert prediction.multiplicity == 2
    assert len(prediction.levels()) == 8
    assert prediction.K == 0.5

    np.testing.assert_allclose(
        predicted_spectrum("bound_band", 3).energies, predicted_spectrum("truncated_shift", 4).energies
    )

    vector = predicted_eigenvector("bound_band", 2, 1, padded=True)
    assert len(vector) == 5
    assert vector[0] == vector[-1] == 0
    assert np.linalg.norm(vector) == pytest.approx(1)


@pytest.mark.parametrize("text", ["cycle", "cycle:x", "bogus:3", "truncated_shift:0", "cycle:1:2:3"])
def test_bad_predictions(text):
    with pytest.raises(PreconditionError):
        parse_prediction(text)


def test_eigenvector_level_range():
    with pytest.raises(PreconditionError):
        predicted_eigenvector("truncated_shift", 3, 4)


def test_spectrum_cap():
    with pytest.raises(SpectrumCapError) as e:
        spectrum(feynman_hamiltonian(open_shift(10)), dense_cap=5)
    assert (e.value.dim, e.value.cap) == (10, 5)


@pytest.mark.parametrize("seed", range(20))
def test_reconstruction_round_trip(seed):
    rng = np.random.default_rng(seed)
    T, _ = random_partial_injection(int(rng.integers(2, 65)), rng, phases=False)
    H = feynman_hamiltonian(T)

    result = reconstruct_step_operator(H)
    assert result.paths.canonical() == extract_paths(T).canonical()
    assert result.K == pytest.approx(1)
    assert feynman_hamiltonian(result.T_prime).matrix.allclose(H.matrix, 1e-12)


def test_every_orientation_gives_the_same_hamiltonian():
    T = ComplexOperator.from_triplets([1, 2, 4, 5, 3], [0, 1, 3, 4, 5], 1.0, 7)
    H = feynman_hamiltonian(T)

    results = list(all_orientations(H))
    assert len(results) == 4
    assert len({tuple(d["flipped"] for d in r.directions) for r in results}) == 4
    for result in results:
        assert feynman_hamiltonian(result.T_prime).matrix.allclose(H.matrix, 1e-12)
        assert result.paths.zero_length == frozenset({6})


def test_reconstruction_rejects_branching():
    # three states joined to one
    T = ComplexOperator.from_triplets([0, 0, 0], [1, 2, 3], 1.0, 4)
    H = feynman_hamiltonian(T.adjoint())
    with pytest.raises(NonBallisticError) as e:
        reconstruct_step_operator(H)
    assert e.value.state == 0

    with pytest.raises(NonBallisticError):
        reconstruct_step_operator(np.diag([2.0, 3.0]))


def _confined_profile(T, basis=None):
    paths = extract_paths(T, basis)
    chain = int(np.argmax(paths.lengths()))
    states = paths.chains[chain]
    dim = basis.size if basis is not None else T.dim
    packet = wave_packet(paths, states[len(states) // 2], {-1: 0.5, 0: 1, 1: 0.5j}, dim=dim)

    evolution = Evolution(T=T, basis=basis)
    evolution.build(packet.state, TIMES)
    return evolution.profile(paths, origin=chain)


def test_zero_motion_stays_on_its_path():
    shape = LatticeShape(1, 6)
    profile = _confined_profile(StepOperator(example_machine("zero_motion"), shape).operator)
    assert profile["leakage"].max() < 1e-9
    assert (profile["norm"] - 1).abs().max() < 1e-9


def test_bit_rotation_stays_on_its_path():
    shape = LatticeShape(1, 5)
    basis = bit_rotation_stable_basis(shape=shape)
    profile = _confined_profile(StepOperator(example_machine("bit_rotation"), shape).operator, basis)
    assert profile["leakage"].max() < 1e-9
    assert (profile["norm"] - 1).abs().max() < 1e-9


def test_split_machine_stays_on_its_path():
    shape = LatticeShape(5, 5)
    basis = appendix_b_stable_basis(shape=shape)
    profile = _confined_profile(StepOperator(example_machine("appendix_b"), shape).operator, basis)
    assert profile["leakage"].max() < 1e-9
    assert (profile["norm"] - 1).abs().max() < 1e-9


def test_wave_packet():
    paths = extract_paths(open_shift(5))
    packet = wave_packet(paths, 2, {-1: 1, 0: 1, 1: 1})
    np.testing.assert_allclose(packet.state, np.array([0, 1, 1, 1, 0]) / np.sqrt(3))

    with pytest.raises(LatticeRangeError):
        wave_packet(paths, 4, {1: 1})
    with pytest.raises(PreconditionError):
        wave_packet(paths, 2, {0: 0})
    with pytest.raises(PreconditionError):
        wave_packet(extract_paths(ComplexOperator.zero(2)), 0, {0: 1})


def test_profile_needs_a_time_series():
    evolution = Evolution(T=open_shift(3))
    with pytest.raises(PreconditionError):
        evolution.profile(extract_paths(open_shift(3)))
    with pytest.raises(PreconditionError):
        Evolution()


def test_continuum_limit():
    df = continuum_limit_check(4, 1.0, [1, 0.5, 0.25, 0.125])
    assert df["W"].tolist() == [4, 10, 22, 46]
    ratios = df["deviation_ratio"].dropna()
    assert len(ratios) == 3
    assert ratios.between(3.2, 4.8).all()
    assert df["deviation"].is_monotonic_decreasing


def test_continuum_limit_arguments():
    with pytest.raises(PreconditionError):
        continuum_limit_check(4, 1.0, [0.5, 1])
    with pytest.raises(PreconditionError):
        continuum_limit_check(4, 1.0, [1, 0.7])
    with pytest.raises(PreconditionError):
        continuum_limit_check(4, 1.0, [])


def test_width_scan():
    df = width_scan([10, 100, 1000], 1.0, 1.0)
    assert df["E_D2"].iloc[-1] == pytest.approx(np.pi ** 2, rel=1e-5)
    assert (df["E_D2"] <= np.pi ** 2).all()


def test_off_path_state_only_changes_phase():
    shape = LatticeShape(1, 4)
    T = StepOperator(example_machine("zero_motion"), shape).operator
    # head on the left edge over a 1: neither T nor T† moves it
    state = encode(0, 0, 1, shape)
    assert state in extract_paths(T).zero_length

    K = 0.75
    psi0 = np.zeros(T.dim, dtype=complex)
    psi0[state] = 1
    times = [0.0, 0.3, 1.7, 12.0]
    for t, psi in zip(times, evolve(feynman_hamiltonian(T, K), psi0, times)):
        np.testing.assert_allclose(psi, np.exp(-2j * K * t) * psi0, atol=1e-10)


def test_packet_reflects_at_the_chain_end():
    T = open_shift(12)
    paths = extract_paths(T)
    offsets = range(-4, 5)
    packet = wave_packet(paths, 5, {n: np.exp(-n ** 2 / 4.5 + 0.5j * np.pi * n) for n in offsets})

    H = feynman_hamiltonian(T)
    times = np.linspace(0, 6, 61)
    states = evolve(H, packet.state, times)
    sites = np.arange(T.dim)
    position = np.array([np.sum(sites * np.abs(psi) ** 2) for psi in states])

    turn = int(np.argmax(position))
    assert 0 < turn < len(times) - 1
    assert position[turn] > position[0] + 1
    assert position[-1] < position[turn] - 1

    np.testing.assert_allclose(states[20], expm(-1j * times[20] * H.matrix.dense()) @ packet.state, atol=1e-10)


def test_packets_on_two_chains_evolve_independently():
    T = ComplexOperator.from_triplets([1, 2, 3, 4, 6, 7, 8, 9], [0, 1, 2, 3, 5, 6, 7, 8], 1.0, 10)
    paths = extract_paths(T)
    first = wave_packet(paths, 1, {0: 1, 1: 1j})
    second = wave_packet(paths, 8, {-1: 1, 0: -1})
    psi0 = np.sqrt(0.3) * first.state + np.sqrt(0.7) * second.state

    evolution = Evolution(T=T, K=2.0)
    evolution.build(psi0, TIMES)
    profile = evolution.profile(paths)
    np.testing.assert_allclose(profile[f"chain_{first.chain}"], 0.3, atol=1e-9)
    np.testing.assert_allclose(profile[f"chain_{second.chain}"], 0.7, atol=1e-9)
    assert (profile["norm"] - 1).abs().max() < 1e-9


@pytest.mark.parametrize("seed", range(10))
def test_random_on_path_states_stay_on_their_path(seed):
    rng = np.random.default_rng(seed)
    T, _ = random_partial_injection(int(rng.integers(8, 41)), rng, phases=True)
    paths = extract_paths(T)
    chain = int(np.argmax(paths.lengths()))
    states = paths.chains[chain]

    psi0 = np.zeros(T.dim, dtype=complex)
    psi0[states] = rng.normal(size=len(states)) + 1j * rng.normal(size=len(states))
    psi0 /= np.linalg.norm(psi0)

    K = float(rng.uniform(0.5, 2.0))
    evolution = Evolution(T=T, K=K)
    evolution.build(psi0, rng.uniform(0, 50 / K, size=20))
    profile = evolution.profile(paths, origin=chain)
    assert profile["leakage"].max() < 1e-9
    assert (profile["norm"] - 1).abs().max() < 1e-9


def test_reconstruction_rejects_fixed_points_and_two_cycles():
    # T|2> = |2> leaves H with a zero diagonal element at 2
    fixed_point = ComplexOperator.from_triplets([1, 2], [0, 2], 1.0, 3)
    with pytest.raises(NonBallisticError) as e:
        reconstruct_step_operator(feynman_hamiltonian(fixed_point))
    assert e.value.state == 2

    # a 2-cycle doubles the hopping element to -2K
    two_cycle = ComplexOperator.from_triplets([1, 0, 3], [0, 1, 2], 1.0, 4)
    with pytest.raises(NonBallisticError):
        reconstruct_step_operator(feynman_hamiltonian(two_cycle))
