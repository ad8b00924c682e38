#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import DistinctnessError, NormViolationError, NotStableError
from QBEtools.isometry.basis import Basis
from QBEtools.isometry.paths import extract_paths, CYCLE, OPEN_CHAIN
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import default_tolerance

from .hamiltonian import as_operator
from .predictions import predicted_eigenvector

from scipy.linalg import eigh
import numpy as np
import logging

logger = logging.getLogger(__name__)

OVERLAP_FLOOR = 1 - 1e-8


def _component_states(decomposition, prediction, tol):
    """ Returns (states, chains) of the component matching a prediction: the sorted
        basis indices spanning it and its chains in step order (None when the
        component is not diagonal in the computational basis) """

    T = decomposition.operator
    if prediction.kind == "cycle":
        paths = decomposition.unitary_paths
        if paths is None:
            return None, None
        chains = [c for c, k in zip(paths.chains, paths.kinds) if k == CYCLE and len(c) == prediction.size]
        if not chains:
            return None, None
        return np.array(sorted(s for c in chains for s in c)), chains

    index = prediction.parameter + 1 if prediction.kind == "bound_band" else prediction.parameter
    component = decomposition.truncated_shift(index)
    if component is None:
        return None, None

    P = component.projector
    if not P.is_diagonal():
        w, V = eigh(P.dense())
        return Basis(P.dim, V[:, w > 0.5], validate=False), None

    states = np.flatnonzero(P.matrix.diagonal().real > 0.5)
    try:
        paths = extract_paths(T, Basis.from_indices(T.dim, states), tol=tol)
    except (NotStableError, DistinctnessError, NormViolationError):
        return states, None
    chains = [c for c, k in zip(paths.chains, paths.kinds) if k == OPEN_CHAIN]
    return states, chains


@default_tolerance
def verify_spectrum(H, decomposition, predictions, tol=None):
    """ Returns a report comparing, component by component, the exact spectrum of H
        with closed-form predictions: level multisets within eps_eig and eigenvector
        overlaps of at least 1 − 1e-8 """

    H = as_operator(H)
    rows = []
    worst = None
    max_deviation, min_overlap = 0.0, 1.0

    for prediction in predictions:
        states, chains = _component_states(decomposition, prediction, tol)
        row = {"kind": prediction.kind, "parameter": prediction.parameter}
        rows.append(row)

        if states is None:
            row["status"] = "missing_component"
            worst = worst or {"prediction": prediction.kind, "parameter": prediction.parameter, "failure": "no matching component"}
            max_deviation = np.inf
            continue

        if isinstance(states, Basis):
            block = states.conjugate(H).dense()
            n_states = states.size
        else:
            block = H.restrict(states).dense()
            n_states = len(states)

        energies, vectors = eigh((block + block.conj().T) / 2)
        copies, remainder = divmod(n_states, prediction.size)
        row["copies"] = copies
        if remainder:
            row["status"] = "size_mismatch"
            worst = worst or {"prediction": prediction.kind, "parameter": prediction.parameter, "failure": f"component has {n_states} states"}
            max_deviation = np.inf
            continue

        predicted = np.sort(np.repeat(prediction.energies, copies))
        deviations = np.abs(np.sort(energies) - predicted)
        level = int(np.argmax(deviations))
        row["max_deviation"] = float(deviations[level])
        max_deviation = max(max_deviation, row["max_deviation"])
        if deviations[level] > tol.eps_eig and (worst is None or "deviation" not in worst or deviations[level] > worst["deviation"]):
            worst = {
                "prediction": prediction.kind,
                "parameter": prediction.parameter,
                "predicted": float(predicted[level]),
                "exact": float(np.sort(energies)[level]),
                "deviation": float(deviations[level]),
            }

        row["min_overlap"] = _min_overlap(prediction, states, chains, energies, vectors, tol)
        if row["min_overlap"] is not None:
            min_overlap = min(min_overlap, row["min_overlap"])
            if row["min_overlap"] < OVERLAP_FLOOR and worst is None:
                worst = {"prediction": prediction.kind, "parameter": prediction.parameter, "overlap": row["min_overlap"]}
        row["status"] = "ok"

    verdict = max_deviation <= tol.eps_eig and min_overlap >= OVERLAP_FLOOR
    residuals = {"max_deviation": float(max_deviation), "min_overlap": float(min_overlap)}
    return PredicateReport(verdict, residuals, None if verdict else worst, {"components": rows})


def _min_overlap(prediction, states, chains, energies, vectors, tol):
    """ Returns the smallest norm of a predicted eigenvector projected onto the exact
        eigenspace of its level, over every chain of the component """

    if chains is None or isinstance(states, Basis):
        return None

    position = {int(s): p for p, s in enumerate(states)}
    worst = 1.0
    for chain in chains:
        if len(chain) != prediction.size:
            continue
        local = np.array([position[s] for s in chain])
        for m, energy in enumerate(prediction.energies, start=1):
            vector = np.zeros(len(states), dtype=complex)
            vector[local] = predicted_eigenvector(prediction.kind, prediction.parameter, m)
            level = vectors[:, np.abs(energies - energy) <= tol.eps_eig]
            worst = min(worst, float(np.linalg.norm(level.conj().T @ vector)))
    return worst
