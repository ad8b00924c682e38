#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import PreconditionError

from dataclasses import dataclass
import numpy as np

KINDS = ("cycle", "truncated_shift", "isometric_standing_wave", "bound_band")


@dataclass
class SpectrumPrediction:
    """ Closed-form levels E_k = 2K(1 − cos k) of one component kind """

    kind: str
    parameter: int
    momenta: np.ndarray
    energies: np.ndarray
    multiplicity: int = 1
    K: float = 1.0

    @property
    def size(self):
        """ Number of states of one copy of the component """

        return len(self.energies)

    def levels(self):
        """ Returns the predicted energies repeated by multiplicity, ascending """

        return np.sort(np.repeat(self.energies, self.multiplicity))

    def to_dict(self):
        return {
            "kind": self.kind,
            "parameter": self.parameter,
            "momenta": self.momenta.tolist(),
            "energies": self.energies.tolist(),
            "multiplicity": self.multiplicity,
            "K": self.K,
        }


def momenta(kind, parameter):
    """ Returns the allowed momenta k for m = 1, 2, ... of a component kind """

    p = int(parameter)
    if kind == "cycle":
        _check(p >= 0, kind, p)
        return 2 * np.pi * np.arange(1, p + 2) / (p + 1)
    if kind in ("truncated_shift", "isometric_standing_wave"):
        _check(p >= 1, kind, p)
        return np.pi * np.arange(1, p + 1) / (p + 1)
    if kind == "bound_band":
        _check(p >= 0, kind, p)
        return np.pi * np.arange(1, p + 2) / (p + 2)
    raise PreconditionError(f"prediction kind must be one of {KINDS}, got {kind!r}")


def _check(ok, kind, p):
    if not ok:
        raise PreconditionError(f"invalid parameter {p} for {kind}")


def predicted_spectrum(kind, parameter, K=1.0, multiplicity=1):
    """ Returns the SpectrumPrediction of a cycle of M + 1 states (parameter M), a
        truncated shift or standing-wave window of N states (parameter N) or a bound
        band between two 1s enclosing W 0s (parameter W) """

    k = momenta(kind, parameter)
    return SpectrumPrediction(kind, int(parameter), k, 2 * K * (1 - np.cos(k)), int(multiplicity), float(K))


def predicted_eigenvector(kind, parameter, m, padded=False):
    """ Returns the unit-norm closed-form eigenvector of level m (from 1) along the
        component's states in step order.  With `padded`, a bound band profile also
        carries the two barrier positions, where it vanishes. """

    k_all = momenta(kind, parameter)
    if not 1 <= m <= len(k_all):
        raise PreconditionError(f"level m={m} out of range 1..{len(k_all)} for {kind}")
    k = k_all[m - 1]
    p = int(parameter)

    if kind == "cycle":
        vector = np.exp(1j * k * np.arange(p + 1))
    elif kind == "truncated_shift":
        vector = np.sin(k * (np.arange(p) - p)).astype(complex)
    elif kind == "isometric_standing_wave":
        vector = np.sin(k * (np.arange(p) + 1)).astype(complex)
    else:
        n = np.arange(-1, p + 2) if padded else np.arange(p + 1)
        vector = np.sin(k * (n - p - 1)).astype(complex)
        if padded:
            vector[[0, -1]] = 0

    return vector / np.linalg.norm(vector)


def parse_prediction(text, K=1.0):
    """ Returns the SpectrumPrediction named by "kind:parameter[:multiplicity]" """

    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise PreconditionError(f"prediction must read kind:parameter[:multiplicity], got {text!r}")
    try:
        values = [int(x) for x in parts[1:]]
    except ValueError:
        raise PreconditionError(f"prediction parameters must be integers, got {text!r}")
    return predicted_spectrum(parts[0], *values[:1], K=K, multiplicity=values[1] if len(values) > 1 else 1)
