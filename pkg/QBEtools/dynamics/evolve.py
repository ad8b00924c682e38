#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import (
    DimensionMismatchError,
    InternalInconsistencyError,
    LatticeRangeError,
    PreconditionError,
)
from QBEtools.isometry.paths import CYCLE
from QBEtools.wrappers import default_tolerance

from .hamiltonian import Hamiltonian, as_operator, feynman_hamiltonian
from .spectrum import spectrum

from dataclasses import dataclass
import numpy as np
import pandas as pd
import logging

logger = logging.getLogger(__name__)

NORM_DRIFT = 1e-9


@default_tolerance
def evolve(H, psi0, times, eigen=None, dense_cap=None, tol=None):
    """ Returns e^{−iHt}ψ₀ for every t, by spectral decomposition """

    eigen = spectrum(H, dense_cap, tol=tol) if eigen is None else eigen
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (eigen.vectors.shape[0],):
        raise DimensionMismatchError(f"state length {psi0.shape} does not match dimension {eigen.vectors.shape[0]}")

    V = eigen.vectors
    amplitudes = V.conj().T @ psi0
    norm0 = np.linalg.norm(psi0)

    states = []
    for t in times:
        psi = V @ (np.exp(-1j * eigen.energies * float(t)) * amplitudes)
        drift = abs(np.linalg.norm(psi) - norm0)
        if drift > NORM_DRIFT:
            raise InternalInconsistencyError(f"norm drifted by {drift:.3e} at t={t}", drift)
        states.append(psi)
    return states


@dataclass
class WavePacket:
    """ A normalised state with coefficients c_n at offsets n along one chain """

    origin: int
    chain: int
    coefficients: dict
    state: np.ndarray


def wave_packet(paths, origin, coefficients, dim=None, basis=None):
    """ Returns the WavePacket with `coefficients` {offset: c} placed along the chain of
        basis label `origin`; positive offsets follow T, negative ones T† """

    chain_index = paths.chain_index(origin)
    if chain_index is None:
        raise PreconditionError(f"state {origin} does not lie on a chain")
    chain = paths.chains[chain_index]
    cyclic = paths.kinds[chain_index] == CYCLE
    start = chain.index(origin)

    size = basis.size if basis is not None else (dim if dim is not None else len(paths.labels))
    coords = np.zeros(size, dtype=complex)
    for offset, c in dict(coefficients).items():
        target = start + int(offset)
        if cyclic:
            target %= len(chain)
        elif not 0 <= target < len(chain):
            raise LatticeRangeError("offset", offset, len(chain) - start)
        coords[paths.position(chain[target])] += c

    norm = np.linalg.norm(coords)
    if norm == 0:
        raise PreconditionError("wave packet coefficients are all zero")
    coords /= norm
    state = basis.embed(coords) if basis is not None else coords
    return WavePacket(origin, chain_index, dict(coefficients), state)


def path_support_profile(psi, paths, basis=None, origin=None):
    """ Returns the probability carried by each chain and by the zero-length states,
        and the leakage: the probability outside the origin chain (by default the chain
        carrying the most probability) """

    psi = np.asarray(psi, dtype=complex)
    total = float(np.vdot(psi, psi).real)
    coords = basis.coordinates(psi) if basis is not None else psi
    weights = np.abs(coords) ** 2

    chains = [float(sum(weights[paths.position(s)] for s in chain)) for chain in paths.chains]
    zero_length = float(sum(weights[paths.position(s)] for s in paths.zero_length))

    if origin is None:
        origin = int(np.argmax(chains)) if chains else None
    on_origin = chains[origin] if origin is not None else 0.0
    return {
        "chains": chains,
        "zero_length": zero_length,
        "origin": origin,
        "leakage": max(total - on_origin, 0.0),
        "norm": float(np.sqrt(total)),
    }


class Evolution:
    """ Time evolution under a Feynman Hamiltonian, kept with its eigendecomposition so
        that time series can be sampled repeatedly """

    def __init__(self, H=None, T=None, K=1.0, basis=None, dense_cap=None, tol=None):
        if H is None and T is None:
            raise PreconditionError("Evolution needs a Hamiltonian or a step operator")
        if H is None:
            H = feynman_hamiltonian(T, K, tol=tol)

        self.K = H.K if isinstance(H, Hamiltonian) else float(K)
        H = as_operator(H)
        self.basis = basis
        self.H = basis.conjugate(H) if basis is not None and not basis.is_computational else H
        self.spectrum = spectrum(self.H, dense_cap, tol=tol)
        self.tol = tol
        self.evolution = {}

    def build(self, psi0, times):
        """ Create the time series of states; psi0 is given in basis coordinates when
            the Evolution was built on a basis family """

        times = [float(t) for t in times]
        states = evolve(self.H, psi0, times, eigen=self.spectrum, tol=self.tol)

        self.evolution = {
            "t": times,
            "states": states,
            "norm": [float(np.linalg.norm(s)) for s in states],
        }
        return self.evolution

    def profile(self, paths, origin=None, chains=None):
        """ Returns a DataFrame with columns t, chain_<i> for the chosen chains (default
            all), leakage and norm """

        if not self.evolution:
            raise PreconditionError("call build() before profile()")

        chains = range(len(paths.chains)) if chains is None else chains
        records = []
        for t, psi in zip(self.evolution["t"], self.evolution["states"]):
            support = path_support_profile(psi, paths, origin=origin)
            origin = support["origin"] if origin is None else origin
            record = {"t": t}
            record.update({f"chain_{i}": support["chains"][i] for i in chains})
            record["leakage"] = support["leakage"]
            record["norm"] = support["norm"]
            records.append(record)

        return pd.DataFrame.from_records(records)
