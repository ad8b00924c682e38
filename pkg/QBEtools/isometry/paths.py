#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import (
    DistinctnessError,
    NormViolationError,
    NotStableError,
)
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import args_to_operator, default_tolerance

from .basis import Basis
from .orthogonality import is_orthogonality_preserving
from .partial_isometry import is_partial_isometry
from .stability import is_stable_on_basis

from dataclasses import dataclass, field
import numpy as np
import logging

logger = logging.getLogger(__name__)

OPEN_CHAIN = "open_chain"
CYCLE = "cycle"


@dataclass
class PathSet:
    """ Distinct paths of a step operator: chains of basis labels in step order, each
        flagged open_chain or cycle, plus the states annihilated by both T and T† """

    chains: list
    kinds: list
    zero_length: frozenset
    successor_amplitudes: dict = field(default_factory=dict)
    labels: tuple = ()

    def __post_init__(self):
        self._chain_of = {}
        for i, chain in enumerate(self.chains):
            for label in chain:
                self._chain_of[label] = i
        self._position = {label: pos for pos, label in enumerate(self.labels)}

    def __len__(self):
        return len(self.chains)

    def chain_index(self, label):
        """ Returns the index of the chain holding `label`, or None for zero-length states """

        return self._chain_of.get(label)

    def position(self, label):
        """ Returns the basis position of a label """

        return self._position.get(label, label)

    def lengths(self):
        return [len(c) for c in self.chains]

    def states(self):
        return set(self._chain_of) | set(self.zero_length)

    def canonical(self):
        """ Returns the chains as a frozenset of (kind, tuple) ignoring direction and,
            for cycles, the starting state """

        out = set()
        for kind, chain in zip(self.kinds, self.chains):
            chain = tuple(chain)
            if kind == CYCLE:
                k = chain.index(min(chain))
                rotated = chain[k:] + chain[:k]
                backward = (rotated[0],) + tuple(reversed(rotated[1:]))
                chain = min(rotated, backward)
            else:
                chain = min(chain, tuple(reversed(chain)))
            out.add((kind, chain))
        return frozenset(out)

    def to_dict(self):
        return {
            "chains": [
                {"kind": kind, "states": list(chain)} for kind, chain in zip(self.kinds, self.chains)
            ],
            "zero_length": sorted(self.zero_length),
            "n_chains": sum(1 for k in self.kinds if k == OPEN_CHAIN),
            "n_cycles": sum(1 for k in self.kinds if k == CYCLE),
        }


def _step_map(A, labels, eps):
    """ Returns successor and predecessor arrays (−1 for none) and amplitudes, raising
        on branching, merging or non-unit amplitudes """

    A = A.tocsc()
    k = A.shape[0]
    counts = np.diff(A.indptr)

    branching = np.flatnonzero(counts > 1)
    if branching.size:
        col = int(branching[0])
        raise NotStableError(
            f"state {labels[col]} steps onto a superposition of {counts[col]} states",
            state=int(labels[col]),
        )

    cols = np.flatnonzero(counts == 1)
    rows = A.indices[A.indptr[cols]]
    alphas = A.data[A.indptr[cols]]

    off_unit = np.flatnonzero(np.abs(np.abs(alphas) - 1) > eps)
    if off_unit.size:
        c = off_unit[0]
        raise NormViolationError(labels[cols[c]], alphas[c])

    order = np.argsort(rows, kind="stable")
    collide = np.flatnonzero(rows[order][1:] == rows[order][:-1])
    if collide.size:
        c = collide[0]
        first, second = cols[order][c], cols[order][c + 1]
        raise DistinctnessError(labels[first], labels[second], labels[rows[order][c]])

    succ = np.full(k, -1, dtype=np.int64)
    pred = np.full(k, -1, dtype=np.int64)
    succ[cols] = rows
    pred[rows] = cols
    amplitudes = dict(zip(cols.tolist(), alphas.tolist()))
    return succ, pred, amplitudes


@default_tolerance
@args_to_operator
def extract_paths(T, B=None, tol=None):
    """ Returns the PathSet traced by T on the basis B (computational by default) """

    B = Basis.computational(T.dim) if B is None else B
    residual = B.invariance_residual(T)
    if residual > tol.eps_proj:
        raise NotStableError(f"basis family is not invariant under T and T† (residual {residual:.3e})")

    A = ComplexOperator(B.conjugate(T), tol.eps_zero).matrix
    labels = B.labels
    succ, pred, amplitudes = _step_map(A, labels, tol.eps_zero)

    k = A.shape[0]
    visited = np.zeros(k, dtype=bool)
    chains, kinds, zero_length = [], [], set()

    for start in range(k):
        if pred[start] >= 0:
            continue
        if succ[start] < 0:
            zero_length.add(int(labels[start]))
            visited[start] = True
            continue
        chain, node = [], start
        while node >= 0:
            chain.append(int(labels[node]))
            visited[node] = True
            node = succ[node]
        chains.append(chain)
        kinds.append(OPEN_CHAIN)

    for start in np.flatnonzero(~visited):
        if visited[start]:
            continue
        chain, node = [], int(start)
        while not visited[node]:
            chain.append(int(labels[node]))
            visited[node] = True
            node = succ[node]
        chains.append(chain)
        kinds.append(CYCLE)

    logger.debug(
        "extracted %d chains, %d cycles, %d zero-length states",
        kinds.count(OPEN_CHAIN), kinds.count(CYCLE), len(zero_length),
    )
    successor_amplitudes = {int(labels[c]): complex(a) for c, a in amplitudes.items()}
    return PathSet(chains, kinds, frozenset(zero_length), successor_amplitudes, tuple(int(x) for x in labels))


@default_tolerance
@args_to_operator
def is_distinct_path_generating(T, B=None, tol=None):
    """ Returns a report on whether T is a stable, orthogonality preserving partial
        isometry on B whose paths are node-disjoint """

    B = Basis.computational(T.dim) if B is None else B
    checks = {
        "partial_isometry": is_partial_isometry(T, tol=tol),
        "orthogonality_preserving": is_orthogonality_preserving(T, tol=tol),
        "stable": is_stable_on_basis(T, B, tol=tol),
    }

    residuals = {}
    for report in checks.values():
        residuals.update(report.residuals)

    details = {name: report.verdict for name, report in checks.items()}
    witness = None
    paths = None
    try:
        paths = extract_paths(T, B, tol=tol)
    except (NotStableError, DistinctnessError, NormViolationError) as e:
        witness = {"paths": e.to_dict()}

    for name, report in checks.items():
        if not report and witness is None:
            witness = {name: report.witness}

    verdict = all(details.values()) and paths is not None
    if paths is not None:
        details["paths"] = paths
    if not verdict and witness is None:
        witness = {"failure": [name for name, ok in details.items() if ok is False]}
    return PredicateReport(verdict, residuals, witness, details)
