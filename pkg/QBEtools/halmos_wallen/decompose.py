#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import (
    DecompositionError,
    DistinctnessError,
    NormViolationError,
    NotStableError,
)
from QBEtools.hilbert.operator import ComplexOperator, commutator, rank_of_projection
from QBEtools.isometry.basis import Basis
from QBEtools.isometry.paths import extract_paths, CYCLE
from QBEtools.wrappers import args_to_operator, default_tolerance

from .defect_chain import defect_chain

from dataclasses import dataclass, field
from scipy.linalg import eigh
import numpy as np
import logging

logger = logging.getLogger(__name__)


@dataclass
class TruncatedShift:
    """ Truncated shift component of index n: its projector and the slot projectors
        P_{n,1} .. P_{n,n}, which T moves forward one slot at a time """

    index: int
    projector: ComplexOperator
    slots: list

    @property
    def rank(self):
        return rank_of_projection(self.projector)

    @property
    def copies(self):
        return self.rank // self.index


@dataclass
class Decomposition:
    """ Halmos–Wallen splitting of a power partial isometry into unitary, pure
        isometric, pure coisometric and truncated shift parts """

    unitary_proj: ComplexOperator
    isometry_proj: ComplexOperator
    coisometry_proj: ComplexOperator
    truncated: list
    operator: ComplexOperator
    chain: object
    unitary_classification: str = "empty"
    unitary_paths: object = None
    residuals: dict = field(default_factory=dict)

    def truncated_shift(self, index):
        """ Returns the truncated shift component of the given index, or None """

        return next((t for t in self.truncated if t.index == index), None)

    def components(self):
        """ Returns (name, projector) for every nonempty component """

        out = []
        for name in ("unitary", "isometry", "coisometry"):
            P = getattr(self, f"{name}_proj")
            if rank_of_projection(P):
                out.append((name, P))
        out.extend((f"truncated_shift_{t.index}", t.projector) for t in self.truncated)
        return out

    def summary(self):
        return {
            "dim": self.operator.dim,
            "ranks": {
                "unitary": rank_of_projection(self.unitary_proj),
                "isometry": rank_of_projection(self.isometry_proj),
                "coisometry": rank_of_projection(self.coisometry_proj),
            },
            "truncated_shifts": [
                {"index": t.index, "rank": t.rank, "copies": t.copies} for t in self.truncated
            ],
            "unitary_classification": self.unitary_classification,
            "stop_index": self.chain.stop_index,
            "residuals": dict(self.residuals),
        }

    def to_dict(self):
        return self.summary()


@default_tolerance
@args_to_operator
def decompose(T, tol=None):
    """ Returns the Halmos–Wallen Decomposition of a power partial isometry """

    chain = defect_chain(T, tol=tol)
    I_inf, F_inf = chain.I_inf, chain.F_inf

    unitary = I_inf.compose(F_inf)
    isometry = I_inf - unitary
    coisometry = F_inf - unitary

    truncated = []
    for n in range(1, chain.stop_index + 1):
        slots = [
            (chain.final(l - 1) - chain.final(l)).compose(
                chain.initial(n - l) - chain.initial(n - l + 1)
            )
            for l in range(1, n + 1)
        ]
        P_n = slots[0]
        for slot in slots[1:]:
            P_n = P_n + slot
        if rank_of_projection(P_n) > 0:
            truncated.append(TruncatedShift(n, P_n, slots))

    decomposition = Decomposition(unitary, isometry, coisometry, truncated, T, chain)
    decomposition.residuals = _check_components(decomposition, tol)
    _classify_unitary_part(decomposition, tol)

    logger.debug("decomposition: %s", decomposition.summary()["ranks"])
    return decomposition


def _check_components(decomposition, tol):
    T = decomposition.operator
    projectors = [P for _, P in decomposition.components()]

    total = ComplexOperator.zero(T.dim)
    for P in projectors:
        total = total + P
    completeness = (total - ComplexOperator.identity(T.dim)).norm()
    if completeness > tol.eps_proj:
        raise DecompositionError("component projectors do not sum to the identity", completeness)

    orthogonality = 0.0
    for i, P in enumerate(projectors):
        for Q in projectors[i + 1:]:
            orthogonality = max(orthogonality, P.compose(Q).norm())
    if orthogonality > tol.eps_proj:
        raise DecompositionError("component projectors are not mutually orthogonal", orthogonality)

    initial = T.adjoint().compose(T)
    final = T.compose(T.adjoint())
    reducing = 0.0
    for P in projectors:
        reducing = max(reducing, commutator(P, initial).norm(), commutator(P, final).norm())
    if reducing > tol.eps_comm:
        raise DecompositionError("a component projector does not commute with T†T and TT†", reducing)

    # T carries slot l into slot l + 1 and annihilates the last slot
    slot_motion = 0.0
    for shift in decomposition.truncated:
        for l, S in enumerate(shift.slots):
            TS = T.compose(S)
            if l + 1 < len(shift.slots):
                TS = TS - shift.slots[l + 1].compose(TS)
            slot_motion = max(slot_motion, TS.norm())
    if slot_motion > tol.eps_comm:
        raise DecompositionError("T does not move the truncated shift slots forward", slot_motion)

    return {
        "completeness": completeness,
        "orthogonality": orthogonality,
        "reducing": reducing,
        "slot_motion": slot_motion,
    }


def _classify_unitary_part(decomposition, tol):
    P = decomposition.unitary_proj
    if rank_of_projection(P) == 0:
        decomposition.unitary_classification = "empty"
        return

    if P.is_diagonal():
        indices = np.flatnonzero(P.matrix.diagonal().real > 0.5)
        family = Basis.from_indices(P.dim, indices)
    else:
        w, V = eigh(P.dense())
        family = Basis(P.dim, V[:, w > 0.5], validate=False)

    try:
        paths = extract_paths(decomposition.operator, family, tol=tol)
    except (NotStableError, DistinctnessError, NormViolationError) as e:
        logger.debug("unitary part is not path generating on the working basis: %s", e)
        decomposition.unitary_classification = "non_ballistic"
        return

    decomposition.unitary_paths = paths
    only_cycles = all(kind == CYCLE for kind in paths.kinds)
    decomposition.unitary_classification = "cycles" if only_cycles else "ballistic_compatible"
