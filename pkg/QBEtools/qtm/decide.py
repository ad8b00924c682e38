#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import InternalInconsistencyError
from QBEtools.isometry.basis import Basis
from QBEtools.isometry.orthogonality import is_orthogonality_preserving
from QBEtools.isometry.partial_isometry import is_partial_isometry
from QBEtools.isometry.paths import extract_paths, is_distinct_path_generating
from QBEtools.isometry.powers import is_power_partial_isometry
from QBEtools.utils.report import jsonable
from QBEtools.wrappers import args_to_operator, default_tolerance

from .condition_x import condition_x
from .deterministic import is_deterministic
from .norm_profile import column_norm_decay
from .step_operator import StepOperator

from dataclasses import dataclass, field
import numpy as np
import logging

logger = logging.getLogger(__name__)

BALLISTIC = "ballistic"
NOT_BALLISTIC = "not_ballistic"
PARTIALLY_BALLISTIC = "partially_ballistic"
UNDECIDED = "undecided"
VERDICTS = (BALLISTIC, NOT_BALLISTIC, PARTIALLY_BALLISTIC, UNDECIDED)


@dataclass
class MachineVerdict:
    """ Outcome of the decision procedure for one machine on one lattice """

    partial_isometry: bool
    orthogonality: bool
    condition_x: bool
    deterministic: bool
    ballistic_verdict: str
    evidence: dict = field(default_factory=dict)

    @property
    def is_positive(self):
        return self.ballistic_verdict in (BALLISTIC, PARTIALLY_BALLISTIC)

    def to_dict(self):
        return {
            "partial_isometry": self.partial_isometry,
            "orthogonality": self.orthogonality,
            "condition_x": self.condition_x,
            "deterministic": self.deterministic,
            "ballistic_verdict": self.ballistic_verdict,
            "evidence": jsonable(self.evidence),
        }


@default_tolerance
@args_to_operator
def ballistic_subspace(T, tol=None):
    """ Returns the computational states spanning the largest family on which T acts as a
        partial injection with unit amplitudes and which T and T† leave invariant,
        together with its PathSet """

    eps = tol.eps_zero
    good = np.ones(T.dim, dtype=bool)
    single = []
    for A in (T.matrix.tocsc(), T.matrix.conj().T.tocsc()):
        counts = np.diff(A.indptr)
        good &= counts <= 1
        cols = np.flatnonzero(counts == 1)
        values = A.data[A.indptr[cols]]
        good[cols[np.abs(np.abs(values) - 1) > eps]] = False
        single.append((cols, A.indices[A.indptr[cols]]))

    changed = True
    while changed:
        changed = False
        for cols, rows in single:
            leaving = good[cols] & ~good[rows]
            if leaving.any():
                good[cols[leaving]] = False
                changed = True

    states = np.flatnonzero(good)
    paths = extract_paths(T, Basis.from_indices(T.dim, states), tol=tol)
    logger.debug("ballistic subspace: %d states, longest path %d", states.size, max(paths.lengths(), default=0))
    return states, paths


@default_tolerance
def decide_ballistic(rules, shape, basis=None, tol=None, n_steps=None):
    """ Decides whether a machine's step operator is ballistic on a lattice.

        Partial isometry and orthogonality preservation are necessary, so failing
        either is a negative verdict carrying the witness.  A supplied complete basis
        on which T is distinct path generating proves a positive verdict.
        Deterministic machines are decided on the computational basis.  Otherwise the
        powers of T are searched for norm decay and checked for partial isometry; an
        obstruction found there yields "partially_ballistic" when some computational
        subspace still carries a path of two or more states.  When nothing decides,
        the verdict is "undecided" and the evidence says what was tried.
    """

    step = StepOperator(rules, shape)
    T = step.operator
    n_steps = 4 * shape.n_head * shape.length if n_steps is None else int(n_steps)

    pi = is_partial_isometry(T, tol=tol)
    op = is_orthogonality_preserving(T, tol=tol)
    cx = condition_x(rules, tol=tol)
    det = is_deterministic(rules, tol=tol)

    if cx and not pi:
        raise InternalInconsistencyError(
            "the rule table satisfies condition X but its step operator is not a partial isometry",
            residual=max(pi.residuals.values()),
        )

    evidence = {"residuals": {**pi.residuals, **op.residuals}}
    if not cx:
        evidence["condition_x"] = cx.witness

    def verdict(value, **more):
        evidence.update(more)
        logger.info("machine %s on %s: %s", rules.name, shape, value)
        return MachineVerdict(pi.verdict, op.verdict, cx.verdict, det, value, evidence)

    if not pi:
        return verdict(NOT_BALLISTIC, reason="not a partial isometry", witness=pi.witness)
    if not op:
        return verdict(NOT_BALLISTIC, reason="not orthogonality preserving", witness=op.witness)

    if basis is not None:
        report = is_distinct_path_generating(T, basis, tol=tol)
        evidence["supplied_basis"] = {
            "size": basis.size,
            "complete": basis.is_complete,
            "distinct_path_generating": report.verdict,
            "witness": report.witness,
        }
        if report and basis.is_complete:
            return verdict(BALLISTIC, reason="distinct path generating on the supplied basis",
                           paths=report.details["paths"])

    if det:
        report = is_distinct_path_generating(T, tol=tol)
        if report:
            return verdict(BALLISTIC, reason="deterministic: distinct paths on the computational basis",
                           paths=report.details["paths"])
        return verdict(NOT_BALLISTIC, reason="deterministic but paths are not distinct", witness=report.witness)

    decay = column_norm_decay(T, n_steps, eps=tol.eps_zero)
    ppi = is_power_partial_isometry(T, n_max=n_steps, tol=tol)
    evidence["norm_decay"] = decay
    evidence["power_partial_isometry"] = {
        "verdict": ppi.verdict,
        "first_failing_power": ppi.details.get("first_failing_power"),
        "powers_checked": ppi.details.get("powers_checked"),
    }

    if decay is not None or not ppi:
        states, paths = ballistic_subspace(T, tol=tol)
        longest = max(paths.lengths(), default=0)
        subspace = {"states": int(states.size), "longest_path": longest, "n_paths": len(paths)}
        if longest >= 2:
            return verdict(PARTIALLY_BALLISTIC, reason="ballistic on a computational subspace only",
                           subspace=subspace)
        if not ppi:
            return verdict(NOT_BALLISTIC, reason="a power of T is not a partial isometry",
                           witness=ppi.witness, subspace=subspace)
        return verdict(UNDECIDED, reason="norm decay found but no ballistic subspace", subspace=subspace)

    return verdict(
        UNDECIDED,
        reason="no obstruction found within the searched powers; supply a stable basis to decide",
        steps_searched=n_steps,
    )
