#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import InternalInconsistencyError, PreconditionError
from QBEtools.hilbert.operator import commutator
from QBEtools.utils.fix_phase import fix_phase
from QBEtools.utils.group_levels import group_levels
from QBEtools.utils.max_norm import argmax_entry
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import args_to_operator, default_tolerance

from .basis import Basis

from scipy.linalg import eigh
import numpy as np
import logging

logger = logging.getLogger(__name__)


@default_tolerance
@args_to_operator
def is_orthogonality_preserving(T, tol=None):
    """ Returns a report on whether T†T and TT† commute within eps_comm """

    initial = T.adjoint().compose(T)
    final = T.compose(T.adjoint())
    C = commutator(initial, final)
    residual = C.norm()
    verdict = residual <= tol.eps_comm

    witness = None
    if not verdict:
        row, col, value = argmax_entry(C)
        witness = {"commutator_entry": [row, col], "value": value}
    return PredicateReport(verdict, {"commutator": residual}, witness)


def weak_orthogonality_residual(T, basis):
    """ Returns the largest overlap <T p_i|T p_j> or <T† p_i|T† p_j>, i != j, over the
        basis states """

    A = basis.conjugate(T).dense()
    worst = 0.0
    for M in (A, A.conj().T):
        gram = M.conj().T @ M
        np.fill_diagonal(gram, 0)
        worst = max(worst, float(np.abs(gram).max(initial=0.0)))
    return worst


@default_tolerance
@args_to_operator
def joint_basis_candidate(T, tol=None):
    """ Returns (basis, residual): eigenvectors of T†T, refined inside each eigenvalue
        group by diagonalising TT†, and the weak orthogonality residual of T and T† on
        that basis """

    T_dense = T.dense()
    initial = T_dense.conj().T @ T_dense
    final = T_dense @ T_dense.conj().T

    w, V = eigh((initial + initial.conj().T) / 2)
    columns = []
    for group in group_levels(w, tol.eps_eig):
        block = V[:, group]
        inner = block.conj().T @ final @ block
        _, W = eigh((inner + inner.conj().T) / 2)
        columns.append(block @ W)

    vectors = fix_phase(np.hstack(columns), tol.eps_zero) if columns else V
    basis = Basis(T.dim, vectors, validate=False)
    return basis, weak_orthogonality_residual(T, basis)


@default_tolerance
@args_to_operator
def op_basis(T, tol=None):
    """ Returns a basis on which T and T† are both weakly orthogonality preserving """

    report = is_orthogonality_preserving(T, tol=tol)
    if not report:
        raise PreconditionError(
            f"T†T and TT† do not commute (residual {report.residuals['commutator']:.3e})"
        )

    basis, residual = joint_basis_candidate(T, tol=tol)
    logger.debug("joint basis residual %.3e for dim %d", residual, T.dim)
    if residual > tol.eps_comm:
        raise InternalInconsistencyError(
            f"joint eigenbasis fails the weak orthogonality check (residual {residual:.3e})",
            residual,
        )
    return basis
