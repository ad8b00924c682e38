#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import args_to_operator, default_tolerance

from .basis import Basis

import numpy as np


def _column_violation(A, eps, labels):
    """ Returns (label, two largest (label, coefficient) pairs) for the first column of
        A that is neither zero nor a single unit-size coefficient, else None """

    A = A.tocsc()
    for col in range(A.shape[1]):
        start, stop = A.indptr[col], A.indptr[col + 1]
        values = A.data[start:stop]
        mags = np.abs(values)
        significant = mags > eps
        n_sig = int(significant.sum())
        if n_sig == 0:
            continue
        if n_sig == 1 and not (eps < mags[significant][0] < 1 - eps):
            continue
        top = np.argsort(-mags)[:2]
        coefficients = [(int(labels[A.indices[start + k]]), complex(values[k])) for k in top]
        return int(labels[col]), coefficients
    return None


@default_tolerance
@args_to_operator
def is_stable_on_basis(T, B=None, tol=None):
    """ Returns a report on whether T and T† map every basis state to zero or to a
        single basis state; when stable, details["successors"] maps each state to
        (next state, amplitude) """

    B = Basis.computational(T.dim) if B is None else B
    residuals = {"invariance": B.invariance_residual(T)}
    if residuals["invariance"] > tol.eps_proj:
        return PredicateReport(
            False, residuals, {"failure": "basis family is not invariant under T and T†"}
        )

    A = ComplexOperator(B.conjugate(T), tol.eps_zero).matrix
    for side, M in (("T", A), ("T_dagger", A.conj().T)):
        violation = _column_violation(M, tol.eps_zero, B.labels)
        if violation is not None:
            state, coefficients = violation
            witness = {"side": side, "state": state, "largest_coefficients": coefficients}
            return PredicateReport(False, residuals, witness)

    coo = A.tocoo()
    successors = {
        int(B.labels[c]): (int(B.labels[r]), complex(v)) for r, c, v in zip(coo.row, coo.col, coo.data)
    }
    return PredicateReport(True, residuals, details={"successors": successors})
