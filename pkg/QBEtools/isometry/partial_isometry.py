#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.hilbert.is_projection import is_projection
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import args_to_operator, default_tolerance

import numpy as np
import scipy.sparse as sp


@default_tolerance
@args_to_operator
def is_partial_isometry(T, tol=None):
    """ Returns a report on whether both T†T and TT† are projections """

    initial = T.adjoint().compose(T)
    final = T.compose(T.adjoint())
    r_initial = is_projection(initial, tol=tol)
    r_final = is_projection(final, tol=tol)

    residuals = {
        "initial_idempotence": r_initial.residuals["idempotence"],
        "final_idempotence": r_final.residuals["idempotence"],
        "initial_hermiticity": r_initial.residuals["hermiticity"],
        "final_hermiticity": r_final.residuals["hermiticity"],
    }
    verdict = r_initial.verdict and r_final.verdict
    witness = None if verdict else _merging_states(initial, r_initial, r_final)
    return PredicateReport(verdict, residuals, witness)


def _merging_states(initial, r_initial, r_final):
    """ Returns a witness: the pair of states whose images overlap the most, or the
        state whose image norm is furthest from 0 or 1 """

    coo = sp.coo_matrix(initial.matrix)
    off = coo.row != coo.col
    if np.any(off):
        k = np.flatnonzero(off)[np.argmax(np.abs(coo.data[off]))]
        a, b = sorted((int(coo.row[k]), int(coo.col[k])))
        return {"merging_states": [a, b], "overlap": complex(coo.data[k])}

    diag = initial.matrix.diagonal().real
    if diag.size:
        k = int(np.argmax(np.minimum(np.abs(diag), np.abs(diag - 1))))
        if min(abs(diag[k]), abs(diag[k] - 1)) > 0:
            return {"state": k, "image_norm_squared": float(diag[k])}

    return {"final_projection": r_final.witness or r_initial.witness}
