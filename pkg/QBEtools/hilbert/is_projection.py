#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import DimensionMismatchError
from QBEtools.utils.max_norm import argmax_entry
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import args_to_operator, default_tolerance


@default_tolerance
@args_to_operator
def is_projection(P, tol=None):
    """ Returns a report on whether P is Hermitian and idempotent within eps_proj """

    if P.shape[0] != P.shape[1]:
        raise DimensionMismatchError(f"projector must be square, got {P.shape}")

    skew = P - P.adjoint()
    defect = P.compose(P) - P
    residuals = {"hermiticity": skew.norm(), "idempotence": defect.norm()}
    verdict = max(residuals.values()) <= tol.eps_proj

    witness = None
    if not verdict:
        worst = skew if residuals["hermiticity"] > residuals["idempotence"] else defect
        row, col, value = argmax_entry(worst)
        witness = {
            "failure": "hermiticity" if worst is skew else "idempotence",
            "row": row,
            "col": col,
            "value": value,
        }

    return PredicateReport(verdict, residuals, witness)
