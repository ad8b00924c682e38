#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import PreconditionError
from QBEtools.hilbert.operator import commutator
from QBEtools.isometry.partial_isometry import is_partial_isometry
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import args_to_operator, default_tolerance


@default_tolerance
@args_to_operator
def hw_product_lemma(W, V, tol=None):
    """ Returns a report on whether "WV is a partial isometry" agrees with
        "VV† commutes with W†W" for partial isometries W and V """

    for name, X in (("W", W), ("V", V)):
        if not is_partial_isometry(X, tol=tol):
            raise PreconditionError(f"{name} is not a partial isometry")

    product = is_partial_isometry(W.compose(V), tol=tol)
    C = commutator(V.compose(V.adjoint()), W.adjoint().compose(W))
    commutes = C.norm() <= tol.eps_comm

    residuals = {"commutator": C.norm()}
    residuals.update({f"product_{k}": v for k, v in product.residuals.items()})
    details = {"product_partial_isometry": product.verdict, "commutes": commutes}

    verdict = product.verdict == commutes
    witness = None if verdict else dict(details)
    return PredicateReport(verdict, residuals, witness, details)
