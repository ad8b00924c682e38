#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.hilbert.is_projection import is_projection
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import default_tolerance

from .step_operator import StepOperator


@default_tolerance
def gram_conditions(step, shape=None, tol=None):
    """ Returns a report on I₁ = T†T and F₁ = TT† being projections and on the cross
        sums Σ_{(ls)≠(l′s′)} T_ls†T_l′s′ and Σ_{(ls)≠(l′s′)} T_ls T_l′s′† vanishing.

        `step` is a StepOperator, or a RuleTable together with `shape`.
    """

    if not isinstance(step, StepOperator):
        step = StepOperator(step, shape)
    T = step.operator
    terms = [term for _, term in step.terms]
    rules = [rule for rule, _ in step.terms]

    initial = is_projection(T.adjoint().compose(T), tol=tol)
    final = is_projection(T.compose(T.adjoint()), tol=tol)

    initial_cross = ComplexOperator.zero(T.dim)
    final_cross = ComplexOperator.zero(T.dim)
    worst_pair, worst = None, 0.0
    for i, A in enumerate(terms):
        for k, B in enumerate(terms):
            if i == k:
                continue
            left = A.adjoint().compose(B)
            right = A.compose(B.adjoint())
            initial_cross = initial_cross + left
            final_cross = final_cross + right
            size = max(left.norm(), right.norm())
            if size > worst:
                worst_pair, worst = [list(rules[i].key), list(rules[k].key)], size

    residuals = {
        "initial_idempotence": initial.residuals["idempotence"],
        "final_idempotence": final.residuals["idempotence"],
        "initial_cross_sum": initial_cross.norm(),
        "final_cross_sum": final_cross.norm(),
    }
    details = {
        "initial_projection": initial.verdict,
        "final_projection": final.verdict,
        "initial_cross_vanishes": residuals["initial_cross_sum"] <= tol.eps_proj,
        "final_cross_vanishes": residuals["final_cross_sum"] <= tol.eps_proj,
    }
    verdict = all(details.values())

    witness = None
    if not verdict:
        witness = {"failing": [k for k, ok in details.items() if not ok], "largest_cross_pair": worst_pair}
    return PredicateReport(verdict, residuals, witness, details)
