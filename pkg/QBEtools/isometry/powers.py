#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import PreconditionError
from QBEtools.hilbert.is_projection import is_projection
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import args_to_operator, default_tolerance

from .basis import Basis
from .partial_isometry import is_partial_isometry

import numpy as np
import logging

logger = logging.getLogger(__name__)


@default_tolerance
@args_to_operator
def power_residuals(T, n_max=None, tol=None, stop_early=True):
    """ Returns one row per power n = 1..n_max with the projection residuals of
        I_n = (T†)ⁿTⁿ and F_n = Tⁿ(T†)ⁿ.

        With `stop_early`, iteration ends once Tⁿ vanishes or once both chains repeat
        on partial-isometric powers; every later power is then a partial isometry too.
    """

    n_max = T.dim if n_max is None else int(n_max)
    if n_max < 1:
        raise PreconditionError(f"n_max must be at least 1, got {n_max}")

    rows = []
    Tn = ComplexOperator.identity(T.dim)
    I_prev = F_prev = Tn
    for n in range(1, n_max + 1):
        Tn = Tn.compose(T)
        I_n = Tn.adjoint().compose(Tn)
        F_n = Tn.compose(Tn.adjoint())
        r_I = is_projection(I_n, tol=tol)
        r_F = is_projection(F_n, tol=tol)
        rows.append({
            "power": n,
            "initial_residual": max(r_I.residuals.values()),
            "final_residual": max(r_F.residuals.values()),
            "partial_isometry": r_I.verdict and r_F.verdict,
            "norm": Tn.norm(),
            "witness": r_I.witness or r_F.witness,
        })

        if not stop_early:
            continue
        if Tn.is_zero() or not rows[-1]["partial_isometry"]:
            break
        if (
            rows[-1]["partial_isometry"]
            and I_n.allclose(I_prev, tol.eps_proj)
            and F_n.allclose(F_prev, tol.eps_proj)
        ):
            break
        I_prev, F_prev = I_n, F_n

    return rows


@default_tolerance
@args_to_operator
def is_power_partial_isometry(T, n_max=None, tol=None):
    """ Returns a report on whether Tⁿ is a partial isometry for every n <= n_max
        (default: the dimension) """

    rows = power_residuals(T, n_max, tol=tol)
    failing = next((row for row in rows if not row["partial_isometry"]), None)
    residuals = {
        "max_initial_residual": max(row["initial_residual"] for row in rows),
        "max_final_residual": max(row["final_residual"] for row in rows),
    }
    details = {"powers_checked": rows[-1]["power"]}
    if failing is None:
        return PredicateReport(True, residuals, details=details)

    logger.debug("power %d is not a partial isometry", failing["power"])
    witness = {
        "power": failing["power"],
        "initial_residual": failing["initial_residual"],
        "final_residual": failing["final_residual"],
        "entry": failing["witness"],
    }
    details["first_failing_power"] = failing["power"]
    return PredicateReport(False, residuals, witness, details)


@default_tolerance
@args_to_operator
def is_completely_orthogonality_preserving(T, tol=None):
    """ Returns a report on whether the partial isometry T is completely orthogonality
        preserving, decided through the power partial isometry test """

    if not is_partial_isometry(T, tol=tol):
        raise PreconditionError("complete orthogonality preservation is decided for partial isometries only")
    return is_power_partial_isometry(T, T.dim, tol=tol)


@default_tolerance
@args_to_operator
def powers_preserve_orthogonality(T, B=None, n_max=None, tol=None):
    """ Returns a report on whether <Tⁿp_i|Tⁿp_j> = <T†ⁿp_i|T†ⁿp_j> = 0 for all
        distinct basis states and n <= n_max """

    B = Basis.computational(T.dim) if B is None else B
    n_max = T.dim if n_max is None else int(n_max)

    if n_max < 1:
        raise PreconditionError(f"n_max must be at least 1, got {n_max}")

    Tn = ComplexOperator.identity(T.dim)
    worst = 0.0
    n = 0
    for n in range(1, n_max + 1):
        Tn = Tn.compose(T)
        if Tn.is_zero():
            break
        residual = _gram_overlap(Tn, B)
        worst = max(worst, residual)
        if residual > tol.eps_comm:
            witness = {"power": n, "overlap": residual}
            return PredicateReport(False, {"max_overlap": worst}, witness, {"first_failing_power": n})

    return PredicateReport(True, {"max_overlap": worst}, details={"powers_checked": n})


def _gram_overlap(Tn, B):
    """ Returns the largest off-diagonal Gram entry of Tⁿ and T†ⁿ on the basis """

    A = B.conjugate(Tn).matrix
    worst = 0.0
    for M in (A, A.conj().T):
        gram = (M.conj().T @ M).tocoo()
        off = gram.row != gram.col
        if np.any(off):
            worst = max(worst, float(np.abs(gram.data[off]).max()))
    return worst
