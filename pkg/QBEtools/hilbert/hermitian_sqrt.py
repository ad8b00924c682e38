#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import NotPSDError, PreconditionError
from QBEtools.wrappers import args_to_operator, default_tolerance

from .operator import ComplexOperator

from scipy.linalg import eigh
import numpy as np
import logging

logger = logging.getLogger(__name__)


@default_tolerance
@args_to_operator
def hermitian_sqrt(A, tol=None):
    """ Returns the positive semidefinite square root of a Hermitian PSD operator """

    skew = (A - A.adjoint()).norm()
    if skew > tol.eps_proj:
        raise PreconditionError(f"operator is not Hermitian (residual {skew:.3e})")

    dense = A.dense()
    w, V = eigh((dense + dense.conj().T) / 2)
    if w.size and w.min() < -tol.eps_proj:
        raise NotPSDError(w.min())

    clamped = np.clip(w, 0.0, None)
    if np.any(w < 0):
        logger.debug("clamped %d eigenvalues in [-eps_proj, 0)", int(np.sum(w < 0)))

    root = (V * np.sqrt(clamped)) @ V.conj().T
    return ComplexOperator(root, A.eps_zero)
