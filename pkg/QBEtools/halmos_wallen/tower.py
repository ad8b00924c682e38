#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import ConstructionError, PreconditionError
from QBEtools.hilbert.hermitian_sqrt import hermitian_sqrt
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.isometry.partial_isometry import is_partial_isometry
from QBEtools.wrappers import default_tolerance

import scipy.sparse as sp
import logging

logger = logging.getLogger(__name__)


def _check_a(a):
    a = complex(a)
    if abs(a) >= 0.5:
        raise PreconditionError(f"|a| must be below 1/2, got {abs(a)}")
    return a


@default_tolerance
def contraction_u1(a, tol=None):
    """ Returns U₁ = a(σx − iσy): the single entry 2a at row 1, column 0 """

    a = _check_a(a)
    U1 = ComplexOperator.from_triplets([1], [0], [2 * a], 2)
    if a == 0:
        logger.warning("a = 0 gives the zero operator, which is trivially a partial isometry")
    elif is_partial_isometry(U1, tol=tol):
        raise ConstructionError(f"U1 with a={a} is unexpectedly a partial isometry")
    return U1


def dilate(A, tol=None):
    """ Returns [[A, D_A], [0, 0]] with D_A = (1 − AA†)^(1/2) """

    D = hermitian_sqrt(ComplexOperator.identity(A.dim) - A.compose(A.adjoint()), tol=tol)
    zero = sp.csr_matrix((A.dim, A.dim), dtype=complex)
    return ComplexOperator(sp.bmat([[A.matrix, D.matrix], [zero, zero]], format="csr"), A.eps_zero)


@default_tolerance
def hw_tower(n, a=0.25, tol=None, verify=True):
    """ Returns U_n of dimension 2ⁿ, built by dilating U₁ n − 1 times.  U_nᵏ is a
        partial isometry for k < n, U_nⁿ is not and U_nⁿ⁺¹ = 0. """

    if int(n) < 1:
        raise PreconditionError(f"tower level must be positive, got {n}")
    a = _check_a(a)

    U = contraction_u1(a, tol=tol)
    for _ in range(int(n) - 1):
        U = dilate(U, tol)

    if verify and a != 0:
        _verify_tower(U, int(n), tol)
    return U


def _verify_tower(U, n, tol):
    power = ComplexOperator.identity(U.dim)
    for k in range(1, n + 2):
        power = power.compose(U)
        if k < n and not is_partial_isometry(power, tol=tol):
            raise ConstructionError(f"U_{n}^{k} should be a partial isometry")
        if k == n and is_partial_isometry(power, tol=tol):
            raise ConstructionError(f"U_{n}^{n} should not be a partial isometry")
        if k == n + 1 and power.norm() > tol.eps_zero:
            raise ConstructionError(f"U_{n}^{n + 1} should vanish, norm {power.norm():.3e}")


@default_tolerance
def hw_direct_sum(s, a=0.25, tol=None):
    """ Returns the block-diagonal sum of hw_tower(n) over the positions n (from 1)
        where the 0/1 sequence s holds a 1, in ascending n """

    levels = [n for n, bit in enumerate(s, start=1) if bit]
    if not levels:
        raise PreconditionError("the selection sequence holds no 1")

    blocks = [hw_tower(n, a, tol=tol).matrix for n in levels]
    return ComplexOperator(sp.block_diag(blocks, format="csr"))
