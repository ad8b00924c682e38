#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import InternalInconsistencyError, PreconditionError
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.wrappers import args_to_operator, default_tolerance

from dataclasses import dataclass


@dataclass
class Hamiltonian:
    """ H = K(2 − T − T†) together with its energy scale and, optionally, the step
        operator it was built from """

    matrix: ComplexOperator
    K: float
    source: ComplexOperator = None

    @property
    def dim(self):
        return self.matrix.dim


@default_tolerance
@args_to_operator
def feynman_hamiltonian(T, K=1.0, tol=None):
    """ Returns the Hamiltonian K(2 − T − T†) of a step operator """

    K = float(K)
    if not K > 0:
        raise PreconditionError(f"K must be strictly positive, got {K}")

    two = ComplexOperator.identity(T.dim).scale(2)
    H = (two - T - T.adjoint()).scale(K)

    skew = (H - H.adjoint()).norm()
    if skew > tol.eps_zero:
        raise InternalInconsistencyError("Hamiltonian is not Hermitian", skew)
    return Hamiltonian(H, K, T)


def as_operator(H):
    """ Returns the ComplexOperator behind a Hamiltonian, operator or array """

    if isinstance(H, Hamiltonian):
        return H.matrix
    if isinstance(H, ComplexOperator):
        return H
    return ComplexOperator(H)
