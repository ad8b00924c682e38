#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import PreconditionError
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.hilbert.projector import projector


def closed_form_defect_projectors(shape, n):
    """ Returns (I_n, F_n) of the zero-motion machine Σ_j P_{0,j} U P_j as explicit
        projector sums: I_n = Σ_j P_{0,j+n−1}···P_{0,j} P_j over head positions j that
        can take n steps, F_n = Σ_j P_{0,j−1}···P_{0,j−n} P_j over positions reachable
        in n steps (head state 0 throughout) """

    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")

    L = shape.length
    Q0 = projector(shape, "head_state", 0)
    I = ComplexOperator.zero(shape.dim)
    F = ComplexOperator.zero(shape.dim)

    for j in range(L):
        if shape.cyclic or j + n <= L - 1:
            term = projector(shape, "head_pos", j)
            for step in range(n):
                term = projector(shape, "spin", (j + step) % L, 0).compose(term)
            I = I + term
        if shape.cyclic or j - n >= 0:
            term = projector(shape, "head_pos", j)
            for step in range(1, n + 1):
                term = projector(shape, "spin", (j - step) % L, 0).compose(term)
            F = F + term

    return Q0.compose(I), Q0.compose(F)
