#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.wrappers import args_to_operator

import numpy as np


def iterate_norm_profile(T, psi0, n_steps):
    """ Returns [‖Tⁿψ₀‖ for n = 0..n_steps] """

    from QBEtools.hilbert.operator import ComplexOperator

    T = ComplexOperator(T)

    psi = np.asarray(psi0, dtype=complex)
    norms = [float(np.linalg.norm(psi))]
    for _ in range(int(n_steps)):
        psi = T.apply(psi)
        norms.append(float(np.linalg.norm(psi)))
    return norms


@args_to_operator
def column_norm_decay(T, n_steps, eps=1e-12, backward=False):
    """ Returns {side, state, power, norm} for the first computational state whose image
        under Tⁿ, n <= n_steps, has a norm strictly between 0 and 1, else None.  With
        `backward`, powers of T† are searched as well. """

    sides = [("T", T.matrix.tocsc())]
    if backward:
        sides.append(("T_dagger", T.matrix.conj().T.tocsc()))
    for label, A in sides:
        power = A.copy()
        for n in range(1, int(n_steps) + 1):
            norms = np.sqrt(np.asarray(abs(power).power(2).sum(axis=0)).ravel())
            fractional = np.flatnonzero((norms > eps) & (norms < 1 - 1e-9))
            if fractional.size:
                state = int(fractional[0])
                return {"side": label, "state": state, "power": n, "norm": float(norms[state])}
            if power.nnz == 0:
                break
            power = (A @ power).tocsc()
            power.data[np.abs(power.data) <= eps] = 0
            power.eliminate_zeros()
    return None
