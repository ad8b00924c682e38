#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import (
    DimensionMismatchError,
    LatticeRangeError,
    NonUnitaryError,
    PreconditionError,
)
from QBEtools.utils.unitary import unitary_residual
from QBEtools.wrappers import default_tolerance

from .lattice import all_indices, site_bits
from .operator import ComplexOperator

import numpy as np


@default_tolerance
def site_unitary(v, j, shape, tol=None):
    """ Returns v acting on the site-j lattice spin, identity on every other factor """

    v = np.asarray(v, dtype=complex)
    if v.shape != (2, 2):
        raise DimensionMismatchError(f"site unitary must be 2x2, got shape {v.shape}")
    if not shape.spins:
        raise PreconditionError("site unitaries need a shape with spins")
    if not 0 <= j < shape.length:
        raise LatticeRangeError("j", j, shape.length)

    residual = unitary_residual(v)
    if residual > tol.eps_zero:
        raise NonUnitaryError("site operator is not unitary", residual)

    index, _, _, sigma = all_indices(shape)
    bit = site_bits(sigma, j)
    cleared = index - (bit << j)

    rows, cols, values = [], [], []
    for new_bit in (0, 1):
        rows.append(cleared + (new_bit << j))
        cols.append(index)
        values.append(v[new_bit, bit])

    return ComplexOperator.from_triplets(
        np.concatenate(rows), np.concatenate(cols), np.concatenate(values), shape.dim
    )
