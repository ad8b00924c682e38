#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import LatticeRangeError, PreconditionError

from .lattice import all_indices, site_bits
from .operator import ComplexOperator

import numpy as np

KINDS = ("head_state", "head_pos", "spin")


def projector(shape, kind, index, bit=None):
    """ Returns the diagonal projector Q_l (kind "head_state", index l), P_j (kind
        "head_pos", index j) or P_{bit,j} (kind "spin", index j: the site-j spin in
        state |bit>) """

    _, h, j, sigma = all_indices(shape)

    if kind == "head_state":
        if not 0 <= index < shape.n_head:
            raise LatticeRangeError("head_state", index, shape.n_head)
        mask = h == index
    elif kind == "head_pos":
        if not 0 <= index < shape.length:
            raise LatticeRangeError("head_pos", index, shape.length)
        mask = j == index
    elif kind == "spin":
        if not shape.spins:
            raise PreconditionError("spin projectors need a shape with spins")
        if not 0 <= index < shape.length:
            raise LatticeRangeError("site", index, shape.length)
        if bit not in (0, 1):
            raise LatticeRangeError("bit", bit, 2)
        mask = site_bits(sigma, index) == bit
    else:
        raise PreconditionError(f"projector kind must be one of {KINDS}, got {kind!r}")

    return ComplexOperator.diagonal(mask.astype(float))
