#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .lattice import all_indices, encode_arrays
from .operator import ComplexOperator


def head_shift(shape):
    """ Returns U, moving the head one site to the right.  Cyclic topology wraps
        around; open topology annihilates states with the head on the last site. """

    index, h, j, sigma = all_indices(shape)
    target = j + 1
    if shape.cyclic:
        target = target % shape.length
        keep = slice(None)
    else:
        keep = target < shape.length

    rows = encode_arrays(h[keep], target[keep], sigma[keep], shape)
    return ComplexOperator.from_triplets(rows, index[keep], 1.0, shape.dim)


def head_raise(shape):
    """ Returns u, raising the head state by one modulo n_head """

    index, h, j, sigma = all_indices(shape)
    rows = encode_arrays((h + 1) % shape.n_head, j, sigma, shape)
    return ComplexOperator.from_triplets(rows, index, 1.0, shape.dim)
