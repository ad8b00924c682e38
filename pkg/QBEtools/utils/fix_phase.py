#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import numpy as np


def fix_phase(vectors, eps=1e-12):
    """ Returns a copy of the column vectors with each column's first significant
        component made real and positive """

    vectors = np.array(vectors, dtype=complex, copy=True)
    if vectors.ndim == 1:
        return fix_phase(vectors[:, None], eps)[:, 0]

    for c in range(vectors.shape[1]):
        column = vectors[:, c]
        significant = np.flatnonzero(np.abs(column) > max(eps, 1e-3 * np.abs(column).max(initial=0.0)))
        if significant.size:
            pivot = column[significant[0]]
            vectors[:, c] = column * (abs(pivot) / pivot)
    return vectors
