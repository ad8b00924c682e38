#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import numpy as np
import scipy.sparse as sp


def max_norm(A):
    """ Returns the largest absolute entry of a dense or sparse matrix (0 when empty) """

    if hasattr(A, "matrix"):
        A = A.matrix
    if sp.issparse(A):
        A = A.tocsr()
        return float(np.abs(A.data).max()) if A.nnz else 0.0
    A = np.asarray(A)
    return float(np.abs(A).max()) if A.size else 0.0


def argmax_entry(A):
    """ Returns (row, col, value) of the largest absolute entry, or None for an empty matrix """

    if hasattr(A, "matrix"):
        A = A.matrix
    A = sp.coo_matrix(A)
    if A.nnz == 0:
        return None
    k = int(np.argmax(np.abs(A.data)))
    return int(A.row[k]), int(A.col[k]), complex(A.data[k])
