#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.config import Config
from QBEtools.exceptions import DimensionMismatchError, PreconditionError
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.isometry.basis import Basis

import numpy as np
import pandas as pd
import scipy.sparse as sp

TRIPLET_COLUMNS = ["row", "col", "re", "im"]


def _read_triplets(filename):
    df = pd.read_csv(filename)
    missing = [c for c in TRIPLET_COLUMNS if c not in df.columns]
    if missing:
        raise PreconditionError(f"{filename}: missing column(s) {', '.join(missing)}")
    rows = df["row"].to_numpy(dtype=np.int64)
    cols = df["col"].to_numpy(dtype=np.int64)
    values = df["re"].to_numpy(dtype=float) + 1j * df["im"].to_numpy(dtype=float)
    if (rows < 0).any() or (cols < 0).any():
        raise PreconditionError(f"{filename}: negative index")
    return rows, cols, values


def _triplet_frame(matrix):
    coo = sp.coo_matrix(matrix)
    df = pd.DataFrame({"row": coo.row, "col": coo.col, "re": coo.data.real, "im": coo.data.imag})
    return df.sort_values(["col", "row"], kind="stable").reset_index(drop=True)


def read_operator_csv(filename, dim=None):
    """ Returns the ComplexOperator stored as row,col,re,im triplets; the dimension is
        one past the largest index unless given """

    rows, cols, values = _read_triplets(filename)
    needed = int(max(rows.max(initial=-1), cols.max(initial=-1))) + 1
    dim = needed if dim is None else int(dim)
    if needed > dim:
        raise DimensionMismatchError(f"{filename}: index {needed - 1} does not fit dimension {dim}")
    return ComplexOperator.from_triplets(rows, cols, values, dim)


def operator_frame(T):
    return _triplet_frame(T.matrix)


def read_basis_csv(filename, dim, tol=None):
    """ Returns the Basis whose vectors are the columns of a triplet CSV """

    rows, cols, values = _read_triplets(filename)
    if rows.size and rows.max() >= dim:
        raise DimensionMismatchError(f"{filename}: row {rows.max()} does not fit dimension {dim}")
    size = int(cols.max(initial=-1)) + 1
    V = sp.csc_matrix((values, (rows, cols)), shape=(dim, size), dtype=complex)
    return Basis(dim, V, tol=tol)


def basis_frame(B):
    return _triplet_frame(B.matrix())


def to_csv(df, filename=None):
    """ Returns the CSV text of a DataFrame, writing it to `filename` when given """

    text = df.to_csv(float_format=Config.FLOAT_FORMAT, index=False)
    if filename:
        with open(filename, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text
