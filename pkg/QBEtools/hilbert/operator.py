#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import DimensionMismatchError, PreconditionError

import numpy as np
import scipy.sparse as sp

DROP_TOL = 1e-12


class ComplexOperator:
    """ Square complex matrix in canonical sparse form.

        Entries are kept in row-major (row, col) order with duplicates summed and every
        entry of magnitude <= eps_zero removed.  Instances are treated as immutable.
    """

    __array_ufunc__ = None

    def __init__(self, matrix, eps_zero=None):
        if isinstance(matrix, ComplexOperator):
            matrix = matrix.matrix
        self.eps_zero = DROP_TOL if eps_zero is None else float(eps_zero)

        m = sp.csr_matrix(matrix, dtype=complex, copy=True)
        if m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"operator must be square, got shape {m.shape}")
        m.sum_duplicates()
        m.data[np.abs(m.data) <= self.eps_zero] = 0
        m.eliminate_zeros()
        m.sort_indices()
        self._matrix = m

    @classmethod
    def from_triplets(cls, rows, cols, values, dim, eps_zero=None):
        """ Returns the operator with entries (rows[k], cols[k]) = values[k]; repeated
            positions are summed """

        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        values = np.broadcast_to(np.asarray(values, dtype=complex), rows.shape)
        if rows.size and (rows.min() < 0 or cols.min() < 0 or max(rows.max(), cols.max()) >= dim):
            raise DimensionMismatchError(f"triplet index outside dimension {dim}")
        return cls(sp.coo_matrix((values, (rows, cols)), shape=(dim, dim)), eps_zero)

    @classmethod
    def identity(cls, dim):
        return cls(sp.identity(dim, dtype=complex, format="csr"))

    @classmethod
    def zero(cls, dim):
        return cls(sp.csr_matrix((dim, dim), dtype=complex))

    @classmethod
    def diagonal(cls, values):
        return cls(sp.diags(np.asarray(values, dtype=complex), format="csr"))

    @property
    def dim(self):
        return self._matrix.shape[0]

    @property
    def shape(self):
        return self._matrix.shape

    @property
    def matrix(self):
        """ The underlying csr matrix; callers must not modify it """

        return self._matrix

    @property
    def nnz(self):
        return self._matrix.nnz

    def entries(self):
        """ Returns the (row, col, value) triplets in canonical order """

        coo = self._matrix.tocoo()
        return [(int(r), int(c), complex(v)) for r, c, v in zip(coo.row, coo.col, coo.data)]

    def dense(self):
        return self._matrix.toarray()

    def adjoint(self):
        return ComplexOperator(self._matrix.conj().T, self.eps_zero)

    @property
    def H(self):
        return self.adjoint()

    def _check(self, other):
        if not isinstance(other, ComplexOperator):
            other = ComplexOperator(other, self.eps_zero)
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions differ: {self.dim} vs {other.dim}")
        return other

    def compose(self, other):
        """ Returns self ∘ other """

        other = self._check(other)
        return ComplexOperator(self._matrix @ other.matrix, self.eps_zero)

    def add(self, other):
        other = self._check(other)
        return ComplexOperator(self._matrix + other.matrix, self.eps_zero)

    def scale(self, factor):
        return ComplexOperator(self._matrix * complex(factor), self.eps_zero)

    def power(self, n):
        """ Returns self**n for n >= 0 by repeated squaring """

        if n < 0:
            raise PreconditionError(f"power must be nonnegative, got {n}")
        result = ComplexOperator.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result.compose(base)
            n >>= 1
            if n:
                base = base.compose(base)
        return result

    def apply(self, vector):
        """ Returns the image of a dense vector (or the columns of a dense matrix) """

        vector = np.asarray(vector, dtype=complex)
        if vector.shape[0] != self.dim:
            raise DimensionMismatchError(f"vector length {vector.shape[0]} != {self.dim}")
        return self._matrix @ vector

    def restrict(self, indices):
        """ Returns the compression onto the given basis indices, in the given order """

        indices = np.asarray(indices, dtype=np.int64)
        return ComplexOperator(self._matrix[indices][:, indices], self.eps_zero)

    def norm(self):
        """ Returns the maximum absolute entry """

        return float(np.abs(self._matrix.data).max()) if self.nnz else 0.0

    def is_zero(self):
        return self.nnz == 0

    def is_diagonal(self):
        coo = self._matrix.tocoo()
        return bool(np.all(coo.row == coo.col))

    def trace(self):
        return complex(self._matrix.diagonal().sum())

    def allclose(self, other, atol=None):
        other = self._check(other)
        atol = self.eps_zero if atol is None else atol
        return (self - other).norm() <= atol

    def __matmul__(self, other):
        if isinstance(other, np.ndarray) and other.ndim == 1:
            return self.apply(other)
        return self.compose(other)

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.add(self._check(other).scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, factor):
        if isinstance(factor, ComplexOperator):
            raise TypeError("use @ or compose() for operator products")
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ComplexOperator) or other.dim != self.dim:
            return False
        return (self._matrix != other.matrix).nnz == 0

    __hash__ = None

    def __repr__(self):
        return f"ComplexOperator(dim={self.dim}, nnz={self.nnz})"


def commutator(A, B):
    """ Returns AB − BA """

    return A.compose(B) - B.compose(A)


def rank_of_projection(P):
    """ Returns the rank of a projector read from its trace """

    return int(round(P.trace().real))
