#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import DimensionMismatchError, PreconditionError
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.utils.max_norm import max_norm

import numpy as np
import scipy.sparse as sp


class Basis:
    """ An orthonormal family of states in a space of dimension `dim`.

        `vectors=None` is the computational basis.  Otherwise the columns of `vectors`
        are the states; fewer than `dim` columns describe an orthonormal family
        spanning a subspace, which predicates then also test for invariance.
        `labels` name the columns in reports (default: column positions).
    """

    def __init__(self, dim, vectors=None, labels=None, tol=None, validate=True):
        self.dim = int(dim)
        self.vectors = None
        if vectors is not None:
            V = sp.csc_matrix(vectors, dtype=complex)
            if V.shape[0] != self.dim:
                raise DimensionMismatchError(f"basis vectors have length {V.shape[0]}, expected {self.dim}")
            if V.shape[1] > self.dim:
                raise DimensionMismatchError(f"{V.shape[1]} vectors cannot be orthonormal in dimension {self.dim}")
            self.vectors = V

        size = self.size
        self.labels = np.arange(size) if labels is None else np.asarray(labels, dtype=np.int64)
        if self.labels.shape != (size,):
            raise DimensionMismatchError(f"expected {size} labels, got {self.labels.shape}")

        if validate and self.vectors is not None:
            residual = self.orthonormality_residual()
            eps = tol.eps_zero if tol is not None else 1e-12
            if residual > eps:
                raise PreconditionError(f"basis vectors are not orthonormal (residual {residual:.3e})")

    @classmethod
    def computational(cls, dim):
        return cls(dim)

    @classmethod
    def from_indices(cls, dim, indices):
        """ Returns the family of computational states at `indices`, labelled by them """

        indices = np.asarray(indices, dtype=np.int64)
        V = sp.csc_matrix(
            (np.ones(indices.size, dtype=complex), (indices, np.arange(indices.size))),
            shape=(dim, indices.size),
        )
        return cls(dim, V, labels=indices, validate=False)

    @classmethod
    def from_columns(cls, dim, columns, tol=None):
        """ Returns the family whose states are given as (rows, amplitudes) pairs """

        rows, cols, data = [], [], []
        for c, (r, amps) in enumerate(columns):
            r = np.asarray(r, dtype=np.int64)
            rows.append(r)
            cols.append(np.full(r.size, c, dtype=np.int64))
            data.append(np.asarray(amps, dtype=complex))
        if not columns:
            return cls(dim, sp.csc_matrix((dim, 0), dtype=complex), tol=tol)
        V = sp.csc_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(dim, len(columns)),
        )
        return cls(dim, V, tol=tol)

    @property
    def is_computational(self):
        return self.vectors is None

    @property
    def size(self):
        return self.dim if self.vectors is None else self.vectors.shape[1]

    @property
    def is_complete(self):
        return self.size == self.dim

    def matrix(self):
        """ Returns the dim x size sparse matrix of basis columns """

        if self.vectors is None:
            return sp.identity(self.dim, dtype=complex, format="csc")
        return self.vectors

    def orthonormality_residual(self):
        if self.vectors is None:
            return 0.0
        gram = (self.vectors.conj().T @ self.vectors).tocsr()
        return max_norm(gram - sp.identity(self.size, dtype=complex, format="csr"))

    def conjugate(self, T):
        """ Returns V†TV, the matrix of T between the family's states """

        if T.dim != self.dim:
            raise DimensionMismatchError(f"operator dimension {T.dim} != basis dimension {self.dim}")
        if self.vectors is None:
            return T
        V = self.vectors
        return ComplexOperator(V.conj().T @ T.matrix @ V, T.eps_zero)

    def coordinates(self, psi):
        """ Returns the components of a state along the family """

        psi = np.asarray(psi, dtype=complex)
        return psi if self.vectors is None else self.vectors.conj().T @ psi

    def embed(self, coefficients):
        """ Returns the state with the given components along the family """

        coefficients = np.asarray(coefficients, dtype=complex)
        return coefficients if self.vectors is None else self.vectors @ coefficients

    def invariance_residual(self, T):
        """ Returns the largest component of T V or T† V outside the family's span """

        if self.vectors is None or self.is_complete:
            return 0.0
        V = self.vectors
        worst = 0.0
        for A in (T.matrix, T.matrix.conj().T):
            image = A @ V
            outside = image - V @ (V.conj().T @ image)
            worst = max(worst, max_norm(sp.csr_matrix(outside)))
        return worst

    def __len__(self):
        return self.size

    def __repr__(self):
        kind = "computational" if self.is_computational else ("complete" if self.is_complete else "family")
        return f"Basis(dim={self.dim}, size={self.size}, {kind})"
