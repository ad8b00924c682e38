#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.config import Config
from QBEtools.exceptions import PreconditionError, SpectrumCapError
from QBEtools.utils.fix_phase import fix_phase
from QBEtools.wrappers import default_tolerance

from .hamiltonian import as_operator

from dataclasses import dataclass
from scipy.linalg import eigh
import numpy as np
import logging

logger = logging.getLogger(__name__)


@dataclass
class Spectrum:
    """ Ascending energies and the matching orthonormal eigenvectors (as columns) """

    energies: np.ndarray
    vectors: np.ndarray

    def __len__(self):
        return len(self.energies)

    def __iter__(self):
        for k in range(len(self.energies)):
            yield float(self.energies[k]), self.vectors[:, k]

    def level(self, energy, width):
        """ Returns the eigenvectors whose energies lie within `width` of `energy` """

        return self.vectors[:, np.abs(self.energies - energy) <= width]


@default_tolerance
def spectrum(H, dense_cap=None, tol=None):
    """ Returns the Spectrum of a Hermitian operator by dense eigendecomposition, each
        eigenvector's first significant component made real and positive """

    H = as_operator(H)
    cap = Config.DENSE_CAP if dense_cap is None else int(dense_cap)
    if H.dim > cap:
        raise SpectrumCapError(H.dim, cap)

    skew = (H - H.adjoint()).norm()
    if skew > tol.eps_proj:
        raise PreconditionError(f"operator is not Hermitian (residual {skew:.3e})")

    dense = H.dense()
    w, V = eigh((dense + dense.conj().T) / 2)
    logger.debug("diagonalised dim %d, energies in [%.6g, %.6g]", H.dim, w.min(initial=0), w.max(initial=0))
    return Spectrum(w, fix_phase(V, tol.eps_zero))
