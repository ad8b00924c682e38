#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import DimensionMismatchError

from scipy.linalg import polar
import numpy as np


def unitary_residual(v):
    """ Returns max-entry norms of v†v − 1 and vv† − 1, whichever is larger """

    v = np.asarray(v, dtype=complex)
    if v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {v.shape}")
    eye = np.eye(v.shape[0])
    return float(max(np.abs(v.conj().T @ v - eye).max(), np.abs(v @ v.conj().T - eye).max()))


def nearest_unitary(v):
    """ Returns the unitary factor of the polar decomposition of v """

    u, _ = polar(np.asarray(v, dtype=complex), side="right")
    return u
