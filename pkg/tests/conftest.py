#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.config import ToleranceContext
from QBEtools.hilbert.lattice import LatticeShape
from QBEtools.hilbert.shifts import head_shift

import numpy as np
import pytest


@pytest.fixture
def tol():
    return ToleranceContext()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def open_shift(n):
    """ The truncated shift on n states (head positions, no spins) """

    return head_shift(LatticeShape(1, n, "open", spins=False))


def cyclic_shift(n):
    return head_shift(LatticeShape(1, n, "cyclic", spins=False))
