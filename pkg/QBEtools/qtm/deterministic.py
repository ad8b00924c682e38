#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.hilbert.pauli import IDENTITY, SIGMA_X
from QBEtools.wrappers import default_tolerance

import numpy as np


def bit_action(v, eps=1e-12):
    """ Returns "identity" or "flip" when v is 1 or σx up to a global phase, else None """

    v = np.asarray(v, dtype=complex)
    for name, target in (("identity", IDENTITY), ("flip", SIGMA_X)):
        pivot = v[0, 0] if name == "identity" else v[1, 0]
        if abs(pivot) <= eps:
            continue
        phase = pivot / abs(pivot)
        if np.abs(v / phase - target).max() <= eps:
            return name
    return None


@default_tolerance
def is_deterministic(rules, tol=None):
    """ Returns True when every bit operator is the identity or σx up to a global phase """

    return all(bit_action(rule.v, tol.eps_zero) is not None for rule in rules)
