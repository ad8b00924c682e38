#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import PreconditionError
from QBEtools.hilbert.lattice import LatticeShape
from QBEtools.hilbert.pauli import FOURIER, IDENTITY, SIGMA_X

from .rules import Rule, RuleTable

import numpy as np

# name -> (default lattice length, default topology)
DEFAULT_LATTICES = {
    "zero_motion": (6, "open"),
    "bit_rotation": (5, "open"),
    "tex1": (8, "open"),
    "appendix_b": (6, "open"),
    "appendix_b_extended": (6, "open"),
    "erasure": (3, "cyclic"),
}

MACHINES = tuple(DEFAULT_LATTICES)


def example_machine(name, v=None):
    """ Returns the RuleTable of a built-in machine.  `v` is the bit operator of the
        nondeterministic step (default: the Fourier matrix (σx + σz)/√2). """

    v = FOURIER if v is None else np.asarray(v, dtype=complex)

    if name == "zero_motion":
        rules = [Rule(0, 0, 0, "R", IDENTITY)]
        n_head = 1
    elif name == "bit_rotation":
        rules = [Rule(0, 0, 0, "R", v)]
        n_head = 1
    elif name == "tex1":
        rules = [
            Rule(0, 0, 0, "R", v),
            Rule(0, 1, 1, "L", IDENTITY),
            Rule(1, 1, 1, "L", SIGMA_X),
        ]
        n_head = 2
    elif name in ("appendix_b", "appendix_b_extended"):
        rules = [
            Rule(0, 0, 0, "R", IDENTITY),
            Rule(0, 1, 1, "L", v),
            Rule(1, 0, 2, "R", IDENTITY),
            Rule(2, 0, 3, "R", IDENTITY),
            Rule(2, 1, 4, "R", IDENTITY),
        ]
        if name == "appendix_b_extended":
            rules += [Rule(3, 1, 3, "R", IDENTITY), Rule(4, 0, 4, "R", IDENTITY)]
        n_head = 5
    elif name == "erasure":
        rules = [Rule(0, 0, 0, "R", IDENTITY), Rule(0, 1, 0, "R", SIGMA_X)]
        n_head = 1
    else:
        raise PreconditionError(f"unknown machine {name!r}; choose from {', '.join(MACHINES)}")

    return RuleTable(n_head, rules, name=name)


def default_shape(name, length=None, topology=None):
    """ Returns the LatticeShape a built-in machine is run on by default """

    if name not in DEFAULT_LATTICES:
        raise PreconditionError(f"unknown machine {name!r}")
    default_length, default_topology = DEFAULT_LATTICES[name]
    rules = example_machine(name)
    return LatticeShape(rules.n_head, length or default_length, topology or default_topology)
