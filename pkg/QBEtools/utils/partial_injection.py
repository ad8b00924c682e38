#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.hilbert.operator import ComplexOperator

import numpy as np


def random_partial_injection(dim, rng=None, phases=False, cycle_fraction=0.3, min_cycle=3):
    """ Returns (T, chains) where T is a random partial injection of the computational
        basis: node-disjoint open chains and cycles (length >= min_cycle), with unit
        amplitudes or, if `phases`, unit-modulus random phases.  `chains` lists
        (kind, indices) in step order. """

    rng = np.random.default_rng(rng)
    order = rng.permutation(dim)

    chains = []
    start = 0
    while start < dim:
        size = int(rng.integers(1, min(dim - start, 8) + 1))
        block = [int(x) for x in order[start:start + size]]
        start += size
        kind = "cycle" if size >= min_cycle and rng.random() < cycle_fraction else "open_chain"
        chains.append((kind, block))

    rows, cols, values = [], [], []
    for kind, block in chains:
        links = list(zip(block[:-1], block[1:]))
        if kind == "cycle":
            links.append((block[-1], block[0]))
        for a, b in links:
            rows.append(b)
            cols.append(a)
            values.append(np.exp(2j * np.pi * rng.random()) if phases else 1.0)

    T = ComplexOperator.from_triplets(rows, cols, values, dim)
    return T, chains


def random_weighted_injection(dim, rng=None):
    """ Returns a partial injection scaled by random positive weights: an operator whose
        Gram operators are diagonal but whose singular values differ """

    rng = np.random.default_rng(rng)
    T, _ = random_partial_injection(dim, rng, phases=True)
    weights = rng.uniform(0.1, 2.0, size=dim)
    return T.compose(ComplexOperator.diagonal(weights))
