#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import DimensionMismatchError, PreconditionError
from QBEtools.hilbert.lattice import all_indices, encode_arrays, site_bits
from QBEtools.hilbert.operator import ComplexOperator

import numpy as np
import logging

logger = logging.getLogger(__name__)


def _check_shape(rules, shape):
    if not shape.spins:
        raise PreconditionError("machine step operators need a shape with spins")
    if shape.n_head != rules.n_head:
        raise DimensionMismatchError(f"shape has {shape.n_head} head states, machine has {rules.n_head}")


def rule_term(rule, shape):
    """ Returns Σ_j |f><l| v_j P_{s,j} U^d P_j for one program element; U^d is U for
        R and U† for L """

    index, h, j, sigma = all_indices(shape)
    keep = (h == rule.l) & (site_bits(sigma, j) == rule.s)
    index, j, sigma = index[keep], j[keep], sigma[keep]

    target = j + (1 if rule.d == "R" else -1)
    if shape.cyclic:
        target = target % shape.length
    else:
        inside = (target >= 0) & (target < shape.length)
        index, j, sigma, target = index[inside], j[inside], sigma[inside], target[inside]

    cleared = sigma - (rule.s << j)
    rows, cols, values = [], [], []
    for bit in (0, 1):
        rows.append(encode_arrays(rule.f, target, cleared + (bit << j), shape))
        cols.append(index)
        values.append(np.full(index.size, rule.v[bit, rule.s]))

    return ComplexOperator.from_triplets(
        np.concatenate(rows), np.concatenate(cols), np.concatenate(values), shape.dim
    )


def step_terms(rules, shape):
    """ Returns [(rule, T_ls)] for every program element of the machine """

    _check_shape(rules, shape)
    return [(rule, rule_term(rule, shape)) for rule in rules]


def build_step_operator(rules, shape):
    """ Returns the machine's step operator T, the sum of its program element terms """

    T = ComplexOperator.zero(shape.dim)
    for _, term in step_terms(rules, shape):
        T = T + term
    logger.debug("built step operator for %r on %s: nnz=%d", rules, shape, T.nnz)
    return T


class StepOperator:
    """ A machine's step operator on a lattice, keeping its program element terms """

    def __init__(self, rules, shape):
        self.rules = rules
        self.shape = shape
        self.terms = step_terms(rules, shape)
        T = ComplexOperator.zero(shape.dim)
        for _, term in self.terms:
            T = T + term
        self.operator = T

    @property
    def dim(self):
        return self.shape.dim
