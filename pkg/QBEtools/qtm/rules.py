#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import (
    DimensionMismatchError,
    LatticeRangeError,
    NonUnitaryError,
    PreconditionError,
)
from QBEtools.utils.unitary import unitary_residual

from dataclasses import dataclass
import numpy as np

DIRECTIONS = {"R": "R", "right": "R", "L": "L", "left": "L"}


@dataclass(frozen=True, eq=False)
class Rule:
    """ Program element (l, s) -> (f, d, v): with the head in state l reading bit s,
        apply v to that bit, move the head one site (R or L) and enter state f """

    l: int
    s: int
    f: int
    d: str
    v: np.ndarray

    def __post_init__(self):
        if self.s not in (0, 1):
            raise LatticeRangeError("s", self.s, 2)
        if self.d not in DIRECTIONS:
            raise PreconditionError(f"direction must be R or L, got {self.d!r}")
        object.__setattr__(self, "d", DIRECTIONS[self.d])
        v = np.array(self.v, dtype=complex)
        if v.shape != (2, 2):
            raise DimensionMismatchError(f"bit operator must be 2x2, got shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    @property
    def key(self):
        return (self.l, self.s)

    def to_dict(self):
        return {"l": self.l, "s": self.s, "f": self.f, "d": self.d, "v": self.v}

    def __repr__(self):
        return f"Rule({self.l},{self.s} -> {self.f},{self.d})"


class RuleTable:
    """ A quantum Turing machine (f, d, v) over the domain of its rules """

    def __init__(self, n_head, rules, name=None, tol=1e-12):
        self.n_head = int(n_head)
        self.rules = tuple(rules)
        self.name = name

        if self.n_head < 1:
            raise PreconditionError(f"n_head must be positive, got {n_head}")

        seen = {}
        for rule in self.rules:
            for label, value in (("l", rule.l), ("f", rule.f)):
                if not 0 <= value < self.n_head:
                    raise LatticeRangeError(label, value, self.n_head)
            if rule.key in seen:
                raise PreconditionError(f"program element (l={rule.l}, s={rule.s}) appears twice")
            seen[rule.key] = rule
            residual = unitary_residual(rule.v)
            if residual > tol:
                raise NonUnitaryError(f"bit operator of rule {rule.key} is not unitary", residual)

    @property
    def domain(self):
        return {rule.key for rule in self.rules}

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def to_dict(self):
        return {"name": self.name, "n_head": self.n_head, "rules": [r.to_dict() for r in self.rules]}

    def __repr__(self):
        return f"RuleTable(name={self.name!r}, n_head={self.n_head}, rules={len(self.rules)})"
