#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import InternalInconsistencyError

from dataclasses import dataclass, field
import numpy as np


def jsonable(value):
    """ Returns `value` with numpy scalars, arrays, complex numbers and sets converted
        to plain JSON types """

    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


@dataclass
class PredicateReport:
    """ Outcome of a predicate: a verdict, the named residuals behind it and, when the
        verdict is negative, a witness describing the counterexample """

    verdict: bool
    residuals: dict = field(default_factory=dict)
    witness: dict = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        self.verdict = bool(self.verdict)
        if not self.verdict and self.witness is None:
            raise InternalInconsistencyError("a negative verdict must carry a witness")

    def __bool__(self):
        return self.verdict

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "residuals": jsonable(self.residuals),
            "witness": jsonable(self.witness),
            "details": jsonable(self.details),
        }
