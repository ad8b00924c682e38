#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.config import ToleranceContext

import numpy as np
import scipy.sparse as sp

import functools
import inspect


def args_to_operator(fn):
    """ Convert numpy arrays and scipy sparse matrices passed as positional arguments
        to ComplexOperator objects """

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        from QBEtools.hilbert.operator import ComplexOperator

        args = [
            ComplexOperator(x) if isinstance(x, np.ndarray) or sp.issparse(x) else x
            for x in args
        ]
        return fn(*args, **kwargs)

    return wrapper


def default_tolerance(fn):
    """ Fill a missing or None `tol` argument with the environment's ToleranceContext """

    signature = inspect.signature(fn)

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        bound = signature.bind(*args, **kwargs)
        if bound.arguments.get("tol") is None:
            bound.arguments["tol"] = ToleranceContext.from_env()
        return fn(*bound.args, **bound.kwargs)

    return wrapper
