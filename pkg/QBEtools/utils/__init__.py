#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .report import PredicateReport, jsonable
from .max_norm import max_norm, argmax_entry
from .fix_phase import fix_phase
from .group_levels import group_levels
from .complex_literal import parse_complex_literal, format_complex_literal
from .unitary import unitary_residual, nearest_unitary
