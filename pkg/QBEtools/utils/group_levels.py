#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import numpy as np


def group_levels(values, width):
    """ Returns lists of positions of ascending `values`, split wherever the gap between
        neighbours exceeds `width` """

    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return []

    order = np.argsort(values, kind="stable")
    groups = [[int(order[0])]]
    for prev, cur in zip(order[:-1], order[1:]):
        if values[cur] - values[prev] > width:
            groups.append([])
        groups[-1].append(int(cur))
    return groups
