#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.utils.report import PredicateReport
from QBEtools.wrappers import default_tolerance

import itertools


@default_tolerance
def condition_x(rules, tol=None):
    """ Returns a report on the rule-table condition: whenever two program elements
        (l,s) != (m,t) share f, they share d and <s|v_ls† v_mt|t> = 0 """

    violations = []
    for a, b in itertools.combinations(rules.rules, 2):
        if a.f != b.f:
            continue
        if a.d != b.d:
            violations.append({"pair": [list(a.key), list(b.key)], "reason": "directions differ"})
            continue
        overlap = (a.v.conj().T @ b.v)[a.s, b.s]
        if abs(overlap) > tol.eps_zero:
            violations.append({"pair": [list(a.key), list(b.key)], "reason": "bit images overlap", "overlap": complex(overlap)})

    verdict = not violations
    witness = None if verdict else {"violating_pairs": violations}
    return PredicateReport(verdict, {"violations": len(violations)}, witness, {"violating_pairs": violations})
