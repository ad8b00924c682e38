#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import InternalInconsistencyError, PPIViolationError
from QBEtools.hilbert.is_projection import is_projection
from QBEtools.hilbert.operator import ComplexOperator, commutator, rank_of_projection
from QBEtools.wrappers import args_to_operator, default_tolerance

from dataclasses import dataclass
import logging

logger = logging.getLogger(__name__)


@dataclass
class DefectChain:
    """ The projector chains I_n = (T†)ⁿTⁿ and F_n = Tⁿ(T†)ⁿ for n = 0..stop_index """

    I: list
    F: list
    stop_index: int

    @property
    def I_inf(self):
        return self.I[self.stop_index]

    @property
    def F_inf(self):
        return self.F[self.stop_index]

    def initial(self, n):
        """ Returns I_n, using the stabilised projector beyond stop_index """

        return self.I[min(n, self.stop_index)]

    def final(self, n):
        """ Returns F_n, using the stabilised projector beyond stop_index """

        return self.F[min(n, self.stop_index)]

    def ranks(self):
        return {
            "I": [rank_of_projection(P) for P in self.I],
            "F": [rank_of_projection(P) for P in self.F],
        }

    def to_dict(self):
        return {"stop_index": self.stop_index, "ranks": self.ranks()}


@default_tolerance
@args_to_operator
def defect_chain(T, tol=None):
    """ Returns the DefectChain of a power partial isometry, computed until both
        chains repeat """

    I = [ComplexOperator.identity(T.dim)]
    F = [ComplexOperator.identity(T.dim)]
    Tn = ComplexOperator.identity(T.dim)
    stop = T.dim

    for n in range(1, T.dim + 1):
        Tn = Tn.compose(T)
        I_n = Tn.adjoint().compose(Tn)
        F_n = Tn.compose(Tn.adjoint())
        if not (is_projection(I_n, tol=tol) and is_projection(F_n, tol=tol)):
            raise PPIViolationError(n)
        I.append(I_n)
        F.append(F_n)
        if I_n.allclose(I[n - 1], tol.eps_proj) and F_n.allclose(F[n - 1], tol.eps_proj):
            stop = n
            break

    chain = DefectChain(I, F, stop)
    _check_chain(chain, tol)
    logger.debug("defect chain stabilised at n=%d with ranks %s", stop, chain.ranks())
    return chain


def _check_chain(chain, tol):
    members = chain.I + chain.F
    for seq in (chain.I, chain.F):
        for a, b in zip(seq[:-1], seq[1:]):
            residual = (a.compose(b) - b).norm()
            if residual > tol.eps_proj:
                raise InternalInconsistencyError("defect chain is not nonincreasing", residual)

    for i, a in enumerate(members):
        for b in members[i + 1:]:
            residual = commutator(a, b).norm()
            if residual > tol.eps_comm:
                raise InternalInconsistencyError("defect projectors do not commute", residual)
