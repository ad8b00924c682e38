#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import ConstructionError, PreconditionError
from QBEtools.hilbert.lattice import encode
from QBEtools.hilbert.pauli import FOURIER
from QBEtools.isometry.basis import Basis
from QBEtools.isometry.paths import extract_paths
from QBEtools.isometry.stability import is_stable_on_basis
from QBEtools.wrappers import default_tolerance

from .machines import example_machine
from .rules import Rule, RuleTable
from .step_operator import build_step_operator

import itertools
import numpy as np
import logging

logger = logging.getLogger(__name__)

COMPUTATIONAL = (np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex))


def _product_state(shape, h, j, local):
    """ Returns (rows, amplitudes) of |h, j> ⊗ local[0] ⊗ ... ⊗ local[L−1] """

    supports = [np.flatnonzero(np.abs(vec) > 0) for vec in local]
    rows, amps = [], []
    for bits in itertools.product(*supports):
        sigma = sum(int(b) << site for site, b in enumerate(bits))
        amp = np.prod([local[site][b] for site, b in enumerate(bits)])
        rows.append(encode(h, j, sigma, shape))
        amps.append(amp)
    return rows, amps


def _with_free_sites(shape, h, j, fixed):
    """ Yields the product states with the sites in `fixed` (site -> 2-vector) pinned and
        every other site running over the computational states """

    free = [site for site in range(shape.length) if site not in fixed]
    for bits in itertools.product((0, 1), repeat=len(free)):
        local = [None] * shape.length
        for site, vec in fixed.items():
            local[site] = vec
        for site, b in zip(free, bits):
            local[site] = COMPUTATIONAL[b]
        yield _product_state(shape, h, j, local)


def _computational_columns(shape, heads, positions):
    for h in heads:
        for j in positions:
            for sigma in range(shape.n_spin):
                yield [encode(h, j, sigma, shape)], [1.0]


def _require_open(shape, what):
    if shape.cyclic:
        raise PreconditionError(f"{what} is only defined for the open lattice")
    if not shape.spins:
        raise PreconditionError(f"{what} needs a shape with spins")


@default_tolerance
def bit_rotation_stable_basis(v=None, shape=None, anchor=None, verify=True, tol=None):
    """ Returns a basis on which the bit-rotation machine Σ_j v_j P_{0j} U P_j is stable.

        For head state 0 at position j the sites at and right of j stay computational.
        A family with anchor M >= 1 puts site M−1 in v|1>, sites M..j−1 in v|0> and
        leaves sites below M−1 computational; anchor 0 puts every site left of j in v|0>.
        Each anchored family is invariant under T and T†; `anchor=None` returns their
        union, which is complete (other head states are computational).
    """

    v = FOURIER if v is None else np.asarray(v, dtype=complex)
    _require_open(shape, "the bit-rotation basis")

    L = shape.length
    anchors = range(L) if anchor is None else [int(anchor)]
    if anchor is not None and not 0 <= anchor < L:
        raise PreconditionError(f"anchor must lie in 0..{L - 1}, got {anchor}")

    rotated_0, rotated_1 = v[:, 0], v[:, 1]
    columns = []
    for M in anchors:
        for j in range(M, L):
            fixed = {site: rotated_0 for site in range(M, j)}
            if M >= 1:
                fixed[M - 1] = rotated_1
            columns.extend(_with_free_sites(shape, 0, j, fixed))
    if anchor is None:
        columns.extend(_computational_columns(shape, range(1, shape.n_head), range(L)))

    basis = Basis.from_columns(shape.dim, columns, tol=tol)
    logger.debug("bit-rotation basis: %d states (anchor=%s)", basis.size, anchor)

    if verify:
        rules = RuleTable(shape.n_head, [Rule(0, 0, 0, "R", v)], name="bit_rotation")
        T = build_step_operator(rules, shape)
        report = is_stable_on_basis(T, basis, tol=tol)
        if not report:
            raise ConstructionError(f"bit-rotation basis is not stable: {report.witness}")
    return basis


def _split_state(shape, v, q, sigma, site):
    """ Returns the state v[0,1]|3,q>|0>_site + v[1,1]|4,q>|1>_site over sigma """

    rows, amps = [], []
    for bit, h in ((0, 3), (1, 4)):
        amp = v[bit, 1]
        if abs(amp) > 0:
            rows.append(encode(h, q, (sigma & ~(1 << site)) | (bit << site), shape))
            amps.append(amp)
    return rows, amps


def _segment_chain(shape, v, M, end, rest):
    """ Returns the columns of the path through one segment: head 0 walking from M+1 to
        end+1, the step back onto head 1, the pass to head 2 and the split """

    L = shape.length
    if not (0 <= M < end and end + 2 < L):
        raise PreconditionError(f"segment ({M}, {end}) does not fit a lattice of length {L}")

    sigma = int(rest)
    for site in range(M, end + 2):
        sigma &= ~(1 << site)
    sigma |= (1 << M) | (1 << (end + 1))

    columns = [([encode(0, k, sigma, shape)], [1.0]) for k in range(M + 1, end + 2)]
    local = [COMPUTATIONAL[(sigma >> site) & 1] for site in range(L)]
    local[end + 1] = v[:, 1]
    columns.append(_product_state(shape, 1, end, local))
    columns.append(_product_state(shape, 2, end + 1, local))
    columns.append(_split_state(shape, v, end + 2, sigma, end + 1))
    return columns


def _full_split_basis(shape, v):
    L = shape.length
    columns = list(_computational_columns(shape, [0], range(L)))

    v_basis = (v[:, 0], v[:, 1])
    for h, offset in ((1, 1), (2, 0)):
        for q in range(L):
            site = q + offset
            if site >= L:
                columns.extend(_computational_columns(shape, [h], [q]))
                continue
            for vec in v_basis:
                columns.extend(_with_free_sites(shape, h, q, {site: vec}))

    columns.extend(_computational_columns(shape, [3, 4], [0]))
    for q in range(1, L):
        site = q - 1
        for sigma in range(shape.n_spin):
            if (sigma >> site) & 1:
                continue
            for x in (0, 1):
                rows, amps = [], []
                for bit, h in ((0, 3), (1, 4)):
                    if abs(v[bit, x]) > 0:
                        rows.append(encode(h, q, sigma | (bit << site), shape))
                        amps.append(v[bit, x])
                columns.append((rows, amps))
            columns.append(([encode(3, q, sigma | (1 << site), shape)], [1.0]))
            columns.append(([encode(4, q, sigma, shape)], [1.0]))

    columns.extend(_computational_columns(shape, range(5, shape.n_head), range(L)))
    return columns


@default_tolerance
def appendix_b_stable_basis(v=None, shape=None, segment=None, rest=0, verify=True, tol=None):
    """ Returns a basis on which the single-split machine is stable.

        With `segment=(M, end)` the family is the one path through the lattice
        configuration with 1s at M and end+1, 0s between and `rest` elsewhere: n+1
        head-0 states, the head-1 and head-2 states carrying v|1> at end+1 and the
        split a|3>|0> + b|4>|1> at site end+1, n+4 states for n = end − M.  Without a
        segment, the complete basis: head 0 computational, head 1 at q with site q+1
        in the v basis, head 2 at q with site q in the v basis, and heads 3 and 4 at q
        paired over site q−1 along the columns of v.
    """

    v = FOURIER if v is None else np.asarray(v, dtype=complex)
    _require_open(shape, "the split-machine basis")
    if shape.n_head < 5:
        raise PreconditionError(f"the split machine needs 5 head states, shape has {shape.n_head}")

    if segment is not None:
        M, end = segment
        basis = Basis.from_columns(shape.dim, _segment_chain(shape, v, M, end, rest), tol=tol)
    else:
        basis = Basis.from_columns(shape.dim, _full_split_basis(shape, v), tol=tol)

    if verify:
        rules = example_machine("appendix_b", v)
        rules = RuleTable(shape.n_head, rules.rules, name=rules.name)
        T = build_step_operator(rules, shape)
        report = is_stable_on_basis(T, basis, tol=tol)
        if not report:
            raise ConstructionError(f"split-machine basis is not stable: {report.witness}")
        if segment is not None:
            paths = extract_paths(T, basis, tol=tol)
            if paths.lengths() != [basis.size]:
                raise ConstructionError(f"segment family splits into paths of lengths {paths.lengths()}")
    return basis
