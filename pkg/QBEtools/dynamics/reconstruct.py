#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import InternalInconsistencyError, NonBallisticError, PreconditionError
from QBEtools.hilbert.operator import ComplexOperator
from QBEtools.isometry.basis import Basis
from QBEtools.isometry.paths import PathSet, CYCLE, OPEN_CHAIN
from QBEtools.wrappers import default_tolerance

from .hamiltonian import as_operator, feynman_hamiltonian

from dataclasses import dataclass
import itertools
import networkx as nx
import numpy as np
import scipy.sparse as sp
import logging

logger = logging.getLogger(__name__)


@dataclass
class ReconstructionResult:
    """ A step operator T′ recovered from a ballistic Hamiltonian, with the orientation
        chosen for each chain """

    T_prime: ComplexOperator
    directions: list
    c: complex
    K: float
    paths: PathSet


def adjacency_graph(H, B=None, tol=None):
    """ Returns (graph, K, c): the graph joining basis states with a nonzero
        Hamiltonian matrix element, the energy scale read from the diagonal and the
        common off-diagonal constant """

    A = B.conjugate(H) if B is not None else H
    diagonal = A.matrix.diagonal()
    K = float(diagonal[0].real) / 2 if len(diagonal) else 0.0

    off_diag = np.abs(diagonal - 2 * K) > tol.eps_zero
    if np.any(off_diag):
        state = int(np.flatnonzero(off_diag)[0])
        raise NonBallisticError(
            f"diagonal element {diagonal[state]} of state {state} differs from 2K = {2 * K}", state
        )
    if not K > 0:
        raise NonBallisticError(f"energy scale K = {K} read from the diagonal is not positive")

    coo = sp.triu(A.matrix, k=1).tocoo()
    graph = nx.Graph()
    graph.add_nodes_from(range(A.dim))
    c = None
    for a, b, value in zip(coo.row, coo.col, coo.data):
        if abs(value) <= tol.eps_zero:
            continue
        if c is None:
            c = complex(value)
        elif abs(value - c) > tol.eps_zero:
            raise NonBallisticError(f"matrix element {value} between {a} and {b} differs from c = {c}", int(a))
        graph.add_edge(int(a), int(b))

    if c is not None and abs(c + K) > tol.eps_zero:
        raise NonBallisticError(f"adjacency constant c = {c} does not equal -K = {-K}")

    for node, degree in graph.degree():
        if degree > 2:
            raise NonBallisticError(f"state {node} is adjacent to {degree} states", node)

    return graph, K, c


def _oriented_chains(graph):
    """ Returns (kind, states) per connected component with at least two states: open
        chains start at their smaller endpoint, cycles start at their smallest state and
        step toward its smaller neighbour """

    out = []
    for component in sorted(nx.connected_components(graph), key=min):
        if len(component) < 2:
            continue
        sub = graph.subgraph(component)
        is_cycle = sub.number_of_edges() == sub.number_of_nodes()
        if is_cycle:
            start = min(component)
            nxt = min(sub.neighbors(start))
        else:
            start = min(n for n, d in sub.degree() if d == 1)
            nxt = next(iter(sub.neighbors(start)))

        order, prev, node = [start], start, nxt
        while node != start:
            order.append(node)
            following = [n for n in sub.neighbors(node) if n != prev]
            if not following:
                break
            prev, node = node, following[0]
        out.append((CYCLE if is_cycle else OPEN_CHAIN, order))
    return out


@default_tolerance
def reconstruct_step_operator(H, B=None, tol=None, flips=None):
    """ Returns a ReconstructionResult whose T′ satisfies K(2 − T′ − T′†) = H.

        `flips` optionally reverses the orientation of the chains, in the order of their
        smallest states; every choice gives the same Hamiltonian.
    """

    H = as_operator(H)
    skew = (H - H.adjoint()).norm()
    if skew > tol.eps_zero:
        raise PreconditionError(f"Hamiltonian is not Hermitian (residual {skew:.3e})")

    graph, K, c = adjacency_graph(H, B, tol)
    chains = _oriented_chains(graph)
    flips = [False] * len(chains) if flips is None else list(flips)
    if len(flips) != len(chains):
        raise PreconditionError(f"expected {len(chains)} orientation flags, got {len(flips)}")

    labels = B.labels if B is not None else np.arange(H.dim)
    rows, cols, directions, path_chains, kinds = [], [], [], [], []
    for (kind, order), flip in zip(chains, flips):
        if flip:
            order = [order[0]] + order[:0:-1] if kind == CYCLE else order[::-1]
        links = list(zip(order[:-1], order[1:]))
        if kind == CYCLE:
            links.append((order[-1], order[0]))
        for a, b in links:
            rows.append(b)
            cols.append(a)
        directions.append({"kind": kind, "start": int(labels[order[0]]), "flipped": bool(flip)})
        path_chains.append([int(labels[s]) for s in order])
        kinds.append(kind)

    local = ComplexOperator.from_triplets(rows, cols, 1.0, graph.number_of_nodes())
    if B is not None and not B.is_computational:
        V = B.matrix()
        T_prime = ComplexOperator(V @ local.matrix @ V.conj().T)
    else:
        T_prime = local

    rebuilt = feynman_hamiltonian(T_prime, K, tol=tol).matrix
    residual = (rebuilt - H).norm()
    if residual > tol.eps_zero:
        raise InternalInconsistencyError("reconstructed step operator does not reproduce H", residual)

    in_chain = {s for chain in path_chains for s in chain}
    zero_length = frozenset(int(x) for x in labels if int(x) not in in_chain)
    paths = PathSet(path_chains, kinds, zero_length, labels=tuple(int(x) for x in labels))
    logger.debug("reconstructed %d chains with K=%.6g", len(path_chains), K)
    return ReconstructionResult(T_prime, directions, c if c is not None else complex(-K), K, paths)


@default_tolerance
def all_orientations(H, B=None, tol=None):
    """ Yields the ReconstructionResult of each of the 2ⁿ orientation choices """

    H = as_operator(H)
    n = len(_oriented_chains(adjacency_graph(H, B, tol)[0]))
    for flips in itertools.product((False, True), repeat=n):
        yield reconstruct_step_operator(H, B, tol=tol, flips=flips)
