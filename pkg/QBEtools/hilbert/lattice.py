#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import LatticeRangeError, PreconditionError

from dataclasses import dataclass
import numpy as np

TOPOLOGIES = ("cyclic", "open")


@dataclass(frozen=True)
class LatticeShape:
    """ Finite truncation of the head-state ⊗ head-position ⊗ lattice-spin space.

        Basis index layout: (h * length + j) * 2**length + sigma, with lattice site 0
        the least significant bit of sigma.
    """

    n_head: int
    length: int
    topology: str = "open"
    spins: bool = True

    def __post_init__(self):
        if int(self.n_head) < 1:
            raise PreconditionError(f"n_head must be positive, got {self.n_head}")
        if int(self.length) < 1:
            raise PreconditionError(f"length must be positive, got {self.length}")
        if self.topology not in TOPOLOGIES:
            raise PreconditionError(f"topology must be one of {TOPOLOGIES}, got {self.topology!r}")

    @property
    def n_spin(self):
        return 2 ** self.length if self.spins else 1

    @property
    def dim(self):
        return self.n_head * self.length * self.n_spin

    @property
    def cyclic(self):
        return self.topology == "cyclic"

    def to_dict(self):
        return {
            "n_head": self.n_head,
            "length": self.length,
            "topology": self.topology,
            "spins": self.spins,
            "dim": self.dim,
        }


def sigma_to_int(sigma, shape):
    """ Returns the integer value of a spin configuration given as an int, a bitstring
        written most significant site first, or None/"" for the spinless case """

    if not shape.spins:
        if sigma not in (None, "", 0):
            raise LatticeRangeError("sigma", sigma, 1)
        return 0

    if isinstance(sigma, str):
        if len(sigma) != shape.length or set(sigma) - {"0", "1"}:
            raise LatticeRangeError("sigma", sigma, shape.n_spin)
        return int(sigma, 2)

    value = int(sigma)
    if not 0 <= value < shape.n_spin:
        raise LatticeRangeError("sigma", value, shape.n_spin)
    return value


def sigma_to_bits(sigma, shape):
    """ Returns the bitstring of a spin configuration, most significant site first """

    return format(sigma_to_int(sigma, shape), f"0{shape.length}b") if shape.spins else ""


def encode(h, j, sigma, shape):
    """ Returns the basis index of |h, j, sigma> """

    if not 0 <= h < shape.n_head:
        raise LatticeRangeError("h", h, shape.n_head)
    if not 0 <= j < shape.length:
        raise LatticeRangeError("j", j, shape.length)
    return (h * shape.length + j) * shape.n_spin + sigma_to_int(sigma, shape)


def decode(index, shape):
    """ Returns (h, j, sigma) for a basis index; works elementwise on integer arrays """

    if np.ndim(index) == 0:
        if not 0 <= index < shape.dim:
            raise LatticeRangeError("index", index, shape.dim)
        index = int(index)
    else:
        index = np.asarray(index, dtype=np.int64)
        if index.size and (index.min() < 0 or index.max() >= shape.dim):
            raise LatticeRangeError("index", int(index.max()), shape.dim)

    sigma = index % shape.n_spin
    j = (index // shape.n_spin) % shape.length
    h = index // (shape.n_spin * shape.length)
    return h, j, sigma


def encode_arrays(h, j, sigma, shape):
    """ Vectorised encode without range checks, for operator assembly """

    return (np.asarray(h) * shape.length + np.asarray(j)) * shape.n_spin + np.asarray(sigma)


def all_indices(shape):
    """ Returns (index, h, j, sigma) arrays covering the whole space """

    index = np.arange(shape.dim, dtype=np.int64)
    h, j, sigma = decode(index, shape)
    return index, h, j, sigma


def spin_sector(shape, sigma):
    """ Returns the sorted basis indices of every head state and position over one
        lattice spin configuration """

    value = sigma_to_int(sigma, shape)
    h, j = np.meshgrid(np.arange(shape.n_head), np.arange(shape.length), indexing="ij")
    return np.sort(encode_arrays(h.ravel(), j.ravel(), value, shape))


def site_bits(sigma, site):
    """ Returns the bit(s) of sigma at a lattice site """

    return (np.asarray(sigma) >> np.asarray(site)) & 1
