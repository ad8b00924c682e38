#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.config import Config
from QBEtools.exceptions import MachineFileSemanticError, MachineFileSyntaxError
from QBEtools.hilbert.lattice import LatticeShape
from QBEtools.qtm.rules import Rule, RuleTable
from QBEtools.utils.complex_literal import format_complex_literal, parse_complex_literal
from QBEtools.utils.unitary import nearest_unitary, unitary_residual

from dataclasses import dataclass, field
import numpy as np
import logging

logger = logging.getLogger(__name__)

TOPOLOGIES = ("cyclic", "open")
DIRECTIONS = ("R", "L")


@dataclass
class RuleLine:
    """ One `rule` line, keeping the literal tokens of its bit operator """

    l: int
    s: int
    f: int
    d: str
    tokens: tuple
    line: int = 0

    @property
    def v(self):
        return np.array([parse_complex_literal(t) for t in self.tokens], dtype=complex).reshape(2, 2)

    def serialize(self):
        return " ".join(["rule", str(self.l), str(self.s), str(self.f), self.d, *self.tokens])


@dataclass
class MachineFile:
    """ Parsed machine description: name, head-state count, lattice and rule lines """

    name: str
    heads: int
    length: int
    topology: str
    rules: list = field(default_factory=list)

    @property
    def shape(self):
        return LatticeShape(self.heads, self.length, self.topology)

    def to_rule_table(self, tol=None):
        """ Returns the RuleTable, each bit operator replaced by its nearest unitary once
            it is within `tol` (default Config.FILE_UNITARY_TOL) of being unitary """

        tol = Config.FILE_UNITARY_TOL if tol is None else tol
        rules = []
        for rule in self.rules:
            v = rule.v
            residual = unitary_residual(v)
            if residual > tol:
                raise MachineFileSemanticError(
                    f"bit operator of rule ({rule.l}, {rule.s}) is not unitary (residual {residual:.3e})",
                    [rule.line],
                )
            rules.append(Rule(rule.l, rule.s, rule.f, rule.d, nearest_unitary(v)))
        return RuleTable(self.heads, rules, name=self.name)

    def serialize(self):
        lines = [
            f"machine {self.name}",
            f"heads {self.heads}",
            f"lattice {self.length} {self.topology}",
        ]
        lines.extend(rule.serialize() for rule in self.rules)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_rule_table(cls, rules, shape, digits=17):
        """ Returns the MachineFile describing a RuleTable on a lattice """

        lines = [
            RuleLine(r.l, r.s, r.f, r.d, tuple(format_complex_literal(x, digits) for x in r.v.ravel()))
            for r in rules
        ]
        return cls(rules.name or "machine", rules.n_head, shape.length, shape.topology, lines)


def _tokens(line):
    """ Yields (column, token) pairs of a comment-stripped line, columns from 1 """

    line = line.split("#", 1)[0]
    column = 0
    for token in line.split():
        column = line.index(token, column)
        yield column + 1, token
        column += len(token)


def _int(token, column, number, what):
    try:
        return int(token)
    except ValueError:
        raise MachineFileSyntaxError(f"{what} must be an integer, got {token!r}", number, column)


def parse_machine_file(text):
    """ Returns the MachineFile described by `text`.

        Grammar, one statement per line, `#` starts a comment:
            machine <name>
            heads <int>
            lattice <int> <cyclic|open>
            rule <l> <s> <f> <R|L> <v00> <v01> <v10> <v11>
        with complex literals written `<float>(+|-)<float>i`.
    """

    header = {}
    rules = []
    seen = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = list(_tokens(raw))
        if not tokens:
            continue
        (column, keyword), args = tokens[0], tokens[1:]

        expected = {"machine": 1, "heads": 1, "lattice": 2, "rule": 8}
        if keyword not in expected:
            raise MachineFileSyntaxError(f"unknown statement {keyword!r}", number, column)
        if len(args) != expected[keyword]:
            where = args[expected[keyword]][0] if len(args) > expected[keyword] else column
            raise MachineFileSyntaxError(
                f"{keyword} takes {expected[keyword]} argument(s), got {len(args)}", number, where
            )

        if keyword != "rule":
            if keyword in header:
                raise MachineFileSemanticError(f"{keyword} is given twice", [header[keyword][0], number])
            if keyword == "machine":
                header[keyword] = (number, args[0][1])
            elif keyword == "heads":
                header[keyword] = (number, _int(args[0][1], args[0][0], number, "heads"))
            else:
                length = _int(args[0][1], args[0][0], number, "lattice length")
                col, topology = args[1]
                if topology not in TOPOLOGIES:
                    raise MachineFileSyntaxError(f"topology must be cyclic or open, got {topology!r}", number, col)
                header[keyword] = (number, (length, topology))
            continue

        l, s, f = (_int(tok, col, number, what) for (col, tok), what in zip(args[:3], ("l", "s", "f")))
        col, d = args[3]
        if d not in DIRECTIONS:
            raise MachineFileSyntaxError(f"direction must be R or L, got {d!r}", number, col)
        for col, tok in args[4:]:
            if parse_complex_literal(tok) is None:
                raise MachineFileSyntaxError(f"{tok!r} is not a complex literal", number, col)

        if (l, s) in seen:
            raise MachineFileSemanticError(f"program element ({l}, {s}) is given twice", [seen[(l, s)], number])
        seen[(l, s)] = number
        rules.append(RuleLine(l, s, f, d, tuple(tok for _, tok in args[4:]), number))

    missing = [k for k in ("machine", "heads", "lattice") if k not in header]
    if missing:
        raise MachineFileSemanticError(f"missing statement(s): {', '.join(missing)}")

    heads = header["heads"][1]
    length, topology = header["lattice"][1]
    if heads < 1 or length < 1:
        raise MachineFileSemanticError("heads and lattice length must be positive",
                                       [header["heads"][0], header["lattice"][0]])
    for rule in rules:
        if not (0 <= rule.l < heads and 0 <= rule.f < heads and rule.s in (0, 1)):
            raise MachineFileSemanticError(f"rule ({rule.l}, {rule.s}) -> {rule.f} is out of range", [rule.line])
        residual = unitary_residual(rule.v)
        if residual > Config.FILE_UNITARY_TOL:
            raise MachineFileSemanticError(
                f"bit operator of rule ({rule.l}, {rule.s}) is not unitary (residual {residual:.3e})", [rule.line]
            )

    machine = MachineFile(header["machine"][1], heads, length, topology, rules)
    logger.debug("parsed machine %s: %d rules", machine.name, len(rules))
    return machine
