#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals


class QBEError(Exception):
    """ Base class for every error raised by QBEtools """

    fields = ()

    def to_dict(self):
        """ Returns a JSON-ready description of the error """

        payload = {"error": type(self).__name__, "message": str(self)}
        for name in self.fields:
            value = getattr(self, name, None)
            if isinstance(value, complex):
                value = [value.real, value.imag]
            elif isinstance(value, tuple):
                value = list(value)
            payload[name] = value
        return payload


class ConfigError(QBEError, ValueError):
    pass


class LatticeRangeError(QBEError, IndexError):
    fields = ("component", "value")

    def __init__(self, component, value, upper):
        self.component = component
        self.value = value
        super().__init__(f"{component}={value} is out of range [0, {upper})")


class DimensionMismatchError(QBEError, ValueError):
    pass


class NonUnitaryError(QBEError, ValueError):
    fields = ("residual",)

    def __init__(self, message, residual):
        self.residual = float(residual)
        super().__init__(f"{message} (residual {self.residual:.3e})")


class NotPSDError(QBEError, ValueError):
    fields = ("eigenvalue",)

    def __init__(self, eigenvalue):
        self.eigenvalue = float(eigenvalue)
        super().__init__(f"operator has a negative eigenvalue {self.eigenvalue:.3e}")


class PreconditionError(QBEError, ValueError):
    pass


class InternalInconsistencyError(QBEError, RuntimeError):
    fields = ("residual",)

    def __init__(self, message, residual=None):
        self.residual = None if residual is None else float(residual)
        super().__init__(message)


class NotStableError(QBEError, ValueError):
    fields = ("state",)

    def __init__(self, message, state=None):
        self.state = state
        super().__init__(message)


class DistinctnessError(QBEError, ValueError):
    fields = ("predecessors", "target")

    def __init__(self, first, second, target):
        self.predecessors = (int(first), int(second))
        self.target = int(target)
        super().__init__(f"states {first} and {second} both step onto state {target}")


class NormViolationError(QBEError, ValueError):
    fields = ("state", "alpha")

    def __init__(self, state, alpha):
        self.state = int(state)
        self.alpha = complex(alpha)
        super().__init__(f"state {state} steps with amplitude of modulus {abs(alpha):.6g}, not 1")


class PPIViolationError(QBEError, ValueError):
    fields = ("power",)

    def __init__(self, power):
        self.power = int(power)
        super().__init__(f"power {power} of the operator is not a partial isometry")


class DecompositionError(QBEError, RuntimeError):
    fields = ("residual",)

    def __init__(self, message, residual):
        self.residual = float(residual)
        super().__init__(f"{message} (residual {self.residual:.3e})")


class ConstructionError(QBEError, RuntimeError):
    pass


class NonBallisticError(QBEError, ValueError):
    fields = ("state",)

    def __init__(self, message, state=None):
        self.state = None if state is None else int(state)
        super().__init__(message)


class SpectrumCapError(QBEError, ValueError):
    fields = ("dim", "cap")

    def __init__(self, dim, cap):
        self.dim = int(dim)
        self.cap = int(cap)
        super().__init__(f"dimension {dim} exceeds the dense eigensolver cap {cap}")


class MachineFileSyntaxError(QBEError, ValueError):
    fields = ("line", "column")

    def __init__(self, message, line, column=1):
        self.line = int(line)
        self.column = int(column)
        super().__init__(f"line {line}, column {column}: {message}")


class MachineFileSemanticError(QBEError, ValueError):
    fields = ("lines",)

    def __init__(self, message, lines=()):
        self.lines = tuple(int(x) for x in lines)
        where = ", ".join(str(x) for x in self.lines)
        super().__init__(f"{message} (lines {where})" if where else message)
