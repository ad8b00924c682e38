#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.exceptions import ConfigError

from dataclasses import dataclass, asdict, fields, replace
import json
import logging
import os

logger = logging.getLogger(__name__)

ENV_PREFIX = "QBE_"


@dataclass(frozen=True)
class ToleranceContext:
    """ Numerical thresholds shared by every predicate.

        eps_proj  projector hermiticity / idempotence residual bound
        eps_comm  commutator residual bound
        eps_zero  entries at or below this magnitude are treated as zero
        eps_eig   width used to group degenerate eigenvalues
    """

    eps_proj: float = 1e-10
    eps_comm: float = 1e-10
    eps_zero: float = 1e-12
    eps_eig: float = 1e-8

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not (isinstance(value, (int, float)) and value > 0):
                raise ConfigError(f"{name} must be strictly positive, got {value!r}")

    @classmethod
    def from_env(cls, environ=None):
        """ Returns the defaults overridden by QBE_EPS_* environment variables """

        environ = os.environ if environ is None else environ
        overrides = {}
        for field in fields(cls):
            key = ENV_PREFIX + field.name.upper()
            if key in environ:
                overrides[field.name] = _parse_positive(key, environ[key])
        return cls(**overrides)

    def override(self, **kwargs):
        """ Returns a copy with the non-None keyword values replaced """

        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs) if kwargs else self

    def to_dict(self):
        return asdict(self)


def _parse_positive(name, raw):
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"{name}: cannot parse {raw!r} as a number")
    if not value > 0:
        raise ConfigError(f"{name} must be strictly positive, got {raw!r}")
    return value


class Config:
    """ Run-wide settings: tolerances, the dense eigensolver cap and the energy scale.

        Precedence, lowest first: built-in defaults, QBE_* environment variables,
        the optional JSON flags file, explicit keyword overrides.
    """

    DENSE_CAP = 4096
    DEFAULT_K = 1.0
    FILE_UNITARY_TOL = 1e-6
    FLOAT_FORMAT = "%.17g"

    FLAG_KEYS = ("eps_proj", "eps_comm", "eps_zero", "eps_eig", "dense_cap", "K")

    def __init__(self, tol=None, dense_cap=None, K=None):
        self.tol = tol if tol is not None else ToleranceContext()
        self.dense_cap = int(dense_cap) if dense_cap is not None else self.DENSE_CAP
        self.K = float(K) if K is not None else self.DEFAULT_K

        if self.dense_cap < 1:
            raise ConfigError(f"dense_cap must be positive, got {self.dense_cap}")
        if not self.K > 0:
            raise ConfigError(f"K must be strictly positive, got {self.K}")

    @classmethod
    def load(cls, filename=None, environ=None, **overrides):
        """ Returns a Config built from the environment, a flags file and overrides """

        tol = ToleranceContext.from_env(environ)
        environ = os.environ if environ is None else environ
        settings = {}
        if "QBE_DENSE_CAP" in environ:
            settings["dense_cap"] = _parse_positive("QBE_DENSE_CAP", environ["QBE_DENSE_CAP"])
        if "QBE_K" in environ:
            settings["K"] = _parse_positive("QBE_K", environ["QBE_K"])

        if filename:
            settings.update(cls._read_flags(filename))

        settings.update({k: v for k, v in overrides.items() if v is not None})

        tol = tol.override(**{k: settings.pop(k) for k in list(settings) if k.startswith("eps_")})
        logger.debug("loaded config: tol=%s settings=%s", tol, settings)
        return cls(tol=tol, dense_cap=settings.get("dense_cap"), K=settings.get("K"))

    @classmethod
    def _read_flags(cls, filename):
        try:
            with open(filename, "r", encoding="utf-8") as fh:
                flags = json.load(fh)
        except FileNotFoundError:
            raise ConfigError(f"flags file {filename} does not exist")
        except json.JSONDecodeError as e:
            raise ConfigError(f"flags file {filename} is not valid JSON: {e}")

        if not isinstance(flags, dict):
            raise ConfigError(f"flags file {filename} must hold a JSON object")

        unknown = sorted(set(flags) - set(cls.FLAG_KEYS))
        if unknown:
            raise ConfigError(f"unknown keys in flags file {filename}: {', '.join(unknown)}")

        return {k: _parse_positive(f"{filename}:{k}", v) for k, v in flags.items()}

    def to_dict(self):
        return {"tolerances": self.tol.to_dict(), "dense_cap": self.dense_cap, "K": self.K}
