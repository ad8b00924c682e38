#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
"""
Command-line front end of QBEtools.

    qbe examples emit zero_motion --output zero.machine
    qbe decide zero.machine
    qbe spectrum zero_motion --length 8 --sector 00000000 --predict truncated_shift:8
    qbe evolve tex1 --state 0,2,00100010 --times 0:50:20
    qbe counterexample --tower 3

Exit codes: 0 ok, 1 negative verdict, 2 input error, 3 internal error.  Errors are
written to stderr as one JSON object.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from QBEtools.config import Config
from QBEtools.dynamics.evolve import Evolution
from QBEtools.dynamics.hamiltonian import feynman_hamiltonian
from QBEtools.dynamics.predictions import parse_prediction
from QBEtools.dynamics.spectrum import spectrum as dense_spectrum
from QBEtools.exceptions import (
    ConfigError,
    DimensionMismatchError,
    DistinctnessError,
    LatticeRangeError,
    MachineFileSemanticError,
    MachineFileSyntaxError,
    NonBallisticError,
    NonUnitaryError,
    NormViolationError,
    NotPSDError,
    NotStableError,
    PPIViolationError,
    PreconditionError,
    QBEError,
    SpectrumCapError,
)
from QBEtools.halmos_wallen.decompose import decompose as hw_decompose
from QBEtools.halmos_wallen.tower import hw_tower
from QBEtools.hilbert.lattice import LatticeShape, encode, spin_sector
from QBEtools.isometry.basis import Basis
from QBEtools.isometry.orthogonality import is_orthogonality_preserving
from QBEtools.isometry.partial_isometry import is_partial_isometry
from QBEtools.isometry.paths import extract_paths, is_distinct_path_generating
from QBEtools.isometry.powers import is_power_partial_isometry, power_residuals
from QBEtools.isometry.stability import is_stable_on_basis
from QBEtools.qtm.condition_x import condition_x
from QBEtools.qtm.decide import NOT_BALLISTIC, decide_ballistic
from QBEtools.qtm.gram_conditions import gram_conditions
from QBEtools.qtm.machines import DEFAULT_LATTICES, MACHINES, default_shape, example_machine
from QBEtools.qtm.stable_bases import appendix_b_stable_basis, bit_rotation_stable_basis
from QBEtools.qtm.step_operator import StepOperator
from QBEtools.utils.report import jsonable

from .machine_file import MachineFile, parse_machine_file
from .tables import basis_frame, operator_frame, read_basis_csv, read_operator_csv, to_csv

import functools
import json
import logging
import os
import sys

import click
import numpy as np
import pandas as pd

logger = logging.getLogger("qbetools.cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

NEGATIVE_ERRORS = (PPIViolationError, NonBallisticError)
INPUT_ERRORS = (
    ConfigError,
    DimensionMismatchError,
    DistinctnessError,
    LatticeRangeError,
    MachineFileSemanticError,
    MachineFileSyntaxError,
    NonUnitaryError,
    NormViolationError,
    NotPSDError,
    NotStableError,
    PreconditionError,
    SpectrumCapError,
)


def _fail(error, code):
    if isinstance(error, QBEError):
        payload = error.to_dict()
    else:
        payload = {"error": type(error).__name__, "message": str(error)}
    click.echo(json.dumps(jsonable(payload), sort_keys=True), err=True)
    sys.exit(code)


def reports_errors(fn):
    """ Turn library errors into an exit code and a JSON description on stderr """

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (click.exceptions.ClickException, click.exceptions.Exit, SystemExit):
            raise
        except NEGATIVE_ERRORS as e:
            _fail(e, EXIT_NEGATIVE)
        except INPUT_ERRORS as e:
            _fail(e, EXIT_INPUT)
        except OSError as e:
            _fail(e, EXIT_INPUT)
        except QBEError as e:
            _fail(e, EXIT_INTERNAL)
        except Exception as e:
            logger.exception("internal error")
            _fail(e, EXIT_INTERNAL)

    return wrapper


def machine_options(fn):
    """ Lattice overrides shared by every command taking a machine """

    fn = click.option("--topology", type=click.Choice(["cyclic", "open"]), default=None,
                      help="Override the lattice topology")(fn)
    fn = click.option("--length", type=int, default=None, help="Override the lattice length")(fn)
    return fn


def output_option(fn):
    return click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
                        help="Write to this file instead of stdout")(fn)


def load_machine(source, length=None, topology=None):
    """ Returns (RuleTable, LatticeShape) for a machine file or a built-in machine name """

    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            machine = parse_machine_file(fh.read())
        shape = LatticeShape(machine.heads, length or machine.length, topology or machine.topology)
        return machine.to_rule_table(), shape
    if source in MACHINES:
        return example_machine(source), default_shape(source, length, topology)
    raise PreconditionError(f"{source!r} is neither a machine file nor a built-in machine ({', '.join(MACHINES)})")


def restrict_to_sector(T, shape, bits, tol):
    """ Returns (T compressed to one lattice spin configuration, its basis indices),
        checking that T and T† leave the configuration invariant """

    indices = spin_sector(shape, bits)
    residual = Basis.from_indices(T.dim, indices).invariance_residual(T)
    if residual > tol.eps_proj:
        raise PreconditionError(f"sector {bits} is not invariant under the step operator (residual {residual:.3e})")
    return T.restrict(indices), indices


def parse_times(text):
    """ Returns the times of "t0,t1,..." or "start:stop:count" """

    try:
        if ":" in text:
            start, stop, count = text.split(":")
            return np.linspace(float(start), float(stop), int(count)).tolist()
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise PreconditionError(f"cannot read times from {text!r}")


def parse_state(text, shape):
    """ Returns the basis index of "h,j,bits" (bits written most significant site first) """

    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise PreconditionError(f"state must read h,j,bits, got {text!r}")
    try:
        h, j = int(parts[0]), int(parts[1])
    except ValueError:
        raise PreconditionError(f"head state and position must be integers, got {text!r}")
    return encode(h, j, parts[2], shape)


def emit_json(payload, output=None):
    text = json.dumps(jsonable(payload), indent=2, sort_keys=True)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def emit_csv(df, output=None):
    text = to_csv(df, output)
    if not output:
        click.echo(text, nl=False)


@click.group()
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON flags file with tolerances, dense_cap and K")
@click.option("--verbose", "-v", is_flag=True, help="Log debug messages to stderr")
@click.pass_context
@reports_errors
def cli(ctx, config_file, verbose):
    """ Quantum ballistic evolution toolkit """

    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)
    ctx.obj = Config.load(config_file)
    logger.debug("config: %s", ctx.obj.to_dict())


@cli.command()
@click.argument("machine")
@click.option("--basis", "basis_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="CSV triplets whose columns are candidate stable-basis vectors")
@machine_options
@output_option
@click.pass_obj
@reports_errors
def analyze(config, machine, basis_file, length, topology, output):
    """ Report every predicate of a machine's step operator and its verdict """

    tol = config.tol
    rules, shape = load_machine(machine, length, topology)
    step = StepOperator(rules, shape)
    T = step.operator
    basis = read_basis_csv(basis_file, T.dim, tol=tol) if basis_file else None

    reports = {
        "partial_isometry": is_partial_isometry(T, tol=tol),
        "orthogonality_preserving": is_orthogonality_preserving(T, tol=tol),
        "condition_x": condition_x(rules, tol=tol),
        "gram_conditions": gram_conditions(step, tol=tol),
        "power_partial_isometry": is_power_partial_isometry(T, tol=tol),
        "stable": is_stable_on_basis(T, basis, tol=tol),
        "distinct_path_generating": is_distinct_path_generating(T, basis, tol=tol),
    }
    verdict = decide_ballistic(rules, shape, basis, tol=tol)
    emit_json({"machine": rules.name, "lattice": shape, "reports": reports, "verdict": verdict}, output)
    if verdict.ballistic_verdict == NOT_BALLISTIC:
        sys.exit(EXIT_NEGATIVE)


@cli.command()
@click.argument("machine")
@click.option("--basis", "basis_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="CSV triplets whose columns are candidate stable-basis vectors")
@click.option("--steps", type=int, default=None, help="Powers of T searched for norm decay")
@machine_options
@output_option
@click.pass_obj
@reports_errors
def decide(config, machine, basis_file, steps, length, topology, output):
    """ Decide whether a machine is quantum ballistic """

    rules, shape = load_machine(machine, length, topology)
    basis = read_basis_csv(basis_file, shape.dim, tol=config.tol) if basis_file else None
    verdict = decide_ballistic(rules, shape, basis, tol=config.tol, n_steps=steps)
    emit_json({"machine": rules.name, "lattice": shape, "verdict": verdict}, output)
    if verdict.ballistic_verdict == NOT_BALLISTIC:
        sys.exit(EXIT_NEGATIVE)


@cli.command()
@click.argument("target")
@click.option("--dim", type=int, default=None, help="Dimension of an operator CSV")
@click.option("--sector", default=None, help="Restrict to one lattice configuration (bits, site L-1 first)")
@machine_options
@output_option
@click.pass_obj
@reports_errors
def decompose(config, target, dim, sector, length, topology, output):
    """ Halmos–Wallen decomposition of a machine or of an operator CSV """

    if target.endswith(".csv"):
        T = read_operator_csv(target, dim)
    else:
        rules, shape = load_machine(target, length, topology)
        T = StepOperator(rules, shape).operator
        if sector is not None:
            T, _ = restrict_to_sector(T, shape, sector, config.tol)
    emit_json(hw_decompose(T, tol=config.tol).summary(), output)


@cli.command()
@click.argument("machine")
@click.option("--K", "K", type=float, default=None, help="Energy scale of H = K(2 - T - T†)")
@click.option("--predict", multiple=True, help="kind:parameter[:multiplicity], repeatable")
@click.option("--sector", default=None, help="Restrict to one lattice configuration (bits, site L-1 first)")
@machine_options
@output_option
@click.pass_obj
@reports_errors
def spectrum(config, machine, K, predict, sector, length, topology, output):
    """ Exact spectrum of the Feynman Hamiltonian, optionally against predictions """

    K = config.K if K is None else K
    rules, shape = load_machine(machine, length, topology)
    T = StepOperator(rules, shape).operator
    if sector is not None:
        T, _ = restrict_to_sector(T, shape, sector, config.tol)

    energies = dense_spectrum(feynman_hamiltonian(T, K, tol=config.tol), config.dense_cap, tol=config.tol).energies
    df = pd.DataFrame({"index": np.arange(len(energies)), "energy": energies})

    if predict:
        levels = np.sort(np.concatenate([parse_prediction(p, K).levels() for p in predict]))
        if len(levels) == len(energies):
            predicted = levels
        else:
            predicted = levels[np.abs(energies[:, None] - levels[None, :]).argmin(axis=1)]
        df["predicted"] = predicted
        df["residual"] = np.abs(energies - predicted)

    emit_csv(df, output)
    if predict and df["residual"].max() > config.tol.eps_eig:
        logger.warning("largest deviation from prediction: %.3e", df["residual"].max())
        sys.exit(EXIT_NEGATIVE)


@cli.command()
@click.argument("machine")
@click.option("--state", required=True, help="Initial state h,j,bits (bits site L-1 first)")
@click.option("--times", required=True, help="t0,t1,... or start:stop:count")
@click.option("--K", "K", type=float, default=None, help="Energy scale of H = K(2 - T - T†)")
@click.option("--sector", default=None, help="Restrict to one lattice configuration (bits, site L-1 first)")
@click.option("--basis", "basis_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="CSV triplets of a stable basis; chains are traced on it")
@machine_options
@output_option
@click.pass_obj
@reports_errors
def evolve(config, machine, state, times, K, sector, basis_file, length, topology, output):
    """ Time series of path probabilities, off-path leakage and norm """

    tol = config.tol
    K = config.K if K is None else K
    rules, shape = load_machine(machine, length, topology)
    T = StepOperator(rules, shape).operator
    index = parse_state(state, shape)

    if sector is not None:
        T, indices = restrict_to_sector(T, shape, sector, tol)
        position = int(np.searchsorted(indices, index))
        if position >= len(indices) or indices[position] != index:
            raise PreconditionError(f"state {state} is not in sector {sector}")
        index = position

    basis = read_basis_csv(basis_file, T.dim, tol=tol) if basis_file else None
    paths = extract_paths(T, basis, tol=tol)

    psi0 = np.zeros(T.dim, dtype=complex)
    psi0[index] = 1
    if basis is not None:
        psi0 = basis.coordinates(psi0)
        if abs(np.linalg.norm(psi0) - 1) > 1e-9:
            raise PreconditionError(f"state {state} does not lie in the span of the basis")
        origin = paths.chain_index(int(basis.labels[np.argmax(np.abs(psi0))]))
    else:
        origin = paths.chain_index(index)

    evolution = Evolution(T=T, K=K, basis=basis, dense_cap=config.dense_cap, tol=tol)
    evolution.build(psi0, parse_times(times))
    chains = None if origin is None else [origin]
    emit_csv(evolution.profile(paths, origin=origin, chains=chains), output)


@cli.command()
@click.option("--tower", "level", type=int, required=True, help="Level n of the tower U_n")
@click.option("--a", "a", type=float, default=0.25, help="Entry a of U_1 (0 < a < 1/2)")
@output_option
@click.pass_obj
@reports_errors
def counterexample(config, level, a, output):
    """ Residual table of the powers of the Halmos–Wallen tower U_n """

    U = hw_tower(level, a, tol=config.tol)
    rows = power_residuals(U, level + 1, tol=config.tol, stop_early=False)
    emit_json({"level": level, "a": a, "dim": U.dim, "powers": rows}, output)


@cli.group()
def examples():
    """ Built-in machines and their stable bases """


@examples.command("list")
@reports_errors
def list_examples():
    """ List the built-in machines """

    for name in MACHINES:
        rules = example_machine(name)
        length, topology = DEFAULT_LATTICES[name]
        click.echo(f"{name}\theads={rules.n_head}\tlattice={length} {topology}\trules={len(rules)}")


@examples.command()
@click.argument("name")
@machine_options
@output_option
@reports_errors
def emit(name, length, topology, output):
    """ Write a built-in machine as a machine file """

    text = MachineFile.from_rule_table(example_machine(name), default_shape(name, length, topology)).serialize()
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@examples.command()
@click.argument("machine")
@machine_options
@click.option("--sector", default=None, help="Restrict to one lattice spin configuration (bits, most significant site first)")
@output_option
@click.pass_obj
@reports_errors
def operator(config, machine, length, topology, sector, output):
    """ Write the step operator of a machine as CSV triplets, readable by decompose """

    rules, shape = load_machine(machine, length, topology)
    T = StepOperator(rules, shape).operator
    if sector is not None:
        T, _ = restrict_to_sector(T, shape, sector, config.tol)
    emit_csv(operator_frame(T), output)


@examples.command()
@click.argument("name")
@click.option("--anchor", type=int, default=None, help="Single anchored family of the bit-rotation basis")
@click.option("--segment", default=None, help="M,end: the one path of the split machine through that segment")
@click.option("--rest", type=int, default=0, help="Lattice bits outside the segment, as an integer")
@machine_options
@output_option
@click.pass_obj
@reports_errors
def basis(config, name, anchor, segment, rest, length, topology, output):
    """ Write the stable basis of a built-in machine as CSV triplets """

    shape = default_shape(name, length, topology)
    if name == "bit_rotation":
        B = bit_rotation_stable_basis(shape=shape, anchor=anchor, tol=config.tol)
    elif name == "appendix_b":
        if segment is not None:
            try:
                segment = tuple(int(x) for x in segment.split(","))
            except ValueError:
                raise PreconditionError(f"segment must read M,end, got {segment!r}")
        B = appendix_b_stable_basis(shape=shape, segment=segment, rest=rest, tol=config.tol)
    else:
        raise PreconditionError(f"no stable basis is built in for {name!r}")
    emit_csv(basis_frame(B), output)


def main():
    cli(prog_name="qbe")


if __name__ == "__main__":
    main()
