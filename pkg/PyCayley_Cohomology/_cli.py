import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import click

from PyCayley_Cohomology._constants import (
    DEFAULT_INDENTATION,
    DEFAULT_RANDOM_DENSITY,
    DEFAULT_RANDOM_DIMENSION,
    DEFAULT_RANDOM_R,
    DEFAULT_RANDOM_VERTICES,
    INSTANCE_KINDS,
)
from PyCayley_Cohomology._exceptions import CayleyCheckException
from PyCayley_Cohomology._formatter import (
    InstanceFormatException,
    JsonReportFormatter,
    TableReportFormatter,
)
from PyCayley_Cohomology._instances import (
    InstanceFile,
    dump_instance,
    generate_random,
    generate_suite_instance,
    load_instance,
    shipped_fixtures,
)
from PyCayley_Cohomology._report import Report
from PyCayley_Cohomology._suite import SuiteResult, invalid_report, run_suite

logger = logging.getLogger(__name__)

USAGE_ERROR = 2


def _parse_degrees(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        degrees = tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if any(degree < 1 for degree in degrees):
        raise click.BadParameter("degrees must be positive")
    return degrees


def _usage_error(ctx: click.Context, message: str) -> None:
    click.echo(f"Error: {message}", err=True)
    ctx.exit(USAGE_ERROR)


def _collect(
    ctx: click.Context, command: str, paths: Sequence[str], random_count: int, seed: int
) -> Tuple[List[InstanceFile], List[Report]]:
    """
    Instances named on the command line (or the shipped fixtures), followed
    by ``random_count`` seeded random covers whose r, vertex count and
    dimension vary with the seed. Files that decode but violate an
    invariant become INVALID-INSTANCE reports; undecodable files end the run.
    """
    instances: List[InstanceFile] = []
    invalid: List[Report] = []
    if not paths and not random_count:
        instances.extend(shipped_fixtures())
    for path in paths:
        try:
            instances.append(load_instance(path))
        except InstanceFormatException as e:
            _usage_error(ctx, f"{path}: {e}")
        except CayleyCheckException as e:
            invalid.append(invalid_report(Path(path).stem, command, e))
    for offset in range(random_count):
        try:
            instances.append(generate_suite_instance(seed + offset))
        except CayleyCheckException as e:
            invalid.append(invalid_report(f"random-cover-{seed + offset}", command, e))
    return instances, invalid


def _emit(
    ctx: click.Context, result: SuiteResult, machine: bool, trace: bool, timing: bool, indent: int = DEFAULT_INDENTATION
) -> None:
    if machine:
        formatter = JsonReportFormatter(timing)
        try:
            formatter.set_indentation(indent)
        except ValueError as e:
            _usage_error(ctx, f"--indent {indent}: {e}")
    else:
        formatter = TableReportFormatter(trace, timing)
    click.echo(formatter.format(result.reports))
    ctx.exit(result.exit_status)


def _instance_command(name: str, help_text: str, certify: bool = False):
    """Register a subcommand that runs ``name`` over instance files."""

    def run(ctx: click.Context, paths, random_count, seed, parallel, machine, indent, trace, timing, certify_map=False):
        instances, invalid = _collect(ctx, name, paths, random_count, seed)
        result = run_suite(name, instances, parallel=parallel, certify_map=certify_map, invalid=invalid)
        _emit(ctx, result, machine, trace, timing, indent)

    run.__doc__ = help_text
    command = click.pass_context(run)
    if certify:
        command = click.option("--certify", "certify_map", is_flag=True,
                               help="Also certify the comparison chain map is a quasi-isomorphism")(command)
    for option in reversed(_INSTANCE_OPTIONS):
        command = option(command)
    return cli.command(name)(command)


_INDENT_OPTION = click.option("--indent", default=DEFAULT_INDENTATION, type=int,
                              help="Indentation of the JSON reports printed with --machine")

_INSTANCE_OPTIONS = (
    click.argument("paths", nargs=-1, type=click.Path(exists=True, dir_okay=False)),
    click.option("--random", "random_count", default=0, type=click.IntRange(min=0),
                 help="Append COUNT seeded random covers; r, size and dimension vary with the seed "
                      "(shipped fixtures are skipped)"),
    click.option("--seed", default=0, type=int, help="Seed of the first random instance"),
    click.option("--parallel", default=1, type=click.IntRange(min=1), help="Number of worker processes"),
    click.option("--machine", is_flag=True, help="Print JSON reports instead of a table"),
    _INDENT_OPTION,
    click.option("--trace", is_flag=True, help="Print rewrite traces under the table"),
    click.option("--timing", is_flag=True, help="Include elapsed times"),
)


@click.group()
@click.option("--verbose", is_flag=True, help="Log progress to stderr")
def cli(verbose: bool):
    """Exact verification of relative cohomology identities on finite simplicial models."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")


_instance_command("verify-resolution", "H*(F, ∪E_i) against the totalized intersection resolution.", certify=True)
_instance_command("verify-final", "Pseudo-Mayer–Vietoris total complex against the shifted deepest intersection.",
                  certify=True)
_instance_command("verify-theorem", "Companion pair cohomology against the shifted deepest intersection.")
_instance_command("verify-trace", "Certify every state of the symbolic reduction on each cover.")


@cli.command("reduce")
@click.option("--r", "r", default=3, type=click.IntRange(min=1), help="Number of cover members")
@click.option("--machine", is_flag=True, help="Print JSON reports instead of a table")
@_INDENT_OPTION
@click.option("--trace", is_flag=True, help="Print the rewrite trace")
@click.option("--timing", is_flag=True, help="Include elapsed times")
@click.pass_context
def reduce_command(ctx: click.Context, r: int, machine: bool, indent: int, trace: bool, timing: bool):
    """
    Reduce (1,…,r) symbolically to the deepest intersection.

    Each merge round eliminates its pair terms before its left-most term, so
    for r=3 the first printed quotient is (1,2,3) -> (1,2) + (1,3) -> (1) + (2∩3)
    rather than 0 -> (1,2) + (1,2∩3) -> (1) + (2) + (3). Eliminating the
    left-most term first does not leave a complex of signed restrictions and
    is rejected.
    """
    _emit(ctx, run_suite("reduce", r=r), machine, trace, timing, indent)


@cli.command("rank-one")
@click.option("--N", "N", default=None, type=int, help="Number of Plücker coordinates (all of 2..4 if omitted)")
@click.option("--degrees", default=None, callback=_parse_degrees, help="Section degrees, e.g. 1,2")
@click.option("--machine", is_flag=True, help="Print JSON reports instead of a table")
@_INDENT_OPTION
@click.option("--timing", is_flag=True, help="Include elapsed times")
@click.pass_context
def rank_one_command(ctx: click.Context, N: Optional[int], degrees: Optional[Tuple[int, ...]], machine: bool,
                     indent: int, timing: bool):
    """Top cohomology of the complement of Π for d = 1."""
    try:
        result = run_suite("rank-one", N=N, degrees=degrees)
    except CayleyCheckException as e:
        _usage_error(ctx, str(e))
    _emit(ctx, result, machine, False, timing, indent)


@cli.command("gen")
@click.option("--seed", default=0, type=int)
@click.option("--vertices", default=DEFAULT_RANDOM_VERTICES, type=int)
@click.option("--dimension", default=DEFAULT_RANDOM_DIMENSION, type=int)
@click.option("--r", "r", default=DEFAULT_RANDOM_R, type=int)
@click.option("--density", default=DEFAULT_RANDOM_DENSITY, type=float)
@click.option("--kind", default="cover", type=click.Choice([k for k in INSTANCE_KINDS if k != "cover-with-companion"]))
@click.pass_context
def gen_command(ctx: click.Context, seed: int, vertices: int, dimension: int, r: int, density: float, kind: str):
    """Print a seeded random instance file."""
    try:
        inst = generate_random(seed, vertices, dimension, r, density, kind)
    except CayleyCheckException as e:
        _usage_error(ctx, str(e))
    click.echo(dump_instance(inst), nl=False)


__all__ = ["cli"]
