from __future__ import annotations

import sys
import time
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable

import click
from loguru import logger
from rich.console import Console

from hierarchy_forge.cli.config import Command, JobConfig, OutputFormat, TimeMode
from hierarchy_forge.cli.render import render_equation, render_structure, render_summary, summary_table
from hierarchy_forge.cli.summary import VerificationSummary
from hierarchy_forge.exceptions import HierarchyForgeError
from hierarchy_forge.hierarchy import hierarchy_equation
from hierarchy_forge.liealg import LieCase, build_basis, verify_structure_constants
from hierarchy_forge.spectral import ModelKind, SeedProfile
from hierarchy_forge.utils.env_var_helpers import get_seed
from hierarchy_forge.verification import SuiteOptions, VerificationRunner, VerificationSuite

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.spectral import SpectralModel

EXIT_FAILED_CHECKS = 1
LOG_FORMAT = "{level}: {message}"


def _configure_logging(*, verbose: bool, quiet: bool) -> None:
    level = "DEBUG" if verbose else "ERROR" if quiet else "INFO"
    logger.remove()
    logger.add(lambda message: click.echo(message, err=True, nl=False), level=level, format=LOG_FORMAT)


def _parse_params(values: tuple[str, ...]) -> dict[str, str]:
    bindings = {}
    for raw in values:
        name, sep, value = raw.partition("=")
        if not sep or not name.strip() or not value.strip():
            msg = f"Expected NAME=VALUE, got {raw!r}."
            raise click.BadParameter(msg, param_hint="--param")
        bindings[name.strip()] = value.strip()
    return bindings


def _build_config(**kwargs: Any) -> tuple[JobConfig, SpectralModel]:
    """Configuration problems exit with code 2."""
    try:
        config = JobConfig.build(**kwargs)
        return config, config.spectral_model()
    except HierarchyForgeError as error:
        raise click.UsageError(str(error)) from None


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text)
        return
    out.write_text(text + "\n", encoding="utf-8")
    logger.info("Wrote {}", out)


def model_options(function: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option("--model", type=click.Choice([kind.value for kind in ModelKind]), default=None),
        click.option("--N", "n_components", type=int, default=None, help="Number of components (multi model)."),
        click.option("--epsilon", default=None, help="Value or symbol bound to epsilon."),
        click.option("--sigma", default=None, help="Value or symbol bound to sigma (multi model)."),
        click.option("--param", "params", multiple=True, help="Other bindings as NAME=VALUE, e.g. alpha1=1."),
        click.option("--iso", is_flag=True, help="Set every drift coefficient k_m to zero."),
        click.option(
            "--profile",
            type=click.Choice([profile.value for profile in SeedProfile]),
            default=SeedProfile.LEADING.value,
            help="Seed constants of the multi model.",
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def output_options(function: Callable[..., Any]) -> Callable[..., Any]:
    function = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)(function)
    return click.option(
        "--format",
        "output_format",
        type=click.Choice([fmt.value for fmt in OutputFormat]),
        default=OutputFormat.TEXT.value,
    )(function)


def _bindings(epsilon: str | None, sigma: str | None, params: tuple[str, ...]) -> dict[str, str]:
    bindings = _parse_params(params)
    if epsilon is not None:
        bindings["epsilon"] = epsilon
    if sigma is not None:
        bindings["sigma"] = sigma
    return bindings


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log every step at debug level.")
@click.option("--quiet", "-q", is_flag=True, help="Only log errors.")
def cli(verbose: bool, quiet: bool) -> None:
    """Generate and verify KdV-type hierarchies from extended Lie algebras."""
    _configure_logging(verbose=verbose, quiet=quiet)


@click.command()
@model_options
@click.option("--order", type=int, default=1, show_default=True)
@output_options
def gen(
    model: str | None,
    n_components: int | None,
    epsilon: str | None,
    sigma: str | None,
    params: tuple[str, ...],
    iso: bool,
    profile: str,
    order: int,
    output_format: str,
    out: Path | None,
) -> None:
    """
    Emit the hierarchy equation of the given order and the recursion table it
    was read from.
    """
    config, spectral_model = _build_config(
        command=Command.GENERATE,
        model=model or ModelKind.KDV.value,
        n_components=n_components,
        order=order,
        bindings=_bindings(epsilon, sigma, params),
        time_mode=TimeMode.ZERO if iso else TimeMode.SYMBOLIC,
        profile=profile,
        output_format=output_format,
        out=out,
    )
    logger.info("Generating the order {} flow of {}", config.order, spectral_model.label)
    try:
        equation = hierarchy_equation(spectral_model, config.order)
    except HierarchyForgeError as error:
        raise click.ClickException(str(error)) from None
    _emit(render_equation(equation, config.output_format), config.out)


@click.command()
@click.argument("suite", type=click.Choice([suite.value for suite in VerificationSuite]), default="all")
@model_options
@click.option("--order", type=int, default=None, help="Highest order checked for --model.")
@click.option("--case", type=click.Choice([case.value for case in LieCase]), default=None)
@click.option("--max", "symmetry_max", type=int, default=2, show_default=True, help="Bound of the symmetry table.")
@click.option("--seed", type=int, default=None, help="Seed of the random test data.")
@click.option("--timing", is_flag=True, help="Include the wall time in the summary.")
@output_options
def verify(
    suite: str,
    model: str | None,
    n_components: int | None,
    epsilon: str | None,
    sigma: str | None,
    params: tuple[str, ...],
    iso: bool,
    profile: str,
    order: int | None,
    case: str | None,
    symmetry_max: int,
    seed: int | None,
    timing: bool,
    output_format: str,
    out: Path | None,
) -> None:
    """
    Run a verification suite. Exits with code 1 when any asserted check fails;
    reported discrepancies are listed but do not fail the run.
    """
    spectral_model = None
    if model is not None:
        config, spectral_model = _build_config(
            command=Command.VERIFY,
            model=model,
            n_components=n_components,
            order=2 if order is None else order,
            bindings=_bindings(epsilon, sigma, params),
            time_mode=TimeMode.ZERO if iso else TimeMode.SYMBOLIC,
            profile=profile,
            output_format=output_format,
            out=out,
            timing=timing,
        )
    else:
        config, _ = _build_config(
            command=Command.VERIFY,
            model=ModelKind.KDV.value,
            order=0,
            output_format=output_format,
            out=out,
            timing=timing,
        )
    if symmetry_max < 0:
        msg = f"--max must be nonnegative, got {symmetry_max}."
        raise click.BadParameter(msg, param_hint="--max")
    options = SuiteOptions(
        model=spectral_model,
        order=config.order if spectral_model is not None else None,
        case=LieCase.parse(case) if case is not None else None,
        n_blocks=n_components if case is not None else None,
        symmetry_max=symmetry_max,
        seed=get_seed(seed),
    )
    logger.info("Running the {} suite", suite)
    started = time.perf_counter()
    try:
        outcome = VerificationRunner(options=options).run(suite)
    except HierarchyForgeError as error:
        raise click.ClickException(str(error)) from None
    summary = VerificationSummary.from_outcome(outcome, time.perf_counter() - started)
    _emit(render_summary(summary, config.output_format, include_timing=config.timing), config.out)
    if config.out is not None:
        Console(stderr=True).print(summary_table(summary))
    if not summary.passed:
        logger.error("{} asserted check(s) failed", len(outcome.failures()))
        sys.exit(EXIT_FAILED_CHECKS)


@click.command()
@click.option("--case", type=click.Choice([case.value for case in LieCase]), required=True)
@click.option("--N", "n_blocks", type=int, default=None, help="Number of blocks for the indexed cases.")
@output_options
def table(case: str, n_blocks: int | None, output_format: str, out: Path | None) -> None:
    """Print the commutator table of an extended Lie algebra."""
    try:
        basis = build_basis(case, n_blocks)
    except HierarchyForgeError as error:
        raise click.UsageError(str(error)) from None
    logger.info("Tabulating {} with {} blocks", basis.case.value, basis.n_blocks)
    report = verify_structure_constants(basis)
    _emit(render_structure(report, OutputFormat(output_format)), out)


cli.add_command(gen)
cli.add_command(verify)
cli.add_command(table)
