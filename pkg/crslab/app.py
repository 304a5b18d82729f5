# crslab/app.py
"""
Command-line entry point

Builds the RunConfig from the global options and the configuration
file, sets up logging on standard error, registers the command modules,
and turns library errors into exit codes.
"""

from __future__ import annotations

from typing import NoReturn, Optional

import click
from pydantic import ValidationError

from . import __version__
from .cli import COMMANDS
from .cli.output import to_json
from .cli.schemas import ErrorResponse, RunConfig
from .config import resolve_cap, settings
from .config.constants import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    EXIT_INVALID_INPUT,
    EXIT_INVARIANT_VIOLATION,
    EXIT_RESOURCE_CAP,
    LOG_LEVELS,
    OUTPUT_FORMATS,
)
from .config.logger import get_logger, setup_logging
from .utils.errors import CrsLabError, DomainError, InvariantViolation, ResourceLimitError

logger = get_logger(__name__)


def exit_code_for(error: Exception) -> int:
    """Exit code for an error escaping a command"""
    if isinstance(error, ResourceLimitError):
        return EXIT_RESOURCE_CAP
    if isinstance(error, (DomainError, ValidationError)):
        return EXIT_INVALID_INPUT
    return EXIT_INVARIANT_VIOLATION


def _fail(ctx: click.Context, error: Exception) -> NoReturn:
    code = exit_code_for(error)
    message = str(error)
    if isinstance(error, InvariantViolation):
        message = f"internal check failed, please report: {message}"
    logger.debug(f"Command failed with exit code {code}", exc_info=True)

    run = ctx.obj if isinstance(ctx.obj, RunConfig) else None
    if run is not None and run.format.value == "json":
        document = ErrorResponse(error=type(error).__name__, message=message, exit_code=code)
        click.echo(to_json(document), err=True, nl=False)
    else:
        click.echo(f"Error: {message}", err=True)
    ctx.exit(code)


class CrsLabGroup(click.Group):
    """Root group mapping library errors to exit codes 2, 3 and 4"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (CrsLabError, ValidationError) as e:
            _fail(ctx, e)


@click.group(cls=CrsLabGroup)
@click.option('--format', 'output_format', type=click.Choice(OUTPUT_FORMATS), default=None,
              help='Result format (default from config, else plain)')
@click.option('--output', type=click.Path(dir_okay=False), default=None,
              help='Write results to a file instead of standard output')
@click.option('--seed', type=int, default=None, help='64-bit unsigned seed for sampling')
@click.option('--enum-cap', type=int, default=None, help='Enumeration cap')
@click.option('--group-cap', type=int, default=None, help='Permutation group order cap')
@click.option('--workers', type=int, default=None, help='Worker threads for Monte Carlo runs')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None)
@click.option('--json-logs', is_flag=True, help='One JSON object per log record')
@click.version_option(__version__, prog_name='crslab')
@click.pass_context
def main(
        ctx: click.Context,
        output_format: Optional[str],
        output: Optional[str],
        seed: Optional[int],
        enum_cap: Optional[int],
        group_cap: Optional[int],
        workers: Optional[int],
        log_level: Optional[str],
        json_logs: bool,
) -> None:
    """Exact and Monte Carlo computations for characteristic random subgroups"""
    config = settings.config
    run = RunConfig(
        seed=config.get('sampling.seed', DEFAULT_SEED) if seed is None else seed,
        enumeration_cap=resolve_cap(enum_cap),
        group_order_cap=resolve_cap(group_cap, key='caps.group_order'),
        format=output_format or config.get('output.format', DEFAULT_OUTPUT_FORMAT),
        output=output,
        workers=config.get('sampling.workers', DEFAULT_WORKERS) if workers is None else workers,
        log_level=log_level or config.get('logging.level', DEFAULT_LOG_LEVEL),
        json_logs=json_logs or bool(config.get('logging.json', False)),
    )
    setup_logging(log_level=run.log_level, json_output=run.json_logs)
    ctx.obj = run
    logger.debug(f"Run configuration: {run.model_dump()}")


for command in COMMANDS:
    main.add_command(command)


if __name__ == '__main__':
    main()
