"""
schema: print the JSON schema of a CLI document
"""

from __future__ import annotations

import json

import click

from .schemas import SCHEMAS


@click.command('schema')
@click.argument('name', type=click.Choice(sorted(SCHEMAS)))
def schema(name: str) -> None:
    """Print the JSON schema registered under NAME"""
    click.echo(json.dumps(SCHEMAS[name].model_json_schema(), indent=2))
