"""Main CLI entry point using Typer."""

import logging
from pathlib import Path
from typing import Optional

import typer

from .. import __version__
from ..core.config import ConfigManager
from ..core.output import IndexConsole
from .commands import config
from .commands.hormander import run_hormander
from .commands.novikov import run_novikov
from .commands.paths import run_diagonal, run_double, run_index
from .commands.suite import run_suite

# Create main Typer application
app = typer.Typer(
    name="sympidx",
    help="Maslov, Conley-Zehnder and Hörmander indices of symplectic paths, with doubling checks",
    no_args_is_help=True,
    rich_markup_mode="rich",
)

app.command("index")(run_index)
app.command("double")(run_double)
app.command("diagonal")(run_diagonal)
app.command("hormander")(run_hormander)
app.command("novikov")(run_novikov)
app.command("suite")(run_suite)
app.add_typer(config.app, name="config", help="Manage configuration settings")


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-V", help="Enable debug logging on stderr"),
    config_path: Optional[Path] = typer.Option(None, "--config", "-c", help="Path to configuration file"),
) -> None:
    """Numerical index theory for piecewise-exponential symplectic paths."""
    manager = ConfigManager(config_path)
    level = logging.WARNING
    console = IndexConsole()
    try:
        loaded = manager.get_config()
        level = getattr(logging, loaded.log_level)
        console = IndexConsole(loaded.output)
    except (ValueError, RuntimeError):
        # reported by the command that needs the configuration
        pass
    logging.basicConfig(level=logging.DEBUG if verbose else level)
    ctx.obj = {"config_manager": manager, "console": console}


@app.command("version")
def version() -> None:
    """Show version and exit."""
    typer.echo(f"sympidx version {__version__}")


if __name__ == "__main__":
    app()
