"""Configuration command implementation."""

from typing import Any, Dict

import typer
import yaml

from ...core.config import get_default_config
from ...core.errors import EXIT_INPUT_ERROR
from ..common import console_from, manager_from

app = typer.Typer(no_args_is_help=True)


def _flatten(data: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for key, value in data.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{path}."))
        else:
            flat[path] = value
    return flat


@app.command("show")
def show_config(
    ctx: typer.Context,
    raw: bool = typer.Option(False, "--raw", help="Print YAML instead of a table"),
) -> None:
    """Show current configuration."""
    console = console_from(ctx)
    manager = manager_from(ctx)
    try:
        config = manager.get_config()
    except (ValueError, RuntimeError) as e:
        console.print_error(f"Error loading configuration: {e}")
        console.console.print("Run [bold]sympidx config validate[/bold] to check your configuration.")
        raise typer.Exit(EXIT_INPUT_ERROR)

    if raw:
        typer.echo(yaml.safe_dump(config.model_dump(), default_flow_style=False, sort_keys=False), nl=False)
        return
    console.print_settings(_flatten(config.model_dump()), title="sympidx settings")
    console.console.print(f"\n[dim]Config file: {manager.config_path}[/dim]")


@app.command("set")
def set_config(
    ctx: typer.Context,
    key: str = typer.Argument(..., help="Configuration key (e.g., numerics.grid)"),
    value: str = typer.Argument(..., help="Configuration value (YAML syntax)"),
) -> None:
    """Set configuration value."""
    console = console_from(ctx)
    manager = manager_from(ctx)
    try:
        manager.set_value(key, yaml.safe_load(value))
    except KeyError as e:
        console.print_error(str(e.args[0]))
        raise typer.Exit(EXIT_INPUT_ERROR)
    except (ValueError, RuntimeError, yaml.YAMLError) as e:
        console.print_error(f"Failed to update configuration: {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)
    console.print_success(f"{key} = {manager.get_value(key)!r} saved to {manager.config_path}")


@app.command("validate")
def validate_config(ctx: typer.Context) -> None:
    """Validate current configuration."""
    console = console_from(ctx)
    manager = manager_from(ctx)
    issues = manager.validate_config()
    try:
        manager.get_config()
    except (ValueError, RuntimeError):
        for issue in issues:
            console.print_error(issue)
        raise typer.Exit(EXIT_INPUT_ERROR)

    if issues:
        console.print_list("Warnings", issues)
    else:
        console.print_success("Configuration is valid")
    console.console.print(f"[dim]Config file: {manager.config_path}[/dim]")


@app.command("init")
def init_config(
    ctx: typer.Context,
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite an existing file"),
) -> None:
    """Write the default configuration file."""
    console = console_from(ctx)
    manager = manager_from(ctx)
    if manager.config_path.exists() and not force:
        console.print_warning(f"{manager.config_path} exists; use --force to overwrite")
        raise typer.Exit(EXIT_INPUT_ERROR)
    try:
        manager.save_config(get_default_config())
    except RuntimeError as e:
        console.print_error(str(e))
        raise typer.Exit(EXIT_INPUT_ERROR)
    console.print_success(f"Configuration written to {manager.config_path}")
