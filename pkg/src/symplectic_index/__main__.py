"""Main entry point for sympidx CLI when run as a module."""

from symplectic_index.cli.main import app

if __name__ == "__main__":
    app()
