"""Command-line interface for symplectic index computations."""
