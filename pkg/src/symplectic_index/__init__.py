"""
Symplectic Index CLI - numerical index theory for symplectic paths.

Computes Robbin-Salamon Maslov indices, Conley-Zehnder indices and
Hörmander indices of piecewise-exponential symplectic paths, checks the
doubling index formula and its diagonal specialization, and does the
exact Novikov-ring bookkeeping for Seidel elements of S²×S².
"""

__version__ = "0.1.0"
__author__ = "Symplectic Index Developers"
__email__ = "maintainers@symplectic-index.dev"

__all__ = ["__version__", "__author__", "__email__"]
