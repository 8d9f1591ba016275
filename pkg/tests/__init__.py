"""Test suite for the symplectic index CLI."""
