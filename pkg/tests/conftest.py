"""Keeps the tests directory importable for helper modules."""
