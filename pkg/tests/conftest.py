"""Pytest bootstrap; keeps the tests directory importable for helpers."""
