"""Keeps the tests directory importable so suites can share graph builders
(e.g. test_isoperimetry borrows the flap construction from test_components)."""
