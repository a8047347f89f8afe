"""Helpers: linear algebra over F_p, seed splitting, parsing and fan-out."""
