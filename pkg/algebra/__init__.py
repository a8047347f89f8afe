"""Exact commutative algebra over prime fields: polynomials, Groebner bases and ideal operations."""
