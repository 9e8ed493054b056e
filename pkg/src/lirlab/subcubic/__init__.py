"""Constructions for graphs of maximum degree three."""
