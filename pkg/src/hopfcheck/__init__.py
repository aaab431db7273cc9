"""Exact computer algebra over cyclotomic fields: finite-dimensional Hopf
algebras, their twisted and classical doubles, a two-term dg invariant,
and a catalogue-driven verification CLI (see hopfcheck.cli)."""

__version__ = "0.1.0"
