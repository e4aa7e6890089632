"""Octonion multiplication from the Fano plane, the Eisenstein lattice mod 7, and
the unique triangulating orientation of K7 on the torus."""

__version__ = "0.1.0"
