"""Closed braids, Markov moves and braid-foliated discs."""

__version__ = "0.1.0"
