"""Exact Fock-space Clifford calculus, Pluecker/KP ideals, shuffle
straightening, and finite-field Grassmannian experiments."""

__version__ = "0.1.0"
