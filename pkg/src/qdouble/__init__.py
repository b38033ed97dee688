"""Quantum double of the Borel subalgebra of U_q(sl_2): exact algebra and verification."""

__version__ = "0.1.0"
