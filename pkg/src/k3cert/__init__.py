"""Exact-arithmetic certification of Brill-Noether arguments on K3 surfaces
with Picard lattice Z*H + Z*C."""

__version__ = "0.1.0"
