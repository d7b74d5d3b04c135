"""magnoise - thermal magnetic noise, spin relaxation and entanglement near conducting slabs."""

__version__ = "0.1.0"
