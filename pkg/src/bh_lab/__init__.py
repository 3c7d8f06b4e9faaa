"""
bh-lab - mixed norms, Bohnenblust-Hille constants and inequality verification

Exact evaluation of Khinchine and Bohnenblust-Hille type constants, nested
mixed-norm arithmetic with exponent interpolation, and seeded randomized
campaigns that check every inequality on concrete tensors and forms.
"""

__version__ = "0.3.0"
__author__ = "Dariusz Przada"

__all__ = ["__version__"]
