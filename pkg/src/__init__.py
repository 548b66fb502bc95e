"""
Pascalian toolkit: sorted binomial coefficients, their polynomials and root geometry
"""
__version__ = "1.0.0"
