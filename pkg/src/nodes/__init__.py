"""
Verification nodes for the Pascalian toolkit
"""
from .exact import recursions_node, gf_node, factor_node, gcd_node, algebra_node
from .roots import roots_node

__all__ = [
    "recursions_node",
    "gf_node",
    "factor_node",
    "gcd_node",
    "algebra_node",
    "roots_node",
]
