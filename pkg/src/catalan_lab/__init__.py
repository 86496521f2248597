"""Exact verification of Catalan-number identities and congruences mod p."""
from .exact import (
    binom_int,
    binom_rat,
    catalan,
    gen_catalan,
    legendre3,
    shifted_catalan,
    stirling2,
)

__version__ = "0.1.0"
