from .field import DenominatorDivisible, Fp, Prime, binom_mod, fp_reduce, reduce_mod
from .constants import f_eps, fg_constants, harmonic_constants, epsilon_vector
from .congruences import (
    catalan_shift,
    eval_cong_1_7,
    eval_cong_1_15,
    eval_cor13,
    eval_fg,
    eval_thm12,
    oracle_power_sum,
)
from .invariants import wolstenholme_check

__all__ = [
    "DenominatorDivisible",
    "Fp",
    "Prime",
    "binom_mod",
    "fp_reduce",
    "reduce_mod",
    "f_eps",
    "fg_constants",
    "harmonic_constants",
    "epsilon_vector",
    "catalan_shift",
    "eval_cong_1_7",
    "eval_cong_1_15",
    "eval_cor13",
    "eval_fg",
    "eval_thm12",
    "oracle_power_sum",
    "wolstenholme_check",
]
