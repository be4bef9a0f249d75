"""Exact arithmetic in the Dirichlet convolution ring.

Builtin multiplicative functions, convolution and inversion, the divisor
coproduct and its completely multiplicative (unrenormalized) companion,
antipodes and their identity checks, Bell series with the two-term
recursion and counter-term product formula, and the unit-Toeplitz matrix
picture of one-prime restrictions.  All scalars are exact: rationals
extended by formal log-prime symbols.
"""

from .arithfn import (
    ArithFn,
    NotInvertible,
    add,
    builtin,
    carlitz_check,
    conv,
    derivative,
    hadamard,
    inverse,
    is_completely_multiplicative,
    is_multiplicative,
    lambek_check,
)
from .bell import (
    BellSeries,
    ToeplitzMatrix,
    bell_conv_identity,
    bell_of,
    cauchy_mul,
    geometric_bell,
    product_formula_residual,
    rational_expand,
    recursion_coeffs,
    specially_multiplicative,
    toeplitz_mul,
    toeplitz_of,
)
from .coalgebra import (
    PairSum,
    antipode_add,
    antipode_identity_check,
    antipode_mult,
    antipode_mult_unren,
    coprod_add,
    coprod_add_unren,
    coprod_mult,
    coprod_mult_unren,
    coring_check,
    coring_expand,
    duality_check,
    hom_axiom_check,
    kronecker_pairing,
    overcounting_report,
    pairsum_mul,
    primitive_elements,
    z_duality_check,
    z_pairing,
)
from .core import big_omega, divisors, factorize, gcd, prime_count, sieve_primes
from .values import LogProductUndefined, Value, v_add, v_log, v_mul
from .verdict import Verdict

__version__ = "0.1.0"
