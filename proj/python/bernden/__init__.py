"""Bernoulli number denominators, their subscript classes, and counting functions."""

from ._bernden import (
    bernoulli,
    bernoulli_frac,
    carmichael_lambda,
    count_cofactor_not_denominator,
    count_denominators,
    count_first_subscripts,
    denominator,
    denominator_cofactor,
    denominators_upto,
    erdos_tenenbaum_ford_beta,
    first_subscripts_upto,
    germain_primes,
    is_bernoulli_denominator,
    is_first_subscript,
    is_prime,
    partition_counts,
    t_class,
    u_set,
    u_set_excluding,
    __version__,
)

__all__ = [
    "bernoulli",
    "bernoulli_frac",
    "carmichael_lambda",
    "count_cofactor_not_denominator",
    "count_denominators",
    "count_first_subscripts",
    "denominator",
    "denominator_cofactor",
    "denominators_upto",
    "erdos_tenenbaum_ford_beta",
    "first_subscripts_upto",
    "germain_primes",
    "is_bernoulli_denominator",
    "is_first_subscript",
    "is_prime",
    "partition_counts",
    "t_class",
    "u_set",
    "u_set_excluding",
    "__version__",
]
