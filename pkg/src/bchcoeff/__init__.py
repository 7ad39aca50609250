"""Exact arithmetic for the series log(e^A e^B).

The package computes word coefficients of the series exactly, the smallest
common denominator of each homogeneous component, and the extreme words whose
coefficients actually need that denominator.  Everything is integer or
rational arithmetic; there is no floating point anywhere.
"""

from .analysis import (
    BRUTE_DEGREE_MAX,
    LeadingTerm,
    Lemma3Class,
    Partition,
    QSET_DEGREE_MAX,
    bernoulli_binomial_sum,
    bernoulli_sum_residue,
    brute_lcm_degree,
    expected_a,
    extract_leading,
    lemma3_sides,
    max_vp_degree,
    q_set,
)
from .denominators import (
    DenominatorRecord,
    PARTITION_LCM_MAX,
    capital_denominator,
    check_bfile,
    d_n,
    denominator_record,
    l_exponent,
    min_degree_with_l,
    partition_lcm,
    partitions,
    read_bfile,
)
from .exactmath import (
    ExactRational,
    PADIC_INFINITY,
    PAdicDigits,
    binomial,
    digit_sum,
    is_prime,
    lcm_all,
    legendre_vp_factorial,
    lucas_binomial_mod,
    mod_inverse,
    padic_digits,
    primes_upto,
    rational_from_str,
    rational_to_str,
    require_prime,
    vp,
)
from .goldberg import (
    IntegerExactnessError,
    METHODS,
    SERIES_ORACLE_MAX,
    WordSpec,
    alg2_table,
    coeff_alg2,
    coeff_bernoulli_m2,
    coeff_goldberg_sum,
    coeff_goldberg_tilde,
    coeff_tilde,
    coeff_word,
    series_oracle,
)
from .special import bernoulli, bernoulli_table, stirling2, stirling2_from_sum
from .verify import CheckRecord, run_suite, suite_names
from .witness import (
    WitnessBranch,
    WitnessResult,
    lemma1_k,
    lemma2_k,
    power_branch_runs,
    witness_runs,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_DEGREE_MAX",
    "CheckRecord",
    "DenominatorRecord",
    "ExactRational",
    "IntegerExactnessError",
    "LeadingTerm",
    "Lemma3Class",
    "METHODS",
    "PADIC_INFINITY",
    "PARTITION_LCM_MAX",
    "PAdicDigits",
    "Partition",
    "QSET_DEGREE_MAX",
    "SERIES_ORACLE_MAX",
    "WitnessBranch",
    "WitnessResult",
    "WordSpec",
    "alg2_table",
    "bernoulli",
    "bernoulli_binomial_sum",
    "bernoulli_sum_residue",
    "bernoulli_table",
    "binomial",
    "brute_lcm_degree",
    "capital_denominator",
    "check_bfile",
    "coeff_alg2",
    "coeff_bernoulli_m2",
    "coeff_goldberg_sum",
    "coeff_goldberg_tilde",
    "coeff_tilde",
    "coeff_word",
    "d_n",
    "denominator_record",
    "digit_sum",
    "expected_a",
    "extract_leading",
    "is_prime",
    "l_exponent",
    "lcm_all",
    "legendre_vp_factorial",
    "lemma1_k",
    "lemma2_k",
    "lemma3_sides",
    "lucas_binomial_mod",
    "max_vp_degree",
    "min_degree_with_l",
    "mod_inverse",
    "padic_digits",
    "partition_lcm",
    "partitions",
    "power_branch_runs",
    "primes_upto",
    "q_set",
    "rational_from_str",
    "rational_to_str",
    "read_bfile",
    "require_prime",
    "run_suite",
    "series_oracle",
    "stirling2",
    "stirling2_from_sum",
    "suite_names",
    "vp",
    "witness_runs",
]
