"""Exact verification of divisibility properties of central binomial coefficients.

Floor-function lemmas, valuation sweeps, WZ telescoping identities, the
sequences S, T and a, supercongruences modulo prime powers and certified
high-precision series evaluation.
"""

from .central_divisibility import (catalan_ratio, central_quotient, check_quotient_valuations, triple_ratio,
                                   verify_catalan, verify_quotient_even, verify_triple)
from .congruences import (PrimePowerRing, bernoulli, check_205_supercongruences, check_28k_supercongruences,
                          check_s_weighted_sum, check_sp_congruence, check_t_prime_residue, euler_number)
from .exact_arith import NotInvertibleError, binomial, binomial_valuation, catalan, factorize_binomial, sieve_primes
from .floor_lemmas import (catalan_excess, q_excess, triple_excess, verify_catalan_inequality, verify_q_inequality,
                           verify_triple_inequality)
from .powerseries import PowerSeries
from .precision import (HighPrecisionReal, SeriesSpec, check_genfun_identities, check_pi_series,
                        check_zeta3_series, eval_series)
from .report import ClaimReport, OracleMismatch
from .sequences import (SequenceTable, TheoremViolation, a_sequence_recurrence, cubic_series_solve, export_bfile,
                        s_sequence, s_term, stirling_ratio, t_sequence)
from .wz import BAUER, RAMANUJAN, check_telescoping, check_wz_difference, verify_bauer_divisibility, \
    verify_ramanujan_divisibility
