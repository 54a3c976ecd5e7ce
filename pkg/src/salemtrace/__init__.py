"""Salem and Pisot numbers of every trace, built and certified in exact arithmetic."""
from .bounds import (
    coset_exponent_bound,
    killer_exponent_report,
    min_salem_degree,
    pisot_degree_bound,
    salem_degree_bounds,
)
from .certify import (
    PisotCertificate,
    SalemCertificate,
    certify_pisot,
    certify_salem,
    min_degree_check,
    roots_in_disk,
    salem_value,
    totally_positive_from_salem,
    unramified_flag,
)
from .construct import (
    GenerationRecord,
    family,
    generate_pisot,
    generate_salem_candidate,
    h_substitute,
    pisot_from_pairs,
    salem_from_pairs,
)
from .cyclo import SieveResult, cyclotomic_poly, sieve_gcd_test, strip_cyclotomic
from .errors import *  # noqa: F401,F403
from .interlace import (
    InterlacingPair,
    binomial_pair,
    pair_sum,
    pisot_combine,
    residue_signs,
    salem_combine,
    verify_circular_interlacing,
)
from .poly import IntPolynomial, exact_div, gcd_primitive, mul, squarefree_part
from .primes import chebyshev_theta_psi, first_primes, is_prime, next_prime
from .sturm import SturmChain, cauchy_index, sturm_count
from .tracepoly import from_x_transform, x_transform

__version__ = "0.1.0"
