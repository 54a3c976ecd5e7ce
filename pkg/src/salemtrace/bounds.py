"""Calculators for the torsion-coset exponent, killer-exponent and degree bounds.

Real-valued outputs are mpmath interval objects at BOUND_PREC
bits, so every inequality below is decided by comparing interval endpoints.
K itself is never formed; only log K and log log K are.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .primes import SIEVE_CAP, chebyshev_theta_psi, first_primes, interval_context, primes_up_to

BOUND_PREC = 64
iv = interval_context(BOUND_PREC)

# Rosser-Schoenfeld style linear bounds used when exact sieving is out of range.
THETA_SLOPE = Fraction(102, 100)
PSI_SLOPE = Fraction(104, 100)


def _iv(x):
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    return iv.mpf(x)


def certainly_less(a, b):
    """True iff every point of interval a is below every point of interval b."""
    return a.b < b.a


def _ceil_sqrt_fraction(num, den):
    # smallest integer c with c*c >= num/den
    t = -(-num // den)
    c = math.isqrt(t)
    if c * c < t:
        c += 1
    return c


def primorial(N):
    out = 1
    for p in primes_up_to(N):
        out *= int(p)
    return out


@dataclass(frozen=True)
class CosetExponentBound:
    m_bound: int
    primorial: int | None
    exponent_bound: int | None
    log_exponent_bound: object
    mode: str


def coset_exponent_bound(D_squared, k, N):
    """Bound m <= D^(2k) k^(k/2) on the cofactor of P_N in a torsion-coset exponent.

    ``D_squared`` is the squared diameter (a positive rational), ``k`` the
    codimension and ``N`` the number of monomials.  m_bound is the exact value
    when integral and its ceiling otherwise.
    """
    D_squared = Fraction(D_squared)
    if D_squared <= 0 or k < 1 or N < 1:
        raise ValueError("D^2, k and N must be positive")
    a, b = D_squared.numerator, D_squared.denominator
    # m^2 = a^(2k) k^k / b^(2k)
    m_bound = _ceil_sqrt_fraction(a ** (2 * k) * k**k, b ** (2 * k))
    log_m = iv.log(iv.mpf(m_bound))
    if N <= SIEVE_CAP:
        P = primorial(N) if N <= 10**5 else None
        theta = chebyshev_theta_psi(N, BOUND_PREC)[0] if N >= 2 else iv.mpf(0)
        return CosetExponentBound(
            m_bound=m_bound,
            primorial=P,
            exponent_bound=m_bound * P if P is not None else None,
            log_exponent_bound=log_m + theta,
            mode="exact",
        )
    return CosetExponentBound(
        m_bound=m_bound,
        primorial=None,
        exponent_bound=None,
        log_exponent_bound=log_m + _iv(THETA_SLOPE) * N,
        mode="bound",
    )


@dataclass(frozen=True)
class BoundReport:
    n: int
    N: int
    D_squared: int
    M: object  # D^(2n+2) (n+1)^((n+1)/2), interval
    M_floor: int
    prime_ceiling: object  # (n+3)^(3(n+1)/2), interval
    log_PN: object
    log_lcm_bound: object
    log_K: object
    log_K_mode: str
    log_K_linear_bound: object
    log_K_cap: object  # 1.2 (n+3)^(3(n+1)/2)
    loglog_K: object
    loglog_K_bound: object  # 0.2 + (3(n+1)/2) log(n+3)

    def checks(self):
        return {
            "M_below_prime_ceiling": certainly_less(self.M, self.prime_ceiling),
            "log_K_below_cap": certainly_less(self.log_K, self.log_K_cap),
            "linear_bound_below_cap": certainly_less(self.log_K_linear_bound, self.log_K_cap),
            "loglog_K_below_bound": certainly_less(self.loglog_K, self.loglog_K_bound),
        }


def _M_floor(n):
    # floor(6^... ) exactly: M^2 = (n+4)^(2n+2) (n+1)^(n+1)
    return math.isqrt((n + 4) ** (2 * n + 2) * (n + 1) ** (n + 1))


def killer_exponent_report(n):
    """Killer exponent data for the hypersurface h = 0 in n+1 variables.

    N = 3 * 2^n monomials, squared diameter n + 4, and
    K = P_N * lcm(1, ..., floor(M)) with M = D^(2n+2) (n+1)^((n+1)/2).
    log K is exact (from sieved theta and psi) when N and M are within the
    sieving cap; otherwise it is the linear bound 1.02 N + 1.04 (n+3)^(3(n+1)/2).
    """
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    N = 3 * 2**n
    D2 = n + 4
    M = iv.mpf(D2) ** (n + 1) * iv.sqrt(iv.mpf(n + 1)) ** (n + 1)
    M_floor = _M_floor(n)
    ceiling = iv.exp(iv.mpf(3 * (n + 1)) / 2 * iv.log(iv.mpf(n + 3)))
    linear = _iv(THETA_SLOPE) * N + _iv(PSI_SLOPE) * ceiling
    cap = iv.mpf(6) / 5 * ceiling
    loglog_bound = iv.mpf(1) / 5 + iv.mpf(3 * (n + 1)) / 2 * iv.log(iv.mpf(n + 3))
    if N <= SIEVE_CAP and M_floor <= SIEVE_CAP:
        log_PN = chebyshev_theta_psi(N, BOUND_PREC)[0]
        log_lcm = chebyshev_theta_psi(M_floor, BOUND_PREC)[1]
        log_K = log_PN + log_lcm
        mode = "exact"
    else:
        log_PN = _iv(THETA_SLOPE) * N
        log_lcm = _iv(PSI_SLOPE) * ceiling
        log_K = linear
        mode = "bound"
    loglog = iv.log(log_K)
    report = BoundReport(
        n=n,
        N=N,
        D_squared=D2,
        M=M,
        M_floor=M_floor,
        prime_ceiling=ceiling,
        log_PN=log_PN,
        log_lcm_bound=log_lcm,
        log_K=log_K,
        log_K_mode=mode,
        log_K_linear_bound=linear,
        log_K_cap=cap,
        loglog_K=loglog,
        loglog_K_bound=loglog_bound,
    )
    failed = [name for name, ok in report.checks().items() if not ok]
    if failed:
        raise AssertionError(f"killer exponent bounds not certified: {failed}")
    return report


def target_loglog_bound(T):
    """22 + 4 T log T as an interval."""
    return iv.mpf(22) + 4 * T * iv.log(iv.mpf(T)) if T > 1 else iv.mpf(22)


def construction_loglog_bound(n):
    """0.2 + (3(n+1)/2) log(n+3) + 0.1, the bound on log log deg S."""
    return iv.mpf(3) / 10 + iv.mpf(3 * (n + 1)) / 2 * iv.log(iv.mpf(n + 3))


@dataclass(frozen=True)
class SalemDegreeBounds:
    T: int
    constructed_degree: int
    theoretical_loglog: object
    construction_loglog: object
    chain_holds: bool


def salem_degree_bounds(T):
    if T < 1:
        raise ValueError("T must be positive")
    ks = first_primes(2 * T + 2)
    theo = target_loglog_bound(T)
    cons = construction_loglog_bound(2 * T + 2)
    return SalemDegreeBounds(
        T=T,
        constructed_degree=sum(ks) - (2 * T - 1),
        theoretical_loglog=theo,
        construction_loglog=cons,
        chain_holds=certainly_less(cons, theo),
    )


def pisot_degree_bound(T):
    """Sum of the first 2T + 4 primes (asymptotically 2 T^2 log T)."""
    if T < 0:
        raise ValueError("T must be nonnegative")
    return sum(first_primes(2 * T + 4))


def min_salem_degree(T):
    """18k + 2 at T = 2k and 18k + 10 at T = 2k + 1, that is 2 * floor(9T/2) + 2.

    The ceiling form 2 * ceil(9T/2) + 2 agrees for even T only; for odd T it
    would give 18k + 12.
    """
    return 2 * (9 * T // 2) + 2
