"""Deterministic primes, prime lists and the Chebyshev functions theta and psi."""
from functools import lru_cache

import numpy as np
from mpmath.ctx_iv import MPIntervalContext

from .errors import TooLarge

# Miller-Rabin with the first 13 prime bases is exact below this bound.
_MR_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL = _MR_BASES

SIEVE_CAP = 10**7


@lru_cache(maxsize=None)
def interval_context(prec=64):
    """A private mpmath interval context at ``prec`` bits (never the shared global one)."""
    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


def is_prime(n):
    """Deterministic primality test for n below about 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n >= _MR_LIMIT:
        raise TooLarge(f"deterministic primality is only available below {_MR_LIMIT}")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n):
    """Smallest prime strictly greater than ``n``."""
    if n < 2:
        return 2
    m = n + 1
    if m % 2 == 0:
        m += 1
    while not is_prime(m):
        m += 2
    return m


@lru_cache(maxsize=None)
def _first_primes(k):
    out = []
    p = 1
    for _ in range(k):
        p = next_prime(p)
        out.append(p)
    return tuple(out)


def first_primes(k):
    """The ``k`` smallest primes, ascending."""
    if k < 1:
        raise ValueError("k must be positive")
    return list(_first_primes(k))


def primes_up_to(x):
    """All primes p <= x as an int64 array (sieve of Eratosthenes)."""
    if x < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(x + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, int(x**0.5) + 1, 2):
        if flags[i]:
            flags[i * i::2 * i] = False
    return np.flatnonzero(flags).astype(np.int64)


def _log_of_int(n, ctx):
    # Rigorous interval for log(n): n lies in [m*2**e, (m+1)*2**e] with m the top bits.
    e = max(n.bit_length() - 80, 0)
    m = n >> e
    lo = ctx.log(ctx.mpf(m))
    hi = ctx.log(ctx.mpf(m + 1)) if e else lo
    return ctx.mpf([lo.a, hi.b]) + e * ctx.log(2)


def _log_of_product(factors, ctx):
    # Multiply in blocks of roughly 4096 bits, take interval logs of each block.
    total = ctx.mpf(0)
    block = 1
    for f in factors:
        block *= f
        if block.bit_length() > 4096:
            total += _log_of_int(block, ctx)
            block = 1
    if block > 1:
        total += _log_of_int(block, ctx)
    return total


def chebyshev_theta_psi(x, prec=64):
    """Return rigorous intervals ``(theta(x), psi(x))``.

    theta(x) is the log of the product of primes up to x and psi(x) the log of
    lcm(1..x).  Both are computed from an exact sieve and carried as mpmath
    interval values at ``prec`` bits.
    """
    if x < 2:
        raise ValueError("x must be at least 2")
    if x > SIEVE_CAP:
        raise TooLarge(f"exact sieving is capped at {SIEVE_CAP}")
    ctx = interval_context(prec)
    ps = [int(p) for p in primes_up_to(int(x))]
    theta = _log_of_product(ps, ctx)
    powers = []
    for p in ps:
        q = p
        while q * p <= x:
            q *= p
        powers.append(q)
    psi = _log_of_product(powers, ctx)
    return theta, psi
