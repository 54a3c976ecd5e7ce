# Dense polynomial arithmetic over GF(p), p < 2**31, on int64 numpy arrays.
# Arrays are stored highest degree first; the zero polynomial is an empty array.
import numpy as np

from .primes import is_prime

_PRIME_CACHE = []


def word_primes():
    """Yield primes just below 2**31 in decreasing order, cached across calls."""
    i = 0
    while True:
        if i == len(_PRIME_CACHE):
            n = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else 2**31 - 1
            while not is_prime(n):
                n -= 2
            _PRIME_CACHE.append(n)
        yield _PRIME_CACHE[i]
        i += 1


def reduce(coeffs, p):
    """Ascending Python-int coefficients -> descending residue array."""
    return _trim(np.array([c % p for c in reversed(coeffs)], dtype=np.int64))


def _trim(a):
    nz = np.flatnonzero(a)
    if len(nz) == 0:
        return a[:0]
    return a[nz[0]:]


def rem(a, b, p):
    m = len(b)
    if len(a) < m:
        return a
    a = a.copy()
    inv = pow(int(b[0]), -1, p)
    for i in range(len(a) - m + 1):
        c = int(a[i]) * inv % p
        if c:
            a[i:i + m] = (a[i:i + m] - c * b) % p
    return _trim(a[len(a) - m + 1:])


def monic(a, p):
    if len(a) == 0:
        return a
    inv = pow(int(a[0]), -1, p)
    return a * inv % p


def gcd(a, b, p):
    while len(b):
        a, b = b, rem(a, b, p)
    return monic(a, p)
