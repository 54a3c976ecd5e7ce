"""Cyclotomic polynomials, the cyclotomic gcd sieve, and factor stripping."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NotDivisible
from .poly import ONE, IntPolynomial, div_z_minus_one, exact_div, gcd_primitive, mul, mul_binomial
from .primes import is_prime, primes_up_to


@dataclass(frozen=True)
class SieveResult:
    passed: bool
    witness_gcd: IntPolynomial
    stripped_factors: list = field(default_factory=list)
    quotient: IntPolynomial | None = None


def _mobius_divisors(n):
    ps = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            ps.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        ps.append(m)
    out = []
    for mask in range(1 << len(ps)):
        d = 1
        bits = 0
        for i, q in enumerate(ps):
            if mask >> i & 1:
                d *= q
                bits += 1
        out.append((n // d, -1 if bits % 2 else 1))
    return out


def _div_binomial(a, d):
    # Exact division by z**d - 1 in linear time.
    c = list(a.coeffs)
    n = len(c) - 1
    if n < d:
        raise NotDivisible("degree too small")
    q = [0] * (n - d + 1)
    for i in range(n - d, -1, -1):
        q[i] = c[i + d] + (q[i + d] if i + d <= n - d else 0)
    # low coefficients must match -q
    for i in range(d):
        if c[i] != -(q[i] if i < len(q) else 0):
            raise NotDivisible(f"not divisible by z^{d} - 1")
    return IntPolynomial._raw(q)


@lru_cache(maxsize=4096)
def cyclotomic_poly(n):
    """Phi_n = prod over d | n of (z**d - 1)**mu(n/d)."""
    if n < 1:
        raise ValueError("n must be positive")
    parts = _mobius_divisors(n)
    num = ONE
    for d, mu in parts:
        if mu == 1:
            num = mul_binomial(num, d, -1)
    for d, mu in parts:
        if mu == -1:
            num = _div_binomial(num, d)
    if num.lc < 0:
        num = -num
    return num


def sieve_gcd_test(S):
    """gcd(S(z), S(-z) S(z^2) S(-z^2)); passes when the gcd is a constant.

    A root of unity w is conjugate to one of -w, w^2, -w^2, so any cyclotomic
    factor of S survives into the gcd.
    """
    if S.is_zero():
        raise ValueError("S must be nonzero")
    neg = S.negate_variable()
    G = mul(mul(neg, S.compose_power(2)), neg.compose_power(2))
    g = gcd_primitive(S, G)
    return SieveResult(passed=g.degree == 0, witness_gcd=g)


def _phi_table(n):
    phi = np.arange(n + 1, dtype=np.int64)
    for p in primes_up_to(n):
        phi[p::p] -= phi[p::p] // p
    return phi


def totient_search_bound(B):
    """An N such that every d with phi(d) <= B satisfies d <= N.

    Uses phi(n) > n / (e^g log log n + 3 / log log n) for n >= 3 (Rosser and
    Schoenfeld), with phi(n) >= sqrt(n/2) as a cap for small B.
    """
    if B < 1:
        return 0
    eg = math.exp(0.5772156649015329)

    def lower(n):
        u = math.log(math.log(n))
        return n / (eg * u + 3 / u)

    n = 64
    while lower(n) <= B:
        n *= 2
    lo, hi = n // 2, n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lower(mid) <= B:
            lo = mid
        else:
            hi = mid
    return min(int(hi * 1.01) + 16, 2 * B * B + 2)


@lru_cache(maxsize=None)
def _root_of_unity_mod(d):
    # A prime p = 1 (mod d) below 2**31 together with an element of order exactly d.
    k = max(1, (1 << 24) // d)
    while not is_prime(k * d + 1):
        k += 1
    p = k * d + 1
    qs = [q for q in range(2, d + 1) if d % q == 0 and is_prime(q)]
    h = 2
    while True:
        w = pow(h, (p - 1) // d, p)
        if w != 1 and all(pow(w, d // q, p) != 1 for q in qs):
            return p, w
        h += 1


def _may_divide(coeffs_mod, p, w, d):
    # Necessary condition for Phi_d | S: S(w) == 0 mod p, w of order d.
    n = len(coeffs_mod)
    pad = (-n) % d
    folded = np.concatenate([coeffs_mod, np.zeros(pad, dtype=np.int64)]).reshape(-1, d).sum(axis=0) % p
    acc = 0
    for c in reversed(folded.tolist()):
        acc = (acc * w + c) % p
    return acc == 0


def strip_cyclotomic(S):
    """Remove every cyclotomic factor of S by trial division, with multiplicities.

    Candidates are all d with phi(d) <= deg S.  Each is screened by evaluating
    S at an element of order d in a prime field, then confirmed by exact
    division.  The returned SieveResult carries the quotient.
    """
    if S.is_zero():
        raise ValueError("S must be nonzero")
    deg = S.degree
    factors = []
    quotient = S
    if deg >= 1:
        N = totient_search_bound(deg)
        phi = _phi_table(N)
        for d in np.flatnonzero(phi[1:] <= deg) + 1:
            d = int(d)
            if quotient.degree < phi[d]:
                continue
            if d == 1:
                m = 0
                while quotient.degree >= 1 and quotient.sign_at(1) == 0:
                    quotient = div_z_minus_one(quotient)
                    m += 1
                if m:
                    factors.append((1, m))
                continue
            p, w = _root_of_unity_mod(d)
            m = 0
            while quotient.degree >= phi[d]:
                mod = np.array([c % p for c in quotient.coeffs], dtype=np.int64)
                if not _may_divide(mod, p, w, d):
                    break
                try:
                    quotient = exact_div(quotient, cyclotomic_poly(d))
                except NotDivisible:
                    break
                m += 1
            if m:
                factors.append((d, m))
    witness = ONE
    for d, m in factors:
        witness = mul(witness, cyclotomic_poly(d) ** m)
    return SieveResult(passed=not factors, witness_gcd=witness, stripped_factors=factors, quotient=quotient)


def strip_root_one(P):
    """Divide by (z - 1) while P(1) == 0; return (quotient, multiplicity)."""
    if P.is_zero():
        raise ValueError("P must be nonzero")
    m = 0
    while P.degree >= 1 and P.sign_at(1) == 0:
        P = div_z_minus_one(P)
        m += 1
    return P, m
