"""Trace-targeted generators for Salem and Pisot polynomials.

The two loop generators follow the prime-pair recurrences exactly (same
pairing, same accumulation order), so their outputs are reproducible byte for
byte.  ``h_substitute`` and the combinator path give independent routes to the
same Salem polynomials and are used to cross-check the loops.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bounds import killer_exponent_report
from .cyclo import strip_root_one
from .errors import BadParam, NotCoprime, NotMaterializable, OddN
from .interlace import binomial_pair, pair_sum, pisot_combine, salem_combine
from .poly import IntPolynomial, derivative, mul, mul_binomial, mul_geometric
from .primes import first_primes, next_prime

POLICIES = ("first-primes", "killer")


@dataclass(frozen=True)
class KillerParameters:
    """Exponent choice k_1 = K, k_2..k_n = the smallest n-1 primes not dividing K.

    K is never materialized; ``report`` carries log K and log log K, and every
    prime factor of K lies below ``report.prime_ceiling``.
    """

    n: int
    report: object
    other_exponents: str = "smallest n-1 primes not dividing K (all exceed the prime ceiling of K)"


@dataclass(frozen=True)
class GenerationRecord:
    kind: str
    trace: int
    n: int
    exponents: tuple | KillerParameters
    raw: IntPolynomial | None
    reduced: IntPolynomial | None
    predicted_degree: int | None
    root_one_multiplicity: int = 0
    policy: str = "first-primes"
    extra: dict = field(default_factory=dict)

    @property
    def polynomial(self):
        if self.reduced is None:
            raise NotMaterializable("the killer policy only reports parameters")
        return self.reduced


def _prime_pairs(count):
    r = 1
    for _ in range(count):
        q = next_prime(r)
        r = next_prime(q)
        yield q, r


def generate_salem_candidate(T, policy="first-primes"):
    """Salem polynomial candidate of trace -T.

    Runs T+1 rounds over consecutive prime pairs (2,3), (5,7), ...:
        S <- [q]_z [r]_z S - [q+r]_z Q,   Q <- [q]_z [r]_z Q,
    where [k]_z = (z^k - 1)/(z - 1), starting from S = (z^2-1)(z-1), Q = z.
    """
    if T < 0:
        raise BadParam("T must be nonnegative")
    if policy not in POLICIES:
        raise BadParam(f"unknown policy {policy!r}")
    n = 2 * T + 2
    if policy == "killer":
        return GenerationRecord(
            kind="salem-candidate",
            trace=-T,
            n=n,
            exponents=KillerParameters(n=n, report=killer_exponent_report(n)),
            raw=None,
            reduced=None,
            predicted_degree=None,
            policy=policy,
        )
    S = IntPolynomial([1, -1, -1, 1])
    Q = IntPolynomial([0, 1])
    ks = []
    for q, r in _prime_pairs(T + 1):
        ks += [q, r]
        S = mul_geometric(mul_geometric(S, q), r) - mul_geometric(Q, q + r)
        Q = mul_geometric(mul_geometric(Q, q), r)
    return GenerationRecord(
        kind="salem-candidate",
        trace=-T,
        n=n,
        exponents=tuple(ks),
        raw=S,
        reduced=S,
        predicted_degree=sum(ks) - (2 * T - 1),
    )


def generate_pisot(T):
    """Pisot polynomial of trace -T from T+2 prime-pair rounds.

    The loop P <- (z^q-1)(z^r-1) P - (z^(q+r)-1) Q, Q <- (z^q-1)(z^r-1) Q
    starts at P = z^2 - z - 1, Q = z.  Its output always vanishes at z = 1, so
    the factor (z-1)^m is stripped and m recorded.
    """
    if T < 0:
        raise BadParam("T must be nonnegative")
    P = IntPolynomial([-1, -1, 1])
    Q = IntPolynomial([0, 1])
    ks = []
    for q, r in _prime_pairs(T + 2):
        ks += [q, r]
        P = mul_binomial(mul_binomial(P, q, -1), r, -1) - mul_binomial(Q, q + r, -1)
        Q = mul_binomial(mul_binomial(Q, q, -1), r, -1)
    reduced, m = strip_root_one(P)
    return GenerationRecord(
        kind="pisot",
        trace=-T,
        n=2 * T + 4,
        exponents=tuple(ks),
        raw=P,
        reduced=reduced,
        predicted_degree=sum(ks),
        root_one_multiplicity=m,
    )


def _check_exponents(ks):
    ks = [int(k) for k in ks]
    if len(ks) % 2:
        raise OddN(f"number of exponents must be even, got {len(ks)}")
    if any(k < 2 for k in ks):
        raise BadParam("exponents must be at least 2")
    for i in range(len(ks)):
        for j in range(i + 1, len(ks)):
            if math.gcd(ks[i], ks[j]) != 1:
                raise NotCoprime(f"exponents {ks[i]} and {ks[j]} share a factor")
    return ks


def h_substitute(ks):
    """h(t, t^k1, ..., t^kn) by direct substitution.

    h(x) = 2(x0^2 - 1) prod(x_i - 1) - x0 sum_j (x_j + 1) prod_{i != j} (x_i - 1).
    Checks that every coefficient is even and that the n-th derivative at t = 1
    is nonzero.
    """
    ks = _check_exponents(ks)
    n = len(ks)
    full = IntPolynomial([1])
    for k in ks:
        full = mul_binomial(full, k, -1)
    h = mul(IntPolynomial([-2, 0, 2]), full)
    for j, kj in enumerate(ks):
        term = IntPolynomial.binomial(kj, 1)
        for i, ki in enumerate(ks):
            if i != j:
                term = mul_binomial(term, ki, -1)
        h = h - term.shift(1)
    if any(c % 2 for c in h.coeffs):
        raise AssertionError("h has an odd coefficient")
    d = h
    for _ in range(n):
        d = derivative(d)
    if d.sign_at(1) == 0:
        raise AssertionError("n-th derivative of h vanishes at t = 1")
    return h


def half_sum_pair(ks):
    """Verified pair (p, q) with q/p = (1/2) sum (z^k + 1)/(z^k - 1), for an even count of k."""
    if len(ks) % 2:
        raise OddN("need an even number of exponents for integral q")
    pair = pair_sum([binomial_pair(k) for k in ks])
    return pair.scaled_numerator(1, 2)


def salem_from_pairs(T):
    """The trace -T Salem candidate through pair_sum and salem_combine."""
    return salem_combine(half_sum_pair(first_primes(2 * T + 2)))


def pisot_from_pairs(T):
    """The trace -T Pisot polynomial through pair_sum and pisot_combine."""
    return pisot_combine(half_sum_pair(first_primes(2 * T + 4)))


FAMILIES = ("quartic", "sextic_zero", "lehmer", "degree8_negtrace")


def family(name, param=None):
    """Named Salem polynomials.

    quartic(n), n >= 1:  z^4 - n z^3 - (2n+1) z^2 - n z + 1 (trace n)
    sextic_zero:         z^6 - z^4 - 2z^3 - z^2 + 1 (trace 0)
    lehmer:              z^10 + z^9 - z^7 - z^6 - z^5 - z^4 - z^3 + z + 1
    degree8_negtrace:    z^8 + z^7 - z^6 - 4z^5 - 5z^4 - 4z^3 - z^2 + z + 1
    """
    name = name.replace("-", "_")
    if name == "degree8":
        name = "degree8_negtrace"
    if name == "quartic":
        if param is None or param < 1:
            raise BadParam("quartic needs n >= 1")
        n = param
        return IntPolynomial([1, -n, -(2 * n + 1), -n, 1])
    if name == "sextic_zero":
        return IntPolynomial([1, 0, -1, -2, -1, 0, 1])
    if name == "lehmer":
        return IntPolynomial([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    if name == "degree8_negtrace":
        return IntPolynomial([1, 1, -1, -4, -5, -4, -1, 1, 1])
    raise BadParam(f"unknown family {name!r}")
