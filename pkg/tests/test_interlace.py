import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salemtrace.errors import NotAlternating, NotInterlacing, NotOnCircle, NotSimple, PreconditionFailed
from salemtrace.interlace import (
    InterlacingPair,
    binomial_pair,
    pair_sum,
    pisot_combine,
    residue_signs,
    salem_combine,
    verify_circular_interlacing,
)
from salemtrace.poly import IntPolynomial as P, mul
from salemtrace.primes import first_primes


def angles(p):
    return sorted(cmath.phase(r) % (2 * math.pi) for r in np.roots(p.coeffs[::-1]))


def alternate_numerically(p, q):
    tagged = sorted([(a, 0) for a in angles(p)] + [(a, 1) for a in angles(q)])
    return all(tagged[i][1] != tagged[i + 1][1] for i in range(len(tagged) - 1))


def test_pair_sum_of_two_binomials():
    pr = pair_sum([binomial_pair(2), binomial_pair(3)])
    assert pr.verified
    assert pr.p == P([-1, -1, 0, 1, 1])
    assert pr.q == P([2, 2, 2, 2, 2])
    assert alternate_numerically(pr.p, pr.q)


def test_pair_sum_singleton_and_doubling():
    assert pair_sum([binomial_pair(5)]).q == P.binomial(5, 1)
    pr = pair_sum([binomial_pair(1), binomial_pair(1)])
    assert (pr.p, pr.q) == (P([-1, 1]), P([2, 2]))


def test_combinators():
    half = pair_sum([binomial_pair(2), binomial_pair(3)]).scaled_numerator(1, 2)
    assert salem_combine(half) == P([1, 0, -2, -3, -2, 0, 1])
    assert pisot_combine(half) == P([1, 1, -1, -3, -3, -1, 1])
    assert salem_combine(binomial_pair(2)) == P([1, -1, -2, -1, 1])
    assert salem_combine(binomial_pair(1)) == P([1, -2, -2, 1])
    assert pisot_combine(binomial_pair(1)) == P([1, -1, -3, 1])


def test_combine_preconditions():
    with pytest.raises(PreconditionFailed):
        pisot_combine(InterlacingPair(P([1]), P([]), verified=True))
    with pytest.raises(PreconditionFailed):
        salem_combine(InterlacingPair(P([-1, 1]), P([1, 1])))


def test_verify_examples():
    for n in (1, 2, 5, 8):
        assert binomial_pair(n).verified
    with pytest.raises(NotSimple):
        verify_circular_interlacing(P([1, -2, 1]), P([1, 0, 1]))
    with pytest.raises(NotOnCircle):
        verify_circular_interlacing(P([-1, -1, 1]), P([1, 0, 1]))
    with pytest.raises(NotAlternating):
        # zeros of z^2+1 and z^2+z+1 both avoid z = +-1
        verify_circular_interlacing(P([1, 0, 1]), P([1, 1, 1]))
    with pytest.raises(NotInterlacing):
        verify_circular_interlacing(P([-1, 0, 1]), P([1, 1]))
    with pytest.raises(NotInterlacing):
        verify_circular_interlacing(P([-1, 0, 1]), P([-1, 0, -1]))


def test_non_alternating_on_circle():
    p = P.binomial(4, -1)
    q = mul(P([1, 1, 1]), P([2, 1, 2]))  # zeros near 104 and 120 degrees fall between i and -1
    assert not alternate_numerically(p, q)
    with pytest.raises(NotAlternating) as err:
        verify_circular_interlacing(p, q)
    assert err.value.witness is not None


def test_residue_signs():
    rep = residue_signs(binomial_pair(2))
    assert rep.signs == [1, 1]
    assert rep.intervals == [(Fraction(-2), Fraction(-2)), (Fraction(2), Fraction(2))]
    assert residue_signs(pair_sum([binomial_pair(2), binomial_pair(3)])).all_positive
    flipped = InterlacingPair(P([-1, -1, 0, 1, 1]), P([-1, -1, -1, -1, -1]))
    assert not residue_signs(flipped).all_positive
    with pytest.raises(NotInterlacing):
        verify_circular_interlacing(flipped.p, flipped.q)


def test_residues_of_prime_sum():
    pr = pair_sum(binomial_pair(k) for k in first_primes(6))
    assert residue_signs(pr).all_positive
    assert alternate_numerically(pr.p, pr.q)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(first_primes(8)), min_size=1, max_size=4, unique=True), st.integers(1, 4))
def test_sums_verify_and_compose(ks, n):
    pairs = [binomial_pair(k) for k in ks]
    pr = pair_sum(pairs)
    assert residue_signs(pr).all_positive
    assert pair_sum(reversed(pairs)) == pr
    composed = verify_circular_interlacing(pr.p.compose_power(n), pr.q.compose_power(n))
    assert composed.verified


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from(first_primes(6)), min_size=2, max_size=4, unique=True))
def test_salem_combine_is_numerator_of_one_minus_f(ks):
    pr = pair_sum(binomial_pair(k) for k in ks)
    if pr.p.lc != 1:
        return
    S = salem_combine(pr)
    # (z^2-1) p - z q == (z^2-1) p (1 - f), with f = z q / ((z^2-1) p), checked at sample points
    for x in (Fraction(3), Fraction(-5, 2), Fraction(7, 3)):
        zp = (x * x - 1) * pr.p(x)
        f = x * pr.q(x) / zp
        assert S(x) == zp * (1 - f)
