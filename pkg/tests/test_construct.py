import pytest

from salemtrace.construct import (
    family,
    generate_pisot,
    generate_salem_candidate,
    h_substitute,
    pisot_from_pairs,
    salem_from_pairs,
)
from salemtrace.errors import BadParam, NotCoprime, NotMaterializable, OddN
from salemtrace.poly import IntPolynomial as P, mul
from salemtrace.primes import first_primes

GOLDEN_TOP = [1, 2, -2, -19, -57, -123, -222, -357, -527, -727, -950,
              -1190, -1440, -1692, -1936, -2161, -2355, -2506, -2602, -2635]


def test_salem_t0():
    rec = generate_salem_candidate(0)
    assert rec.reduced == P([1, 0, -2, -3, -2, 0, 1])
    assert rec.predicted_degree == 6 and rec.exponents == (2, 3)


def test_salem_t2_golden():
    S = generate_salem_candidate(2).reduced
    assert S.degree == 38
    assert list(S.coeffs[::-1][:20]) == GOLDEN_TOP
    assert S.is_reciprocal() and S.coeffs[0] == 1


@pytest.mark.parametrize("T", range(9))
def test_salem_invariants(T):
    rec = generate_salem_candidate(T)
    S = rec.reduced
    assert S.is_monic() and S.is_reciprocal()
    assert S.trace() == -T
    assert S.degree == rec.predicted_degree == sum(first_primes(2 * T + 2)) - (2 * T - 1)
    assert rec.n == 2 * T + 2


def test_determinism():
    a = generate_salem_candidate(5).reduced.to_text()
    b = generate_salem_candidate(5).reduced.to_text()
    assert a == b
    assert generate_pisot(3).reduced.to_text() == generate_pisot(3).reduced.to_text()


def test_pisot_single_round():
    # one round from z^2 - z - 1 with (q, r) = (2, 3)
    P0, Q0 = P([-1, -1, 1]), P([0, 1])
    raw = mul(mul(P.binomial(2, -1), P.binomial(3, -1)), P0) - mul(P.binomial(5, -1), Q0)
    assert raw == P([-1, 0, 2, 2, 0, -2, -2, 1])


@pytest.mark.parametrize("T", range(5))
def test_pisot_invariants(T):
    rec = generate_pisot(T)
    assert rec.raw.sign_at(1) == 0
    assert rec.reduced.sign_at(1) != 0
    assert rec.reduced.coeffs[0] != 0
    assert rec.reduced.trace() == -T
    assert rec.reduced.degree <= sum(first_primes(2 * T + 4))
    assert rec.root_one_multiplicity == 2 * T + 3


@pytest.mark.parametrize("T", range(5))
def test_pseudocode_equals_combinators(T):
    assert generate_salem_candidate(T).reduced == salem_from_pairs(T)
    assert generate_pisot(T).reduced == pisot_from_pairs(T)


def test_h_substitute():
    h = h_substitute([2, 3])
    assert h == P([-1, 1, 2, 1, -1, -2, -1, 1]) * 2
    assert h == mul(P([-2, 2]), generate_salem_candidate(0).reduced)
    with pytest.raises(NotCoprime):
        h_substitute([2, 4])
    with pytest.raises(OddN):
        h_substitute([2, 3, 5])


@pytest.mark.parametrize("T", range(4))
def test_h_identity(T):
    n = 2 * T + 2
    lhs = h_substitute(first_primes(n))
    rhs = mul(P([-1, 1]) ** (n - 1), generate_salem_candidate(T).reduced) * 2
    assert lhs == rhs


def test_families():
    assert family("quartic", 1) == P([1, -1, -3, -1, 1])
    assert family("lehmer") == P([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    assert family("sextic-zero").trace() == 0
    assert family("degree8").trace() == -1
    with pytest.raises(BadParam):
        family("quartic", 0)
    with pytest.raises(BadParam):
        family("nonsense")


def test_killer_policy_is_parameters_only():
    rec = generate_salem_candidate(0, policy="killer")
    assert rec.n == 2 and rec.exponents.report.log_K_mode == "exact"
    with pytest.raises(NotMaterializable):
        rec.polynomial
    assert generate_salem_candidate(0).polynomial.degree == 6
    with pytest.raises(BadParam):
        generate_salem_candidate(1, policy="other")
