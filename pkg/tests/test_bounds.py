import math
from fractions import Fraction

import mpmath
import pytest

from salemtrace.bounds import (
    certainly_less,
    construction_loglog_bound,
    coset_exponent_bound,
    killer_exponent_report,
    min_salem_degree,
    pisot_degree_bound,
    salem_degree_bounds,
    target_loglog_bound,
)
from salemtrace.primes import chebyshev_theta_psi


def test_coset_examples():
    b = coset_exponent_bound(5, 1, 6)
    assert b.m_bound == 5 and b.primorial == 30 and b.exponent_bound == 150
    assert coset_exponent_bound(1, 4, 10).m_bound == 16
    assert coset_exponent_bound(Fraction(9, 4), 2, 10).m_bound == math.ceil(Fraction(81, 16) * 2)
    with pytest.raises(ValueError):
        coset_exponent_bound(5, 0, 6)


def test_coset_log_contains_exact():
    b = coset_exponent_bound(5, 1, 6)
    with mpmath.workprec(200):
        assert mpmath.mpf(b.log_exponent_bound.a) <= mpmath.log(150) <= mpmath.mpf(b.log_exponent_bound.b)


def test_killer_n2():
    r = killer_exponent_report(2)
    assert (r.N, r.D_squared, r.M_floor, r.log_K_mode) == (12, 6, 1122, "exact")
    theta, _ = chebyshev_theta_psi(12)
    _, psi = chebyshev_theta_psi(1122)
    assert r.log_K.a <= (theta + psi).a and (theta + psi).b <= r.log_K.b
    assert all(r.checks().values())
    # exact <= linear bound <= cap
    assert certainly_less(r.log_K, r.log_K_linear_bound)
    assert certainly_less(r.log_K_linear_bound, r.log_K_cap)
    assert 1137 < float(r.log_K.a) < 1138


def test_killer_n4_and_bound_mode():
    r = killer_exponent_report(4)
    assert abs(float(r.loglog_K_bound.a) - (0.2 + 7.5 * math.log(7))) < 1e-12
    assert abs(float(r.log_K_linear_bound.a) - (1.02 * 48 + 1.04 * 7**7.5)) < 1e-3
    big = killer_exponent_report(52)
    assert big.log_K_mode == "bound" and all(big.checks().values())
    with pytest.raises(ValueError):
        killer_exponent_report(3)


def test_salem_degree_bounds():
    assert salem_degree_bounds(25).constructed_degree == 5540
    assert salem_degree_bounds(2).constructed_degree == 38
    b = salem_degree_bounds(1)
    assert float(b.theoretical_loglog.a) == 22.0 and b.chain_holds
    assert 14 < float(b.construction_loglog.a) < 15.5


def test_chain_sweep():
    for T in range(1, 101):
        assert certainly_less(construction_loglog_bound(2 * T + 2), target_loglog_bound(T)), T


def test_pisot_bound():
    assert pisot_degree_bound(0) == 17
    assert pisot_degree_bound(1) == 41


def test_min_degree_formula():
    for k in range(1, 6):
        assert min_salem_degree(2 * k) == 18 * k + 2
        assert min_salem_degree(2 * k + 1) == 18 * k + 10
    for T in range(2, 26):
        assert salem_degree_bounds(T).constructed_degree >= min_salem_degree(T)
