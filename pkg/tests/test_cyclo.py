import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from salemtrace.construct import FAMILIES, family, generate_salem_candidate
from salemtrace.cyclo import (
    cyclotomic_poly,
    sieve_gcd_test,
    strip_cyclotomic,
    strip_root_one,
    totient_search_bound,
)
from salemtrace.poly import IntPolynomial as P, exact_div, mul

z = sympy.Symbol("z")


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == P([-1, 1])
    assert cyclotomic_poly(6) == P([1, -1, 1])
    assert cyclotomic_poly(12) == P([1, 0, -1, 0, 1])


def test_cyclotomic_against_sympy():
    for n in range(1, 200):
        want = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, z), z).all_coeffs())]
        assert cyclotomic_poly(n) == P(want), n
        exact_div(P.binomial(n, -1), cyclotomic_poly(n))


def test_sieve_examples():
    assert sieve_gcd_test(generate_salem_candidate(2).reduced).passed
    bad = sieve_gcd_test(mul(P([1, 1, 1]), family("quartic", 1)))
    assert not bad.passed
    exact_div(bad.witness_gcd, P([1, 1, 1]))
    assert sieve_gcd_test(P([-2, 1])).passed


def test_strip_examples():
    res = strip_cyclotomic(mul(P([1, 1, 1]), family("quartic", 1)))
    assert res.stripped_factors == [(3, 1)]
    assert res.quotient == family("quartic", 1)
    assert strip_cyclotomic(generate_salem_candidate(0).reduced).stripped_factors == []
    res = strip_cyclotomic(P([-1, 1]) ** 3)
    assert res.stripped_factors == [(1, 3)] and res.quotient == P([1])


def test_strip_root_one():
    assert strip_root_one(P([-1, 0, 2, 2, 0, -2, -2, 1])) == (P([1, 1, -1, -3, -3, -1, 1]), 1)
    assert strip_root_one(P([-1, -1, 1])) == (P([-1, -1, 1]), 0)
    assert strip_root_one(P([1, -2, 1])) == (P([1]), 2)


def test_totient_bound_is_complete():
    # every d with phi(d) <= B lies below the search bound
    for B in (2, 4, 10, 38, 100, 300):
        bound = totient_search_bound(B)
        hits = [d for d in range(1, 4 * B * B + 10) if sympy.totient(d) <= B]
        assert max(hits) <= bound


def corpus():
    items = [generate_salem_candidate(T).reduced for T in range(11)]
    items += [family(name, 3) if name == "quartic" else family(name) for name in FAMILIES]
    return items


def test_sieve_strip_agree_on_corpus():
    for S in corpus():
        assert sieve_gcd_test(S).passed == (strip_cyclotomic(S).stripped_factors == [])


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(["quartic", "sextic_zero", "lehmer", "degree8_negtrace"]),
    st.integers(1, 6),
    st.lists(st.integers(1, 40), max_size=3),
)
def test_sieve_strip_agree_on_products(name, n, ds):
    base = family(name, n) if name == "quartic" else family(name)
    S = base
    for d in ds:
        S = mul(S, cyclotomic_poly(d))
    res = strip_cyclotomic(S)
    assert sieve_gcd_test(S).passed == (not ds)
    assert res.passed == (not ds)
    assert res.quotient == base
    assert mul(res.quotient, res.witness_gcd) == S
    assert sorted(d for d, m in res.stripped_factors for _ in range(m)) == sorted(ds)
