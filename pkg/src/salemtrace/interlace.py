"""Pairs of polynomials whose zeros interlace on the unit circle.

Everything here works in the coordinate x = z + 1/z.  Zeros at z = 1 and
z = -1 are split off first; what remains of each polynomial is reciprocal and
maps to a real polynomial whose roots must all lie in (-2, 2).  For a pair
(p, q) the function

    f(x) = z / (z^2 - 1) * q(z) / p(z)

is then a rational function of x, and the pair interlaces exactly when every
pole of f is simple, real, in [-2, 2], and carries a positive residue.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import NotAlternating, NotInterlacing, NotOnCircle, NotSimple, PreconditionFailed
from .poly import IntPolynomial, derivative, div_z_minus_one, exact_div, gcd_primitive, mul
from .sturm import SturmChain, cauchy_index, sign_near_root
from .tracepoly import x_transform

REFINE_CAP = 64


@dataclass(frozen=True)
class InterlacingPair:
    p: IntPolynomial
    q: IntPolynomial
    verified: bool = False

    def scaled_numerator(self, num, den=1):
        """Same pair with q multiplied by num/den (positive), verification kept."""
        if num <= 0 or den <= 0:
            raise ValueError("scale must be positive")
        q = self.q * num
        if den != 1:
            q = exact_div(q, IntPolynomial([den]))
        return replace(self, q=q)


@dataclass(frozen=True)
class ResidueReport:
    intervals: list
    signs: list

    @property
    def all_positive(self):
        return all(s > 0 for s in self.signs)


@dataclass(frozen=True)
class _Split:
    at_one: int
    at_minus_one: int
    core: IntPolynomial  # reciprocal, no roots at +-1
    trace_poly: IntPolynomial  # x_transform(core)


_Z_PLUS_ONE = IntPolynomial([1, 1])


def _split(f, name):
    a1 = a2 = 0
    core = f
    if core.sign_at(1) == 0:
        core = div_z_minus_one(core)
        a1 = 1
    if core.sign_at(-1) == 0:
        core = exact_div(core, _Z_PLUS_ONE)
        a2 = 1
    if not core.is_reciprocal():
        raise NotOnCircle(f"{name} is not reciprocal after removing z = +-1 factors", witness=core)
    return _Split(a1, a2, core, x_transform(core))


def _pole_structure(p_split, q_split):
    # f = Q(x) / D(x) with D = P(x) (x - 2)^[p(1)=0] (x + 2)^[p(-1)=0].
    D = p_split.trace_poly
    if p_split.at_one:
        D = mul(D, IntPolynomial([-2, 1]))
    if p_split.at_minus_one:
        D = mul(D, IntPolynomial([2, 1]))
    return q_split.trace_poly, D


def verify_circular_interlacing(p, q):
    """Certify that p and q satisfy the circular interlacing condition.

    Checks, in order: matching degree, positive leading coefficients and
    coprimality; simple zeros; all zeros on |z| = 1 (Sturm counts of the
    x-transforms on (-2, 2)); alternation (both z = 1 and z = -1 are zeros of
    p*q and the Cauchy index of f over the real line equals its number of
    poles, i.e. every residue is positive).
    """
    if p.degree != q.degree or p.degree < 1:
        raise NotInterlacing("p and q must have the same positive degree", witness=(p.degree, q.degree))
    if p.lc <= 0 or q.lc <= 0:
        raise NotInterlacing("leading coefficients must be positive", witness=(p.lc, q.lc))
    g = gcd_primitive(p, q)
    if g.degree > 0:
        raise NotInterlacing("p and q have a common factor", witness=g)
    for f, name in ((p, "p"), (q, "q")):
        w = gcd_primitive(f, derivative(f))
        if w.degree > 0:
            raise NotSimple(f"{name} has a repeated zero", witness=w)
    ps, qs = _split(p, "p"), _split(q, "q")
    for s, name in ((ps, "p"), (qs, "q")):
        T = s.trace_poly
        if T.degree > 0:
            inside = SturmChain(T).count(-2, 2)
            if inside != T.degree:
                raise NotOnCircle(
                    f"{name} has {T.degree - inside} zero pair(s) off the unit circle", witness=s.core
                )
    if not (ps.at_one or qs.at_one):
        raise NotAlternating("z = 1 is a zero of neither p nor q", witness=1)
    if not (ps.at_minus_one or qs.at_minus_one):
        raise NotAlternating("z = -1 is a zero of neither p nor q", witness=-1)
    Q, D = _pole_structure(ps, qs)
    index = cauchy_index(Q, D)
    if index != D.degree:
        witness = index
        if D.degree <= 40:
            report = _residue_report(ps, qs)
            witness = next(report.intervals[i] for i, s in enumerate(report.signs) if s <= 0)
        raise NotAlternating("zeros of p and q do not alternate around the circle", witness=witness)
    return InterlacingPair(p, q, verified=True)


def _residue_report(ps, qs):
    Q, D = _pole_structure(ps, qs)
    P = ps.trace_poly
    intervals = []
    signs = []
    # pole at x = -2
    if ps.at_minus_one:
        x = Fraction(-2)
        intervals.append((x, x))
        signs.append(Q.sign_at(x) * derivative(D).sign_at(x))
    if P.degree > 0:
        chain = SturmChain(P)
        e_sign = -1 if ps.at_one else 1  # sign of (x - 2)^a1 (x + 2)^a2 on (-2, 2)
        for iv in chain.isolate(-2, 2):
            a, b = iv
            if a == b:
                d_sign = derivative(D).sign_at(a)
            else:
                d_sign = P.sign_at(b) * e_sign
            intervals.append(iv)
            signs.append(sign_near_root(Q, chain, iv, cap=REFINE_CAP) * d_sign)
    if ps.at_one:
        x = Fraction(2)
        intervals.append((x, x))
        signs.append(Q.sign_at(x) * derivative(D).sign_at(x))
    return ResidueReport(intervals=intervals, signs=signs)


def residue_signs(pair):
    """Signs of the residues of f at each of its poles, with isolating intervals.

    Poles are located exactly (rational intervals, refined by bisection) and
    each residue sign is Q(alpha) * sign D'(alpha).  Raises Inconclusive when
    separating Q from a pole takes more than 64 halvings.
    """
    p, q = pair.p, pair.q
    ps, qs = _split(p, "p"), _split(q, "q")
    return _residue_report(ps, qs)


def _normalized(num, den):
    g = gcd_primitive(num, den)
    if g.degree > 0:
        num, den = exact_div(num, g), exact_div(den, g)
    c = math.gcd(*num.coeffs, *den.coeffs)
    if den.lc < 0:
        c = -c
    return IntPolynomial([x // c for x in num.coeffs]), IntPolynomial([x // c for x in den.coeffs])


def pair_sum(pairs):
    """Reduce sum(q_i / p_i) to a single interlacing pair q / p."""
    pairs = list(pairs)
    if not pairs:
        raise PreconditionFailed("pair_sum needs at least one pair")
    for pr in pairs:
        if not pr.verified:
            raise NotInterlacing("input pair is not verified", witness=pr)
    num, den = pairs[0].q, pairs[0].p
    for pr in pairs[1:]:
        num = mul(num, pr.p) + mul(pr.q, den)
        den = mul(den, pr.p)
        num, den = _normalized(num, den)
    num, den = _normalized(num, den)
    return verify_circular_interlacing(den, num)


def _combine_pre(pair):
    if not pair.verified:
        raise PreconditionFailed("pair must be verified")
    if pair.p.degree < 1 or pair.q.is_zero():
        raise PreconditionFailed("degenerate pair")
    if not pair.p.is_monic():
        raise PreconditionFailed("p must be monic")


def salem_combine(pair):
    """(z^2 - 1) p(z) - z q(z): a Salem (or reciprocal Pisot) polynomial up to cyclotomic factors."""
    _combine_pre(pair)
    p, q = pair.p, pair.q
    p1 = p.sign_at(1)
    if p1 != 0:
        q1 = q(1)
        if not (q1 == 0 and 2 * p(1) - derivative(q)(1) < 0):
            raise PreconditionFailed("need p(1) = 0, or q(1) = 0 and 2p(1) - q'(1) < 0")
    z = IntPolynomial.z()
    return mul(z * z - 1, p) - q.shift(1)


def pisot_combine(pair):
    """(z^2 - z - 1) p(z) - z q(z): the minimal polynomial of a Pisot number."""
    _combine_pre(pair)
    return mul(IntPolynomial([-1, -1, 1]), pair.p) - pair.q.shift(1)


def binomial_pair(k):
    """The verified pair (z^k - 1, z^k + 1)."""
    return verify_circular_interlacing(IntPolynomial.binomial(k, -1), IntPolynomial.binomial(k, 1))
