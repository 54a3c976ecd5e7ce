"""Exact certificates for Salem and Pisot minimal polynomials.

A Salem verdict is decided in the coordinate x = z + 1/z.  If S is monic,
reciprocal of degree 2m and its trace polynomial has m-1 simple roots in
(-2, 2) and one in (2, oo), then S has one root tau > 1, one root 1/tau and
2m-2 roots on the unit circle.  Any factor of S without tau or 1/tau would have
all its roots on the circle and so, by Kronecker, be cyclotomic; the factor
holding tau also holds 1/tau (its constant term is +-1).  Once the sieve rules
out cyclotomic factors, S is irreducible and is the minimal polynomial of tau.

A Pisot verdict needs one root in (1, oo) and every other root strictly inside
the disk.  A proper monic factor missing the dominant root would have all its
roots in the open disk and an integer constant term of modulus below 1, which
is impossible, so the verdict also certifies irreducibility.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import min_salem_degree
from .cyclo import SieveResult, sieve_gcd_test
from .errors import BadTrace, PreconditionFailed
from .poly import IntPolynomial, div_z_minus_one, exact_div, gcd_primitive, squarefree_part
from .sturm import INF, SturmChain, cauchy_index, sturm_count
from .tracepoly import x_transform

__all__ = [
    "SalemCertificate",
    "PisotCertificate",
    "certify_salem",
    "certify_pisot",
    "salem_value",
    "totally_positive_from_salem",
    "unramified_flag",
    "min_degree_check",
    "x_transform",
    "sturm_count",
]

DEFAULT_PRECISION = 64


@dataclass(frozen=True)
class SalemCertificate:
    verdict: str  # Salem | ReciprocalPisot | NotSalem | Inconclusive
    degree: int
    trace: int | None
    inside: int | None = None  # roots of the x-transform in (-2, 2)
    at_plus_two: int | None = None
    at_minus_two: int | None = None
    above: int | None = None  # roots in (2, oo)
    below: int | None = None  # roots in (-oo, -2)
    sieve: SieveResult | None = None
    value: tuple | None = None
    reasons: tuple = ()

    @property
    def ok(self):
        return self.verdict == "Salem"

    def summary(self):
        out = {
            "verdict": self.verdict,
            "degree": self.degree,
            "trace": self.trace,
            "roots_in_open_interval": self.inside,
            "roots_at_2": self.at_plus_two,
            "roots_at_minus_2": self.at_minus_two,
            "roots_above_2": self.above,
            "sieve_passed": None if self.sieve is None else self.sieve.passed,
        }
        if self.value is not None:
            out["value"] = [_fraction_text(v) for v in self.value]
        if self.reasons:
            out["reasons"] = list(self.reasons)
        return out


@dataclass(frozen=True)
class PisotCertificate:
    verdict: str  # Pisot | NotPisot | Inconclusive
    degree: int
    trace: int | None
    inside_disk: int | None = None
    above_one: int | None = None
    dominant: tuple | None = None
    reasons: tuple = ()
    extra: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.verdict == "Pisot"

    def summary(self):
        out = {
            "verdict": self.verdict,
            "degree": self.degree,
            "trace": self.trace,
            "roots_in_open_disk": self.inside_disk,
            "roots_above_1": self.above_one,
        }
        if self.dominant is not None:
            out["dominant_root"] = [_fraction_text(v) for v in self.dominant]
        if self.reasons:
            out["reasons"] = list(self.reasons)
        return out


def _fraction_text(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- Salem
def _strip_linear(P, root):
    m = 0
    lin = IntPolynomial([-root, 1])
    while P.degree >= 1 and P.sign_at(root) == 0:
        P = exact_div(P, lin)
        m += 1
    return P, m


def _x_counts(Tx):
    """Distinct-root counts of Tx on (-oo,-2), {-2}, (-2,2), {2}, (2,oo)."""
    core = squarefree_part(Tx)
    core, at_minus = _strip_linear(core, -2)
    core, at_plus = _strip_linear(core, 2)
    chain = SturmChain(core)
    return chain.count(-INF, -2), at_minus, chain.count(-2, 2), at_plus, chain.count(2, INF)


def certify_salem(S, precision_bits=DEFAULT_PRECISION):
    """Decide whether S is the minimal polynomial of a Salem number.

    Returns a certificate; verdicts other than Salem carry the failed checks in
    ``reasons``.  Degree 2 with a root above 1 gives ReciprocalPisot.
    """
    if S.is_zero():
        raise ValueError("S must be nonzero")
    deg = S.degree
    trace = S.trace() if S.is_monic() else None
    reasons = []
    if not S.is_monic():
        reasons.append("not monic")
    if not S.is_reciprocal():
        reasons.append("not reciprocal")
    if deg % 2 or deg < 2:
        reasons.append("degree is not a positive even number")
    if reasons:
        return SalemCertificate("NotSalem", deg, trace, reasons=tuple(reasons))
    if S.sign_at(1) == 0 or S.sign_at(-1) == 0:
        reasons.append("vanishes at z = 1 or z = -1")
    sieve = sieve_gcd_test(S)
    if not sieve.passed:
        reasons.append("cyclotomic sieve failed")
    Tx = x_transform(S)
    if gcd_primitive(Tx, Tx.derivative()).degree > 0:
        reasons.append("repeated roots")
    below, at_minus, inside, at_plus, above = _x_counts(Tx)
    m = deg // 2
    if at_minus or at_plus:
        reasons.append("trace polynomial vanishes at 2 or -2")
    if below:
        reasons.append("root below -1 on the real line")
    if above != 1:
        reasons.append(f"{above} roots above 1 instead of one")
    if inside != m - 1:
        reasons.append(f"{inside} conjugate pairs on the circle instead of {m - 1}")
    counts = dict(inside=inside, at_plus_two=at_plus, at_minus_two=at_minus, above=above, below=below)
    if reasons:
        return SalemCertificate("NotSalem", deg, trace, sieve=sieve, reasons=tuple(reasons), **counts)
    value = _value_from_x(Tx, precision_bits)
    verdict = "Salem" if m >= 2 else "ReciprocalPisot"
    return SalemCertificate(verdict, deg, trace, sieve=sieve, value=value, **counts)


def _sqrt_bounds(r, bits):
    # floor and ceiling of sqrt(r) on the grid 2**-bits
    scale = 1 << (2 * bits)
    num = r.numerator * scale
    lo_int = math.isqrt(num // r.denominator)
    hi_int = lo_int if lo_int * lo_int * r.denominator == num else lo_int + 1
    return Fraction(lo_int, 1 << bits), Fraction(hi_int, 1 << bits)


def _tau_bounds(a, b, bits):
    # tau(x) = (x + sqrt(x^2 - 4)) / 2 is increasing on x >= 2
    lo = (a + _sqrt_bounds(a * a - 4, bits)[0]) / 2
    hi = (b + _sqrt_bounds(b * b - 4, bits)[1]) / 2
    return lo, hi


def _value_from_x(Tx, bits):
    s2 = Tx.sign_at(2)
    a, b = Fraction(2), Fraction(4)
    # the unique root above 2 is bracketed once the sign flips; doubling stays
    # well inside the Cauchy bound 1 + max|c_i|
    while Tx.sign_at(b) == s2:
        a, b = b, 2 * b
    target = Fraction(1, 1 << bits)
    while True:
        lo, hi = _tau_bounds(a, b, bits + 2)
        if hi - lo <= target:
            return lo, hi
        mid = (a + b) / 2
        sm = Tx.sign_at(mid)
        if sm == 0:
            a = b = mid
        elif sm == s2:
            a = mid
        else:
            b = mid


def salem_value(S, precision_bits=DEFAULT_PRECISION):
    """Rational interval [lo, hi] containing the Salem number, hi - lo <= 2**-precision_bits."""
    cert = certify_salem(S, precision_bits)
    if cert.verdict not in ("Salem", "ReciprocalPisot"):
        raise PreconditionFailed(f"not a Salem polynomial: {', '.join(cert.reasons)}")
    return cert.value


def totally_positive_from_salem(S):
    """T(y - 2) for the trace polynomial T of S: the minimal polynomial of tau + 1/tau + 2.

    For S of degree 2m and trace -T the result has m positive real roots and
    trace 2m - T; both facts are checked.
    """
    cert = certify_salem(S)
    if cert.verdict != "Salem":
        raise PreconditionFailed(f"not a Salem polynomial: {', '.join(cert.reasons)}")
    m = S.degree // 2
    R = x_transform(S).taylor_shift(-2)
    if sturm_count(R, (0, None)) != m:
        raise AssertionError("shifted trace polynomial is not totally positive")
    if R.trace() != 2 * m + S.trace():
        raise AssertionError("trace of the shifted polynomial is off")
    return R


def unramified_flag(S):
    """|S(1) S(-1)|; a Salem number is unramified when this equals 1."""
    return abs(S(1) * S(-1)).numerator


def min_degree_check(T, degree):
    """True iff degree reaches the least possible degree of a Salem number of trace -T.

    That minimum is 18k + 2 for T = 2k and 18k + 10 for T = 2k + 1, i.e.
    2 * floor(9T/2) + 2 (see bounds.min_salem_degree).
    """
    if T < 2:
        raise BadTrace("the degree bound needs T >= 2")
    return degree >= min_salem_degree(T)


# ---------------------------------------------------------------- Pisot
def _schur_cohn_inside(p):
    """Number of roots of p in |z| < 1, or (None, step) on a degenerate step.

    One step replaces p by a0 p - an p*, whose constant term is a0^2 - an^2.
    When that is positive the inner count is unchanged; when negative it is
    deg p minus the inner count of the new polynomial (Rouche on |z| = 1).
    Assumes p has no roots on the circle.
    """
    sign = 1
    offset = 0
    step = 0
    while p.degree >= 1:
        a0, an = p.coeffs[0], p.coeffs[-1]
        gamma = a0 * a0 - an * an
        if gamma == 0:
            return None, step
        n = p.degree
        nxt = p * a0 - p.reverse() * an
        nxt = IntPolynomial([c // nxt.content() for c in nxt.coeffs])
        if gamma < 0:
            # inside(p) = n - inside(nxt)
            offset += sign * n
            sign = -sign
        p = nxt
        step += 1
    return offset, step


def _cayley(p):
    """(1 - w)^n p((1 + w)/(1 - w)); roots in |z| < 1 go to Re w < 0."""
    s = p.taylor_shift(-1)
    s = IntPolynomial([c << k for k, c in enumerate(s.coeffs)])  # p(2v - 1)
    r = IntPolynomial(s.coeffs[::-1])  # u^n p(2/u - 1), with u = 1 - w below
    return r.negate_variable().taylor_shift(-1)


def _left_half_plane(q):
    """Roots of q in Re w < 0, assuming none on the imaginary axis.

    With q(iy) = A(y) + i B(y), the change of arg q(iy) over the real line is
    pi (L - R).  It equals -pi times the Cauchy index of B/A for even degree and
    pi times that of A/B for odd degree.
    """
    n = q.degree
    A = [0] * (n + 1)
    B = [0] * (n + 1)
    for k, c in enumerate(q.coeffs):
        unit = (1, 1, -1, -1)[k % 4]  # real or imaginary part of i^k
        if k % 2:
            B[k] = unit * c
        else:
            A[k] = unit * c
    A, B = IntPolynomial(A), IntPolynomial(B)
    diff = -cauchy_index(B, A) if n % 2 == 0 else cauchy_index(A, B)
    return (n + diff) // 2


def roots_in_disk(p):
    """Number of roots of p in |z| < 1 for p with no roots on |z| = 1."""
    return _left_half_plane(_cayley(p))


def _circle_roots(g):
    """Number of distinct roots of g on |z| = 1, or None if undecided."""
    g = squarefree_part(g)
    count = 0
    if g.sign_at(1) == 0:
        g = div_z_minus_one(g)
        count += 1
    g, k = _strip_linear(g, -1)
    count += k
    if g.degree < 1:
        return count
    if not g.is_reciprocal() or g.degree % 2:
        return None
    Tx = x_transform(g)
    below, at_minus, inside, at_plus, above = _x_counts(Tx)
    return count + inside + at_minus + at_plus


def _dominant_interval(core, bits):
    chain = SturmChain(core)
    bound = 1 + max(abs(c) for c in core.coeffs)
    (iv,) = chain.isolate(1, bound)
    a, b = iv
    while b - a > Fraction(1, 1 << bits):
        a, b = chain.refine((a, b), 1)
    return a, b


def certify_pisot(P, precision_bits=DEFAULT_PRECISION):
    """Decide whether monic P is the minimal polynomial of a Pisot number.

    Roots on the circle are ruled out through gcd(P, P*).  The disk count comes
    from the Cayley map and a Cauchy index; the Schur-Cohn recursion is run as
    well and must agree whenever it does not degenerate (it always degenerates
    at the first step for a unit constant term, since then a0^2 = an^2).
    """
    if P.is_zero():
        raise ValueError("P must be nonzero")
    deg = P.degree
    trace = P.trace() if P.is_monic() else None
    if not P.is_monic() or deg < 1:
        return PisotCertificate("NotPisot", deg, trace, reasons=("not monic of positive degree",))
    if P.coeffs[0] == 0:
        return PisotCertificate("NotPisot", deg, trace, reasons=("zero constant term",))
    core = squarefree_part(P)
    if core.degree != deg:
        return PisotCertificate("NotPisot", deg, trace, reasons=("repeated roots",))
    if core.sign_at(1) == 0:
        return PisotCertificate("NotPisot", deg, trace, reasons=("root at z = 1",))
    above = sturm_count(core, (1, None))
    g = gcd_primitive(P, P.reverse())
    if g.degree > 0:
        on_circle = _circle_roots(g)
        if on_circle is None:
            return PisotCertificate(
                "Inconclusive", deg, trace, above_one=above, reasons=("could not decide roots on the circle",)
            )
        if on_circle:
            return PisotCertificate(
                "NotPisot", deg, trace, above_one=above, reasons=(f"{on_circle} roots on the unit circle",)
            )
    inside = roots_in_disk(P)
    schur, step = _schur_cohn_inside(P)
    extra = {"schur_cohn": "degenerate" if schur is None else "agrees", "schur_cohn_steps": step}
    if schur is not None and schur != inside:
        return PisotCertificate(
            "Inconclusive", deg, trace, above_one=above, reasons=("disk counts disagree",), extra=extra
        )
    reasons = []
    if above != 1:
        reasons.append(f"{above} real roots above 1 instead of one")
    if inside != deg - 1:
        reasons.append(f"{inside} roots in the open disk instead of {deg - 1}")
    if reasons:
        return PisotCertificate(
            "NotPisot", deg, trace, inside_disk=inside, above_one=above, reasons=tuple(reasons), extra=extra
        )
    dominant = _dominant_interval(core, precision_bits)
    return PisotCertificate("Pisot", deg, trace, inside_disk=inside, above_one=above, dominant=dominant, extra=extra)
