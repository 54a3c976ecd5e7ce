"""Sturm chains over the integers: exact real-root counting and isolation."""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import EndpointIsRoot, Inconclusive
from .poly import IntPolynomial, derivative, pseudo_remainder

INF = math.inf


def _neg_remainder(a, b):
    # Positive multiple of -rem(a, b) with the content removed.
    r, e = pseudo_remainder(a, b)
    if r.is_zero():
        return r
    if b.lc < 0 and e % 2:
        r = -r
    g = r.content()
    return IntPolynomial._raw([-c // g for c in r.coeffs])


def remainder_sequence(f0, f1):
    """Signed remainder sequence f0, f1, -rem(f0, f1), ... up to positive scaling."""
    seq = [f0, f1]
    while seq[-1].degree > 0:
        r = _neg_remainder(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append(r)
    return seq


def _signs_at(polys, x):
    if x == INF:
        return [(p.lc > 0) - (p.lc < 0) for p in polys]
    if x == -INF:
        return [((p.lc > 0) - (p.lc < 0)) * (-1 if p.degree % 2 else 1) for p in polys]
    return [p.sign_at(x) for p in polys]


def sign_variations(polys, x):
    prev = 0
    count = 0
    for s in _signs_at(polys, x):
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


class SturmChain:
    """Sturm chain p, p', -rem(p, p'), ... of a squarefree integer polynomial."""

    def __init__(self, p):
        if p.degree < 1:
            self.polys = (p,)
        else:
            self.polys = tuple(remainder_sequence(p, derivative(p)))
        self._cache = {}

    @property
    def p(self):
        return self.polys[0]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def variations(self, x):
        if x in self._cache:
            return self._cache[x]
        v = sign_variations(self.polys, x)
        self._cache[x] = v
        return v

    def count(self, lo=-INF, hi=INF):
        """Number of distinct real roots in the open interval (lo, hi)."""
        for x in (lo, hi):
            if x not in (INF, -INF) and self.p.sign_at(x) == 0:
                raise EndpointIsRoot(f"{x} is a root")
        if lo >= hi:
            return 0
        return self.variations(lo) - self.variations(hi)

    def isolate(self, lo, hi):
        """Isolating intervals for every root in the open interval (lo, hi).

        Endpoints are Fractions. A root hit exactly by a bisection point is
        returned as the degenerate interval (r, r); every other interval is open
        and contains exactly one root.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        out = []
        stack = [(lo, hi, self.count(lo, hi))]
        while stack:
            a, b, n = stack.pop()
            if n == 0:
                continue
            if n == 1:
                out.append((a, b))
                continue
            m = (a + b) / 2
            if self.p.sign_at(m) == 0:
                out.append((m, m))
                d = (b - a) / 4
                while True:
                    left, right = m - d, m + d
                    if self.p.sign_at(left) and self.p.sign_at(right) and self.count(left, right) == 1:
                        break
                    d /= 2
                stack.append((a, left, self.count(a, left)))
                stack.append((right, b, self.count(right, b)))
            else:
                stack.append((a, m, self.count(a, m)))
                stack.append((m, b, self.count(m, b)))
        out.sort()
        return out

    def refine(self, interval, halvings):
        """Halve an isolating interval ``halvings`` times (exact roots stay put)."""
        a, b = interval
        if a == b:
            return interval
        sa = self.p.sign_at(a)
        for _ in range(halvings):
            m = (a + b) / 2
            sm = self.p.sign_at(m)
            if sm == 0:
                return (m, m)
            if sm == sa:
                a = m
            else:
                b = m
        return (a, b)


def sturm_count(p, interval=(-INF, INF)):
    """Exact number of real roots of squarefree ``p`` in an open interval."""
    lo, hi = interval
    lo = -INF if lo is None else lo
    hi = INF if hi is None else hi
    return SturmChain(p).count(lo, hi)


def cauchy_index(num, den):
    """Cauchy index of num/den over the whole real line.

    Each simple real pole with positive residue contributes +1, negative -1.
    """
    seq = remainder_sequence(den, num)
    return sign_variations(seq, -INF) - sign_variations(seq, INF)


def sign_near_root(q, chain, interval, cap=64):
    """Sign of ``q`` at the unique root of ``chain.p`` inside ``interval``.

    Refines by bisection until ``q`` has no root on the closed interval, at most
    ``cap`` halvings; raises Inconclusive past the cap.
    """
    a, b = interval
    if a == b:
        s = q.sign_at(a)
        if s == 0:
            raise Inconclusive("q vanishes at the root")
        return s
    qchain = SturmChain(q)
    for _ in range(cap + 1):
        sa, sb = q.sign_at(a), q.sign_at(b)
        if sa and sb and sa == sb and qchain.count(a, b) == 0:
            return sa
        a, b = chain.refine((a, b), 1)
        if a == b:
            return sign_near_root(q, chain, (a, b))
    raise Inconclusive(f"no sign separation within {cap} halvings")
