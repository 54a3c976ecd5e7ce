"""Exact dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored ascending by exponent with no trailing zeros; the
zero polynomial has an empty coefficient tuple and degree ``-inf``.  Values
are immutable, so every operation returns a new polynomial.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from . import _modp
from .errors import NotDivisible, ParseError

try:
    import gmpy2
except ImportError:  # pragma: no cover - gmpy2 only speeds up huge products
    gmpy2 = None

# Below this many coefficient pairs schoolbook multiplication wins.
KRONECKER_THRESHOLD = 4096


def _normalize(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _normalize([int(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        # Trusted constructor: coeffs already a list of ints.
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", _normalize(coeffs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k, c=1):
        return cls._raw([0] * k + [c])

    @classmethod
    def z(cls):
        return cls._raw([0, 1])

    @classmethod
    def binomial(cls, k, c):
        """z**k + c."""
        if k == 0:
            return cls._raw([1 + c])
        return cls._raw([c] + [0] * (k - 1) + [1])

    # ----------------------------------------------------------- basic shape
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lc == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _normalize([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mon = "z" if i == 1 else f"z^{i}"
                body = mon if a == 1 else f"{a}*{mon}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # ------------------------------------------------------------ arithmetic
    def __neg__(self):
        return IntPolynomial._raw([-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial._raw([c * other for c in self.coeffs])
        if isinstance(other, IntPolynomial):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        result = IntPolynomial._raw([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        return eval_rational(self, x)

    # ------------------------------------------------------ transformations
    def content(self):
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial._raw([c // g for c in self.coeffs])

    def reverse(self):
        return reverse(self)

    def derivative(self):
        return derivative(self)

    def compose_power(self, k):
        return compose_power(self, k)

    def negate_variable(self):
        """a(-z)."""
        return IntPolynomial._raw([-c if i & 1 else c for i, c in enumerate(self.coeffs)])

    def shift(self, k):
        """z**k * a(z)."""
        if not self.coeffs:
            return self
        return IntPolynomial._raw([0] * k + list(self.coeffs))

    def taylor_shift(self, c):
        """a(z + c), by repeated synthetic division."""
        a = list(self.coeffs)
        n = len(a)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] += c * a[j + 1]
        return IntPolynomial._raw(a)

    def trace(self):
        """Sum of the roots of a monic polynomial (minus the subleading coefficient)."""
        if self.degree < 1:
            return 0
        if self.lc != 1:
            raise ValueError("trace is defined here for monic polynomials only")
        return -self.coeffs[-2]

    def is_reciprocal(self):
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    def sign_at(self, x):
        """Sign of a(x) for rational x, computed in exact integer arithmetic."""
        return _sign(_homogeneous_value(self.coeffs, x))

    def to_text(self):
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_text(cls, line, lineno=None):
        tokens = line.split()
        coeffs = []
        offset = 0
        for tok in tokens:
            offset = line.index(tok, offset)
            try:
                coeffs.append(int(tok, 10))
            except ValueError:
                raise ParseError(f"bad coefficient {tok!r}", lineno, offset) from None
            offset += len(tok)
        if not coeffs:
            raise ParseError("empty polynomial line", lineno, 0)
        return cls._raw(coeffs)


def _coerce(other):
    if isinstance(other, IntPolynomial):
        return other
    if isinstance(other, int):
        return IntPolynomial._raw([other])
    return NotImplemented


def _sign(v):
    return (v > 0) - (v < 0)


ZERO = IntPolynomial()
ONE = IntPolynomial([1])


# ------------------------------------------------------------ multiplication
def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(coeffs, width):
    pos = b"".join((c if c > 0 else 0).to_bytes(width, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(width, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a, b):
    # Evaluate both at 2**(8*width), multiply the integers, read back balanced digits.
    bound = max(abs(c) for c in a).bit_length() + max(abs(c) for c in b).bit_length()
    bound += min(len(a), len(b)).bit_length() + 2
    width = (bound + 7) // 8
    x, y = _pack(a, width), _pack(b, width)
    if gmpy2 is not None:
        prod = int(gmpy2.mpz(x) * gmpy2.mpz(y))
    else:
        prod = x * y
    n = len(a) + len(b) - 1
    half = 1 << (8 * width - 1)
    offset = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * n, "little")
    raw = (prod + offset).to_bytes(width * n, "little")
    return [int.from_bytes(raw[i:i + width], "little") - half for i in range(0, width * n, width)]


def mul(a, b):
    """Exact product of two polynomials."""
    if not a.coeffs or not b.coeffs:
        return ZERO
    x, y = a.coeffs, b.coeffs
    if len(x) * len(y) < KRONECKER_THRESHOLD or min(len(x), len(y)) < 8:
        return IntPolynomial._raw(_schoolbook(x, y))
    return IntPolynomial._raw(_kronecker(x, y))


def mul_binomial(a, k, c):
    """a(z) * (z**k + c) in linear time."""
    if k == 0:
        return a * (1 + c)
    out = [0] * (len(a.coeffs) + k)
    for i, x in enumerate(a.coeffs):
        out[i + k] += x
        out[i] += c * x
    return IntPolynomial._raw(out)


def mul_geometric(a, k):
    """a(z) * (1 + z + ... + z**(k-1)), i.e. a times (z**k - 1)/(z - 1), by a sliding sum."""
    src = a.coeffs
    if not src or k < 1:
        return ZERO if k < 1 else a
    n = len(src)
    out = [0] * (n + k - 1)
    acc = 0
    for j in range(n + k - 1):
        if j < n:
            acc += src[j]
        if j - k >= 0:
            acc -= src[j - k]
        out[j] = acc
    return IntPolynomial._raw(out)


# ------------------------------------------------------------------ division
def div_z_minus_one(a):
    """a / (z - 1) by running sums; raises NotDivisible if a(1) != 0."""
    c = a.coeffs
    if not c:
        return ZERO
    q = [0] * (len(c) - 1)
    acc = 0
    for i in range(len(c) - 1, 0, -1):
        acc += c[i]
        q[i - 1] = acc
    if acc + c[0] != 0:
        raise NotDivisible("polynomial does not vanish at z = 1")
    return IntPolynomial._raw(q)


def exact_div(a, b):
    """Return q with a == q * b, or raise NotDivisible."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.coeffs:
        return ZERO
    if b.coeffs == (-1, 1):
        return div_z_minus_one(a)
    db = len(b.coeffs) - 1
    da = len(a.coeffs) - 1
    if da < db:
        raise NotDivisible("degree of dividend is below degree of divisor")
    lb = b.coeffs[-1]
    tail = [(j, c) for j, c in enumerate(b.coeffs[:-1]) if c]
    r = list(a.coeffs)
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        top = r[i + db]
        if top:
            c, m = divmod(top, lb)
            if m:
                raise NotDivisible("quotient is not integral")
            q[i] = c
            for j, bj in tail:
                r[i + j] -= c * bj
    if any(r[:db]):
        raise NotDivisible("nonzero remainder")
    return IntPolynomial._raw(q)


def pseudo_remainder(a, b):
    """Return (r, e) with lc(b)**e * a = Q*b + r, deg r < deg b."""
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    lb = b.coeffs[-1]
    bc = b.coeffs
    e = 0
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j, bj in enumerate(bc):
            if bj:
                r[shift + j] -= top * bj
        e += 1
        while r and not r[-1]:
            r.pop()
    return IntPolynomial._raw(r), e


# ---------------------------------------------------------------------- gcd
def _crt_lift(coeffs, modulus):
    half = modulus // 2
    return [c - modulus if c > half else c for c in coeffs]


def gcd_primitive(a, b):
    """Greatest common divisor over Q, returned primitive with positive leading coefficient.

    Uses modular images in GF(p) for word-sized primes, recombined by CRT and
    confirmed by exact trial division.  A modular image of degree 0 at a prime
    not dividing both leading coefficients proves the gcd is 1.
    """
    if not a.coeffs and not b.coeffs:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not a.coeffs:
        return b.primitive()
    if not b.coeffs:
        return a.primitive()
    A, B = a.primitive(), b.primitive()
    if A.degree == 0 or B.degree == 0:
        return ONE
    if A == B:
        return A
    gamma = math.gcd(A.lc, B.lc)
    best = min(A.degree, B.degree) + 1
    modulus = 1
    acc = None
    previous = None
    for p in _modp.word_primes():
        if gamma % p == 0:
            continue
        g = _modp.gcd(_modp.reduce(A.coeffs, p), _modp.reduce(B.coeffs, p), p)
        d = len(g) - 1
        if d == 0:
            return ONE
        if d > best:
            continue
        img = [int(c) * gamma % p for c in reversed(g)]
        if d < best:
            best, modulus, acc, previous = d, p, img, None
        else:
            inv = pow(modulus, -1, p)
            acc = [x + modulus * ((y - x) * inv % p) for x, y in zip(acc, img)]
            modulus *= p
        candidate = IntPolynomial._raw(_crt_lift(acc, modulus)).primitive()
        if candidate == previous:
            try:
                exact_div(A, candidate)
                exact_div(B, candidate)
            except NotDivisible:
                pass
            else:
                return candidate
        previous = candidate
    raise AssertionError("unreachable")  # pragma: no cover


def squarefree_part(a):
    """a divided by gcd(a, a'), primitive."""
    g = gcd_primitive(a, derivative(a))
    if g.degree == 0:
        return a.primitive()
    return exact_div(a.primitive(), g).primitive()


# -------------------------------------------------------- other operations
def reverse(a):
    """z**deg(a) * a(1/z)."""
    return IntPolynomial._raw(list(a.coeffs[::-1]))


def compose_power(a, k):
    """a(z**k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1 or not a.coeffs:
        return a
    out = [0] * ((len(a.coeffs) - 1) * k + 1)
    out[::k] = a.coeffs
    return IntPolynomial._raw(out)


def derivative(a):
    return IntPolynomial._raw([i * c for i, c in enumerate(a.coeffs)][1:])


def _homogeneous_value(coeffs, x):
    # Returns den**deg * a(num/den) as an integer; same sign as a(x) since den > 0.
    if isinstance(x, int):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    acc = 0
    dp = 1
    for c in reversed(coeffs):
        acc = acc * n + c * dp
        dp *= d
    return acc


def eval_rational(a, x):
    """Exact value a(x) for integer or rational x."""
    if isinstance(x, int):
        return Fraction(_homogeneous_value(a.coeffs, x))
    if not isinstance(x, Rational):
        raise TypeError("x must be an integer or a rational number")
    x = Fraction(x)
    if not a.coeffs:
        return Fraction(0)
    deg = len(a.coeffs) - 1
    return Fraction(_homogeneous_value(a.coeffs, x), x.denominator**deg)
