"""The substitution x = z + 1/z for reciprocal polynomials."""
from .errors import NotReciprocal, OddDegree
from .poly import IntPolynomial


def x_transform(S):
    """Degree-m polynomial T with S(z) = z**m * T(z + 1/z), for reciprocal S of degree 2m.

    Clenshaw recurrence in the basis v_0 = 2, v_1 = x, v_{j+1} = x v_j - v_{j-1}
    (v_j = z**j + z**-j).
    """
    if not S.is_reciprocal():
        raise NotReciprocal("polynomial is not reciprocal")
    if S.degree % 2:
        raise OddDegree("reciprocal polynomial of odd degree")
    m = S.degree // 2
    c = S.coeffs
    b1 = []  # b_{k+1}
    b2 = []  # b_{k+2}
    for k in range(m, 0, -1):
        # b_k = c_{m+k} + x b_{k+1} - b_{k+2}
        bk = [0] * (len(b1) + 1)
        for i, v in enumerate(b1):
            bk[i + 1] = v
        for i, v in enumerate(b2):
            bk[i] -= v
        bk[0] += c[m + k]
        b1, b2 = bk, b1
    # T = c_m + x b_1 - 2 b_2
    out = [0] * (len(b1) + 1)
    out[0] = c[m]
    for i, v in enumerate(b1):
        out[i + 1] += v
    for i, v in enumerate(b2):
        out[i] -= 2 * v
    return IntPolynomial._raw(out)


def from_x_transform(T):
    """Inverse of x_transform: z**m * T(z + 1/z) with m = deg T."""
    if T.is_zero():
        return T
    m = T.degree
    t = T.coeffs
    # R_k = sum_{i>=k} t_i (z^2+1)^(i-k) z^(m-i);  R_{k-1} = (z^2+1) R_k + t_{k-1} z^(m-k+1)
    r = [0] * (2 * m + 1)
    r[0] = t[m]
    size = 1
    for k in range(m, 0, -1):
        nxt = [0] * (size + 2)
        for i in range(size):
            nxt[i] += r[i]
            nxt[i + 2] += r[i]
        size += 2
        # at this point R has terms of degree up to 2(m-k+1); shift bookkeeping is in z-degree
        nxt[m - k + 1] += t[k - 1]
        r = nxt
    return IntPolynomial._raw(r)
