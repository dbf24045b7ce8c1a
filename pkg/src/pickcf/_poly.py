"""Dense univariate polynomials over Fraction, ascending coefficient tuples.

The zero polynomial is the empty tuple.
"""
from fractions import Fraction
from math import comb

ZERO = ()
ONE = (Fraction(1),)


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(Fraction(c) for c in p)


def degree(p):
    """Degree, with ``-1`` for the zero polynomial."""
    return len(trim(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    return trim(c * v for v in p)


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = r[k + dq] / lead
        quo[k] = c
        if c:
            for j in range(dq + 1):
                r[k + j] -= c * q[j]
    return trim(quo), trim(r[:dq])


def monic(p):
    p = trim(p)
    return scale(p, 1 / p[-1]) if p else p


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def evaluate(p, x):
    acc = 0 * x if not isinstance(x, Fraction) else Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim(k * c for k, c in enumerate(p) if k)


def shift(p, x):
    """Coefficients of ``p(x + t)`` in ``t`` (Taylor shift)."""
    p = trim(p)
    return trim(
        sum((p[j] * comb(j, k) * x ** (j - k) for j in range(k, len(p))), Fraction(0))
        for k in range(len(p))
    )


def linear(c0, c1):
    """``c0 + c1 z``."""
    return trim((Fraction(c0), Fraction(c1)))
