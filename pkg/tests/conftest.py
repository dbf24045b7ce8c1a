import random
from fractions import Fraction

import pytest

from pickcf.ratfun import RationalFunction


def rand_frac(rng, lo=-6, hi=6, maxden=4, nonzero=False):
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, maxden))
        if q or not nonzero:
            return q


def random_pick(rng, max_degree=6, avoid=(0,)):
    """Generator form alpha z + beta - sum c_k/(z - x_k); never constant."""
    while True:
        alpha = rand_frac(rng, 0, 4) if rng.random() < 0.5 else Fraction(0)
        npoles = rng.randint(0, max_degree - (1 if alpha else 0))
        nodes = set()
        while len(nodes) < npoles:
            x = rand_frac(rng, -8, 8, 3)
            if x not in avoid:
                nodes.add(x)
        poles = [(rand_frac(rng, 1, 5, 3), x) for x in sorted(nodes)]
        if alpha or poles:
            return RationalFunction.from_generator(alpha, rand_frac(rng), poles)


def random_mixed(rng):
    """A mix of Pick and non-Pick rational functions; non-Pick ones predominate."""
    kind = rng.randrange(5)
    if kind == 0:
        return random_pick(rng)
    if kind == 1:
        # flip the sign of one residue or of the linear term
        f = random_pick(rng, avoid=())
        return -f if rng.random() < 0.3 else f + RationalFunction.simple_pole(rand_frac(rng, 1, 3, 5), rand_frac(rng))
    if kind == 2:
        num = [rand_frac(rng) for _ in range(rng.randint(1, 4))]
        den = [rand_frac(rng) for _ in range(rng.randint(1, 4))] + [Fraction(1)]
        return RationalFunction(num, den)
    if kind == 3:
        a, b, r = rand_frac(rng), rand_frac(rng, 1, 4, 3), rand_frac(rng, 1, 3, 3)
        pair = RationalFunction((-2 * r * a, 2 * r), (a * a + b * b, -2 * a, 1))
        return random_pick(rng, 4) + pair
    f = random_pick(rng, 5, avoid=())
    x = rand_frac(rng)
    return f + RationalFunction((rand_frac(rng, 1, 2, 4),), (x * x, -2 * x, 1))


@pytest.fixture
def rng():
    return random.Random(20110106)
