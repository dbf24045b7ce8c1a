"""Julia reduction and augmentation on exact rational functions."""
from ._rational import to_fraction
from .errors import InvalidDerivative, NotReducible, PoleAtNode
from .ratfun import RationalFunction, taylor_at


def value_and_derivative(f: RationalFunction, x):
    """Exact ``(f(x), f'(x))`` for ``f`` analytic at ``x``."""
    x = to_fraction(x)
    if f.has_pole_at(x):
        raise PoleAtNode(f"f has a pole at the node {x}")
    c = taylor_at(f, x, 1).coeffs
    return c[0], c[1]


def reduce_rational(f: RationalFunction, x) -> RationalFunction:
    """``g(z) = -1/(f(z) - f(x)) + 1/(f'(x)(z - x))``.

    ``f`` must be analytic at ``x`` with ``f'(x) > 0``; the two simple
    poles at ``x`` cancel in the canonical form of ``g``.
    """
    x = to_fraction(x)
    if f.is_constant:
        raise NotReducible("cannot reduce a constant function")
    a0, a1 = value_and_derivative(f, x)
    if a1 <= 0:
        raise NotReducible(f"f'(x) = {a1} is not positive")
    shifted = f - a0
    return -shifted.reciprocal() + RationalFunction.linear(0, a1, x).reciprocal()


def augment_rational(g: RationalFunction, x, a0, a1) -> RationalFunction:
    """Solve ``1/(f(z) - a0) = 1/(a1 (z - x)) - g(z)`` for ``f``."""
    x, a0, a1 = to_fraction(x), to_fraction(a0), to_fraction(a1)
    if a1 <= 0:
        raise InvalidDerivative("a1 must be positive")
    inner = RationalFunction.linear(0, a1, x).reciprocal() - g
    return inner.reciprocal() + a0


def equality_condition(g: RationalFunction, x) -> bool:
    """Whether ``y g(x + iy) -> 0`` as ``y -> 0+``, i.e. ``g`` has no pole at ``x``."""
    return not g.has_pole_at(x)
