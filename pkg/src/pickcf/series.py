"""Truncated power series about a real centre, with exact coefficients.

A :class:`PowerSeries` of order ``N`` stores ``c^0 .. c^N`` and claims
nothing about higher coefficients.  Ring operations truncate to the smaller
input order; nothing is ever zero-padded past a stated order.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ._rational import fraction_str, fractions_of, to_fraction
from .errors import InvalidDerivative, NotInvertible, NotReducible, OrderTooLow
from .hankel import HankelMatrix, build_hankel


@dataclass(frozen=True)
class PowerSeries:
    coeffs: Tuple[Fraction, ...]
    center: Fraction = Fraction(0)

    def __post_init__(self):
        coeffs = fractions_of(self.coeffs)
        if not coeffs:
            raise ValueError("a power series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "center", to_fraction(self.center))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise OrderTooLow(f"cannot extend order {self.order} series to {order}")
        return PowerSeries(self.coeffs[: order + 1], self.center)

    def _check(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if other.center != self.center:
            raise ValueError("series have different centres")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        if n is NotImplemented:
            return n
        return PowerSeries(
            tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), self.center
        )

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coeffs), self.center)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(tuple(other * c for c in self.coeffs), self.center)
        n = self._check(other)
        if n is NotImplemented:
            return n
        a, b = self.coeffs, other.coeffs
        return PowerSeries(
            tuple(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)),
            self.center,
        )

    __rmul__ = __mul__

    def invert(self) -> "PowerSeries":
        """Multiplicative inverse to the same order."""
        c = self.coeffs
        if c[0] == 0:
            raise NotInvertible("constant term is zero")
        inv = [1 / c[0]]
        for k in range(1, len(c)):
            inv.append(-sum((c[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / c[0])
        return PowerSeries(tuple(inv), self.center)

    def to_json(self):
        return {
            "center": fraction_str(self.center),
            "order": self.order,
            "coeffs": [fraction_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj):
        s = cls(fractions_of(obj["coeffs"]), to_fraction(obj.get("center", "0")))
        if "order" in obj and int(obj["order"]) != s.order:
            raise ValueError("order does not match the number of coefficients")
        return s


def series_add(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    return s + t


def series_mul(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    return s * t


def series_invert(s: PowerSeries) -> PowerSeries:
    return s.invert()


def reduce_series(f: PowerSeries) -> PowerSeries:
    """Julia reduction ``g = -1/(f - c^0) + 1/(c^1 t)`` of an order-N series.

    Writing ``f - c^0 = t h`` with ``h = c^1 + c^2 t + ...`` (order N-1),
    ``g = -(1/h - 1/c^1)/t``, so the pole parts cancel before any division
    and ``g`` has order ``N - 2``.
    """
    if f.order < 2:
        raise OrderTooLow("reduction needs order >= 2")
    if f.coeffs[1] == 0:
        raise NotReducible("first-order coefficient is zero")
    h = PowerSeries(f.coeffs[1:], f.center)
    d = h.invert().coeffs
    return PowerSeries(tuple(-c for c in d[1:]), f.center)


def augment_series(g: PowerSeries, a0, a1) -> PowerSeries:
    """Inverse of :func:`reduce_series`: solve ``1/(f - a0) = 1/(a1 t) - g``.

    ``f = a0 + a1 t / (1 - a1 t g)``; order rises from ``N`` to ``N + 2``.
    """
    a0, a1 = to_fraction(a0), to_fraction(a1)
    if a1 <= 0:
        raise InvalidDerivative("a1 must be positive")
    # 1 - a1 t g, known exactly through t^{N+1}
    denom = PowerSeries((Fraction(1),) + tuple(-a1 * c for c in g.coeffs), g.center)
    q = denom.invert().coeffs
    return PowerSeries((a0,) + tuple(a1 * c for c in q), g.center)


def hankel_of_series(s: PowerSeries, m: int) -> HankelMatrix:
    return build_hankel(s.coeffs, m)
