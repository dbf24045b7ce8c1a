"""Exact real rational functions and Pick-class certification."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from . import _poly as P
from ._rational import fraction_str, fractions_of, to_fraction
from .errors import HigherOrderPole, NearPole, PoleAtCenter
from .hankel import Inertia, inertia
from .series import PowerSeries

NEAR_POLE_RTOL = 1e-14


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """``num / den`` in lowest terms with a monic denominator.

    Coefficient tuples are in ascending degree.  Construction always
    canonicalizes, so two equal functions have identical coefficients.
    """

    num: Tuple[Fraction, ...]
    den: Tuple[Fraction, ...] = (Fraction(1),)

    def __post_init__(self):
        num, den = P.trim(fractions_of(self.num)), P.trim(fractions_of(self.den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = P.gcd(num, den)
            if len(g) > 1:
                num, den = P.divmod_(num, g)[0], P.divmod_(den, g)[0]
        else:
            den = P.ONE
        lead = den[-1]
        object.__setattr__(self, "num", P.scale(num, 1 / lead))
        object.__setattr__(self, "den", P.scale(den, 1 / lead))

    # constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls((to_fraction(c),))

    @classmethod
    def identity(cls):
        return cls((0, 1))

    @classmethod
    def linear(cls, c0, c1, x=0):
        """``c0 + c1 (z - x)``."""
        c0, c1, x = to_fraction(c0), to_fraction(c1), to_fraction(x)
        return cls((c0 - c1 * x, c1))

    @classmethod
    def simple_pole(cls, residue, x):
        """``residue / (z - x)``."""
        return cls((to_fraction(residue),), (-to_fraction(x), 1))

    @classmethod
    def from_generator(cls, alpha, beta, poles=()):
        """``alpha z + beta - sum c_k / (z - x_k)`` for ``(c_k, x_k)`` in ``poles``."""
        f = cls((to_fraction(beta), to_fraction(alpha)))
        for c, x in poles:
            f = f - cls.simple_pole(c, x)
        return f

    # algebra ----------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, str)):
            return RationalFunction.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            P.add(P.mul(self.num, other.den), P.mul(other.num, self.den)),
            P.mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(P.neg(self.num), self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(P.mul(self.num, other.num), P.mul(self.den, other.den))

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.num:
            raise ZeroDivisionError("reciprocal of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def derivative(self):
        return RationalFunction(
            P.sub(P.mul(P.derivative(self.num), self.den), P.mul(self.num, P.derivative(self.den))),
            P.mul(self.den, self.den),
        )

    # queries ----------------------------------------------------------------
    @property
    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    def degree(self) -> int:
        return max(P.degree(self.num), P.degree(self.den), 0)

    def value_at(self, x):
        """Exact value at a rational point (``PoleAtCenter`` at a pole)."""
        x = to_fraction(x)
        d = P.evaluate(self.den, x)
        if d == 0:
            raise PoleAtCenter(f"pole at {x}")
        return P.evaluate(self.num, x) / d

    def has_pole_at(self, x) -> bool:
        return P.evaluate(self.den, to_fraction(x)) == 0

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        return f"RationalFunction(num={_fmt(self.num)}, den={_fmt(self.den)})"

    def to_json(self):
        return {"num": [fraction_str(c) for c in self.num], "den": [fraction_str(c) for c in self.den]}

    @classmethod
    def from_json(cls, obj):
        return cls(fractions_of(obj["num"]), fractions_of(obj.get("den", ["1"])))


def _fmt(p):
    return "[" + ", ".join(str(c) for c in p) + "]"


def _horner(coeffs, z):
    acc = np.zeros_like(z, dtype=complex)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def evaluate(f: RationalFunction, z):
    """Floating-point value ``num(z)/den(z)``; accepts scalars or arrays.

    Raises ``NearPole`` when ``|den(z)|`` is negligible against the size of
    its terms.
    """
    scalar = np.ndim(z) == 0
    zz = np.asarray(z, dtype=complex)
    num = [float(c) for c in f.num] or [0.0]
    den = [float(c) for c in f.den]
    d = _horner(den, zz)
    scale = _horner([abs(c) for c in den], np.abs(zz)).real
    if np.any(np.abs(d) <= NEAR_POLE_RTOL * scale):
        raise NearPole(f"denominator vanishes near {z}")
    out = _horner(num, zz) / d
    return complex(out) if scalar else out


def taylor_at(f: RationalFunction, x, order: int) -> PowerSeries:
    """Exact Taylor coefficients of ``f`` about ``x`` through ``order``."""
    x = to_fraction(x)
    den = P.shift(f.den, x)
    if den[0] == 0:
        raise PoleAtCenter(f"f has a pole at {x}; use laurent_at")
    num = P.shift(f.num, x)
    return _series_quotient(num, den, order, x)


def _series_quotient(num, den, order, x):
    pad = lambda p: tuple(p[k] if k < len(p) else Fraction(0) for k in range(order + 1))
    return (PowerSeries(pad(num), x) * PowerSeries(pad(den), x).invert())


def laurent_at(f: RationalFunction, x, order: int):
    """Residue and regular part of ``f`` at a point that is at most a simple pole.

    Returns ``(a_minus1, tail)`` where ``tail`` is the order-``order``
    expansion of ``f(z) - a_minus1/(z - x)``.
    """
    x = to_fraction(x)
    den = P.shift(f.den, x)
    if den[0] != 0:
        return Fraction(0), taylor_at(f, x, order)
    if len(den) < 2 or den[1] == 0:
        raise HigherOrderPole(f"pole of order >= 2 at {x}")
    num = P.shift(f.num, x)
    e = _series_quotient(num, den[1:], order + 1, x).coeffs
    return e[0], PowerSeries(e[1:], x)


# Pick certification ---------------------------------------------------------

@dataclass(frozen=True)
class PickCertificate:
    verdict: str  # "Pick" or "NotPick"
    structural_ok: bool
    bezoutian: Tuple[Tuple[Fraction, ...], ...]
    bezoutian_inertia: Inertia
    witness: Optional[complex] = None
    witness_value: Optional[complex] = None
    falsifier_agrees: bool = True
    falsifier_min: float = field(default=float("nan"))

    @property
    def is_pick(self) -> bool:
        return self.verdict == "Pick"

    def to_json(self):
        return {
            "verdict": self.verdict,
            "structural_ok": self.structural_ok,
            "bezoutian": [[fraction_str(v) for v in row] for row in self.bezoutian],
            "bezoutian_inertia": list(self.bezoutian_inertia.as_tuple()),
            "witness": None if self.witness is None else [self.witness.real, self.witness.imag],
            "falsifier_agrees": self.falsifier_agrees,
        }


def bezoutian(f: RationalFunction):
    """Matrix ``B`` with ``sum B_ij z^i w^j = (p(z)q(w) - p(w)q(z)) / (z - w)``.

    ``Im f(z) / Im z = v(z)^* B v(z) / |q(z)|^2`` for ``v(z) = (1, z, z^2, ...)``
    so ``B >= 0`` is equivalent to ``f`` being in the Pick class.
    """
    p, q = f.num, f.den
    d = f.degree()
    B = [[Fraction(0)] * d for _ in range(d)]
    n = d + 1
    pc = lambda k: p[k] if k < len(p) else Fraction(0)
    qc = lambda k: q[k] if k < len(q) else Fraction(0)
    for a in range(n):
        for b in range(a):
            c = pc(a) * qc(b) - pc(b) * qc(a)
            if c:
                # (z^a w^b - z^b w^a)/(z - w) = z^b w^b sum_s z^s w^{a-b-1-s}
                for s in range(a - b):
                    B[b + s][a - 1 - s] += c
    return tuple(tuple(row) for row in B)


def _exact_im(f: RationalFunction, z: complex) -> Fraction:
    """Exact sign-carrying ``Im(p(z) conj q(z))`` at a dyadic complex point."""
    zr, zi = Fraction(z.real), Fraction(z.imag)

    def cval(poly):
        re, im = Fraction(0), Fraction(0)
        for c in reversed(poly):
            re, im = re * zr - im * zi + c, re * zi + im * zr
        return re, im

    pr, pi = cval(f.num)
    qr, qi = cval(f.den)
    return pi * qr - pr * qi


def _centers(f: RationalFunction):
    pts = {0.0}
    for poly in (f.den, f.num):
        if len(poly) > 1:
            for r in np.roots([float(c) for c in reversed(poly)]):
                pts.add(float(np.real(r)))
    return sorted(pts)


def falsify_pick(f: RationalFunction, resolution: int = 64, rmin=1e-6, rmax=1e3, tol=1e-9):
    """Search for ``z`` in the upper half-plane with ``Im f(z) < 0``.

    Samples geometric polar meshes around ``0`` and the real parts of the
    zeros and poles, then locally refines the most negative samples.
    Returns ``(witness or None, smallest normalized Im f seen)``.
    """
    from scipy.optimize import minimize

    radii = np.geomspace(rmin, rmax, resolution)
    thetas = np.pi * (np.arange(resolution) + 0.5) / resolution
    R, T = np.meshgrid(radii, thetas, indexing="ij")
    polar = R * np.exp(1j * T)
    num = [float(c) for c in f.num] or [0.0]
    den = [float(c) for c in f.den]

    def score(z):
        d = _horner(den, z)
        v = _horner(num, z) / np.where(d == 0, np.nan, d)
        return v.imag / (1.0 + np.abs(v))

    candidates = []
    for c in _centers(f):
        z = c + polar
        with np.errstate(all="ignore"):
            s = score(z)
        s = np.where(np.isfinite(s), s, np.inf)
        for idx in np.argsort(s, axis=None)[:4]:
            candidates.append((float(s.flat[idx]), complex(z.flat[idx]), c))
    # Im f takes both signs on every small circle around a pole in the half-plane
    if len(f.den) > 1:
        phis = np.exp(2j * np.pi * (np.arange(resolution) + 0.5) / resolution)
        for p in np.roots([float(c) for c in reversed(f.den)]):
            if p.imag <= 0:
                continue
            rho = np.geomspace(1e-6 * p.imag, 0.5 * p.imag, 16)
            z = p + rho[:, None] * phis[None, :]
            with np.errstate(all="ignore"):
                s = score(z)
            s = np.where(np.isfinite(s), s, np.inf)
            for idx in np.argsort(s, axis=None)[:4]:
                candidates.append((float(s.flat[idx]), complex(z.flat[idx]), float(p.real)))
    candidates.sort(key=lambda t: t[0])
    best = candidates[0][0] if candidates else float("inf")

    def certify(z):
        if z.imag > 0 and _exact_im(f, z) < 0:
            return z
        return None

    for s0, z0, c in candidates[:6]:
        if s0 < -tol and certify(z0) is not None:
            return z0, s0
    # refine the lowest samples in (log r, theta) coordinates
    for s0, z0, c in candidates[:6]:
        w = z0 - c
        x0 = np.array([np.log(abs(w)), np.angle(w)])

        def obj(v):
            th = min(max(v[1], 1e-12), np.pi - 1e-12)
            with np.errstate(all="ignore"):
                val = score(np.array(c + np.exp(v[0]) * np.exp(1j * th)))
            return float(val) if np.isfinite(val) else 1.0

        res = minimize(obj, x0, method="Nelder-Mead", options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 400})
        best = min(best, res.fun)
        th = min(max(res.x[1], 1e-12), np.pi - 1e-12)
        z = complex(c + np.exp(res.x[0]) * np.exp(1j * th))
        if res.fun < -tol and certify(z) is not None:
            return z, res.fun
    return None, best


def _safe_value(f, z):
    if z is None:
        return None
    try:
        return evaluate(f, z)
    except NearPole:
        return None


def is_pick(f: RationalFunction, resolution: int = 64) -> PickCertificate:
    """Exact Pick-class verdict plus a floating-point falsifier cross-check."""
    structural = P.degree(f.num) <= P.degree(f.den) + 1
    B = bezoutian(f)
    inert = inertia(B)
    exact_pick = structural and inert.is_psd
    witness, smin = falsify_pick(f, resolution=resolution)
    agrees = (witness is None) == exact_pick
    return PickCertificate(
        verdict="Pick" if exact_pick else "NotPick",
        structural_ok=structural,
        bezoutian=B,
        bezoutian_inertia=inert,
        witness=witness,
        witness_value=_safe_value(f, witness),
        falsifier_agrees=agrees,
        falsifier_min=smin,
    )


def degree(f: RationalFunction) -> int:
    return f.degree()
