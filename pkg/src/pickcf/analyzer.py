"""Numerical estimation of pseudo-Taylor coefficients at a boundary point.

A :class:`FunctionHandle` wraps an analytic function on the upper half-plane.
Coefficients ``c^k`` are estimated as limits of ``f^(k)(z)/k!`` as ``z``
approaches the real node, radially or along rays inside a Stolz angle, with
Richardson extrapolation on a geometric grid.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import mpmath
import numpy as np

from .errors import EvaluationFailed, InvalidParameter
from .ratfun import RationalFunction, evaluate

DEFAULT_DEPTH = 20
DEFAULT_TOL = 1e-6
CAUCHY_POINTS = 64


@dataclass(frozen=True)
class FunctionHandle:
    """``evaluator(z)`` gives ``f(z)``; ``derivative_evaluator(z, k)`` gives ``f^(k)(z)``."""

    evaluator: Callable
    derivative_evaluator: Optional[Callable] = None
    label: str = ""

    def __call__(self, z):
        return self.evaluator(z)


@dataclass
class ExpansionEstimate:
    coefficients: List[complex]
    converged: List[bool]
    growth_exponent: List[Optional[float]]
    grid: Sequence[float]
    tol: float
    node: float = 0.0
    method: str = "radial"
    aperture: Optional[float] = None
    samples: dict = field(default_factory=dict, repr=False)

    @property
    def real(self):
        return [c.real for c in self.coefficients]

    def to_json(self):
        return {
            "method": self.method,
            "node": self.node,
            "aperture": self.aperture,
            "tolerance": self.tol,
            "grid": {"kind": "geometric", "points": [float(y) for y in self.grid]},
            "coefficients": [
                {
                    "k": k,
                    "estimate": c.real,
                    "imag": c.imag,
                    "converged": ok,
                    "growth_exponent": g,
                }
                for k, (c, ok, g) in enumerate(zip(self.coefficients, self.converged, self.growth_exponent))
            ],
        }


@dataclass(frozen=True)
class DivergenceReport:
    divergent: bool
    slope: float
    intercept: float
    ratio: float
    ys: tuple
    magnitudes: tuple

    @property
    def label(self):
        return "Divergent" if self.divergent else "Convergent"

    def to_json(self):
        return {
            "verdict": self.label,
            "log_growth_slope": self.slope,
            "intercept": self.intercept,
            "ratio": self.ratio,
            "samples": [[y, v] for y, v in zip(self.ys, self.magnitudes)],
        }


# coefficient access ---------------------------------------------------------

def _cauchy_coefficient(h: FunctionHandle, z: complex, k: int) -> complex:
    """``f^(k)(z)/k!`` by the trapezoid rule on the circle of radius ``Im z / 2``."""
    rho = 0.5 * z.imag
    pts = z + rho * np.exp(2j * np.pi * np.arange(CAUCHY_POINTS) / CAUCHY_POINTS)
    try:
        vals = np.asarray(h.evaluator(pts), dtype=complex)
        if vals.shape != pts.shape:
            raise TypeError
    except TypeError:
        vals = np.array([h.evaluator(complex(p)) for p in pts], dtype=complex)
    return complex(np.fft.fft(vals)[k] / CAUCHY_POINTS / rho**k)


def taylor_coefficient(h: FunctionHandle, z: complex, k: int) -> complex:
    """``f^(k)(z)/k!`` at an interior point, raising ``EvaluationFailed`` on trouble."""
    z = complex(z)
    try:
        with np.errstate(over="raise", invalid="raise", divide="raise", under="ignore"):
            if k == 0:
                v = complex(h.evaluator(z))
            elif h.derivative_evaluator is not None:
                v = complex(h.derivative_evaluator(z, k)) / math.factorial(k)
            else:
                v = _cauchy_coefficient(h, z, k)
    except EvaluationFailed:
        raise
    except (ArithmeticError, FloatingPointError, ValueError, OverflowError) as exc:
        raise EvaluationFailed(f"evaluation failed at {z}: {exc}", point=z) from exc
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise EvaluationFailed(f"non-finite value at {z}", point=z)
    return v


def radial_grid(depth: int = DEFAULT_DEPTH, start: float = 0.1):
    return start * 2.0 ** -np.arange(depth + 1)


def _richardson(seq):
    """Two Richardson levels for a step ratio of 2 (kill O(h) then O(h^2))."""
    e = np.asarray(seq, dtype=complex)
    r1 = 2 * e[1:] - e[:-1]
    r2 = (4 * r1[1:] - r1[:-1]) / 3
    return r2


def _settled(r2, tol):
    if len(r2) < 3:
        return False
    scale = max(1.0, abs(r2[-1]))
    return abs(r2[-1] - r2[-2]) <= tol * scale and abs(r2[-2] - r2[-3]) <= tol * scale


def _log_growth(ys, values):
    """Slope of ``|values|`` against ``log(1/y)``."""
    logs = np.log(1.0 / np.asarray(ys))
    slope, _ = np.polyfit(logs, np.abs(values), 1)
    return float(slope)


def _sample(h, points, k, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda z: taylor_coefficient(h, z, k), points))
    return [taylor_coefficient(h, z, k) for z in points]


def _estimate_along(h, x, direction, order, grid, tol, workers):
    coeffs, conv, growth, samples = [], [], [], {}
    points = [complex(x) + r * direction for r in grid]
    for k in range(order + 1):
        vals = _sample(h, points, k, workers)
        samples[k] = vals
        r2 = _richardson(vals)
        ok = _settled(r2, tol)
        coeffs.append(complex(r2[-1]))
        conv.append(bool(ok))
        growth.append(None if ok else _log_growth(grid, vals))
    return coeffs, conv, growth, samples


def radial_coefficients(h: FunctionHandle, x: float, order: int, y_grid=None,
                        tol: float = DEFAULT_TOL, workers: int = 1) -> ExpansionEstimate:
    """Estimate ``lim_{y->0+} f^(k)(x+iy)/k!`` for ``k = 0..order``."""
    grid = radial_grid() if y_grid is None else np.asarray(y_grid, dtype=float)
    coeffs, conv, growth, samples = _estimate_along(h, x, 1j, order, grid, tol, workers)
    return ExpansionEstimate(coeffs, conv, growth, grid, tol, float(x), "radial", None, samples)


def stolz_angles(aperture: float):
    """Ray angles spanning the approach region ``|z - x| <= K Im z``."""
    if aperture < 1:
        raise InvalidParameter("aperture K must be >= 1")
    lo = math.asin(1.0 / aperture)
    return sorted({lo, math.pi / 2, math.pi - lo})


def nontangential_coefficients(h: FunctionHandle, x: float, order: int, aperture: float = 2.0,
                               r_grid=None, tol: float = DEFAULT_TOL,
                               workers: int = 1) -> ExpansionEstimate:
    """Estimate limits of ``f^(k)/k!`` along the edge and centre rays of the Stolz angle.

    A coefficient counts as converged only if every ray settles and the rays
    agree within ``10 * tol``; the reported value is the mean over rays.
    """
    angles = stolz_angles(aperture)
    grid = radial_grid() if r_grid is None else np.asarray(r_grid, dtype=float)
    per_ray = [
        _estimate_along(h, x, complex(math.cos(t), math.sin(t)), order, grid, tol, workers)
        for t in angles
    ]
    coeffs, conv, growth = [], [], []
    for k in range(order + 1):
        vals = [ray[0][k] for ray in per_ray]
        mean = complex(np.mean(vals))
        spread = max(abs(v - mean) for v in vals)
        ok = all(ray[1][k] for ray in per_ray) and spread <= 10 * tol * max(1.0, abs(mean))
        coeffs.append(mean)
        conv.append(bool(ok))
        gs = [ray[2][k] for ray in per_ray if ray[2][k] is not None]
        growth.append(None if ok else (max(gs) if gs else 0.0))
    return ExpansionEstimate(coeffs, conv, growth, grid, tol, float(x), "nontangential", float(aperture))


def detect_divergence(h: FunctionHandle, x: float, k: int, y_start=1e-2, y_stop=1e-6,
                      points: int = 17, factor: float = 2.0) -> DivergenceReport:
    """Flag ``f^(k)(x+iy)/k!`` as divergent if it grows monotonically by ``factor``.

    Magnitudes are fitted against ``A log(1/y) + B``; ``A`` is reported as the
    logarithmic growth rate.
    """
    ys = np.geomspace(y_start, y_stop, points)
    vals = np.abs(np.array([taylor_coefficient(h, complex(x, y), k) for y in ys]))
    logs = np.log(1.0 / ys)
    slope, intercept = np.polyfit(logs, vals, 1)
    ratio = float(vals[-1] / vals[0]) if vals[0] else math.inf
    monotone = bool(np.all(np.diff(vals) >= -1e-12 * np.maximum(vals[1:], 1.0)))
    return DivergenceReport(
        divergent=monotone and ratio >= factor,
        slope=float(slope),
        intercept=float(intercept),
        ratio=ratio,
        ys=tuple(float(y) for y in ys),
        magnitudes=tuple(float(v) for v in vals),
    )


# handles --------------------------------------------------------------------

def rational_handle(f: RationalFunction, label: str = "rational") -> FunctionHandle:
    derivs = [f]

    def deriv(z, k):
        while len(derivs) <= k:
            derivs.append(derivs[-1].derivative())
        return evaluate(derivs[k], z)

    return FunctionHandle(lambda z: evaluate(f, z), deriv, label)


def constant_handle(c: complex) -> FunctionHandle:
    c = complex(c)
    return FunctionHandle(
        lambda z: np.full(np.shape(z), c) if np.ndim(z) else c,
        lambda z, k: c if k == 0 else 0j,
        f"constant({c.real:g})",
    )


def _ex_2_1(z):
    z = np.asarray(z, dtype=complex)
    out = z / (1 - z * np.log(z))
    return complex(out) if out.ndim == 0 else out


def ex_2_1_handle() -> FunctionHandle:
    """``z / (1 - z log z)`` with the principal logarithm; derivatives by Cauchy integrals."""
    return FunctionHandle(_ex_2_1, None, "ex_2_1")


def _ex_2_3_terms(z, k):
    """``f^(k)(z)/k!`` for ``-(1/e) sum 1/(j! (z + 1/j))``, truncated where terms vanish."""
    dist = max(z.imag, 1e-300)
    # beyond jmax every term is below 1e-300 even at the worst distance to a pole
    need = (k + 1) * max(0.0, math.log(1.0 / dist)) + 700.0
    jmax = 2
    while math.lgamma(jmax + 1) < need:
        jmax *= 2
    j = np.arange(1, jmax + 1, dtype=float)
    log_fact = np.array([math.lgamma(v + 1) for v in j])
    terms = np.exp(-log_fact) * (z + 1.0 / j) ** (-(k + 1))
    return -((-1) ** k) * np.sum(terms) / math.e


def ex_2_3_handle() -> FunctionHandle:
    def value(z):
        if np.ndim(z):
            return np.array([_ex_2_3_terms(complex(p), 0) for p in np.ravel(z)]).reshape(np.shape(z))
        return complex(_ex_2_3_terms(complex(z), 0))

    def deriv(z, k):
        return complex(_ex_2_3_terms(complex(z), k)) * math.factorial(k)

    return FunctionHandle(value, deriv, "ex_2_3")


def _ex_2_2_coefficient(z: complex, k: int, nu: int) -> complex:
    """``f_nu^(k)(z)/k!`` in closed form.

    ``f_nu^(k)/k! = (-1)^(k+1) z^-q sum_j j^-p (j + c)^-q`` with ``c = 1/z``,
    ``q = k+1``, ``p = nu-k-1``.  For ``p >= 1`` the sum is split by partial
    fractions into zeta, Hurwitz zeta and digamma terms; for ``p <= 0`` the
    numerator is expanded binomially around ``j + c``.
    """
    with mpmath.workdps(50):
        zz = mpmath.mpc(z.real, z.imag)
        c = 1 / zz
        a = 1 + c
        q, p = k + 1, nu - k - 1
        total = mpmath.mpc(0)
        if p >= 1:
            for i in range(1, p + 1):
                A = (-1) ** (p - i) * math.comb(p + q - i - 1, q - 1) * c ** (-(p + q - i))
                if i == 1:
                    total += A * (mpmath.digamma(a) + mpmath.euler)
                else:
                    total += A * mpmath.zeta(i)
            for i in range(2, q + 1):
                B = (-1) ** p * math.comb(p + q - i - 1, p - 1) * c ** (-(p + q - i))
                total += B * mpmath.zeta(i, a)
        else:
            s = -p
            for r in range(s + 1):
                total += math.comb(s, r) * (-c) ** (s - r) * mpmath.zeta(q - r, a)
        val = (-1) ** (k + 1) * zz ** (-q) * total
        return complex(val)


def ex_2_2_handle(nu: int) -> FunctionHandle:
    """``f_nu(z) = -sum_k 1/(k^nu z + k^(nu-1))`` for integer ``nu >= 4``."""
    if int(nu) != nu or nu < 4:
        raise InvalidParameter("nu must be an integer >= 4")
    nu = int(nu)

    def value(z):
        if np.ndim(z):
            return np.array([_ex_2_2_coefficient(complex(p), 0, nu) for p in np.ravel(z)]).reshape(np.shape(z))
        return _ex_2_2_coefficient(complex(z), 0, nu)

    def deriv(z, k):
        return _ex_2_2_coefficient(complex(z), k, nu) * math.factorial(k)

    return FunctionHandle(value, deriv, f"ex_2_2(nu={nu})")


BANK = {
    "ex_2_1": lambda **kw: ex_2_1_handle(),
    "ex_2_2": lambda nu=5, **kw: ex_2_2_handle(nu),
    "ex_2_3": lambda **kw: ex_2_3_handle(),
    "constant": lambda value=0, **kw: constant_handle(value),
}


def example_bank(name: str, **params) -> FunctionHandle:
    """Handles for the worked examples, keyed by ``ex_2_1``, ``ex_2_2``, ``ex_2_3``."""
    try:
        factory = BANK[name]
    except KeyError:
        raise InvalidParameter(f"unknown example {name!r}; known: {sorted(BANK)}") from None
    return factory(**params)


def an_coefficient(n: int) -> int:
    """``A_n`` from ``A_0 = 1``, ``A_{n+1} = 2 A_n + sum_{r=1}^n C(n, r) A_{n-r}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    A = [1]
    for m in range(n):
        A.append(2 * A[m] + sum(math.comb(m, r) * A[m - r] for r in range(1, m + 1)))
    return A[n]


def pick_grid_min(h: FunctionHandle, x: float = 0.0, resolution: int = 16,
                  rmin: float = 1e-6, rmax: float = 1e3) -> float:
    """Smallest ``Im f / (1 + |f|)`` over a polar grid in the upper half-plane."""
    radii = np.geomspace(rmin, rmax, resolution)
    thetas = np.pi * (np.arange(resolution) + 0.5) / resolution
    z = x + (radii[:, None] * np.exp(1j * thetas[None, :])).ravel()
    vals = np.asarray(h.evaluator(z), dtype=complex)
    return float(np.min(vals.imag / (1 + np.abs(vals))))
