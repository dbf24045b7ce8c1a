"""Solvability verdicts and constructive solutions for the boundary
Carathéodory-Fejér problem in the Pick class.

Given a real node ``x`` and targets ``a^0 .. a^n`` we look for ``f`` in the
Pick class, analytic at ``x``, with ``f^(k)(x)/k! = a^k``.  Verdicts come from
the Hankel matrix ``H_m(a)``; solutions are built by repeatedly reducing the
data and augmenting back up.
"""
import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

from ._rational import fraction_str, fractions_of, to_fraction
from .errors import InvalidDerivative, PoleAtNode, Unsolvable, WrongParity
from .hankel import (
    Inertia,
    build_hankel,
    even_corner_identity,
    inertia,
    is_se_minimally_positive,
    minimal_corner_value,
)
from .julia import augment_rational
from .ratfun import RationalFunction, laurent_at, taylor_at
from .series import PowerSeries, reduce_series


class Status(str, enum.Enum):
    NO_SOLUTION = "NoSolution"
    UNIQUE = "UniqueSolvable"
    INDETERMINATE = "Indeterminate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ProblemData:
    """Interpolation data: node ``x``, targets ``a``, optional residue ``a_minus1``."""

    x: Fraction
    a: Tuple[Fraction, ...]
    a_minus1: Optional[Fraction] = None
    relaxed: bool = False

    def __post_init__(self):
        a = fractions_of(self.a)
        if not a:
            raise ValueError("at least a^0 is required")
        object.__setattr__(self, "x", to_fraction(self.x))
        object.__setattr__(self, "a", a)
        if self.a_minus1 is not None:
            object.__setattr__(self, "a_minus1", to_fraction(self.a_minus1))

    @property
    def n(self) -> int:
        return len(self.a) - 1

    @property
    def m(self) -> int:
        """Hankel dimension: ``n = 2m - 1`` or ``n = 2m``."""
        return (self.n + 1) // 2

    @property
    def base(self) -> "ProblemData":
        return replace(self, a_minus1=None)

    def to_json(self):
        out = {"x": fraction_str(self.x), "a": [fraction_str(v) for v in self.a], "relaxed": self.relaxed}
        if self.a_minus1 is not None:
            out["a_minus1"] = fraction_str(self.a_minus1)
        return out

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "a" not in obj:
            raise ValueError("problem JSON needs at least an 'a' list")
        am1 = obj.get("a_minus1")
        return cls(
            x=to_fraction(obj.get("x", "0")),
            a=fractions_of(obj["a"]),
            a_minus1=None if am1 is None else to_fraction(am1),
            relaxed=bool(obj.get("relaxed", False)),
        )


@dataclass(frozen=True)
class Verdict:
    status: Status
    inertia: Inertia
    rank: int
    se_minimal: Optional[bool]
    corner_holds: Optional[bool] = None
    corner_rhs: Optional[Fraction] = None
    expected_degree: Optional[int] = None

    @property
    def solvable(self) -> bool:
        return self.status is not Status.NO_SOLUTION

    def to_json(self):
        out = {
            "status": self.status.value,
            "inertia": list(self.inertia.as_tuple()),
            "rank": self.rank,
            "se_minimal": self.se_minimal,
            "expected_degree": self.expected_degree,
        }
        if self.corner_rhs is not None:
            out["corner_identity"] = {"holds": self.corner_holds, "rhs": fraction_str(self.corner_rhs)}
        return out


def _hankel_facts(p: ProblemData):
    H = build_hankel(p.a, p.m)
    inert = inertia(H)
    se_min = is_se_minimally_positive(H) if p.m else None
    return H, inert, se_min


def solve_relaxed(p: ProblemData) -> Verdict:
    """Relaxed problem (last condition an inequality), odd ``n = 2m - 1`` only.

    Solvable iff ``H_m(a) >= 0``; unique iff additionally singular.
    """
    if p.n % 2 == 0:
        raise WrongParity("the relaxed problem is stated for odd n")
    H, inert, se_min = _hankel_facts(p)
    if not inert.is_psd:
        status = Status.NO_SOLUTION
    elif inert.is_pd:
        status = Status.INDETERMINATE
    else:
        status = Status.UNIQUE
    return Verdict(
        status, inert, inert.rank, se_min,
        expected_degree=inert.rank if status is Status.UNIQUE else None,
    )


def solve_cf(p: ProblemData) -> Verdict:
    """Solvability of the boundary Carathéodory-Fejér problem.

    Odd ``n``: indeterminate iff ``H_m(a)`` is positive definite, uniquely
    solvable iff it is SE-minimally positive.  Even ``n`` additionally needs
    the corner identity for uniqueness.  ``n = 0`` is always indeterminate.
    """
    if p.n == 0:
        return Verdict(Status.INDETERMINATE, Inertia(0, 0, 0), 0, None)
    H, inert, se_min = _hankel_facts(p)
    corner_holds = corner_rhs = None
    if inert.is_pd:
        status = Status.INDETERMINATE
    elif not se_min:
        status = Status.NO_SOLUTION
    elif p.n % 2:
        status = Status.UNIQUE
    else:
        corner_holds, corner_rhs = even_corner_identity(p.a)
        status = Status.UNIQUE if corner_holds else Status.NO_SOLUTION
    return Verdict(
        status, inert, inert.rank, se_min, corner_holds, corner_rhs,
        expected_degree=inert.rank if status is Status.UNIQUE else None,
    )


def check(p: ProblemData) -> Verdict:
    """Dispatch on the problem flavour (Laurent, relaxed, or plain)."""
    if p.a_minus1 is not None:
        return solve_laurent(p)[0]
    if p.relaxed:
        return solve_relaxed(p)
    return solve_cf(p)


def _construct(x, a) -> RationalFunction:
    n = len(a) - 1
    if n == 0 or a[1] == 0:
        if any(a[1:]):
            raise Unsolvable("a^1 = 0 forces every higher target to vanish")
        return RationalFunction.constant(a[0])
    if a[1] < 0:
        raise Unsolvable("a^1 must be non-negative")
    if n == 1:
        return RationalFunction.linear(a[0], a[1], x)
    reduced = reduce_series(PowerSeries(a, x))
    return augment_rational(_construct(x, reduced.coeffs), x, a[0], a[1])


def _relaxed_targets(p: ProblemData):
    """Targets with the top coefficient lowered to its minimal admissible value."""
    if solve_cf(p.base).solvable:
        return p.a
    H = build_hankel(p.a, p.m)
    return p.a[:-1] + (minimal_corner_value(H),)


def construct_solution(p: ProblemData) -> RationalFunction:
    """A rational Pick solution analytic at the node.

    The deepest free parameter is fixed to the affine or constant function,
    which makes the construction deterministic.
    """
    if p.relaxed:
        if not solve_relaxed(p).solvable:
            raise Unsolvable("Hankel matrix is not positive semidefinite")
        return _construct(p.x, _relaxed_targets(p))
    if not solve_cf(p.base).solvable:
        raise Unsolvable("problem has no solution")
    return _construct(p.x, p.a)


def solve_laurent(p: ProblemData):
    """Problem with a prescribed residue ``a^{-1}`` at the node.

    Returns ``(verdict, f)`` with ``f = F + a^{-1}/(z - x)`` where ``F``
    solves the base problem, or ``f = None`` when unsolvable.
    """
    a_m1 = p.a_minus1 if p.a_minus1 is not None else Fraction(0)
    if p.n < 1 or p.a[1] <= 0:
        raise InvalidDerivative("the Laurent problem requires a^1 > 0")
    base = replace(p.base, relaxed=False)
    verdict = solve_cf(base)
    if a_m1 > 0:
        return replace(verdict, status=Status.NO_SOLUTION, expected_degree=None), None
    if not verdict.solvable:
        return verdict, None
    f = construct_solution(base)
    if a_m1:
        f = f + RationalFunction.simple_pole(a_m1, p.x)
    return verdict, f


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    first_mismatch: Optional[int]
    target: Tuple[Fraction, ...]
    actual: Tuple[Fraction, ...]
    residue: Optional[Fraction] = None

    @property
    def residuals(self):
        return tuple(b - a for a, b in zip(self.target, self.actual))

    def to_json(self):
        out = {
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "table": [
                {"k": k, "target": fraction_str(t), "actual": fraction_str(v), "residual": fraction_str(v - t)}
                for k, (t, v) in enumerate(zip(self.target, self.actual))
            ],
        }
        if self.residue is not None:
            out["residue"] = fraction_str(self.residue)
        return out


def verify_solution(f: RationalFunction, p: ProblemData) -> VerificationReport:
    """Exact comparison of the expansion of ``f`` at the node with the targets."""
    residue = None
    if p.a_minus1 is not None:
        residue, series = laurent_at(f, p.x, p.n)
    else:
        if f.has_pole_at(p.x):
            raise PoleAtNode(f"f has a pole at the node {p.x}")
        series = taylor_at(f, p.x, p.n)
    actual = series.coeffs
    mismatch = None
    if residue is not None and residue != p.a_minus1:
        mismatch = -1
    else:
        for k, (t, v) in enumerate(zip(p.a, actual)):
            ok = v <= t if (p.relaxed and k == p.n) else v == t
            if not ok:
                mismatch = k
                break
    return VerificationReport(mismatch is None, mismatch, p.a, actual, residue)
