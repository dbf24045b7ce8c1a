"""Exact solver for the boundary Carathéodory-Fejér problem in the Pick class."""
from .errors import PickCFError
from .hankel import (
    HankelMatrix,
    Inertia,
    build_hankel,
    even_corner_identity,
    inertia,
    is_se_minimally_positive,
    minimal_corner_value,
    schur_complement_11,
)
from .julia import augment_rational, equality_condition, reduce_rational
from .ratfun import PickCertificate, RationalFunction, is_pick, laurent_at, taylor_at
from .series import PowerSeries, augment_series, hankel_of_series, reduce_series
from .solver import (
    ProblemData,
    Status,
    Verdict,
    construct_solution,
    solve_cf,
    solve_laurent,
    solve_relaxed,
    verify_solution,
)

__version__ = "0.1.0"
