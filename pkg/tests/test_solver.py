from fractions import Fraction as F

import pytest

from pickcf.errors import InvalidDerivative, PoleAtNode, Unsolvable, WrongParity
from pickcf.hankel import build_hankel, rank
from pickcf.ratfun import RationalFunction as R, is_pick, taylor_at
from pickcf.solver import (
    ProblemData,
    Status,
    check,
    construct_solution,
    solve_cf,
    solve_laurent,
    solve_relaxed,
    verify_solution,
)

from conftest import rand_frac, random_pick

Z = R.identity()


def P(*a, x=0, **kw):
    return ProblemData(x, a, **kw)


@pytest.mark.parametrize(
    "a, status",
    [((0, 1, 2, 3), Status.NO_SOLUTION), ((0, 1, 2, 4), Status.UNIQUE), ((0, 1, 0, 1), Status.INDETERMINATE)],
)
def test_solve_relaxed_examples(a, status):
    assert solve_relaxed(P(*a, relaxed=True)).status is status


def test_solve_relaxed_parity():
    with pytest.raises(WrongParity):
        solve_relaxed(P(0, 1, 2))


def test_solve_cf_examples():
    v = solve_cf(P(0, 1, 2, 4))
    assert v.status is Status.UNIQUE and v.expected_degree == 1
    v = solve_cf(P(0, 1, 2, 4, 8))
    assert v.status is Status.UNIQUE and v.corner_rhs == 8 and v.corner_holds
    v = solve_cf(P(0, 1, 2, 4, 7))
    assert v.status is Status.NO_SOLUTION and v.corner_holds is False
    assert solve_cf(P(5)).status is Status.INDETERMINATE
    assert solve_cf(P(0, 1, 0, 1, 0)).status is Status.INDETERMINATE


def test_relaxed_examples_under_plain_problem():
    # the relaxed verdict is weaker: (0,1,2,5) is PD, hence indeterminate either way
    assert solve_cf(P(0, 1, 2, 5)).status is Status.INDETERMINATE
    assert solve_relaxed(P(0, 1, 2, 5, relaxed=True)).status is Status.INDETERMINATE


def test_construct_examples():
    assert construct_solution(P(0, 1, 0, 1)) == Z / (1 - Z * Z)
    assert construct_solution(P(0, 1, 2, 4)) == Z / (1 - 2 * Z)
    assert construct_solution(P(5)) == R.constant(5)
    assert construct_solution(P(3, 0, 0, 0)) == R.constant(3)


def test_construct_unsolvable():
    with pytest.raises(Unsolvable):
        construct_solution(P(0, 1, 2, 3))
    with pytest.raises(Unsolvable):
        construct_solution(P(0, 1, 2, 4, 7))


def test_relaxed_construction_lowers_corner():
    p = P(0, 1, 2, 5, relaxed=True)
    f = construct_solution(p)
    assert verify_solution(f, p).passed and is_pick(f).is_pick
    # (0,1,2,3) has no relaxed solution either
    with pytest.raises(Unsolvable):
        construct_solution(P(0, 1, 2, 3, relaxed=True))


def test_verify_examples():
    r = verify_solution(Z / (1 - 2 * Z), P(0, 1, 2, 4))
    assert r.passed and r.first_mismatch is None and not any(r.residuals)
    r = verify_solution(Z, P(0, 1, 2, 4))
    assert not r.passed and r.first_mismatch == 2
    assert verify_solution(Z / (1 - 2 * Z), P(0, 1, 2, 5, relaxed=True)).passed
    assert not verify_solution(Z / (1 - 2 * Z), P(0, 1, 2, 3, relaxed=True)).passed
    with pytest.raises(PoleAtNode):
        verify_solution(1 / Z, P(0, 1))


def test_laurent_examples():
    v, f = solve_laurent(P(0, 1, a_minus1=-1))
    assert v.solvable and f == Z - 1 / Z and is_pick(f).is_pick
    assert verify_solution(f, P(0, 1, a_minus1=-1)).passed
    for pos in (F(1), F(1, 1000)):
        v, f = solve_laurent(P(0, 1, 2, 4, a_minus1=pos))
        assert v.status is Status.NO_SOLUTION and f is None
    v0, f0 = solve_laurent(P(0, 1, 2, 4, a_minus1=0))
    assert v0 == solve_cf(P(0, 1, 2, 4)) and f0 == construct_solution(P(0, 1, 2, 4))
    with pytest.raises(InvalidDerivative):
        solve_laurent(P(0, 0, a_minus1=-1))
    assert check(P(0, 1, a_minus1=1)).status is Status.NO_SOLUTION


def test_json_roundtrip():
    p = P(0, F(1, 2), 3, x=F(-1, 3), a_minus1=-2, relaxed=True)
    assert ProblemData.from_json(p.to_json()) == p
    js = solve_cf(P(0, 1, 2, 4, 8)).to_json()
    assert js["status"] == "UniqueSolvable" and js["inertia"] == [1, 0, 1]
    assert js["corner_identity"] == {"holds": True, "rhs": "8/1"}


def _data_from_pick(rng, n):
    x = rand_frac(rng, -2, 2)
    h = random_pick(rng, 4, avoid=(x,))
    return h, ProblemData(x, taylor_at(h, x, n).coeffs)


def test_generator_closure_and_soundness(rng):
    for _ in range(60):
        n = rng.randint(1, 9)
        h, p = _data_from_pick(rng, n)
        v = solve_cf(p)
        assert v.solvable
        f = construct_solution(p)
        assert verify_solution(f, p).passed
        assert is_pick(f).is_pick
        if v.status is Status.UNIQUE:
            # the data came from h, so uniqueness pins the answer down
            assert f == h
            assert f.degree() == v.expected_degree == rank(build_hankel(p.a, p.m))


def test_verdict_consistency_under_perturbation(rng):
    seen = set()
    for _ in range(120):
        n = rng.randint(2, 8)
        _, p = _data_from_pick(rng, n)
        a = list(p.a)
        k = rng.randint(1, n)
        a[k] += rand_frac(rng, -3, 3)
        q = ProblemData(p.x, a)
        v = solve_cf(q)
        seen.add(v.status)
        if v.solvable:
            f = construct_solution(q)
            assert verify_solution(f, q).passed and is_pick(f).is_pick
        else:
            with pytest.raises(Unsolvable):
                construct_solution(q)
    assert seen == set(Status)


def test_monotone_relaxation(rng):
    for _ in range(60):
        m = rng.randint(1, 4)
        a = [rand_frac(rng) for _ in range(2 * m)]
        if rng.random() < 0.5:
            _, p = _data_from_pick(rng, 2 * m - 1)
            a = list(p.a)
        if solve_cf(P(*a)).solvable:
            assert solve_relaxed(P(*a, relaxed=True)).solvable
