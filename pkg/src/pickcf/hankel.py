"""Exact Hankel matrices and their positivity analysis.

All arithmetic is over :class:`fractions.Fraction`; nothing here touches
floating point.  Matrices are plain tuples of row tuples.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ._rational import fraction_str, fractions_of, to_fraction
from .errors import DataTooShort, NotAttainable, PivotZero, RankStructureBroken

Matrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Inertia:
    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def size(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero

    @property
    def rank(self) -> int:
        return self.n_pos + self.n_neg

    @property
    def is_psd(self) -> bool:
        return self.n_neg == 0

    @property
    def is_pd(self) -> bool:
        return self.n_neg == 0 and self.n_zero == 0

    def as_tuple(self):
        return (self.n_pos, self.n_neg, self.n_zero)


@dataclass(frozen=True)
class HankelMatrix:
    """Square Hankel matrix ``[a^{i+j-1}]`` (1-based ``i, j``)."""

    entries: Matrix

    def __post_init__(self):
        m = len(self.entries)
        rows = tuple(tuple(to_fraction(v) for v in row) for row in self.entries)
        if any(len(row) != m for row in rows):
            raise ValueError("Hankel matrix must be square")
        for i in range(m):
            for j in range(m):
                if rows[i][j] != _antidiag_rep(rows, i + j):
                    raise ValueError("entries are not constant along anti-diagonals")
        object.__setattr__(self, "entries", rows)

    @property
    def m(self) -> int:
        return len(self.entries)

    def leading(self, r: int) -> "HankelMatrix":
        """Leading principal ``r x r`` block (itself Hankel)."""
        return HankelMatrix(tuple(row[:r] for row in self.entries[:r]))

    def to_json(self):
        return [[fraction_str(v) for v in row] for row in self.entries]

    @classmethod
    def from_json(cls, rows):
        return cls(tuple(fractions_of(row) for row in rows))


def _antidiag_rep(rows, s):
    m = len(rows)
    i = min(s, m - 1)
    return rows[i][s - i]


def build_hankel(a: Sequence, m: int) -> HankelMatrix:
    """Build ``H_m(a)`` from the target list ``a = (a^0, ..., a^n)``.

    ``a^0`` is never an entry; the matrix uses ``a^1 .. a^{2m-1}``.
    """
    if m < 0:
        raise ValueError("dimension must be non-negative")
    coeffs = fractions_of(a)
    if 2 * m - 1 > len(coeffs) - 1:
        raise DataTooShort(
            f"H_{m} needs coefficients up to index {2 * m - 1}, got {len(coeffs) - 1}"
        )
    return HankelMatrix(
        tuple(tuple(coeffs[i + j + 1] for j in range(m)) for i in range(m))
    )


def _as_rows(H):
    if isinstance(H, HankelMatrix):
        return [list(row) for row in H.entries]
    return [[to_fraction(v) for v in row] for row in H]


def inertia(H) -> Inertia:
    """Exact inertia of a symmetric rational matrix.

    Symmetric elimination (a congruence) with a 1x1 pivot whenever some
    remaining diagonal entry is non-zero, and a 2x2 pivot
    ``[[0, b], [b, 0]]`` (one positive, one negative eigenvalue) when the
    remaining diagonal is entirely zero.
    """
    A = _as_rows(H)
    n = len(A)
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(i)):
        raise ValueError("inertia requires a symmetric matrix")
    pos = neg = 0
    while A:
        k = len(A)
        piv = next((i for i in range(k) if A[i][i] != 0), None)
        if piv is not None:
            d = A[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            col = [A[i][piv] for i in range(k)]
            keep = [i for i in range(k) if i != piv]
            A = [[A[i][j] - col[i] * col[j] / d for j in keep] for i in keep]
            continue
        off = next(((i, j) for i in range(k) for j in range(i + 1, k) if A[i][j] != 0), None)
        if off is None:
            break
        i0, j0 = off
        b = A[i0][j0]
        pos += 1
        neg += 1
        # inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        keep = [i for i in range(k) if i not in (i0, j0)]
        A = [
            [A[i][j] - (A[i][i0] * A[j0][j] + A[i][j0] * A[i0][j]) / b for j in keep]
            for i in keep
        ]
    return Inertia(pos, neg, n - pos - neg)


def is_psd(H) -> bool:
    return inertia(H).is_psd


def is_pd(H) -> bool:
    return inertia(H).is_pd


def rank(H) -> int:
    return inertia(H).rank


def schur_complement_11(H) -> Matrix:
    """Schur complement of the (1,1) entry: ``D - c c^T / h11``."""
    A = _as_rows(H)
    if not A or A[0][0] == 0:
        raise PivotZero("(1,1) entry is zero")
    h = A[0][0]
    m = len(A)
    return tuple(
        tuple(A[i][j] - A[i][0] * A[0][j] / h for j in range(1, m)) for i in range(1, m)
    )


def _solve_consistent(K, w):
    """Return some ``y`` with ``K y = w`` or ``None`` if inconsistent."""
    n = len(K)
    M = [list(K[i]) + [w[i]] for i in range(n)]
    pivots = []
    row = 0
    for col in range(n):
        p = next((r for r in range(row, n) if M[r][col] != 0), None)
        if p is None:
            continue
        M[row], M[p] = M[p], M[row]
        inv = 1 / M[row][col]
        M[row] = [v * inv for v in M[row]]
        for r in range(n):
            if r != row and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[row])]
        pivots.append(col)
        row += 1
    if any(M[r][n] != 0 for r in range(row, n)):
        return None
    y = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        y[col] = M[r][n]
    return y


def minimal_corner_value(H) -> Fraction:
    """Smallest (m,m) entry keeping ``H`` positive semidefinite.

    Equals ``w^T K^+ w`` with ``K`` the leading ``(m-1)`` block and ``w`` the
    last column above the corner.  Any solution of ``K y = w`` gives the same
    value ``w^T y`` when ``w`` lies in the range of ``K``.
    """
    A = _as_rows(H)
    m = len(A)
    if m <= 1:
        return Fraction(0)
    K = [row[: m - 1] for row in A[: m - 1]]
    w = [A[i][m - 1] for i in range(m - 1)]
    if not inertia(K).is_psd:
        raise NotAttainable("leading block is not positive semidefinite")
    y = _solve_consistent(K, w)
    if y is None:
        raise NotAttainable("last column is outside the range of the leading block")
    return sum((wi * yi for wi, yi in zip(w, y)), Fraction(0))


def is_se_minimally_positive(H) -> bool:
    """PSD and the southeast corner cannot be lowered without losing PSD."""
    A = _as_rows(H)
    m = len(A)
    if m == 0:
        raise ValueError("empty matrix")
    full = inertia(A)
    if not full.is_psd:
        return False
    lead_rank = inertia([row[: m - 1] for row in A[: m - 1]]).rank if m > 1 else 0
    by_rank = full.rank == lead_rank
    by_corner = A[m - 1][m - 1] == minimal_corner_value(A)
    if by_rank != by_corner:
        raise AssertionError("rank and corner characterizations of SE-minimality disagree")
    return by_rank


def even_corner_identity(a: Sequence):
    """Check ``a^{2m} = [a^m..a^{m+r-1}] H_r(a)^{-1} [a^{m+1}..a^{m+r}]^T``.

    ``a`` must hold ``a^0 .. a^{2m}``; ``r`` is the rank of ``H_m(a)``.
    Returns ``(holds, rhs)``; for ``r = 0`` the right-hand side is 0.
    """
    coeffs = fractions_of(a)
    n = len(coeffs) - 1
    if n < 2 or n % 2:
        raise ValueError("even_corner_identity needs a^0..a^{2m} with m >= 1")
    m = n // 2
    r = rank(build_hankel(coeffs, m))
    if r == 0:
        rhs = Fraction(0)
    else:
        Hr = build_hankel(coeffs, r)
        u = [coeffs[m + i] for i in range(r)]
        v = [coeffs[m + 1 + i] for i in range(r)]
        if rank(Hr) < r:
            raise RankStructureBroken(f"H_{r}(a) is singular")
        y = _solve_consistent([list(row) for row in Hr.entries], v)
        rhs = sum((ui * yi for ui, yi in zip(u, y)), Fraction(0))
    return coeffs[n] == rhs, rhs
