"""Weighted-degree selection and multivariate interpolation over F_q.

The interpolation step finds a nonzero Q(X, Y_1, ..., Y_s) of
(1,k,...,k)-weighted degree at most D vanishing to order r at every given
point.  Each point contributes C(r+s, s+1) homogeneous linear conditions
(one per shift monomial of total degree < r); a feasible D makes the
monomial count exceed the condition count, so the system has a nonzero
kernel vector, found by Gaussian elimination mod q.

Kernel extraction is deterministic: columns are scanned in a fixed order,
pivots take the first nonzero row, the first free column gets coefficient 1
and all later columns 0.  Columns are ordered by the degree the monomial
acquires after the root-finding substitution Y_t -> Y^(q^(t-1)), so the
chosen Q keeps that substituted degree as small as the system allows; this
both fixes reproducibility and keeps the root-finding step cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .galois import PrimeField
from .poly import Monomial, MultiPoly, count_weighted_monomials, enumerate_weighted_monomials


class ParameterError(ValueError):
    """Decoding parameters were rejected (infeasible or outside supported range)."""


def _integer_root(value: int, degree: int) -> int:
    """floor(value ** (1/degree)) by integer binary search, no floating point."""
    if value < 0:
        raise ValueError("negative radicand")
    lo, hi = 0, 1
    while hi**degree <= value:
        hi *= 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid**degree <= value:
            lo = mid
        else:
            hi = mid
    return lo


def constraints_per_point(r: int, s: int) -> int:
    """Number of vanishing conditions per point: C(r+s, s+1)."""
    return math.comb(r + s, s + 1)


def degree_bound_formula(k: int, n0: int, r: int, s: int) -> int:
    """The closed-form degree bound floor((k^s n0 r(r+1)...(r+s))^(1/(s+1))) + 1."""
    if min(k, n0, r, s) < 1:
        raise ValueError("all parameters must be at least 1")
    radicand = k**s * n0
    for j in range(s + 1):
        radicand *= r + j
    return _integer_root(radicand, s + 1) + 1


def choose_D(k: int, n0: int, r: int, s: int) -> int:
    """Smallest feasible weighted-degree bound.

    Starts from the closed-form value and decrements while the exact monomial
    count still exceeds n0 * C(r+s, s+1), the count of vanishing conditions;
    the result is the least D (at least 1) for which the homogeneous system
    is guaranteed a nonzero solution.  The closed-form start is available
    separately as degree_bound_formula for logs and comparisons.
    """
    D = degree_bound_formula(k, n0, r, s)
    need = n0 * constraints_per_point(r, s)
    if count_weighted_monomials(k, D, s) <= need:
        raise ParameterError(f"closed-form degree bound D = {D} is not feasible")
    while D > 1 and count_weighted_monomials(k, D - 1, s) > need:
        D -= 1
    return D


@dataclass(frozen=True)
class InterpolationProblem:
    """A multiplicity-r vanishing problem at a set of (s+1)-tuples over F_q."""

    field: PrimeField
    points: tuple[tuple[int, ...], ...]
    r: int
    k: int
    s: int
    D: int

    def __post_init__(self):
        q = self.field.q
        for pt in self.points:
            if len(pt) != self.s + 1:
                raise ValueError(f"point {pt} does not have s + 1 = {self.s + 1} coordinates")
            if any(not 0 <= int(v) < q for v in pt):
                raise ValueError(f"point {pt} has entries outside [0, {q})")


@dataclass(frozen=True)
class InterpReport:
    """Dimensions and diagnostics of the solved linear system."""

    rows: int
    cols: int
    rank: int
    pivot_cols: int
    substituted_degree: int


def _derivative_monomials(r: int, s: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree < r in s+1 variables, the shift targets."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], r - 1, s + 1)
    return [v for v in out if sum(v) < r]


def _column_order_key(q: int, k: int):
    def key(mon: Monomial):
        e = mon.exponents
        substituted = sum(j * q**t for t, j in enumerate(e[1:]))
        return (substituted, mon.weighted_degree(k), e)

    return key


def _assemble_matrix(problem: InterpolationProblem, cols: list[Monomial]) -> np.ndarray:
    """One row per (point, shift monomial) pair; entries are Hasse shift coefficients.

    The coefficient of the shift monomial b in the translate of X^e0 Y^e is
    prod_t C(e_t, b_t) * a_t^(e_t - b_t), so each row is a product of per-
    coordinate binomial and power table lookups, vectorized over columns.
    """
    q = problem.field.q
    s = problem.s
    exps = np.array([c.exponents for c in cols], dtype=np.int64)  # (ncols, s+1)
    max_e = int(exps.max())
    from .poly import _pascal_mod

    pascal = _pascal_mod(q, max_e)
    dmons = _derivative_monomials(problem.r, s)
    rows = np.zeros((len(problem.points) * len(dmons), len(cols)), dtype=np.int64)
    row = 0
    for pt in problem.points:
        # power tables a_t^e for e = 0..max_e, one per coordinate
        pows = np.ones((s + 1, max_e + 1), dtype=np.int64)
        for t in range(s + 1):
            a = int(pt[t]) % q
            for e in range(1, max_e + 1):
                pows[t, e] = pows[t, e - 1] * a % q
        for b in dmons:
            entry = np.ones(len(cols), dtype=np.int64)
            for t in range(s + 1):
                et = exps[:, t]
                bt = b[t]
                ok = et >= bt
                binom = np.where(ok, pascal[et, np.minimum(bt, et)], 0)
                power = np.where(ok, pows[t, np.maximum(et - bt, 0)], 0)
                entry = entry * binom % q * power % q
            rows[row] = entry
            row += 1
    return rows


def _kernel_vector(matrix: np.ndarray, q: int) -> tuple[np.ndarray, int, int]:
    """First-free-column kernel vector of a matrix over F_q.

    Columns are processed left to right; each pivot is the first unused row
    with a nonzero entry, and rows are fully reduced so that when the first
    pivotless column c0 appears, setting x[c0] = 1, every later column 0 and
    x[p] = -M[row_p, c0] for the pivot columns p gives a kernel vector.
    Returns (vector, rank_so_far, c0).
    """
    M = matrix % q
    nrows, ncols = M.shape
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    used = np.zeros(nrows, dtype=bool)
    for col in range(ncols):
        candidates = np.flatnonzero((M[:, col] != 0) & ~used)
        if len(candidates) == 0:
            x = np.zeros(ncols, dtype=np.int64)
            x[col] = 1
            for pr, pc in zip(pivot_rows, pivot_cols):
                x[pc] = (-M[pr, col]) % q
            return x, len(pivot_cols), col
        prow = int(candidates[0])
        used[prow] = True
        inv = pow(int(M[prow, col]), q - 2, q)
        M[prow] = M[prow] * inv % q
        others = np.flatnonzero(M[:, col] != 0)
        others = others[others != prow]
        if len(others):
            M[others] = (M[others] - np.outer(M[others, col], M[prow])) % q
        pivot_rows.append(prow)
        pivot_cols.append(col)
    raise AssertionError("no free column: the system was not underdetermined")


def interpolate_with_report(problem: InterpolationProblem) -> tuple[MultiPoly, InterpReport]:
    """Nonzero Q with weighted degree <= D vanishing to order r at every point.

    Raises ParameterError when the monomial count does not exceed the number
    of conditions, or when floor(D/k) >= q (the root-finding step needs the
    substituted polynomial to have Y_1-degree below q).
    """
    k, D, s, r = problem.k, problem.D, problem.s, problem.r
    q = problem.field.q
    if D // k >= q:
        raise ParameterError(
            f"floor(D/k) = {D // k} >= q = {q}: Y-degrees too large for root finding"
        )
    n_conditions = len(problem.points) * constraints_per_point(r, s)
    cols = enumerate_weighted_monomials(k, D, s)
    if len(cols) <= n_conditions:
        raise ParameterError(
            f"{len(cols)} monomials vs {n_conditions} conditions: system not underdetermined"
        )
    cols.sort(key=_column_order_key(q, k))
    matrix = _assemble_matrix(problem, cols)
    x, rank, free_col = _kernel_vector(matrix, q)
    terms = {
        cols[i].exponents: int(x[i]) for i in np.flatnonzero(x)
    }
    Q = MultiPoly(problem.field, s, k, terms)
    assert not Q.is_zero
    sub_deg = max(
        sum(j * q**t for t, j in enumerate(e[1:])) for e in Q.terms
    )
    report = InterpReport(
        rows=matrix.shape[0],
        cols=matrix.shape[1],
        rank=rank,
        pivot_cols=free_col,
        substituted_degree=sub_deg,
    )
    return Q, report


def interpolate(problem: InterpolationProblem) -> MultiPoly:
    """See interpolate_with_report; identical problems yield identical Q."""
    return interpolate_with_report(problem)[0]
