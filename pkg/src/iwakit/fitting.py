"""Fitting the class number growth law v_p(h_n) = lambda*n + mu*p^n + nu.

All arithmetic is exact: the law is an identity over integers, so the
solves run over Fractions and a fit is only reported when lambda, mu
are non-negative integers and nu is an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import InsufficientDataError


@dataclass(frozen=True)
class ClassNumberSeries:
    """Observed p-orders of class numbers along the layers of a tower."""

    p: int
    points: Tuple[Tuple[int, int], ...]  # (layer n, e_n = v_p(h_n))

    def __post_init__(self):
        ns = [n for n, _ in self.points]
        if ns != sorted(set(ns)):
            raise ValueError("layer indices must be strictly increasing")
        if any(e < 0 for _, e in self.points):
            raise ValueError("e_n must be non-negative")

    @classmethod
    def from_pairs(cls, p: int,
                   pairs: Sequence[Tuple[int, int]]) -> "ClassNumberSeries":
        return cls(p, tuple((int(n), int(e)) for n, e in pairs))


@dataclass(frozen=True)
class InvariantFit:
    lam: int
    mu: int
    nu: int
    n0: int


NO_FIT = None  # fit_invariants returns None when no law fits


def _solve_three(p: int,
                 pts: Sequence[Tuple[int, int]]) -> Optional[Tuple[Fraction,
                                                                   Fraction,
                                                                   Fraction]]:
    """Solve e = lam*n + mu*p^n + nu on three points, exactly."""
    rows = [(Fraction(n), Fraction(p) ** n, Fraction(1), Fraction(e))
            for n, e in pts]
    # Cramer on the 3x3 system
    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    a = [[r[0], r[1], r[2]] for r in rows]
    d = det3(a)
    if d == 0:
        return None
    sols = []
    for col in range(3):
        m = [row[:] for row in a]
        for i, r in enumerate(rows):
            m[i][col] = r[3]
        sols.append(det3(m) / d)
    return tuple(sols)


def fit_invariants(s: ClassNumberSeries) -> Optional[InvariantFit]:
    """Search the minimal n0 whose three-point solve extends to all
    later points with integral non-negative lambda, mu."""
    if len(s.points) < 4:
        raise InsufficientDataError("need at least 4 data points")
    n0_candidates = sorted({0} | {n for n, _ in s.points})
    for n0 in n0_candidates:
        surviving = [(n, e) for n, e in s.points if n >= n0]
        if len(surviving) < 3:
            break
        sol = _solve_three(s.p, surviving[:3])
        if sol is None:
            continue
        lam, mu, nu = sol
        if lam.denominator != 1 or mu.denominator != 1 or nu.denominator != 1:
            continue
        lam, mu, nu = int(lam), int(mu), int(nu)
        if lam < 0 or mu < 0:
            continue
        if all(e == lam * n + mu * s.p ** n + nu for n, e in surviving):
            return InvariantFit(lam, mu, nu, n0)
    return NO_FIT


def predict_linear(lam: int, n_base: int,
                   v_base: int) -> Callable[[int], int]:
    """The linear growth law n -> lam*(n - n_base) + v_base.

    Covers the lambda = 2 quartic law (nu = v_base - 2*n_base), the
    lambda = 1 imaginary-quadratic law, and the n_base = 0 law
    v_p(h_n) = lambda*n + v_p(h_0).
    """
    if lam < 0:
        raise ValueError("lambda must be non-negative")

    def pred(n: int) -> int:
        return lam * (n - n_base) + v_base

    return pred


@dataclass(frozen=True)
class PredictionReport:
    checks: Tuple[Tuple[int, int, int, bool], ...]  # (n, observed, predicted, ok)

    @property
    def all_pass(self) -> bool:
        return all(ok for *_, ok in self.checks)

    @property
    def failures(self) -> List[Tuple[int, int, int]]:
        return [(n, o, pr) for n, o, pr, ok in self.checks if not ok]


def check_prediction(s: ClassNumberSeries, pred: Callable[[int], int],
                     from_layer: int = 0) -> PredictionReport:
    """Exact comparison of each data point at n >= from_layer."""
    checks = []
    for n, e in s.points:
        if n < from_layer:
            continue
        want = pred(n)
        checks.append((n, e, want, e == want))
    return PredictionReport(tuple(checks))
