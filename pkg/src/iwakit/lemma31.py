"""Dimension of Z_p[[S,T]]/((1+S)^alpha(1+T)-1, S-f(T), p).

The direct generator image under S -> f(T) is
g_alpha = (1+f)^alpha (1+T) - 1, and the identity
g_alpha = -(1+f)^alpha * h_{-alpha} with h_beta = (1+f)^beta - (1+T)
ties it to the series whose case analysis predicts the answer.  The
dimension equals the T-adic valuation of the generator mod p.

`brute_force_dim` is an independent oracle: truncated two-variable
row reduction over the residue field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    InsufficientPrecisionError,
    UncertifiedError,
)
from .padic import PadicApprox, unit_split, vp_factorial
from .series import (
    INFINITY,
    PadicPowerSeries,
    mu_lambda,
    one_unit_power,
)


class Branch(Enum):
    MU_POSITIVE = "MU_POSITIVE"
    UNIT_F = "UNIT_F"
    U_GE_1 = "U_GE_1"
    LAMBDA_GT_1 = "LAMBDA_GT_1"
    LAMBDA_EQ_1_GENERIC = "LAMBDA_EQ_1_GENERIC"
    LAMBDA_EQ_1_RESIDUAL = "LAMBDA_EQ_1_RESIDUAL"


@dataclass(frozen=True)
class LowerBound:
    """The dimension is at least `bound` (generator vanished in the
    whole window mod p)."""

    bound: int

    def __repr__(self):
        return f"LowerBound({self.bound})"


class Unstable:
    """Sentinel: the brute-force computation did not stabilize."""

    def __repr__(self):
        return "UNSTABLE"


UNSTABLE = Unstable()


@dataclass(frozen=True)
class IAlphaInstance:
    """One (f, alpha) pair.

    Valid when f lies in (p, T), or f is a certified unit series
    (mu = lambda = 0), which is handled without forming powers.
    """

    f: PadicPowerSeries
    alpha: PadicApprox

    def f_in_maximal_ideal(self) -> bool:
        return self.f.coeffs[0] % self.f.p == 0


@dataclass(frozen=True)
class DimResult:
    dim: Union[int, LowerBound]
    certified: bool
    branch: Optional[Branch]
    witness: Optional[PadicPowerSeries]


@dataclass(frozen=True)
class BranchResult:
    branch: Branch
    predicted_lambda: Optional[int]  # lambda(h_alpha) when claimed
    companion_lambda: Optional[int]  # lambda(h_{-alpha}) in the residual case
    predicted_dim: Optional[int]  # set in the unit-f branch only


def g_alpha(f: PadicPowerSeries, alpha: PadicApprox) -> PadicPowerSeries:
    """(1+f)^alpha * (1+T) - 1, the image of the first ideal generator."""
    p, n, m = f.p, f.precision, f.window
    one_plus_t = PadicPowerSeries.from_coeffs(p, [1, 1], n, m, exact=True)
    one = PadicPowerSeries.one(p, n, m)
    return one_unit_power(f, alpha) * one_plus_t - one


def h_alpha(f: PadicPowerSeries, alpha: PadicApprox) -> PadicPowerSeries:
    """(1+f)^alpha - (1+T)."""
    p, n, m = f.p, f.precision, f.window
    one_plus_t = PadicPowerSeries.from_coeffs(p, [1, 1], n, m, exact=True)
    return one_unit_power(f, alpha) - one_plus_t


def branch_classify(f: PadicPowerSeries,
                    alpha: PadicApprox) -> BranchResult:
    """The proof's case split for (f, alpha), with its closed-form
    prediction for the T-adic valuation of h_alpha mod p."""
    ml = mu_lambda(f)
    if not ml.certified:
        raise UncertifiedError("mu/lambda of f not certified")
    if ml.mu is INFINITY or ml.mu >= 1:
        return BranchResult(Branch.MU_POSITIVE, 1, None, None)
    if ml.lam == 0:
        return BranchResult(Branch.UNIT_F, None, None, 0)
    try:
        split = unit_split(alpha)
    except InsufficientPrecisionError as exc:
        raise UncertifiedError(str(exc)) from exc
    if split.u >= 1:
        return BranchResult(Branch.U_GE_1, 1, None, None)
    if ml.lam > 1:
        return BranchResult(Branch.LAMBDA_GT_1, 1, None, None)
    # lambda(f) = 1 and u = 0: the constant term of the unit factor of f
    # is the T^1 coefficient mod p, since f = g*U with g = T + p*c.
    u0 = f.coeffs[1] % f.p
    if (split.unit_part.value * u0 - 1) % f.p != 0:
        return BranchResult(Branch.LAMBDA_EQ_1_GENERIC, 1, None, None)
    return BranchResult(Branch.LAMBDA_EQ_1_RESIDUAL, None, 1, None)


def _exact_identity_holds(f: PadicPowerSeries, alpha_int: int) -> bool:
    """(1+f)^alpha (1+T) == 1 exactly, for polynomial f and integer
    alpha.  Checked with exact integer polynomial arithmetic on the
    stored representatives."""
    coeffs = list(f.coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    base = [1 + (coeffs[0] if coeffs else 0)] + coeffs[1:]

    def polymul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def polypow(a, e):
        out = [1]
        for _ in range(e):
            out = polymul(out, a)
        return out

    if alpha_int >= 0:
        lhs = polymul(polypow(base, alpha_int), [1, 1])
        return lhs == [1]
    return polypow(base, -alpha_int) == [1, 1]


def dim_ialpha(inst: IAlphaInstance) -> DimResult:
    """dim_Fp Z_p[[S,T]]/I_alpha as the T-adic valuation of the reduced
    generator; LowerBound(M) when the window cannot certify it."""
    f, alpha = inst.f, inst.alpha
    ml = mu_lambda(f)
    if ml.certified and ml.mu == 0 and ml.lam == 0:
        return DimResult(0, True, Branch.UNIT_F, None)
    if not inst.f_in_maximal_ideal():
        raise UncertifiedError(
            "f is neither in (p, T) nor a certified unit series")
    # only the mod-p reduction of the generator matters
    f1 = f.reduce(precision=1)
    witness = g_alpha(f1, alpha)
    branch = None
    try:
        branch = branch_classify(f, -alpha).branch
    except UncertifiedError:
        pass
    v = witness.tvaluation_mod_p()
    if v is not None:
        return DimResult(v, True, branch, witness)
    certified = False
    if f.exact and alpha.exact_int is not None:
        certified = _exact_identity_holds(f, alpha.exact_int)
    return DimResult(LowerBound(f.window), certified, branch, witness)


@dataclass(frozen=True)
class MinResult:
    dim_plus: DimResult
    dim_minus: DimResult
    min_le_1: bool


def lemma31_min(f: PadicPowerSeries, alpha: PadicApprox) -> MinResult:
    """Both dimensions and the headline check min <= 1.

    A LowerBound counts as > 1; raises only if neither side certifies.
    """
    plus = dim_ialpha(IAlphaInstance(f, alpha))
    minus = dim_ialpha(IAlphaInstance(f, -alpha))
    if not (plus.certified or minus.certified):
        raise UncertifiedError("neither dimension certified")

    def le1(r: DimResult) -> bool:
        return r.certified and isinstance(r.dim, int) and r.dim <= 1

    return MinResult(plus, minus, le1(plus) or le1(minus))


# ---------------------------------------------------------------------------
# brute-force oracle


def _lucas_binom_row(e: int, p: int, length: int) -> np.ndarray:
    """Coefficients of (1+S)^e mod p, truncated to `length` terms."""
    out = np.zeros(length, dtype=np.int64)
    out[0] = 1
    step = 1
    from math import comb

    while e > 0 and step < length:
        d = e % p
        if d:
            factor = np.zeros(length, dtype=np.int64)
            for r in range(d + 1):
                if r * step < length:
                    factor[r * step] = comb(d, r) % p
            out = np.convolve(out, factor)[:length] % p
        e //= p
        step *= p
    return out


def _tblock_rank(f_coeffs: Sequence[int], e: int, D: int, p: int) -> int:
    """Rank bookkeeping for the truncated span of monomial multiples.

    Multiples of S - f(T) pivot every column with S-degree in [1, D-1];
    every other row is reduced against those pivots (substituting
    S -> f with window truncation) down to a pure-T vector, and the
    rank of that block is computed by elimination mod p.  The quotient
    dimension is D minus this rank.
    """
    fvec = np.array([c % p for c in f_coeffs[:D]], dtype=np.int64)
    fvec = np.trim_zeros(fvec, "b")
    srow = _lucas_binom_row(e, p, D)

    def reduce_shifts(block: np.ndarray) -> np.ndarray:
        # block: (S-degree, T-degree) array; returns the reduced pure-T
        # vectors of all T-shifts T^b * block, b in [0, D)
        R = np.zeros((D, D, D), dtype=np.int64)
        w = block.shape[1]
        for b in range(D):
            width = min(w, D - b)
            R[b, : block.shape[0], b : b + width] = block[:, :width]
        for i in range(D - 1, 0, -1):
            if not R[:, i, :].any():
                continue
            for k, fk in enumerate(fvec):
                if fk and k < D:
                    R[:, i - 1, k:] = (R[:, i - 1, k:]
                                       + fk * R[:, i, : D - k]) % p
        return R[:, 0, :] % p

    rows: List[np.ndarray] = []
    # multiples S^a T^b of the first generator (1+S)^e (1+T) - 1
    g1 = np.zeros((D, 2), dtype=np.int64)
    g1[:, 0] = srow
    g1[:, 1] = srow
    g1[0, 0] = (g1[0, 0] - 1) % p
    for a in range(D):
        block = g1[: D - a, :]
        shifted = np.zeros((D, 2), dtype=np.int64)
        shifted[a:, :] = block
        rows.append(reduce_shifts(shifted))
    # multiples S^{D-1} T^b of S - f(T): the S^D part falls out of the
    # window, leaving -S^{D-1} f(T)
    top = np.zeros((D, max(len(fvec), 1)), dtype=np.int64)
    if len(fvec):
        top[D - 1, :] = (-fvec) % p
    rows.append(reduce_shifts(top))

    mat = np.concatenate(rows, axis=0) % p
    mat = mat[mat.any(axis=1)]
    # elimination mod p on an (n x D) block
    rank = 0
    for col in range(D):
        if rank >= len(mat):
            break
        piv = None
        for r in range(rank, len(mat)):
            if mat[r, col] % p:
                piv = r
                break
        if piv is None:
            continue
        mat[[rank, piv]] = mat[[piv, rank]]
        inv = pow(int(mat[rank, col]), -1, p)
        mat[rank] = mat[rank] * inv % p
        below = mat[rank + 1 :, col] % p != 0
        if below.any():
            mat[rank + 1 :][below] = (
                mat[rank + 1 :][below]
                - np.outer(mat[rank + 1 :, col][below], mat[rank])
            ) % p
        rank += 1
    return rank


def _brute_level(f_coeffs: Sequence[int], alpha: int, D: int, K: int,
                 p: int) -> int:
    e = alpha % p ** K
    return D - _tblock_rank(f_coeffs, e, D, p)


def brute_force_dim(f_coeffs: Sequence[int], alpha: int, D: int,
                    p: int) -> Union[int, Unstable]:
    """Quotient dimension by truncated row reduction over F_p.

    Accepted only when stable under D -> D+4 with the exponent
    reduction level raised accordingly; otherwise UNSTABLE.
    """
    K = 1
    while p ** K <= D:
        K += 1
    d0 = _brute_level(f_coeffs, alpha, D, K, p)
    d1 = _brute_level(f_coeffs, alpha, D + 4, K + 1, p)
    if d0 == d1:
        return d0
    return UNSTABLE


# ---------------------------------------------------------------------------
# randomized instances for the scans


def alpha_precision_budget(p: int, precision: int, window: int) -> int:
    """Digits of alpha needed by the binomial series at this rectangle."""
    return precision + vp_factorial(precision + window, p)


def random_instance(rng: random.Random, p: int,
                    precision: int = 8,
                    window: int = 32) -> Tuple[PadicPowerSeries, PadicApprox]:
    """Draw f = p^mu * g * unit (mu in {0,1}, lambda(g) in 0..5) and a
    stratified alpha with v_p(alpha) in {0, 1, 2}."""
    mod = p ** precision
    mu = rng.randrange(2)
    lam = rng.randrange(6)
    g = [p * rng.randrange(p ** (precision - 1)) for _ in range(lam)] + [1]
    unit = [rng.randrange(1, p) + p * rng.randrange(p ** (precision - 1))]
    unit += [rng.randrange(mod) for _ in range(window - 1)]
    gs = PadicPowerSeries.from_coeffs(p, g, precision, window, exact=True)
    us = PadicPowerSeries.from_coeffs(p, unit, precision, window, exact=True)
    prod = gs * us
    pmu = p ** mu
    f = PadicPowerSeries(p, precision, window,
                         tuple(c * pmu % mod for c in prod.coeffs),
                         exact=True)

    budget = alpha_precision_budget(p, precision, window)
    u = rng.choice([0, 1, 2])
    unit_res = rng.randrange(1, p) + p * rng.randrange(p ** (budget - 1))
    value = p ** u * unit_res % p ** budget
    alpha = PadicApprox(p, value, budget)
    return f, alpha


@dataclass(frozen=True)
class ScanLine:
    index: int
    branch: Optional[Branch]
    dim_plus: Union[int, LowerBound]
    dim_minus: Union[int, LowerBound]
    certified_plus: bool
    certified_minus: bool
    min_le_1: bool


def scan_lemma31(p: int, count: int, seed: int,
                 precision: int = 8,
                 window: int = 32) -> List[ScanLine]:
    """Run `count` random certified instances and record the headline
    check per instance."""
    rng = random.Random(seed)
    lines = []
    for i in range(count):
        f, alpha = random_instance(rng, p, precision, window)
        res = lemma31_min(f, alpha)
        lines.append(ScanLine(i, res.dim_plus.branch,
                              res.dim_plus.dim, res.dim_minus.dim,
                              res.dim_plus.certified,
                              res.dim_minus.certified,
                              res.min_le_1))
    return lines
