"""Truncated-precision arithmetic in Z_p[[T]].

A series is a rectangle of residues: M coefficients, each known mod p^N.
The module provides ring operations, unit inversion, binomial-series
powers (1+f)^alpha for alpha in Z_p, the mu/lambda invariants and
Weierstrass preparation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    InsufficientPrecisionError,
    MismatchedPrimeError,
    NotAUnitError,
    NotInMaximalIdealError,
    UncertifiedError,
    WindowTooSmallError,
)
from .padic import PadicApprox, is_odd_prime, vp_factorial, vp_int

DEFAULT_PRECISION = 8
DEFAULT_WINDOW = 32

INFINITY = math.inf


def _convolve_mod(a: Sequence[int], b: Sequence[int], window: int,
                  mod: int) -> list:
    """Truncated convolution of coefficient lists mod `mod`.

    Uses int64 numpy when products cannot overflow, otherwise exact
    Python integers.
    """
    if mod * mod * min(len(a), len(b)) < 2 ** 62:
        out = np.convolve(np.asarray(a, dtype=np.int64),
                          np.asarray(b, dtype=np.int64))[:window]
        return [int(x) % mod for x in out]
    out = [0] * min(window, len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0 or i >= window:
            continue
        for j, bj in enumerate(b):
            if i + j >= window:
                break
            out[i + j] = (out[i + j] + ai * bj) % mod
    return out


@dataclass(frozen=True)
class PadicPowerSeries:
    """Element of Z_p[[T]] stored as M residues mod p^N.

    `exact` asserts that all coefficients of degree >= M are exactly
    zero, i.e. the element is a polynomial held in full.
    """

    p: int
    precision: int
    window: int
    coeffs: Tuple[int, ...]
    exact: bool = False

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.precision < 1 or self.window < 1:
            raise ValueError("precision and window must be >= 1")
        if len(self.coeffs) != self.window:
            raise ValueError("coefficient list must have length M")
        mod = self.p ** self.precision
        if any(not 0 <= c < mod for c in self.coeffs):
            raise ValueError("coefficients must be residues in [0, p^N)")

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Sequence[int],
                    precision: int = DEFAULT_PRECISION,
                    window: int = DEFAULT_WINDOW,
                    exact: bool = False) -> "PadicPowerSeries":
        if len(coeffs) > window:
            raise WindowTooSmallError(
                f"{len(coeffs)} coefficients exceed window {window}")
        mod = p ** precision
        cs = [c % mod for c in coeffs] + [0] * (window - len(coeffs))
        return cls(p, precision, window, tuple(cs), exact=exact)

    @classmethod
    def zero(cls, p, precision=DEFAULT_PRECISION, window=DEFAULT_WINDOW,
             exact=True):
        return cls.from_coeffs(p, [], precision, window, exact=exact)

    @classmethod
    def one(cls, p, precision=DEFAULT_PRECISION, window=DEFAULT_WINDOW,
            exact=True):
        return cls.from_coeffs(p, [1], precision, window, exact=exact)

    @classmethod
    def variable(cls, p, precision=DEFAULT_PRECISION, window=DEFAULT_WINDOW,
                 exact=True):
        return cls.from_coeffs(p, [0, 1], precision, window, exact=exact)

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    def _align(self, other: "PadicPowerSeries"):
        if self.p != other.p:
            raise MismatchedPrimeError(f"{self.p} vs {other.p}")
        n = min(self.precision, other.precision)
        m = min(self.window, other.window)
        return n, m

    def reduce(self, precision: Optional[int] = None,
               window: Optional[int] = None) -> "PadicPowerSeries":
        n = self.precision if precision is None else min(precision,
                                                         self.precision)
        m = self.window if window is None else min(window, self.window)
        mod = self.p ** n
        return PadicPowerSeries(self.p, n, m,
                                tuple(c % mod for c in self.coeffs[:m]),
                                exact=self.exact and m == self.window)

    def __add__(self, other):
        n, m = self._align(other)
        mod = self.p ** n
        cs = tuple((a + b) % mod
                   for a, b in zip(self.coeffs[:m], other.coeffs[:m]))
        return PadicPowerSeries(self.p, n, m, cs,
                                exact=self.exact and other.exact
                                and m == self.window == other.window)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        mod = self.modulus
        return PadicPowerSeries(self.p, self.precision, self.window,
                                tuple((-c) % mod for c in self.coeffs),
                                exact=self.exact)

    def __mul__(self, other):
        n, m = self._align(other)
        mod = self.p ** n
        cs = _convolve_mod(self.coeffs[:m], other.coeffs[:m], m, mod)
        cs += [0] * (m - len(cs))
        # the product of exact polynomials is exact only if it fits
        exact = False
        if self.exact and other.exact:
            exact = (self.degree_bound() + other.degree_bound() < m)
        return PadicPowerSeries(self.p, n, m, tuple(cs), exact=exact)

    def scalar_mul(self, c: Union[PadicApprox, int]) -> "PadicPowerSeries":
        if isinstance(c, PadicApprox):
            if c.p != self.p:
                raise MismatchedPrimeError(f"{self.p} vs {c.p}")
            n = min(self.precision, c.precision)
            cv = c.value
        else:
            n = self.precision
            cv = c
        mod = self.p ** n
        return PadicPowerSeries(self.p, n, self.window,
                                tuple(a * cv % mod for a in self.coeffs),
                                exact=self.exact)

    def degree_bound(self) -> int:
        """Largest index with a nonzero stored residue (-1 for zero)."""
        for i in range(self.window - 1, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return -1

    def shift_down(self, k: int) -> "PadicPowerSeries":
        """Drop the first k coefficients (divide by T^k, discarding the
        lower part); the top k slots are zero-filled."""
        cs = self.coeffs[k:] + (0,) * k
        return PadicPowerSeries(self.p, self.precision, self.window, cs,
                                exact=self.exact)

    def lower_part(self, k: int) -> "PadicPowerSeries":
        """Keep coefficients of degree < k only."""
        cs = self.coeffs[:k] + (0,) * (self.window - k)
        return PadicPowerSeries(self.p, self.precision, self.window, cs,
                                exact=True)

    def tvaluation_mod_p(self) -> Union[int, None]:
        """Least index with a unit coefficient; None if the whole window
        reduces to 0 mod p."""
        for i, c in enumerate(self.coeffs):
            if c % self.p != 0:
                return i
        return None

    def __str__(self):
        terms = [f"{c}*T^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) if terms else "0"


_TERM_RE = re.compile(r"^\s*([+-]?\d+)\s*\*\s*T\^(\d+)\s*$")


def parse_series(text: str, p: int, precision: int = DEFAULT_PRECISION,
                 window: int = DEFAULT_WINDOW,
                 exact: bool = True) -> PadicPowerSeries:
    """Parse a comma-separated series literal like `1*T^0, 3*T^2`."""
    coeffs = {}
    text = text.strip()
    if text and text != "0":
        for term in text.split(","):
            m = _TERM_RE.match(term)
            if not m:
                raise ValueError(f"bad series term: {term!r}")
            c, k = int(m.group(1)), int(m.group(2))
            if k >= window:
                raise WindowTooSmallError(
                    f"term of degree {k} outside window {window}")
            coeffs[k] = coeffs.get(k, 0) + c
    top = max(coeffs) + 1 if coeffs else 0
    return PadicPowerSeries.from_coeffs(
        p, [coeffs.get(i, 0) for i in range(top)], precision, window,
        exact=exact)


def invert_unit(f: PadicPowerSeries) -> PadicPowerSeries:
    """Inverse of a unit power series to the working rectangle."""
    if f.coeffs[0] % f.p == 0:
        raise NotAUnitError("constant term has positive valuation")
    mod = f.modulus
    m = f.window
    inv0 = pow(f.coeffs[0], -1, mod)
    out = [0] * m
    out[0] = inv0
    for k in range(1, m):
        acc = 0
        for i in range(1, k + 1):
            acc += f.coeffs[i] * out[k - i]
        out[k] = (-inv0 * acc) % mod
    return PadicPowerSeries(f.p, f.precision, m, tuple(out))


def one_unit_power(f: PadicPowerSeries,
                   alpha: PadicApprox) -> PadicPowerSeries:
    """(1 + f)^alpha for alpha in Z_p, f in the maximal ideal (p, T).

    Computed as the finite sum of binom(alpha, i) * f^i for i up to
    N + M; higher terms lie in (p, T)^i and vanish in the rectangle.
    Alpha must carry (or be liftable to) precision N + v_p(i!) for
    every term used.
    """
    p, n, m = f.p, f.precision, f.window
    if f.coeffs[0] % p != 0:
        raise NotInMaximalIdealError("f must lie in (p, T)")
    if alpha.p != p:
        raise MismatchedPrimeError(f"{p} vs {alpha.p}")
    top = n + m
    needed = n + vp_factorial(top, p)
    alpha = alpha.lift(needed)  # raises if the digits are not there

    mod = p ** n
    mod_hi = p ** needed
    a = alpha.value
    out = [0] * m
    out[0] = 1
    fpow = PadicPowerSeries.one(p, n, m)
    num = 1  # alpha(alpha-1)...(alpha-i+1) mod p^needed
    for i in range(1, top + 1):
        fpow = fpow * f
        if fpow.degree_bound() < 0:
            break
        num = num * (a - (i - 1)) % mod_hi
        w = vp_factorial(i, p)
        fact_unit = math.factorial(i) // p ** w
        b = (num // p ** w) * pow(fact_unit, -1, mod) % mod
        if b == 0:
            continue
        for j, c in enumerate(fpow.coeffs):
            if c:
                out[j] = (out[j] + b * c) % mod
    return PadicPowerSeries(p, n, m, tuple(out))


@dataclass(frozen=True)
class MuLambda:
    """mu/lambda of a series, with a certification flag.

    mu is math.inf when every stored coefficient vanishes mod p^N;
    that is certified only for an exact polynomial (the zero series).
    """

    mu: Union[int, float]
    lam: int
    certified: bool


def mu_lambda(f: PadicPowerSeries) -> MuLambda:
    """mu = minimal coefficient valuation in the window, lambda = least
    index attaining it.

    Certified when the window alone settles the answer: either the
    minimum is 0 (tail coefficients cannot go lower) or the series is
    an exact polynomial.
    """
    best = None
    best_i = 0
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        v = vp_int(c, f.p)
        if best is None or v < best:
            best, best_i = v, i
            if v == 0:
                break
    if best is None:
        return MuLambda(INFINITY, 0, f.exact)
    certified = best == 0 or f.exact
    return MuLambda(best, best_i, certified)


@dataclass(frozen=True)
class WeierstrassData:
    """f = p^mu * g * U with g distinguished of degree lam and U a unit."""

    mu: int
    lam: int
    distinguished: Tuple[int, ...]  # lam + 1 residues, monic
    unit: PadicPowerSeries
    certified: bool

    def distinguished_series(self) -> PadicPowerSeries:
        u = self.unit
        return PadicPowerSeries.from_coeffs(u.p, list(self.distinguished),
                                            u.precision, u.window, exact=True)

    def reassemble(self) -> PadicPowerSeries:
        """p^mu * g * U at the output precision."""
        g = self.distinguished_series()
        prod = g * self.unit
        lifted = PadicPowerSeries(
            prod.p, prod.precision + self.mu, prod.window,
            tuple(c * prod.p ** self.mu for c in prod.coeffs))
        return lifted


def weierstrass_prep(f: PadicPowerSeries) -> WeierstrassData:
    """Weierstrass preparation f = p^mu * g * U by iterated division.

    The division solves q = s^{-1} * tau(T^lam - q * a) to a fixed
    point, where f/p^mu = a + T^lam * s with a the lower part (all
    coefficients divisible by p); the correction shrinks by a factor
    of p each round, so the loop is capped at the precision.
    """
    ml = mu_lambda(f)
    if not ml.certified:
        raise UncertifiedError("mu/lambda not certified within the window")
    if ml.mu is INFINITY:
        raise UncertifiedError("the zero series has no preparation")
    mu, lam = int(ml.mu), ml.lam
    if lam >= f.window:
        raise WindowTooSmallError(f"lambda = {lam} >= window {f.window}")
    n2 = f.precision - mu
    if n2 < 1:
        raise InsufficientPrecisionError(
            "dividing out p^mu leaves no certified digits")
    pmu = f.p ** mu
    mod2 = f.p ** n2
    f1 = PadicPowerSeries(f.p, n2, f.window,
                          tuple((c // pmu) % mod2 for c in f.coeffs),
                          exact=f.exact)
    if lam == 0:
        one = (1,)
        return WeierstrassData(mu, 0, one, f1, certified=True)

    s = f1.shift_down(lam)
    sinv = invert_unit(s)
    a = f1.lower_part(lam)
    h = PadicPowerSeries.from_coeffs(f.p, [0] * lam + [1], n2, f.window,
                                     exact=True)
    q = sinv
    for _ in range(n2 + 2):
        q_next = sinv * (h - q * a).shift_down(lam)
        if q_next.coeffs == q.coeffs:
            break
        q = q_next
    r = h - q * f1
    # r must be supported in degree < lam to working precision
    if any(c != 0 for c in r.coeffs[lam:]):
        raise UncertifiedError("Weierstrass division did not converge")
    g = [(-c) % mod2 for c in r.coeffs[:lam]] + [1]
    if any(c % f.p != 0 for c in g[:lam]):
        raise UncertifiedError("computed polynomial is not distinguished")
    unit = invert_unit(q)
    return WeierstrassData(mu, lam, tuple(g), unit, certified=True)
