"""Exact arithmetic in Z_p at finite precision.

Elements are residues mod p^N with the precision N carried explicitly.
Every operation states the precision of its output and never returns
fewer correct digits than claimed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InsufficientPrecisionError, MismatchedPrimeError


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    if p in (3, 5, 7):
        return True
    for q in range(3, math.isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


def vp_int(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_factorial(n: int, p: int) -> int:
    """Legendre's formula for v_p(n!)."""
    v = 0
    q = p
    while q <= n:
        v += n // q
        q *= p
    return v


@dataclass(frozen=True)
class AtLeast:
    """Lower bound on a valuation: the element vanishes mod p^bound."""

    bound: int

    def __repr__(self):
        return f"AtLeast({self.bound})"


@dataclass(frozen=True)
class PadicApprox:
    """A residue in Z/p^N standing for an element of Z_p known mod p^N.

    `exact_int`, when set, asserts the element is exactly that rational
    integer; this is what licenses the alpha = 0 convention in
    `unit_split` and lets callers lift to any precision.
    """

    p: int
    value: int
    precision: int
    exact_int: Optional[int] = None

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if not 0 <= self.value < self.p ** self.precision:
            raise ValueError("value out of range [0, p^N)")
        if self.exact_int is not None:
            if self.exact_int % self.p ** self.precision != self.value:
                raise ValueError("exact_int inconsistent with stored residue")

    @classmethod
    def from_int(cls, p: int, n: int, precision: int,
                 exact: bool = False) -> "PadicApprox":
        return cls(p, n % p ** precision, precision,
                   exact_int=n if exact else None)

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    def lift(self, precision: int) -> "PadicApprox":
        """Return the element at the requested precision.

        Lifting above the stored precision is only possible for
        exact integers.
        """
        if precision <= self.precision:
            return PadicApprox(self.p, self.value % self.p ** precision,
                               precision, exact_int=self.exact_int)
        if self.exact_int is None:
            raise InsufficientPrecisionError(
                f"known mod p^{self.precision}, need mod p^{precision}")
        return PadicApprox.from_int(self.p, self.exact_int, precision,
                                    exact=True)

    def _coerce(self, other: Union["PadicApprox", int]) -> "PadicApprox":
        if isinstance(other, int):
            return PadicApprox.from_int(self.p, other, self.precision,
                                        exact=True)
        if other.p != self.p:
            raise MismatchedPrimeError(f"{self.p} vs {other.p}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        exact = (self.exact_int + other.exact_int
                 if self.exact_int is not None and other.exact_int is not None
                 else None)
        return PadicApprox(self.p, (self.value + other.value) % self.p ** n,
                           n, exact_int=exact)

    def __sub__(self, other):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        exact = (self.exact_int - other.exact_int
                 if self.exact_int is not None and other.exact_int is not None
                 else None)
        return PadicApprox(self.p, (self.value - other.value) % self.p ** n,
                           n, exact_int=exact)

    def __mul__(self, other):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        exact = (self.exact_int * other.exact_int
                 if self.exact_int is not None and other.exact_int is not None
                 else None)
        return PadicApprox(self.p, (self.value * other.value) % self.p ** n,
                           n, exact_int=exact)

    def __neg__(self):
        exact = -self.exact_int if self.exact_int is not None else None
        return PadicApprox(self.p, (-self.value) % self.modulus,
                           self.precision, exact_int=exact)

    def is_exact_zero(self) -> bool:
        return self.exact_int == 0


@dataclass(frozen=True)
class UnitSplit:
    """The split alpha = p^u * unit_part, with the alpha = 0 convention
    (u = 1, unit part 0)."""

    u: int
    unit_part: PadicApprox


def valuation(x: PadicApprox) -> Union[int, AtLeast]:
    """v_p of the stored residue; AtLeast(N) when it vanishes mod p^N."""
    if x.value == 0:
        return AtLeast(x.precision)
    return vp_int(x.value, x.p)


def unit_split(alpha: PadicApprox) -> UnitSplit:
    """Split alpha as p^u * alpha' with alpha' a unit.

    An approximate zero cannot be split; only an asserted-exact zero
    takes the conventional value (u = 1, alpha' = 0).
    """
    if alpha.value == 0:
        if alpha.is_exact_zero():
            return UnitSplit(1, PadicApprox(alpha.p, 0, alpha.precision,
                                            exact_int=0))
        raise InsufficientPrecisionError(
            "alpha vanishes mod p^N and is not asserted exact")
    u = vp_int(alpha.value, alpha.p)
    n = alpha.precision - u
    if n < 1:
        raise InsufficientPrecisionError(
            "no digits left for the unit part after removing p^u")
    exact = None
    if alpha.exact_int is not None and alpha.exact_int % alpha.p ** u == 0:
        exact = alpha.exact_int // alpha.p ** u
    unit = PadicApprox(alpha.p, (alpha.value // alpha.p ** u) % alpha.p ** n,
                       n, exact_int=exact)
    return UnitSplit(u, unit)


def binom_zp(alpha: PadicApprox, i: int,
             precision: Optional[int] = None) -> PadicApprox:
    """Generalized binomial coefficient alpha(alpha-1)...(alpha-i+1)/i!.

    Division by i! loses v_p(i!) digits, so the input must carry
    precision N + v_p(i!) to deliver the result mod p^N.
    """
    if i < 0:
        raise ValueError("i must be non-negative")
    p = alpha.p
    w = vp_factorial(i, p)
    if precision is None:
        precision = alpha.precision - w
        if precision < 1:
            raise InsufficientPrecisionError(
                f"v_p({i}!) = {w} eats all {alpha.precision} digits")
    else:
        alpha = alpha.lift(precision + w)
    if i == 0:
        return PadicApprox.from_int(p, 1, precision, exact=True)
    mod_hi = p ** (precision + w)
    num = 1
    a = alpha.value
    for j in range(i):
        num = num * (a - j) % mod_hi
    # num is divisible by p^w as an integer residue (the true product is).
    fact_unit = math.factorial(i) // p ** w
    mod_out = p ** precision
    val = (num // p ** w) * pow(fact_unit, -1, mod_out) % mod_out
    exact = None
    if alpha.exact_int is not None:
        exact = math.comb(alpha.exact_int, i) if alpha.exact_int >= 0 else None
        if alpha.exact_int < 0:
            # comb for negative upper index via the reflection rule
            exact = (-1) ** i * math.comb(-alpha.exact_int + i - 1, i)
    return PadicApprox(p, val, precision, exact_int=exact)
