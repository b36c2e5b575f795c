"""Defining polynomials for the three quartic families.

Coefficient lists are leading coefficient first, matching the record
schema.  Irreducibility and field arithmetic are the backend's job;
only cheap degeneracy checks happen here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Union

FAMILIES = ("BIQUADRATIC", "CYCLIC", "NON_GALOIS")


class DegenerateParams(ValueError):
    pass


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


def poly_biquadratic(m: int, d: int) -> List[int]:
    """x^4 + 2(d-m)x^2 + (m+d)^2, a root being sqrt(m) + sqrt(-d)."""
    if m <= 1 or _is_square(m):
        raise DegenerateParams(f"m = {m} must be a nonsquare > 1")
    if d < 1:
        raise DegenerateParams(f"d = {d} must be positive")
    return [1, 0, 2 * (d - m), 0, (m + d) ** 2]


def poly_cyclic(s: Union[int, Fraction],
                t: Union[int, Fraction]) -> List[int]:
    """Integral model of x^4 + 2s(t^2+1)x^2 + s^2 t^2 (t^2+1)."""
    s, t = Fraction(s), Fraction(t)
    if s * t * (t * t + 1) == 0:
        raise DegenerateParams("need s*t*(t^2+1) != 0")
    a2 = 2 * s * (t * t + 1)
    a0 = s * s * t * t * (t * t + 1)
    c = 1
    while (a2 * c * c).denominator != 1 or (a0 * c ** 4).denominator != 1:
        c += 1
    return [1, 0, int(a2 * c * c), 0, int(a0 * c ** 4)]


def poly_nongalois(m: int, d: int) -> List[int]:
    """x^4 + 2d x^2 + (d^2 - m), a root being sqrt(sqrt(m) - d)."""
    if _is_square(m):
        raise DegenerateParams(f"m = {m} must be a nonsquare")
    if d * d == m:
        raise DegenerateParams("d^2 = m is degenerate")
    return [1, 0, 2 * d, 0, d * d - m]


def defining_poly(family: str, params: Dict[str, object]) -> List[int]:
    if family == "BIQUADRATIC":
        return poly_biquadratic(int(params["m"]), int(params["d"]))
    if family == "CYCLIC":
        return poly_cyclic(Fraction(str(params["s"])),
                           Fraction(str(params["t"])))
    if family == "NON_GALOIS":
        return poly_nongalois(int(params["m"]), int(params["d"]))
    raise DegenerateParams(f"unknown family: {family}")
