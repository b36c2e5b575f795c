"""Quartic field families, splitting tests, composita and the
class-group criterion checks.

Polynomials are lists of integer coefficients, leading coefficient
first.  Class-group data arrives in FieldRecord objects produced by an
external backend; this module only evaluates criteria on them.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, asdict
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy
from sympy import Poly, Symbol, factorint

from .errors import (
    DegenerateError,
    HypothesisViolationError,
    MissingRecordsError,
    NotDisjointError,
    ReducibleError,
)

_x = Symbol("x")
_y = Symbol("y")

SCHEMA_VERSION = 1

UNKNOWN = None  # tri-state fields use None for unknown


class Family(Enum):
    BIQUADRATIC = "BIQUADRATIC"
    CYCLIC = "CYCLIC"
    NON_GALOIS = "NON_GALOIS"
    CUSTOM = "CUSTOM"


def _poly(coeffs: Sequence[int]) -> Poly:
    return Poly(list(coeffs), _x, domain="ZZ")


def _assert_irreducible(coeffs: Sequence[int], what: str) -> None:
    if not _poly(coeffs).is_irreducible:
        raise ReducibleError(f"{what}: {coeffs} factors over Q")


def squarefree_part(n: int) -> int:
    out = 1
    for q, e in factorint(n).items():
        if e % 2:
            out *= q
    return out


def canonical_biquadratic_d(m: int, d: int) -> int:
    """The smaller of the two square-free d defining the same field
    Q(sqrt(m), sqrt(-d)): d itself and the square-free part of m*d."""
    return min(d, squarefree_part(m * d))


def poly_biquadratic(m: int, d: int) -> List[int]:
    """Minimal polynomial x^4 + 2(d-m)x^2 + (m+d)^2 of sqrt(m)+sqrt(-d)."""
    if m <= 1 or sympy.integer_nthroot(m, 2)[1]:
        raise DegenerateError(f"m = {m} must be a nonsquare > 1")
    if d < 1:
        raise DegenerateError(f"d = {d} must be positive")
    coeffs = [1, 0, 2 * (d - m), 0, (m + d) ** 2]
    _assert_irreducible(coeffs, f"biquadratic(m={m}, d={d})")
    return coeffs


def poly_cyclic(s: Union[int, Fraction],
                t: Union[int, Fraction]) -> List[int]:
    """Integral model of x^4 + 2s(t^2+1)x^2 + s^2 t^2 (t^2+1), cleared
    by the substitution x -> x/c with minimal c."""
    s, t = Fraction(s), Fraction(t)
    if s * t * (t * t + 1) == 0:
        raise DegenerateError("need s*t*(t^2+1) != 0")
    a2 = 2 * s * (t * t + 1)
    a0 = s * s * t * t * (t * t + 1)
    c = 1
    while (a2 * c * c).denominator != 1 or (a0 * c ** 4).denominator != 1:
        c += 1
    coeffs = [1, 0, int(a2 * c * c), 0, int(a0 * c ** 4)]
    _assert_irreducible(coeffs, f"cyclic(s={s}, t={t})")
    return coeffs


def poly_nongalois(m: int, d: int) -> List[int]:
    """Minimal polynomial x^4 + 2d x^2 + (d^2 - m) of sqrt(sqrt(m)-d)."""
    if sympy.integer_nthroot(m, 2)[1]:
        raise DegenerateError(f"m = {m} must be a nonsquare")
    if d * d == m:
        raise DegenerateError("d^2 = m is degenerate")
    coeffs = [1, 0, 2 * d, 0, d * d - m]
    _assert_irreducible(coeffs, f"nongalois(m={m}, d={d})")
    return coeffs


def splits_completely(coeffs: Sequence[int], p: int) -> Optional[bool]:
    """True iff the polynomial splits into distinct linear factors mod p.

    Returns None (indeterminate) when p divides the discriminant, where
    the mod-p factorization need not reflect prime splitting.
    """
    poly = _poly(coeffs)
    disc = sympy.discriminant(poly.as_expr(), _x)
    if disc % p == 0:
        return UNKNOWN
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # sympy modular-compare noise
        _, factors = sympy.factor_list(poly.as_expr(), _x, modulus=p)
    linear = [f for f, e in factors if sympy.degree(f, _x) == 1]
    total = sum(e for _, e in factors)
    return len(linear) == total == len(coeffs) - 1 \
        and all(e == 1 for _, e in factors)


def cyclotomic_first_layer_poly(p: int) -> List[int]:
    """Minimal polynomial of the degree-p subfield of the p^2-th
    cyclotomic field, by Gaussian periods."""
    pp = p * p
    # generator of (Z/p^2)^x
    order = p * (p - 1)
    g = 2
    while True:
        if sympy.gcd(g, pp) == 1:
            if sympy.n_order(g, pp) == order:
                break
        g += 1
    subgroup = sorted(pow(g, p * j, pp) for j in range(p - 1))
    cyclo = Poly([1 if i % p == 0 else 0
                  for i in range(p * (p - 1), -1, -1)], _y, domain="QQ")

    def zeta_pow(k: int) -> Poly:
        return Poly([1] + [0] * (k % pp), _y, domain="QQ").rem(cyclo)

    periods = []
    for j in range(p):
        rep = pow(g, j, pp)
        acc = Poly(0, _y, domain="QQ")
        for h in subgroup:
            acc = (acc + zeta_pow(rep * h % pp)).rem(cyclo)
        periods.append(acc)

    # expand prod_j (X - eta_j); coefficients live in Z[zeta] and must
    # collapse to rational integers
    coeffs = [Poly(1, _y, domain="QQ")]  # X-coefficients, low degree last
    for eta in periods:
        new = [Poly(0, _y, domain="QQ") for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            new[i] = (new[i] + c).rem(cyclo)  # X * c contribution
            new[i + 1] = (new[i + 1] - c * eta).rem(cyclo)
        coeffs = new
    out = []
    for c in coeffs:
        if c.degree() > 0:
            raise RuntimeError("period polynomial coefficient not rational")
        val = c.nth(0)
        if Fraction(int(val.numerator), int(val.denominator)).denominator != 1:
            raise RuntimeError("period polynomial coefficient not integral")
        out.append(int(val))
    return out  # leading coefficient first


def compositum_poly(f: Sequence[int], g: Sequence[int],
                    shift_bound: int = 20) -> List[int]:
    """Minimal polynomial of theta_f + c*theta_g via resultants.

    Tries c = 0, 1, ... until the resultant is squarefree, of full
    degree deg(f)*deg(g), and irreducible.
    """
    pf, pg = _poly(f), _poly(g)
    want = pf.degree() * pg.degree()
    for c in range(shift_bound + 1):
        # polynomial with root c * theta_g
        if c == 0:
            scaled = Poly([1, 0], _x, domain="ZZ")
        else:
            scaled = Poly([co * c ** i for i, co in enumerate(g)],
                          _x, domain="ZZ")
        res = sympy.resultant(pf.as_expr().subs(_x, _y),
                              scaled.as_expr().subs(_x, _x - _y), _y)
        cand = Poly(sympy.expand(res), _x, domain="ZZ")
        if cand.degree() != want:
            continue
        if sympy.gcd(cand.as_expr(), sympy.diff(cand.as_expr(), _x),
                     _x).has(_x):
            continue
        prim = [int(v) for v in cand.all_coeffs()]
        if not _poly(prim).is_irreducible:
            continue
        return prim
    raise NotDisjointError(
        f"no shift c <= {shift_bound} gave a valid compositum polynomial")


# ---------------------------------------------------------------------------
# records and criteria


@dataclass
class FieldRecord:
    family: Family
    params: Dict[str, object]
    defining_poly: List[int]
    p: int
    is_cm: Optional[bool] = UNKNOWN
    splits_completely: Optional[bool] = UNKNOWN
    clgroup_k: Optional[List[int]] = UNKNOWN
    clgroup_k_cy1: Optional[List[int]] = UNKNOWN
    clgroup_kplus_cy1_trivial: Optional[bool] = UNKNOWN
    vp_hk: Optional[int] = UNKNOWN
    grh_assumed: bool = True
    backend: str = ""

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["family"] = self.family.value
        d["schema"] = SCHEMA_VERSION
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "FieldRecord":
        d = dict(d)
        schema = d.pop("schema", None)
        if schema != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema tag: {schema!r}")
        d["family"] = Family(d["family"])
        return cls(**d)


def load_records(path: str) -> List[FieldRecord]:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = [data]
    return [FieldRecord.from_json_dict(d) for d in data]


def save_records(records: Sequence[FieldRecord], path: str) -> None:
    with open(path, "w") as fh:
        json.dump([r.to_json_dict() for r in records], fh, indent=1)
        fh.write("\n")


def p_rank(invariants: Sequence[int]) -> int:
    return len(invariants)


def check_okano(r: FieldRecord) -> bool:
    """Rank >= 2 of the p-class group of k forces a non-trivial Iwasawa
    module over the maximal multiple Z_p-extension."""
    if r.p % 2 == 0 or r.p < 3:
        raise HypothesisViolationError("p must be an odd prime")
    if r.splits_completely is not True:
        raise HypothesisViolationError("p must split completely (known)")
    if r.is_cm is not True:
        raise HypothesisViolationError("k must be a CM field (known)")
    if r.clgroup_k is UNKNOWN:
        raise HypothesisViolationError("class group of k unknown")
    return p_rank(r.clgroup_k) >= 2


class HypothesisStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CriterionReport:
    hypotheses: Dict[str, HypothesisStatus]
    conclusion_zp2: bool
    conclusion_nontrivial_xtilde: bool
    okano_only: bool
    grh_assumed: bool

    @property
    def all_pass(self) -> bool:
        return all(v is HypothesisStatus.PASS
                   for v in self.hypotheses.values())


def _tri(value: Optional[bool]) -> HypothesisStatus:
    if value is UNKNOWN:
        return HypothesisStatus.UNKNOWN
    return HypothesisStatus.PASS if value else HypothesisStatus.FAIL


def check_condition(r: FieldRecord) -> CriterionReport:
    """Evaluate the full criterion on one record.

    Conclusions (X over the cyclotomic tower is Z_p^2; the module over
    the maximal multiple Z_p-extension is non-trivial) are set only
    when every hypothesis passes.  Missing data yields UNKNOWN for the
    affected hypothesis, never a pass.
    """
    hyp: Dict[str, HypothesisStatus] = {}
    hyp["p_odd"] = (HypothesisStatus.PASS if r.p % 2 == 1 and r.p >= 3
                    else HypothesisStatus.FAIL)
    hyp["splits_completely"] = _tri(r.splits_completely)
    hyp["is_cm"] = _tri(r.is_cm)
    hyp["real_layer_class_group_trivial"] = _tri(r.clgroup_kplus_cy1_trivial)
    hyp["rank_k_eq_2"] = (HypothesisStatus.UNKNOWN if r.clgroup_k is UNKNOWN
                          else _tri(p_rank(r.clgroup_k) == 2))
    hyp["rank_k_cy1_eq_2"] = (HypothesisStatus.UNKNOWN
                              if r.clgroup_k_cy1 is UNKNOWN
                              else _tri(p_rank(r.clgroup_k_cy1) == 2))
    all_pass = all(v is HypothesisStatus.PASS for v in hyp.values())
    okano_only = False
    if not all_pass:
        try:
            okano_only = check_okano(r)
        except HypothesisViolationError:
            okano_only = False
    return CriterionReport(hyp, all_pass, all_pass, okano_only,
                           r.grh_assumed)


@dataclass(frozen=True)
class ScanResult:
    family: Family
    count: int
    first10: List[Dict[str, object]]
    passing: List[Dict[str, object]]


_ORDER_KEY = {Family.BIQUADRATIC: "d", Family.CYCLIC: "s",
              Family.NON_GALOIS: "d", Family.CUSTOM: "d"}


def table_scan(family: Family, param_range: Sequence[Dict[str, object]],
               records: Sequence[FieldRecord]) -> ScanResult:
    """Filter records over a parameter range by the full criterion.

    Every requested parameter set must be covered by a record.
    """
    index = {}
    for r in records:
        if r.family is family:
            index[tuple(sorted(r.params.items()))] = r
    missing = [ps for ps in param_range
               if tuple(sorted(ps.items())) not in index]
    if missing:
        raise MissingRecordsError(missing)
    passing = []
    for ps in param_range:
        r = index[tuple(sorted(ps.items()))]
        if check_condition(r).all_pass:
            passing.append(dict(ps))
    key = _ORDER_KEY[family]
    passing.sort(key=lambda ps: ps.get(key, 0))
    return ScanResult(family, len(passing), passing[:10], passing)
