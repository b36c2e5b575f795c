import math

import pytest
from hypothesis import given, settings, strategies as st

from iwakit.errors import InsufficientPrecisionError
from iwakit.padic import (
    AtLeast,
    PadicApprox,
    binom_zp,
    unit_split,
    valuation,
    vp_factorial,
)


class TestValuation:
    def test_18_base3(self):
        assert valuation(PadicApprox(3, 18, 4)) == 2

    def test_zero_residue(self):
        assert valuation(PadicApprox(3, 0, 4)) == AtLeast(4)

    def test_coprime(self):
        assert valuation(PadicApprox(5, 7, 3)) == 0


class TestUnitSplit:
    def test_six_base3(self):
        s = unit_split(PadicApprox(3, 6, 4))
        assert s.u == 1
        assert s.unit_part.value == 2

    def test_exact_zero_convention(self):
        s = unit_split(PadicApprox.from_int(3, 0, 4, exact=True))
        assert s.u == 1
        assert s.unit_part.value == 0

    def test_unit_input(self):
        s = unit_split(PadicApprox(5, 7, 3))
        assert s.u == 0
        assert s.unit_part.value == 7

    def test_approximate_zero_rejected(self):
        with pytest.raises(InsufficientPrecisionError):
            unit_split(PadicApprox(3, 0, 4))

    @given(st.integers(min_value=1, max_value=3 ** 6 - 1))
    def test_reassembly(self, n):
        a = PadicApprox(3, n, 6)
        s = unit_split(a)
        assert 3 ** s.u * s.unit_part.value % 3 ** s.unit_part.precision \
            == a.value % 3 ** s.unit_part.precision
        assert s.unit_part.value % 3 != 0


class TestBinom:
    def test_linear(self):
        a = PadicApprox(3, 35, 4)
        assert binom_zp(a, 1).value == 35

    def test_minus_one_choose_two(self):
        a = PadicApprox.from_int(3, -1, 5, exact=True)
        assert binom_zp(a, 2, precision=3).value == 1

    def test_half_choose_two(self):
        # 1/2 = 41 mod 81; expected value frozen from the squaring oracle
        half = PadicApprox(3, 41, 4)
        assert binom_zp(half, 2, precision=3).value == 10

    def test_square_root_series_oracle(self):
        # the coefficients binom(1/2, i) must square to 1 + T
        p, n, terms = 3, 4, 10
        half = PadicApprox(p, pow(2, -1, p ** (n + vp_factorial(terms, p))),
                           n + vp_factorial(terms, p))
        cs = [binom_zp(half, i, precision=n).value for i in range(terms)]
        mod = p ** n
        square = [sum(cs[i] * cs[k - i] for i in range(k + 1)) % mod
                  for k in range(terms)]
        assert square[:3] == [1, 1, 0]
        assert all(c == 0 for c in square[2:])

    @given(st.integers(min_value=0, max_value=50),
           st.integers(min_value=0, max_value=8))
    def test_integer_agreement(self, a, i):
        approx = PadicApprox.from_int(3, a, 12, exact=True)
        got = binom_zp(approx, i, precision=6)
        assert got.value == math.comb(a, i) % 3 ** 6

    def test_insufficient_precision(self):
        a = PadicApprox(3, 5, 2)
        with pytest.raises(InsufficientPrecisionError):
            binom_zp(a, 9, precision=2)  # v_3(9!) = 4

    @settings(max_examples=60)
    @given(st.integers(min_value=0, max_value=3 ** 10 - 1),
           st.integers(min_value=0, max_value=3 ** 10 - 1),
           st.integers(min_value=0, max_value=12))
    def test_vandermonde(self, av, bv, n):
        p, out = 3, 4
        hi = out + vp_factorial(n, p)
        a = PadicApprox(p, av % p ** hi, hi)
        b = PadicApprox(p, bv % p ** hi, hi)
        lhs = binom_zp(a + b, n, precision=out).value
        rhs = sum(binom_zp(a, i, precision=out).value
                  * binom_zp(b, n - i, precision=out).value
                  for i in range(n + 1)) % p ** out
        assert lhs == rhs
