"""Spot-reproduction of the published table rows with a live backend.

Skipped when no gp binary is available: every record here needs real
class-group computations (the degree-12 composita can take minutes to
hours each).  The consumer-side criterion tests run on canned records
in the consumer package regardless.
"""

import pytest

from classdata.backend import gp_available
from classdata.gen import gen_record

pytestmark = pytest.mark.skipif(not gp_available(),
                                reason="gp binary not available")

iwakit = pytest.importorskip("iwakit")


def _report(family, m, d):
    rec = gen_record(family, {"m": m, "d": d}, 3)
    return iwakit.check_condition(iwakit.FieldRecord.from_json_dict(rec))


@pytest.mark.parametrize("d", [26, 431, 473, 563, 566])
def test_biquadratic_m7_members_pass(d):
    assert _report("BIQUADRATIC", 7, d).all_pass


@pytest.mark.parametrize("d", [1, 2, 3, 5, 10])
def test_biquadratic_m7_nonmembers_fail(d):
    assert not _report("BIQUADRATIC", 7, d).all_pass


@pytest.mark.parametrize("d", [89, 557])
def test_biquadratic_m10_members_pass(d):
    assert _report("BIQUADRATIC", 10, d).all_pass


def test_nongalois_m13_member_passes():
    assert _report("NON_GALOIS", 13, 250).all_pass
