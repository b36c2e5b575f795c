"""Exact-arithmetic toolkit for Iwasawa invariants over quartic CM-fields:
p-adic power series, Weierstrass preparation, the two-variable ideal
dimension computation, class-number growth-law fitting, and the
class-group criterion checks over field records."""

from .padic import AtLeast, PadicApprox, UnitSplit, binom_zp, unit_split, valuation
from .series import (
    PadicPowerSeries,
    WeierstrassData,
    invert_unit,
    mu_lambda,
    one_unit_power,
    parse_series,
    weierstrass_prep,
)
from .lemma31 import (
    Branch,
    DimResult,
    IAlphaInstance,
    LowerBound,
    UNSTABLE,
    branch_classify,
    brute_force_dim,
    dim_ialpha,
    g_alpha,
    h_alpha,
    lemma31_min,
    scan_lemma31,
)
from .fitting import (
    ClassNumberSeries,
    InvariantFit,
    check_prediction,
    fit_invariants,
    predict_linear,
)
from .fields import (
    CriterionReport,
    Family,
    FieldRecord,
    check_condition,
    check_okano,
    compositum_poly,
    cyclotomic_first_layer_poly,
    load_records,
    poly_biquadratic,
    poly_cyclic,
    poly_nongalois,
    save_records,
    splits_completely,
    table_scan,
)

__version__ = "0.1.0"
