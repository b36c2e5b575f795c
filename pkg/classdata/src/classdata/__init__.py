"""Producer of schema-1 field record files: class groups of quartic
CM-fields and their first cyclotomic-layer composita via PARI/GP."""

from .backend import BackendFailure, GpBackend, RawResult, gp_available
from .families import (
    DegenerateParams,
    defining_poly,
    poly_biquadratic,
    poly_cyclic,
    poly_nongalois,
)
from .gen import (
    BatchSummary,
    GenerationJob,
    gen_batch,
    gen_record,
    p_part,
    vp_order,
)

__version__ = "0.1.0"
