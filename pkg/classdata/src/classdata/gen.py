"""Record generation: map backend results into schema-1 JSON records.

Unknown is in-band (null); a stage failure yields a partial record with
the diagnostic folded into the provenance string, never a dropped row.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .backend import BackendFailure, GpBackend, RawResult
from .families import defining_poly

SCHEMA_VERSION = 1


@dataclass
class GenerationJob:
    family: str
    param_range: List[Dict[str, object]]
    p: int
    grh: bool = True
    jobs: int = 1
    out_path: str = "records.json"
    timeout: int = 3600


@dataclass
class BatchSummary:
    total: int
    complete: int
    partial: int
    failed: List[Dict[str, object]] = field(default_factory=list)
    elapsed: float = 0.0


def p_part(cyc: Optional[Sequence[int]], p: int) -> Optional[List[int]]:
    """Invariant factors of the p-Sylow subgroup, largest first."""
    if cyc is None:
        return None
    out = []
    for c in cyc:
        q = 1
        while c % p == 0:
            c //= p
            q *= p
        if q > 1:
            out.append(q)
    return out


def vp_order(cyc: Optional[Sequence[int]], p: int) -> Optional[int]:
    part = p_part(cyc, p)
    if part is None:
        return None
    v = 0
    for q in part:
        while q > 1:
            q //= p
            v += 1
    return v


def _is_cm(raw: RawResult) -> Optional[bool]:
    if raw.signature is None or raw.n_real_quadratic_subfields is None:
        return None
    # totally imaginary quartic over a real quadratic subfield
    return raw.signature == [0, 2] and raw.n_real_quadratic_subfields >= 1


def _provenance(raw: Optional[RawResult], grh: bool,
                failure: Optional[str]) -> str:
    bits = ["pari-gp"]
    if raw is not None and raw.version:
        bits.append(raw.version)
    bits.append("grh" if grh else "certified")
    if raw is not None and raw.errors:
        bits.append("errors:" + ",".join(
            f"{k}={v}" for k, v in sorted(raw.errors.items())))
    if failure:
        bits.append(f"backend_failure:{failure}")
    return " ".join(bits)


def gen_record(family: str, params: Dict[str, object], p: int,
               grh: bool = True,
               backend: Optional[GpBackend] = None) -> dict:
    """One schema-1 record dict; partial fields on backend trouble."""
    coeffs = defining_poly(family, params)
    backend = backend or GpBackend()
    raw: Optional[RawResult] = None
    failure: Optional[str] = None
    try:
        raw = backend.compute(coeffs, p, grh)
    except BackendFailure as exc:
        failure = str(exc)
    if raw is None:
        raw = RawResult()
    kplus_trivial: Optional[bool] = None
    if raw.cyc_kplus_cy1 is not None:
        kplus_trivial = p_part(raw.cyc_kplus_cy1, p) == []
    return {
        "schema": SCHEMA_VERSION,
        "family": family,
        "params": dict(params),
        "defining_poly": coeffs,
        "p": p,
        "is_cm": _is_cm(raw),
        "splits_completely": raw.splits,
        "clgroup_k": p_part(raw.cyc_k, p),
        "clgroup_k_cy1": p_part(raw.cyc_k_cy1, p),
        "clgroup_kplus_cy1_trivial": kplus_trivial,
        "vp_hk": vp_order(raw.cyc_k, p),
        "grh_assumed": grh,
        "backend": _provenance(raw, grh, failure),
    }


def _worker(args) -> dict:
    family, params, p, grh, timeout = args
    return gen_record(family, params, p, grh,
                      GpBackend(timeout=timeout))


def _write_atomic(records: Sequence[dict], path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(list(records), fh, indent=1)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _is_complete(rec: dict) -> bool:
    keys = ("is_cm", "splits_completely", "clgroup_k", "clgroup_k_cy1",
            "clgroup_kplus_cy1_trivial", "vp_hk")
    return all(rec[k] is not None for k in keys)


def gen_batch(job: GenerationJob,
              backend_factory=None) -> BatchSummary:
    """Map gen_record over the range and write the output atomically.

    `backend_factory` (per-call backend constructor) exists for tests;
    the default path runs one gp process per parameter set, in a worker
    pool when job.jobs > 1.
    """
    t0 = time.monotonic()
    records: List[dict] = []
    if backend_factory is not None or job.jobs <= 1:
        for params in job.param_range:
            backend = (backend_factory() if backend_factory
                       else GpBackend(timeout=job.timeout))
            records.append(gen_record(job.family, params, job.p,
                                      job.grh, backend))
    else:
        work = [(job.family, params, job.p, job.grh, job.timeout)
                for params in job.param_range]
        with ProcessPoolExecutor(max_workers=job.jobs) as pool:
            records = list(pool.map(_worker, work))
    _write_atomic(records, job.out_path)
    complete = sum(1 for r in records if _is_complete(r))
    failed = [{"params": r["params"], "backend": r["backend"]}
              for r in records if not _is_complete(r)]
    return BatchSummary(total=len(records), complete=complete,
                        partial=len(records) - complete,
                        failed=failed, elapsed=time.monotonic() - t0)
