"""PARI/GP subprocess backend.

One gp run per field.  The generated script computes, stage by stage:
signature and real quadratic subfields, prime decomposition at p, the
class group of the quartic field k, of the degree-4p compositum with
the first cyclotomic layer, and of the degree-2p real compositum.
Each stage is wrapped so a failure downgrades its outputs to unknown
instead of killing the record.

Class-group certification: bnfinit results are GRH-conditional; with
grh=False the script additionally runs bnfcertify and a stage whose
certification fails reports an error.
"""

from __future__ import annotations

import shutil
import subprocess
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

GP_BINARY = "gp"
DEFAULT_TIMEOUT = 3600
DEFAULT_STACK_MB = 512


class BackendFailure(RuntimeError):
    """gp unavailable, crashed, timed out, or returned garbage."""


@dataclass
class RawResult:
    """Parsed stage outputs; absent keys mean the stage failed."""

    signature: Optional[List[int]] = None
    n_real_quadratic_subfields: Optional[int] = None
    splits: Optional[bool] = None
    cyc_k: Optional[List[int]] = None
    cyc_k_cy1: Optional[List[int]] = None
    cyc_kplus_cy1: Optional[List[int]] = None
    version: str = ""
    errors: Dict[str, str] = field(default_factory=dict)


def gp_available() -> bool:
    return shutil.which(GP_BINARY) is not None


def build_script(coeffs: Sequence[int], p: int, grh: bool,
                 stack_mb: int = DEFAULT_STACK_MB) -> str:
    cert = 0 if grh else 1
    return f"""\
default(parisize, {stack_mb * 1024 * 1024});
p = {p};
cert = {cert};
f = Pol({list(coeffs)});
ok = 1;
iferr(
  nf = nfinit(f);
  print("SIG=", nf.sign);
  dec = idealprimedec(nf, p);
  splits = (#dec == poldegree(f)) && (vecmax([pr.e | pr <- dec]) == 1) \\
           && (vecmax([pr.f | pr <- dec]) == 1);
  print("SPLITS=", splits);
  reals = [s[1] | s <- nfsubfields(f, 2), polsturm(s[1]) == 2];
  print("NREAL=", #reals);
, E, print("ERR=nf ", errname(E)); ok = 0);
if(ok,
  iferr(
    bnf = bnfinit(f, 1);
    if(cert, if(bnfcertify(bnf) != 1, error("bnfcertify failed")));
    print("CLK=", bnf.cyc);
  , E, print("ERR=clk ", errname(E)));
  cyc1 = polsubcyclo(p^2, p);
  iferr(
    cands = [g | g <- polcompositum(f, cyc1), poldegree(g) == 4*p];
    if(#cands == 0, error("compositum not of full degree"));
    bnf12 = bnfinit(polredbest(cands[1]), 1);
    if(cert, if(bnfcertify(bnf12) != 1, error("bnfcertify failed")));
    print("CLK1=", bnf12.cyc);
  , E, print("ERR=clk1 ", errname(E)));
  iferr(
    if(#reals == 0, error("no real quadratic subfield"));
    cands = [g | g <- polcompositum(reals[1], cyc1), poldegree(g) == 2*p];
    if(#cands == 0, error("real compositum not of full degree"));
    bnf6 = bnfinit(polredbest(cands[1]), 1);
    if(cert, if(bnfcertify(bnf6) != 1, error("bnfcertify failed")));
    print("CLKP1=", bnf6.cyc);
  , E, print("ERR=clkp1 ", errname(E)));
);
print("VERSION=", version());
quit;
"""


def _parse_intvec(text: str) -> List[int]:
    text = text.strip().strip("[]~")
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def parse_output(out: str) -> RawResult:
    res = RawResult()
    seen = False
    for line in out.splitlines():
        line = line.strip()
        if "=" not in line:
            continue
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        seen = True
        if key == "SIG":
            res.signature = _parse_intvec(val)
        elif key == "SPLITS":
            res.splits = val == "1"
        elif key == "NREAL":
            res.n_real_quadratic_subfields = int(val)
        elif key == "CLK":
            res.cyc_k = _parse_intvec(val)
        elif key == "CLK1":
            res.cyc_k_cy1 = _parse_intvec(val)
        elif key == "CLKP1":
            res.cyc_kplus_cy1 = _parse_intvec(val)
        elif key == "VERSION":
            res.version = val
        elif key == "ERR":
            stage, _, msg = val.partition(" ")
            res.errors[stage] = msg or "unknown error"
    if not seen:
        raise BackendFailure(f"unparseable gp output: {out[:500]!r}")
    return res


class GpBackend:
    def __init__(self, timeout: int = DEFAULT_TIMEOUT,
                 stack_mb: int = DEFAULT_STACK_MB):
        self.timeout = timeout
        self.stack_mb = stack_mb

    def compute(self, coeffs: Sequence[int], p: int,
                grh: bool = True) -> RawResult:
        if not gp_available():
            raise BackendFailure("gp binary not found on PATH")
        script = build_script(coeffs, p, grh, self.stack_mb)
        try:
            proc = subprocess.run(
                [GP_BINARY, "-q", "-f"], input=script, text=True,
                capture_output=True, timeout=self.timeout)
        except subprocess.TimeoutExpired as exc:
            raise BackendFailure(
                f"gp timed out after {self.timeout}s") from exc
        if proc.returncode != 0:
            raise BackendFailure(
                f"gp exited {proc.returncode}: {proc.stderr[:500]}")
        return parse_output(proc.stdout)
