"""HTTP service exposing the analysis, classification, and certification
pipelines."""

from typing import List, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import corpus
from .certify import (b_family, minimal_br_verdict, smoothable_rank_verdict,
                      verify_limit_certificate, wildness)
from .normalform import classify_m5
from .report import full_analysis, to_jsonable
from .tensor import Tensor3, permute
from .tensorio import TensorFileError, parse_tensor

app = FastAPI(title="minbr",
              description="Exact invariants and certificates for small "
                          "order-3 tensors over the rationals.")


class TensorEntry(BaseModel):
    i: int
    j: int
    k: int
    v: Union[int, str]


class TensorIn(BaseModel):
    corpus_key: Optional[str] = None
    dims: Optional[List[int]] = None
    entries: Optional[List[TensorEntry]] = None
    slices: Optional[List[List[List[Union[int, str]]]]] = None


class AnalyzeRequest(BaseModel):
    tensor: TensorIn
    factor: str = Field(default="A", pattern="^[ABC]$")
    verify_direct: bool = False


class ClassifyRequest(BaseModel):
    tensor: TensorIn


class CertifyRequest(BaseModel):
    tensor: TensorIn
    factor: str = Field(default="A", pattern="^[ABC]$")
    use_builtin_family: bool = False


_FACTOR_ORDER = {"A": ("A", "B", "C"), "B": ("B", "C", "A"),
                 "C": ("C", "A", "B")}


def _tensor_from(model):
    if model.corpus_key is not None:
        try:
            return corpus.get(model.corpus_key).tensor
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
    import json
    doc = {}
    if model.dims is not None:
        doc["dims"] = model.dims
    if model.entries is not None:
        doc["entries"] = [e.model_dump() for e in model.entries]
    if model.slices is not None:
        doc["slices"] = model.slices
    try:
        return parse_tensor(json.dumps(doc))
    except TensorFileError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/analyze")
def analyze(req: AnalyzeRequest):
    T = _tensor_from(req.tensor)
    if req.factor != "A":
        T = permute(T, _FACTOR_ORDER[req.factor])
    try:
        rep = full_analysis(T, verify_direct=req.verify_direct)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return to_jsonable(rep)


@app.post("/classify")
def classify(req: ClassifyRequest):
    T = _tensor_from(req.tensor)
    try:
        cls = classify_m5(T)
    except ValueError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    return {
        "label": cls.label,
        "p_rank": cls.p_rank,
        "symmetry": {"full": cls.dims.full, "ab": cls.dims.ab,
                     "bc": cls.dims.bc, "ca": cls.dims.ca},
    }


@app.post("/certify")
def certify(req: CertifyRequest):
    T = _tensor_from(req.tensor)
    rep = {}
    for v in (minimal_br_verdict(T), wildness(T)):
        rep[v.question] = {"answer": v.answer, "rule": v.rule,
                           "evidence": to_jsonable(v.evidence)}
    try:
        sv = smoothable_rank_verdict(T)
        rep[sv.question] = {"answer": sv.answer, "rule": sv.rule,
                            "evidence": to_jsonable(sv.evidence)}
    except AssertionError as exc:
        rep["minimal_smoothable_rank"] = {"answer": "error", "rule": str(exc)}
    if req.use_builtin_family:
        cert = verify_limit_certificate(b_family(), T, req.factor)
        rep["limit_certificate"] = {"verified": cert.verified,
                                    "reason": cert.reason}
    return rep


@app.get("/corpus")
def corpus_list():
    return {"keys": corpus.keys()}


@app.get("/corpus/{key}")
def corpus_show(key: str):
    try:
        entry = corpus.get(key)
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc))
    return {
        "key": entry.key,
        "dims": list(entry.tensor.dims),
        "entries": [[i, j, k, str(v)]
                    for (i, j, k, v) in entry.tensor.entries()],
        "expected": to_jsonable(entry.expected),
    }
