from contextlib import contextmanager
from typing import Dict, List
import logging

from fastapi import APIRouter, HTTPException, status

from app.config import settings
from app.exceptions import InputError, TheoremViolation
from app.schemas.ideal_document import FrobeniusRequest, IdealRequest, KIndexRequest
from app.schemas.report import (
    AnalysisReport,
    FrobeniusReport,
    GcmVerdict,
    HilbertReport,
    KIndexInfo,
    RadicalCompareReport,
)
from app.services.cech_service import k_buchsbaum_index
from app.services.report_service import (
    build_analysis_report,
    build_frobenius_report,
    build_gcm_verdict,
    build_hilbert_report,
    build_radical_report,
    k_index_info,
)

logger = logging.getLogger(__name__)

router = APIRouter(tags=["analysis"])


@contextmanager
def http_errors(operation: str):
    """Map input errors to 422 and internal inconsistencies to 500"""
    try:
        yield
    except InputError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except TheoremViolation as e:
        logger.error(f"{operation}: {e}")
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
                            detail=f"internal inconsistency: {e}")


@router.post("/analyze", response_model=AnalysisReport)
def analyze(request: IdealRequest):
    """Full local cohomology table, invariants, bound checks and k-index"""
    with http_errors("analyze"):
        doc = request.document()
        return build_analysis_report(doc, doc.field_spec())


@router.post("/check-gcm", response_model=GcmVerdict)
def check_gcm(request: IdealRequest):
    """Generalized Cohen-Macaulay verdict, homological and (for dim ≤ 3) combinatorial"""
    with http_errors("check-gcm"):
        doc = request.document()
        return build_gcm_verdict(doc, doc.field_spec())


@router.post("/hilbert", response_model=HilbertReport)
def hilbert(request: IdealRequest):
    with http_errors("hilbert"):
        doc = request.document()
        return build_hilbert_report(doc, doc.field_spec())


@router.post("/radical-compare", response_model=RadicalCompareReport)
def radical_compare(request: IdealRequest):
    with http_errors("radical-compare"):
        doc = request.document()
        return build_radical_report(doc, doc.field_spec())


@router.post("/k-index", response_model=KIndexInfo)
def k_index(request: KIndexRequest):
    """Strict k-Buchsbaum index with its witness and the theoretical bound"""
    with http_errors("k-index"):
        doc = request.document()
        return k_index_info(k_buchsbaum_index(doc.to_ideal(), doc.field_spec(), cap=request.cap))


@router.post("/frobenius", response_model=FrobeniusReport)
def frobenius(request: FrobeniusRequest):
    with http_errors("frobenius"):
        return build_frobenius_report(request.document(), request.exps)


@router.get("/fields")
def fields() -> Dict[str, List[str]]:
    """Accepted coefficient field specs"""
    return {"default": [settings.DEFAULT_FIELD], "accepted": ["q", "gf:<p>"]}
