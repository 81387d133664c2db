from .ideal_document import IdealDocument, IdealRequest, FrobeniusRequest, KIndexRequest, parse_ideal
from .report import AnalysisReport, GcmVerdict, KIndexInfo, OracleCompareReport

__all__ = [
    # Input documents
    "IdealDocument",
    "IdealRequest",
    "FrobeniusRequest",
    "KIndexRequest",
    "parse_ideal",

    # Reports
    "AnalysisReport",
    "GcmVerdict",
    "KIndexInfo",
    "OracleCompareReport",
]
