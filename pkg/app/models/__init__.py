from .abelian import FgAbGroup, SNFResult
from .common import SuiteName, TruncationMode
from .complex import ChainMap, PerfectComplex
from .ktheory import K0Class
from .matrix import IntMatrix
from .report import SuiteTally, VerifyReport
from .spectrum import (
    GENERIC_POINT,
    ZSPEC,
    FinPoset,
    SpectrumModel,
    SupportDecomposition,
    ThickSupport,
    ZSpec,
)
from .subcategory import ThickSubcat, WideSubcat

__all__ = [
    "ChainMap",
    "FgAbGroup",
    "FinPoset",
    "GENERIC_POINT",
    "IntMatrix",
    "K0Class",
    "PerfectComplex",
    "SNFResult",
    "SpectrumModel",
    "SuiteName",
    "SuiteTally",
    "SupportDecomposition",
    "ThickSubcat",
    "ThickSupport",
    "TruncationMode",
    "VerifyReport",
    "WideSubcat",
    "ZSPEC",
    "ZSpec",
]
