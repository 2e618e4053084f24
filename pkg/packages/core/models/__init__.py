from .factorization import Basis, OrderedFactorization
from .records import GraphReport, OutputRecord, VerifyReport

__all__ = [
    "Basis",
    "OrderedFactorization",
    "GraphReport",
    "OutputRecord",
    "VerifyReport",
]
