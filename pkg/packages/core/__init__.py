from .models.factorization import Basis, OrderedFactorization
from .utils.config import Settings, get_settings

__all__ = [
    "Basis",
    "OrderedFactorization",
    "Settings",
    "get_settings",
]
