from .components import compose, dickson, exp_component, original_shift
from .decompose import (
    CollisionForm,
    ExponentialForm,
    TrigonometricForm,
    classify_two_collision,
    gcd_split,
    h_adic_expand,
    ritt_move,
    tame_decompose,
)
from .field import FqPoly, PrimeField

__all__ = [
    "compose",
    "dickson",
    "exp_component",
    "original_shift",
    "CollisionForm",
    "ExponentialForm",
    "TrigonometricForm",
    "classify_two_collision",
    "gcd_split",
    "h_adic_expand",
    "ritt_move",
    "tame_decompose",
    "FqPoly",
    "PrimeField",
]
