"""Prime fields and dense polynomials over them.

Arithmetic is delegated to ``sympy.polys.galoistools``, which works on
descending coefficient lists; ``FqPoly`` stores ascending coefficients and
converts at the boundary.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from tokenize import TokenError

from sympy import GF, Poly, Symbol, isprime
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_compose,
    gf_div,
    gf_eval,
    gf_mul,
    gf_neg,
    gf_pow,
    gf_sub,
)
from sympy.polys.polyerrors import BasePolynomialError

from packages.core.errors import BadArgumentsError

_x = Symbol("x")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@dataclass(frozen=True, slots=True)
class PrimeField:
    """The field F_p of residues 0..p-1."""

    p: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise BadArgumentsError(f"{self.p} is not prime")

    def __str__(self) -> str:
        return f"F_{self.p}"

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.p))

    def nonzero(self) -> range:
        return range(1, self.p)

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return pow(a, -1, self.p)

    def divides(self, n: int) -> bool:
        """True iff the characteristic divides ``n`` (the wild case)."""
        return n % self.p == 0


@dataclass(frozen=True, slots=True)
class FqPoly:
    """Polynomial over a prime field with ascending, trailing-zero-free coefficients."""

    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.field.p
        reduced = [int(c) % p for c in self.coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        object.__setattr__(self, "coeffs", tuple(reduced))

    # Construction

    @classmethod
    def zero(cls, field: PrimeField) -> "FqPoly":
        return cls(field, ())

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> "FqPoly":
        return cls(field, (c,))

    @classmethod
    def x(cls, field: PrimeField) -> "FqPoly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: PrimeField, k: int, c: int = 1) -> "FqPoly":
        return cls(field, (0,) * k + (c,))

    @classmethod
    def from_key(cls, field: PrimeField, key: int) -> "FqPoly":
        """Inverse of :attr:`key`."""
        digits: list[int] = []
        while key:
            key, digit = divmod(key, field.p)
            digits.append(digit)
        return cls(field, tuple(digits))

    @classmethod
    def parse(cls, text: str, field: PrimeField) -> "FqPoly":
        """Parse text such as ``"x^4+2*x^2+x"``; coefficients are reduced mod p.

        Raises:
            ValueError: If ``text`` is not a polynomial in x with integer coefficients.
        """
        try:
            expr = parse_expr(text, local_dict={"x": _x}, transformations=_TRANSFORMATIONS)
            poly = Poly(expr, _x, domain=GF(field.p))
        except (SyntaxError, TypeError, TokenError, SympifyError, BasePolynomialError) as exc:
            raise ValueError(f"not a polynomial over {field}: {text!r}") from exc
        return cls._from_desc(field, [int(c) for c in poly.all_coeffs()])

    @classmethod
    def _from_desc(cls, field: PrimeField, desc: Sequence[int]) -> "FqPoly":
        return cls(field, tuple(int(c) for c in reversed(desc)))

    def _desc(self) -> list[int]:
        return list(reversed(self.coeffs))

    # Predicates and accessors

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_original(self) -> bool:
        return self.coefficient(0) == 0

    def is_monic_original(self) -> bool:
        return self.is_monic() and self.is_original() and self.degree >= 1

    @property
    def key(self) -> int:
        """Little-endian base-p encoding of the coefficients."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * self.field.p + c
        return result

    # Arithmetic

    def _coerce(self, other: "FqPoly | int") -> "FqPoly":
        if isinstance(other, FqPoly):
            if other.field != self.field:
                raise ValueError(f"cannot mix {self.field} and {other.field}")
            return other
        return FqPoly.constant(self.field, other)

    def __add__(self, other: "FqPoly | int") -> "FqPoly":
        other = self._coerce(other)
        return FqPoly._from_desc(self.field, gf_add(self._desc(), other._desc(), self.field.p, ZZ))

    __radd__ = __add__

    def __sub__(self, other: "FqPoly | int") -> "FqPoly":
        other = self._coerce(other)
        return FqPoly._from_desc(self.field, gf_sub(self._desc(), other._desc(), self.field.p, ZZ))

    def __rsub__(self, other: int) -> "FqPoly":
        return self._coerce(other) - self

    def __neg__(self) -> "FqPoly":
        return FqPoly._from_desc(self.field, gf_neg(self._desc(), self.field.p, ZZ))

    def __mul__(self, other: "FqPoly | int") -> "FqPoly":
        other = self._coerce(other)
        return FqPoly._from_desc(self.field, gf_mul(self._desc(), other._desc(), self.field.p, ZZ))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FqPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return FqPoly._from_desc(self.field, gf_pow(self._desc(), exponent, self.field.p, ZZ))

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = gf_div(self._desc(), other._desc(), self.field.p, ZZ)
        return FqPoly._from_desc(self.field, quotient), FqPoly._from_desc(self.field, remainder)

    def compose(self, inner: "FqPoly") -> "FqPoly":
        """``self ∘ inner``, i.e. ``self(inner(x))``."""
        inner = self._coerce(inner)
        return FqPoly._from_desc(
            self.field, gf_compose(self._desc(), inner._desc(), self.field.p, ZZ)
        )

    def evaluate(self, a: int) -> int:
        return int(gf_eval(self._desc(), a % self.field.p, self.field.p, ZZ))

    # Rendering

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                pieces.append(str(c))
            else:
                power = "x" if k == 1 else f"x^{k}"
                pieces.append(power if c == 1 else f"{c}*{power}")
        return "+".join(pieces)

    def __repr__(self) -> str:
        return f"FqPoly({self}, p={self.field.p})"
