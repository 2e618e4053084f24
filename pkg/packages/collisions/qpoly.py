"""Integer polynomials in the formal field size q."""

from collections.abc import Mapping
from tokenize import TokenError

from sympy import Integer, Poly, Symbol, ZZ
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

q = Symbol("q")

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class QPolynomial:
    """Immutable polynomial in ``q`` with arbitrary-precision integer coefficients.

    Backed by a sympy ``Poly`` over ``ZZ``; zero coefficients are never stored.
    """

    __slots__ = ("_poly",)

    def __init__(self, poly: Poly):
        if poly.gens != (q,) or poly.get_domain() != ZZ:
            poly = Poly(poly.as_expr(), q, domain=ZZ)
        self._poly = poly

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "QPolynomial":
        for exponent in terms:
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
        nonzero = {(e,): int(c) for e, c in terms.items() if c}
        if not nonzero:
            return cls(Poly(Integer(0), q, domain=ZZ))
        return cls(Poly.from_dict(nonzero, q, domain=ZZ))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPolynomial":
        return cls.from_terms({exponent: coefficient})

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls.from_terms({})

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls.monomial(0)

    @classmethod
    def parse(cls, text: str) -> "QPolynomial":
        """Parse a rendering such as ``"2*q^62 - q^61"``.

        Raises:
            ValueError: If ``text`` is not an integer polynomial in q.
        """
        try:
            expr = parse_expr(text, local_dict={"q": q}, transformations=_TRANSFORMATIONS)
            return cls(Poly(expr, q, domain=ZZ))
        except (SyntaxError, TypeError, TokenError, SympifyError, BasePolynomialError) as exc:
            raise ValueError(f"not an integer polynomial in q: {text!r}") from exc

    @property
    def terms(self) -> dict[int, int]:
        """Exponent to coefficient, nonzero coefficients only."""
        if self._poly.is_zero:
            return {}
        return {int(monom[0]): int(coeff) for monom, coeff in self._poly.terms()}

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return -1 if self._poly.is_zero else int(self._poly.degree())

    @property
    def leading_coefficient(self) -> int:
        return int(self._poly.LC())

    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    def eval(self, value: int) -> int:
        return int(self._poly.eval(value))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        return QPolynomial(self._poly + other._poly)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return QPolynomial(self._poly - other._poly)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        return QPolynomial(self._poly * other._poly)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-self._poly)

    def __pow__(self, exponent: int) -> "QPolynomial":
        return QPolynomial(self._poly**exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self) -> str:
        return f"QPolynomial({str(self)!r})"

    def __str__(self) -> str:
        terms = sorted(self.terms.items(), reverse=True)
        if not terms:
            return "0"
        pieces: list[str] = []
        for i, (exponent, coefficient) in enumerate(terms):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if i == 0:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if coefficient > 0 else '-'} {body}")
        return " ".join(pieces)

    def to_pairs(self) -> list[tuple[int, str]]:
        """Descending ``(exponent, decimal coefficient)`` pairs for JSON."""
        return [(e, str(c)) for e, c in sorted(self.terms.items(), reverse=True)]
