"""Ordered factorizations of n and their bases."""

from collections import Counter
from math import prod

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from packages.core.errors import FactorizationParseError


class Basis(BaseModel):
    """Unordered multiset of the parts of a factorization, stored sorted."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[int, ...] = Field(default=())

    @model_validator(mode="after")
    def check_sorted(self) -> "Basis":
        if list(self.entries) != sorted(self.entries):
            raise ValueError("basis entries must be sorted")
        if any(x < 2 for x in self.entries):
            raise ValueError("basis entries must be at least 2")
        return self

    @classmethod
    def of(cls, parts: tuple[int, ...] | list[int]) -> "Basis":
        return cls(entries=tuple(sorted(parts)))

    @property
    def product(self) -> int:
        return prod(self.entries)

    def counts(self) -> Counter[int]:
        return Counter(self.entries)


class OrderedFactorization(BaseModel):
    """A sequence of nontrivial divisors of ``n`` whose product is ``n``.

    The empty sequence is the only factorization of 1. A single part ``(n,)``
    is the trivial factorization of a composite or prime ``n``.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    parts: tuple[int, ...]

    @model_validator(mode="after")
    def check_parts(self) -> "OrderedFactorization":
        for i, part in enumerate(self.parts):
            if part < 2:
                raise ValueError(f"part {i} is {part}, parts must be at least 2")
            if self.n % part:
                raise ValueError(f"part {i} ({part}) does not divide {self.n}")
        if prod(self.parts) != self.n:
            raise ValueError(f"parts {self.parts} multiply to {prod(self.parts)}, not {self.n}")
        return self

    @classmethod
    def of(cls, *parts: int) -> "OrderedFactorization":
        """Build a factorization whose ``n`` is the product of ``parts``."""
        return cls(n=prod(parts), parts=tuple(parts))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "OrderedFactorization":
        """Parse the comma-separated form, e.g. ``"12,420"``.

        Args:
            text: Comma-separated parts.
            n: Expected product. When omitted the product of the parts is used.

        Returns:
            The parsed factorization.

        Raises:
            FactorizationParseError: On a malformed part, a part below 2, a part
                not dividing ``n`` or a wrong product.
        """
        raw = [chunk.strip() for chunk in text.split(",")]
        parts: list[int] = []
        for i, chunk in enumerate(raw, start=1):
            try:
                value = int(chunk)
            except ValueError:
                raise FactorizationParseError(text, i, f"{chunk!r} is not an integer") from None
            if value < 2:
                raise FactorizationParseError(text, i, f"part {value} is below 2")
            if n is not None and n % value:
                raise FactorizationParseError(text, i, f"{value} does not divide {n}")
            parts.append(value)
        expected = prod(parts) if n is None else n
        try:
            return cls(n=expected, parts=tuple(parts))
        except ValidationError as exc:
            raise FactorizationParseError(text, len(parts), str(exc.errors()[0]["msg"])) from exc

    @property
    def basis(self) -> Basis:
        return Basis.of(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)
