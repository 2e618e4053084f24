"""Records emitted by the command-line interface."""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from packages.collisions.qpoly import QPolynomial


class OutputRecord(BaseModel):
    """One symbolic count, optionally evaluated at some field sizes."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    polynomial: str = Field(..., description="Rendering such as 2*q^3 - q^2")
    terms: list[tuple[int, str]] = Field(
        default_factory=list, description="Descending (exponent, coefficient) pairs"
    )
    evaluations: Optional[dict[str, str]] = None

    @field_validator("polynomial")
    @classmethod
    def check_round_trip(cls, v: str) -> str:
        if str(QPolynomial.parse(v)) != v:
            raise ValueError(f"{v!r} is not in canonical rendering")
        return v

    @classmethod
    def from_count(
        cls, n: int, count: QPolynomial, at: Optional[list[int]] = None
    ) -> "OutputRecord":
        evaluations = {str(q): str(count.eval(q)) for q in at} if at else None
        return cls(n=n, polynomial=str(count), terms=count.to_pairs(), evaluations=evaluations)

    def parsed(self) -> QPolynomial:
        return QPolynomial.parse(self.polynomial)


class VerifyReport(BaseModel):
    """Symbolic count against one or two brute-force oracles at a concrete field size."""

    n: int
    q: int
    polynomial: str
    symbolic: str
    oracles: dict[Literal["exhaustive", "compositions"], str]

    @property
    def passed(self) -> bool:
        return all(value == self.symbolic for value in self.oracles.values())


class GraphReport(BaseModel):
    """Normalized set, SCC chain and count of a collision set."""

    n: int
    members: list[str]
    components: list[list[str]]
    polynomial: str
