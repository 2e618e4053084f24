"""Pairwise refinement of ordered factorizations and normalization of sets."""

from collections.abc import Iterable
from itertools import combinations
from math import gcd

import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from packages.collisions.factorizations import is_associated
from packages.core.errors import ProductMismatchError
from packages.core.models.factorization import Basis, OrderedFactorization

logger = structlog.get_logger()


class RefinementMatrix(BaseModel):
    """Final gcd grid of a refinement.

    ``cells`` has ``rows + 1`` rows and ``cols + 1`` columns. The last column
    holds what is left of each ``d_i``, the last row what is left of each
    ``e_j``; both are all ones once the grid is complete.
    """

    model_config = ConfigDict(frozen=True)

    rows: int
    cols: int
    cells: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_shape(self) -> "RefinementMatrix":
        if len(self.cells) != self.rows + 1 or any(len(r) != self.cols + 1 for r in self.cells):
            raise ValueError("cells must be a (rows+1) x (cols+1) grid")
        return self

    def row_sequence(self) -> tuple[int, ...]:
        """Row-major cells without ones: the refinement of d."""
        return tuple(
            self.cells[i][j] for i in range(self.rows) for j in range(self.cols)
            if self.cells[i][j] != 1
        )

    def column_sequence(self) -> tuple[int, ...]:
        """Column-major cells without ones: the refinement of e."""
        return tuple(
            self.cells[i][j] for j in range(self.cols) for i in range(self.rows)
            if self.cells[i][j] != 1
        )

    def is_cross_coprime(self) -> bool:
        """gcd(c[i][j'], c[i'][j]) == 1 whenever i' > i and j' > j."""
        for i, i2 in combinations(range(self.rows), 2):
            for j, j2 in combinations(range(self.cols), 2):
                if gcd(self.cells[i][j2], self.cells[i2][j]) != 1:
                    return False
        return True


class NormalizedSet(BaseModel):
    """Pairwise associated factorizations sharing one basis.

    ``members`` is sorted lexicographically; ``members[canonical]`` fixes
    vertex identity in the relation graph.
    """

    model_config = ConfigDict(frozen=True)

    members: tuple[OrderedFactorization, ...]
    canonical: int = 0

    @model_validator(mode="after")
    def check_members(self) -> "NormalizedSet":
        if not self.members:
            raise ValueError("a normalized set needs at least one member")
        if not 0 <= self.canonical < len(self.members):
            raise ValueError(f"canonical index {self.canonical} out of range")
        first = self.members[0]
        for other in self.members[1:]:
            if other.basis != first.basis:
                raise ValueError(f"{first} and {other} have different bases")
        for a, b in combinations(self.members, 2):
            if not is_associated(a, b):
                raise ValueError(f"{a} and {b} are not associated")
        return self

    @property
    def n(self) -> int:
        return self.members[0].n

    @property
    def basis(self) -> Basis:
        return self.members[0].basis

    @property
    def canonical_member(self) -> OrderedFactorization:
        return self.members[self.canonical]


def refinement_matrix(d: OrderedFactorization, e: OrderedFactorization) -> RefinementMatrix:
    """Run the gcd grid of two factorizations of the same n to completion.

    Cell (i, j) receives gcd of what is left of ``d_i`` and ``e_j``; both are
    divided by it before moving on, row by row.

    Raises:
        ProductMismatchError: If ``d`` and ``e`` factor different numbers.
    """
    if d.n != e.n:
        raise ProductMismatchError(f"{d} factors {d.n} but {e} factors {e.n}")
    left = list(d.parts)
    top = list(e.parts)
    grid = [[1] * (len(top) + 1) for _ in range(len(left) + 1)]
    for i in range(len(left)):
        for j in range(len(top)):
            c = gcd(left[i], top[j])
            grid[i][j] = c
            left[i] //= c
            top[j] //= c
    for i, rest in enumerate(left):
        grid[i][len(top)] = rest
    for j, rest in enumerate(top):
        grid[len(left)][j] = rest
    return RefinementMatrix(rows=len(left), cols=len(top), cells=tuple(map(tuple, grid)))


def refine_pair(
    d: OrderedFactorization, e: OrderedFactorization
) -> tuple[OrderedFactorization, OrderedFactorization]:
    """Return ``(d∥e, e∥d)``, refinements of ``d`` and ``e`` that are associated."""
    matrix = refinement_matrix(d, e)
    return (
        OrderedFactorization(n=d.n, parts=matrix.row_sequence()),
        OrderedFactorization(n=e.n, parts=matrix.column_sequence()),
    )


def normalize(factorizations: Iterable[OrderedFactorization]) -> NormalizedSet:
    """Refine a set of factorizations of one n until all members are associated.

    Members are processed in lexicographic order of their parts. Each new
    member is refined against the first settled one, every settled member is
    refined against it, and then any remaining non-associated pair is refined
    until none is left. Duplicates collapse.

    Raises:
        ProductMismatchError: If the factorizations do not share n.
        ValueError: If the input is empty.
    """
    pending = sorted(set(factorizations), key=lambda f: f.parts)
    if not pending:
        raise ValueError("cannot normalize an empty set of factorizations")
    n = pending[0].n
    for f in pending:
        if f.n != n:
            raise ProductMismatchError(f"{f} factors {f.n}, expected {n}")

    settled = [pending[0]]
    for f in pending[1:]:
        f_star = refine_pair(f, settled[0])[0]
        settled = [refine_pair(s, f)[0] for s in settled] + [f_star]
        settled = _refine_until_associated(settled)

    members = sorted({m.parts: m for m in settled}.values(), key=lambda f: f.parts)
    logger.debug("Normalized factorization set", n=n, given=len(pending), members=len(members))
    return NormalizedSet(members=tuple(members))


def _refine_until_associated(members: list[OrderedFactorization]) -> list[OrderedFactorization]:
    members = list(members)
    while True:
        for i, j in combinations(range(len(members)), 2):
            if not is_associated(members[i], members[j]):
                members[i], members[j] = refine_pair(members[i], members[j])
                break
        else:
            return members
