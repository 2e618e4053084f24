"""Brute-force ground truth over small prime fields.

Every oracle enumerates concrete polynomials and never approximates: when the
work would exceed the enumeration budget it raises ``BudgetExceededError``.

Counting oracles may use shift-orbit reduction. All the sets counted here are
closed under original shifts, which act freely on monic originals of degree
n when p does not divide n, and each orbit has exactly one member with zero
coefficient at x^(n-1). That coefficient is (n / d_ℓ) times the coefficient
of x^(d_ℓ - 1) in the innermost component, so enumerating only innermost
components with that coefficient zero and multiplying by p is exact.
"""

from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import gcd, prod

import structlog

from packages.collisions.factorizations import nontrivial_divisors
from packages.core.errors import (
    BadArgumentsError,
    BudgetExceededError,
    ProductMismatchError,
    WildCharacteristicError,
)
from packages.core.models.factorization import OrderedFactorization
from packages.core.utils.config import get_settings
from packages.ffpoly.components import (
    compose_all,
    exp_family,
    original_shift,
    trig_family,
)
from packages.ffpoly.decompose import decomposes_along, tame_decompose
from packages.ffpoly.field import FqPoly, PrimeField

logger = structlog.get_logger()


@dataclass(frozen=True)
class PolySet:
    """A set of monic original polynomials of one degree, keyed by base-p encoding."""

    field: PrimeField
    degree: int
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, f: object) -> bool:
        return isinstance(f, FqPoly) and f.field == self.field and f.key in self.members

    def __iter__(self) -> Iterator[FqPoly]:
        for key in sorted(self.members):
            yield FqPoly.from_key(self.field, key)

    def __and__(self, other: "PolySet") -> "PolySet":
        self._check_compatible(other)
        return PolySet(self.field, self.degree, self.members & other.members)

    def __or__(self, other: "PolySet") -> "PolySet":
        self._check_compatible(other)
        return PolySet(self.field, self.degree, self.members | other.members)

    def _check_compatible(self, other: "PolySet") -> None:
        if (self.field, self.degree) != (other.field, other.degree):
            raise ValueError("sets live over different fields or degrees")


@dataclass(frozen=True)
class _Task:
    """One data-parallel slice of an enumeration.

    The slice takes every ``parts``-th choice of the outermost component,
    starting at ``part``.
    """

    p: int
    degrees: tuple[int, ...]
    centered: bool
    require: tuple[tuple[int, ...], ...] = ()
    exclude: tuple[int, ...] = ()
    part: int = 0
    parts: int = 1


def _component_choices(fp: PrimeField, degree: int, centered: bool) -> list[FqPoly]:
    """P_degree, or its members with zero x^(degree-1) coefficient when ``centered``."""
    if centered:
        return [
            FqPoly(fp, (0,) + middle + (0, 1))
            for middle in product(range(fp.p), repeat=degree - 2)
        ]
    return [
        FqPoly(fp, (0,) + middle + (1,)) for middle in product(range(fp.p), repeat=degree - 1)
    ]


def _compositions(task: _Task) -> Iterator[FqPoly]:
    fp = PrimeField(task.p)
    last = len(task.degrees) - 1
    pools = [
        _component_choices(fp, d, task.centered and i == last)
        for i, d in enumerate(task.degrees)
    ]
    pools[0] = pools[0][task.part :: task.parts]
    for components in product(*pools):
        yield compose_all(list(components))


def _count_task(task: _Task) -> int:
    count = 0
    for f in _compositions(task):
        if any(tame_decompose(f, d) is not None for d in task.exclude):
            continue
        if all(decomposes_along(f, degrees) is not None for degrees in task.require):
            count += 1
    return count


def _run(tasks: list[_Task], workers: int) -> int:
    if workers <= 1 or len(tasks) == 1:
        return sum(_count_task(task) for task in tasks)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_task, tasks))


def _split(task: _Task, workers: int) -> list[_Task]:
    if workers <= 1:
        return [task]
    return [
        _Task(task.p, task.degrees, task.centered, task.require, task.exclude, i, workers)
        for i in range(workers)
    ]


def _tame_field(n: int, p: int) -> PrimeField:
    fp = PrimeField(p)
    if fp.divides(n):
        raise WildCharacteristicError(p, n)
    return fp


def _check_budget(cost: int, budget: int | None, what: str) -> None:
    limit = get_settings().enumeration_budget if budget is None else budget
    if cost > limit:
        raise BudgetExceededError(cost, limit, what)


def _sequence_cost(p: int, degrees: Iterable[int]) -> int:
    return prod(p ** (d - 1) for d in degrees)


def _check_sequence(n: int, dseq: OrderedFactorization) -> None:
    if dseq.n != n:
        raise ProductMismatchError(f"{dseq} factors {dseq.n}, not {n}")


def composition_set(
    n: int, dseq: OrderedFactorization, p: int, budget: int | None = None
) -> PolySet:
    """The set of all compositions with the given degree sequence over F_p.

    Raises:
        WildCharacteristicError: If p divides n.
        BudgetExceededError: If there are more compositions than the budget allows.
    """
    fp = _tame_field(n, p)
    _check_sequence(n, dseq)
    _check_budget(_sequence_cost(p, dseq.parts), budget, f"compositions along {dseq}")
    task = _Task(p, dseq.parts, centered=False)
    return PolySet(fp, n, frozenset(f.key for f in _compositions(task)))


def intersection_set(
    n: int, factorizations: Iterable[OrderedFactorization], p: int, budget: int | None = None
) -> PolySet:
    """The literal set of polynomials decomposing along every given sequence."""
    fp = _tame_field(n, p)
    members = sorted(set(factorizations), key=lambda f: (_sequence_cost(p, f.parts), f.parts))
    if not members:
        raise ValueError("need at least one factorization")
    for f in members:
        _check_sequence(n, f)
    cheapest, others = members[0], members[1:]
    _check_budget(_sequence_cost(p, cheapest.parts), budget, f"compositions along {cheapest}")
    task = _Task(p, cheapest.parts, centered=False)
    keys = frozenset(
        f.key for f in _compositions(task)
        if all(decomposes_along(f, other.parts) is not None for other in others)
    )
    return PolySet(fp, n, keys)


def oracle_count_D(
    n: int,
    factorizations: Iterable[OrderedFactorization],
    p: int,
    budget: int | None = None,
    shift_reduction: bool | None = None,
    workers: int | None = None,
) -> int:
    """Number of polynomials of degree n over F_p decomposing along every given sequence.

    Enumerates the cheapest sequence's compositions and tests membership in
    the others by iterated tame decomposition.
    """
    settings = get_settings()
    reduce = settings.oracle_shift_reduction if shift_reduction is None else shift_reduction
    workers = settings.oracle_workers if workers is None else workers
    _tame_field(n, p)
    members = sorted(set(factorizations), key=lambda f: (_sequence_cost(p, f.parts), f.parts))
    if not members:
        raise ValueError("need at least one factorization")
    for f in members:
        _check_sequence(n, f)
    cheapest = members[0]
    cost = _sequence_cost(p, cheapest.parts) // (p if reduce else 1)
    _check_budget(cost, budget, f"compositions along {cheapest}")
    logger.info("Counting intersection", n=n, p=p, sequences=len(members), cost=cost)

    task = _Task(
        p, cheapest.parts, centered=reduce, require=tuple(f.parts for f in members[1:])
    )
    count = _run(_split(task, workers), workers)
    return count * (p if reduce else 1)


def oracle_count_union(
    n: int,
    p: int,
    budget: int | None = None,
    shift_reduction: bool | None = None,
    workers: int | None = None,
) -> int:
    """Number of decomposable polynomials of degree n over F_p, via composition sets.

    For each nontrivial divisor d in turn, counts the compositions of
    degrees (d, n/d) that do not decompose at any earlier divisor.
    """
    settings = get_settings()
    reduce = settings.oracle_shift_reduction if shift_reduction is None else shift_reduction
    workers = settings.oracle_workers if workers is None else workers
    _tame_field(n, p)
    divisors = nontrivial_divisors(n)
    cost = sum(p ** (d + n // d - 2) for d in divisors) // (p if reduce else 1)
    _check_budget(cost, budget, f"union of composition sets for n={n}")
    logger.info("Counting union", n=n, p=p, divisors=len(divisors), cost=cost)

    tasks: list[_Task] = []
    for i, d in enumerate(divisors):
        task = _Task(p, (d, n // d), centered=reduce, exclude=tuple(divisors[:i]))
        tasks.extend(_split(task, workers))
    return _run(tasks, workers) * (p if reduce else 1)


@dataclass(frozen=True)
class _ScanTask:
    p: int
    n: int
    centered: bool
    part: int = 0
    parts: int = 1


def _scan_task(task: _ScanTask) -> int:
    fp = PrimeField(task.p)
    divisors = nontrivial_divisors(task.n)
    # coefficients of x^2 .. x^(n-1), the x^1 coefficient is sliced per task
    upper = task.n - 2 - (1 if task.centered else 0)
    tail = (0, 1) if task.centered else (1,)
    count = 0
    for first in range(task.part, task.p, task.parts):
        for middle in product(range(task.p), repeat=max(upper, 0)):
            f = FqPoly(fp, (0, first) + middle + tail)
            if any(tame_decompose(f, d) is not None for d in divisors):
                count += 1
    return count


def exhaustive_decomposables(
    n: int,
    p: int,
    budget: int | None = None,
    shift_reduction: bool | None = None,
    workers: int | None = None,
) -> int:
    """Scan every monic original polynomial of degree n and count the decomposable ones."""
    settings = get_settings()
    reduce = settings.oracle_shift_reduction if shift_reduction is None else shift_reduction
    workers = settings.oracle_workers if workers is None else workers
    _tame_field(n, p)
    if not nontrivial_divisors(n):
        return 0
    cost = p ** (n - 1) // (p if reduce else 1)
    _check_budget(cost, budget, f"scan of all monic originals of degree {n}")
    logger.info("Scanning monic originals", n=n, p=p, cost=cost)

    parts = max(1, min(workers, p))
    tasks = [_ScanTask(p, n, reduce, i, parts) for i in range(parts)]
    if parts == 1:
        count = _scan_task(tasks[0])
    else:
        with ProcessPoolExecutor(max_workers=parts) as pool:
            count = sum(pool.map(_scan_task, tasks))
    return count * (p if reduce else 1)


def orbit_enumerate(
    kind: str, d: int, e: int, p: int, budget: int | None = None
) -> int:
    """Size of the union of shift orbits of the exponential or trigonometric family.

    Raises:
        BadArgumentsError: On an unknown kind, non-coprime d and e, or p | de.
    """
    if kind not in ("exp", "trig"):
        raise BadArgumentsError(f"kind must be 'exp' or 'trig', got {kind!r}")
    if d < 2 or e < 1 or (d * e) % p == 0 or gcd(d, e) != 1:
        raise BadArgumentsError(f"need coprime d >= 2, e >= 1 with p ∤ de; got {d}, {e}, {p}")
    fp = PrimeField(p)
    if kind == "exp":
        family_size = p ** (d - 1) if e == 1 else p ** (d // e)
        family = exp_family(d, e, fp)
    else:
        family_size = p - 1
        family = trig_family(d, e, fp)
    _check_budget(family_size * p, budget, f"{kind} orbits for d={d}, e={e}")
    keys = {original_shift(g, a).key for g in family for a in fp}
    return len(keys)
