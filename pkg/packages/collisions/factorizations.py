"""Nontrivial divisors, the order-preserving matching σ and associatedness."""

from collections import defaultdict, deque
from math import gcd, prod

from sympy import divisors

from packages.core.errors import BasisMismatchError
from packages.core.models.factorization import OrderedFactorization


def nontrivial_divisors(n: int) -> list[int]:
    """Ascending list of all d with 1 < d < n and d | n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [int(d) for d in divisors(n) if 1 < d < n]


def sigma(d: OrderedFactorization, e: OrderedFactorization) -> tuple[int, ...]:
    """Return the matching permutation with ``d[i] == e[sigma[i]]`` (0-based).

    Equal values are matched left to right, which keeps repeated divisors in
    their relative order.

    Raises:
        BasisMismatchError: If ``d`` and ``e`` have different bases.
    """
    if d.basis != e.basis:
        raise BasisMismatchError(f"{d} and {e} have different bases")
    positions: dict[int, deque[int]] = defaultdict(deque)
    for j, value in enumerate(e.parts):
        positions[value].append(j)
    return tuple(positions[value].popleft() for value in d.parts)


def is_associated(d: OrderedFactorization, e: OrderedFactorization) -> bool:
    """True iff ``d`` and ``e`` share a basis and σ keeps every non-coprime pair in order."""
    if d.basis != e.basis:
        return False
    perm = sigma(d, e)
    parts = d.parts
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if gcd(parts[i], parts[j]) > 1 and perm[i] > perm[j]:
                return False
    return True


def coarsens_to(fine: OrderedFactorization, coarse: OrderedFactorization) -> bool:
    """True iff contiguous blocks of ``fine`` multiply to the parts of ``coarse``."""
    if fine.n != coarse.n:
        return False
    i = 0
    for target in coarse.parts:
        block: list[int] = []
        while i < len(fine.parts) and prod(block) < target:
            block.append(fine.parts[i])
            i += 1
        if prod(block) != target:
            return False
    return i == len(fine.parts)
