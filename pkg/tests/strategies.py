"""Hypothesis strategies for factorizations and finite-field polynomials."""

from hypothesis import assume
from hypothesis import strategies as st

from packages.collisions.factorizations import nontrivial_divisors
from packages.core.models.factorization import OrderedFactorization
from packages.ffpoly.field import FqPoly, PrimeField

SMOOTH = [n for n in range(4, 2500) if len(nontrivial_divisors(n)) >= 4]


@st.composite
def factorizations_of(draw, n: int) -> OrderedFactorization:
    """A random ordered factorization of ``n`` built by peeling off divisors."""
    parts: list[int] = []
    rest = n
    while rest > 1:
        choices = nontrivial_divisors(rest) + [rest]
        part = draw(st.sampled_from(choices))
        parts.append(part)
        rest //= part
    return OrderedFactorization(n=n, parts=tuple(parts))


@st.composite
def factorization_pairs(draw) -> tuple[OrderedFactorization, OrderedFactorization]:
    n = draw(st.sampled_from(SMOOTH))
    return draw(factorizations_of(n)), draw(factorizations_of(n))


@st.composite
def factorization_sets(draw, max_size: int = 3) -> list[OrderedFactorization]:
    n = draw(st.sampled_from([n for n in SMOOTH if n <= 720]))
    return draw(st.lists(factorizations_of(n), min_size=1, max_size=max_size))


@st.composite
def collision_cases(
    draw, fields: list[tuple[int, int]], max_cost: int
) -> tuple[int, int, list[OrderedFactorization]]:
    """``(n, p, sequences)`` with 2 to 4 sequences whose cheapest enumeration fits ``max_cost``.

    The cost is the number of shift-reduced compositions along the cheapest sequence.
    """
    n, p = draw(st.sampled_from(fields))
    sequences = draw(st.lists(factorizations_of(n), min_size=2, max_size=4))
    assume(min(p ** (sum(f.parts) - len(f) - 1) for f in sequences) <= max_cost)
    return n, p, sequences


@st.composite
def monic_originals(draw, field: PrimeField, min_degree: int = 2, max_degree: int = 6) -> FqPoly:
    degree = draw(st.integers(min_degree, max_degree))
    middle = draw(st.lists(st.integers(0, field.p - 1), min_size=degree - 1, max_size=degree - 1))
    return FqPoly(field, (0, *middle, 1))


tame_fields = st.sampled_from([PrimeField(5), PrimeField(7)])
