"""Symbolic counts of decomposable monic original polynomials as polynomials in q.

All results are valid for every prime power q coprime to the degree in question.
"""

from collections.abc import Iterable
from itertools import combinations
from math import gcd

import structlog

from packages.collisions.factorizations import nontrivial_divisors
from packages.collisions.qpoly import QPolynomial
from packages.collisions.refine import normalize
from packages.collisions.relgraph import (
    RelationGraph,
    build_graph,
    neighborhood_products,
    scc_chain,
)
from packages.core.errors import (
    BadArgumentsError,
    BadOrderError,
    NotCoprimeError,
    ProductMismatchError,
)
from packages.core.models.factorization import OrderedFactorization

logger = structlog.get_logger()

Q = QPolynomial.monomial(1)
ONE = QPolynomial.one()


def qp_eval(poly: QPolynomial, q: int) -> int:
    """Exact value of ``poly`` at the integer ``q``."""
    if q < 1:
        raise ValueError(f"q must be at least 1, got {q}")
    return poly.eval(q)


def count_P(n: int) -> QPolynomial:
    """Number of monic original polynomials of degree n: q^(n-1)."""
    if n < 1:
        raise BadArgumentsError(f"n must be positive, got {n}")
    return QPolynomial.monomial(n - 1)


def count_D_single(n: int, dseq: OrderedFactorization) -> QPolynomial:
    """Number of compositions along one degree sequence: q^(Σd_i - ℓ)."""
    if dseq.n != n:
        raise ProductMismatchError(f"{dseq} factors {dseq.n}, not {n}")
    return QPolynomial.monomial(sum(dseq.parts) - len(dseq))


def count_two_collision(d: int, e: int) -> QPolynomial:
    """Number of polynomials of degree de decomposing at both d and e.

    Raises:
        BadOrderError: Unless d > e >= 2.
        NotCoprimeError: If gcd(d, e) > 1.
    """
    if not d > e >= 2:
        raise BadOrderError(f"expected d > e >= 2, got d={d}, e={e}")
    if gcd(d, e) != 1:
        raise NotCoprimeError(f"gcd({d}, {e}) = {gcd(d, e)}")
    delta = 1 if e == 2 else 0
    return Q * (QPolynomial.monomial(d // e) + QPolynomial.monomial(0, 1 - delta) * (Q - ONE))


def _check_orbit_arguments(d: int, e: int, q: int) -> None:
    if d < 2 or e < 1 or q < 2:
        raise BadArgumentsError(f"need d >= 2, e >= 1, q >= 2; got d={d}, e={e}, q={q}")
    if gcd(d, e) != 1:
        raise BadArgumentsError(f"d={d} and e={e} are not coprime")
    if gcd(q, d * e) != 1:
        raise BadArgumentsError(f"q={q} is not coprime to de={d * e}")


def orbit_size_exp(d: int, e: int, q: int) -> int:
    """Size of the union of shift orbits of exponential components x^k w^e of degree d."""
    _check_orbit_arguments(d, e, q)
    if e == 1:
        return q ** (d - 1)
    if e == 2:
        return q ** (d // 2 + 1) - q * (q - 1) // 2
    return q ** (d // e + 1)


def orbit_size_trig(d: int, e: int, q: int) -> int:
    """Size of the union of shift orbits of Dickson components T_d(x, z^e), z != 0."""
    _check_orbit_arguments(d, e, q)
    if d == 2:
        return q
    return q * (q - 1) // gcd(q - 1, e)


def count_component(graph: RelationGraph) -> QPolynomial:
    """Count of one strongly connected component.

    A single vertex d gives q^(d-1). Otherwise, with e_i the product of the
    bidirectional neighbors of d_i, the count is
    q * (q^(Σ floor(d_i/e_i)) + (1 - δ)(q - 1)), where δ = 0 iff some d_i
    and its e_i both exceed 2. When every such pair has a 2 in it, the
    Dickson polynomials already lie in the exponential family.
    """
    if len(graph) == 1:
        return QPolynomial.monomial(graph.vertices[0].value - 1)
    products = neighborhood_products(graph)
    exponent = sum(v.value // e for v, e in products.items())
    has_trig = any(v.value > 2 and e > 2 for v, e in products.items())
    tail = Q - ONE if has_trig else QPolynomial.zero()
    return Q * (QPolynomial.monomial(exponent) + tail)


def count_graph(graph: RelationGraph) -> QPolynomial:
    """Product of the component counts along the SCC chain."""
    result = ONE
    for component in scc_chain(graph):
        result = result * count_component(component)
    return result


def count_collisions(n: int, factorizations: Iterable[OrderedFactorization]) -> QPolynomial:
    """Number of polynomials of degree n decomposing along every given sequence.

    Raises:
        ProductMismatchError: If some sequence does not factor n.
    """
    members = list(factorizations)
    for f in members:
        if f.n != n:
            raise ProductMismatchError(f"{f} factors {f.n}, not {n}")
    return count_graph(build_graph(normalize(members)))


def count_decomposables(n: int) -> QPolynomial:
    """Number of decomposable monic original polynomials of degree n.

    Inclusion-exclusion over the nonempty sets of nontrivial divisors d,
    each contributing the collision count of {(d, n/d)} with sign (-1)^(k+1).
    Zero for n = 1 and for prime n.
    """
    if n < 1:
        raise BadArgumentsError(f"n must be positive, got {n}")
    divisors = nontrivial_divisors(n)
    total = QPolynomial.zero()
    subsets = 0
    for k in range(1, len(divisors) + 1):
        sign = QPolynomial.monomial(0, (-1) ** (k + 1))
        for chosen in combinations(divisors, k):
            sequences = [OrderedFactorization.of(d, n // d) for d in chosen]
            total = total + sign * count_collisions(n, sequences)
            subsets += 1
    logger.debug("Counted decomposables", n=n, subsets=subsets, degree=total.degree)
    return total


def is_composite(n: int) -> bool:
    return bool(nontrivial_divisors(n))


def two_prime_closed_form(p1: int, p2: int) -> QPolynomial:
    """2 q^(p1+p2-2) minus the two-collision count, for distinct primes p1, p2."""
    big, small = max(p1, p2), min(p1, p2)
    return QPolynomial.monomial(p1 + p2 - 2, 2) - count_two_collision(big, small)


def prime_cube_closed_form(r: int) -> QPolynomial:
    """2 q^(r²+r-2) - q^(3r-3), the count for n = r³."""
    return QPolynomial.monomial(r * r + r - 2, 2) - QPolynomial.monomial(3 * r - 3)


