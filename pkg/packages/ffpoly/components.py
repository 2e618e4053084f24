"""Composition, original shifts and the two families of collision components."""

from collections.abc import Iterator
from itertools import product
from math import gcd

from packages.core.errors import BadArgumentsError, BadDegreeError, NotMonicOriginalError
from packages.ffpoly.field import FqPoly, PrimeField


def compose(g: FqPoly, h: FqPoly) -> FqPoly:
    """``g ∘ h``."""
    return g.compose(h)


def compose_all(components: list[FqPoly]) -> FqPoly:
    """``g_1 ∘ g_2 ∘ ... ∘ g_ℓ``."""
    if not components:
        raise ValueError("nothing to compose")
    result = components[-1]
    for outer in reversed(components[:-1]):
        result = outer.compose(result)
    return result


def original_shift(f: FqPoly, a: int) -> FqPoly:
    """``f^[a] = (x - f(a)) ∘ f ∘ (x + a)``.

    Raises:
        NotMonicOriginalError: If ``f`` is not monic original.
    """
    if not f.is_monic_original():
        raise NotMonicOriginalError(f"{f} is not monic original")
    field = f.field
    moved = f.compose(FqPoly(field, (a, 1)))
    return moved - moved.coefficient(0)


def shift_pair(g: FqPoly, h: FqPoly, a: int) -> tuple[FqPoly, FqPoly]:
    """Shift a decomposition: ``(g, h)^[a] = (g^[h(a)], h^[a])``."""
    return original_shift(g, h.evaluate(a)), original_shift(h, a)


def dickson(d: int, z: int, field: PrimeField) -> FqPoly:
    """Originalized Dickson polynomial ``T_d(x, z)`` of the first kind.

    Uses ``T*_0 = 2``, ``T*_1 = x``, ``T*_d = x T*_{d-1} - z T*_{d-2}`` and
    drops the constant term.
    """
    if d < 1:
        raise BadDegreeError(f"Dickson degree must be at least 1, got {d}")
    x = FqPoly.x(field)
    previous, current = FqPoly.constant(field, 2), x
    for _ in range(d - 1):
        previous, current = current, x * current - previous * z
    return current - current.coefficient(0)


def dickson_constant(d: int, z: int, field: PrimeField) -> int:
    """``T*_d(0, z)``: 0 for odd d, ``2 (-z)^(d/2)`` for even d."""
    if d % 2:
        return 0
    return 2 * pow(-z, d // 2, field.p) % field.p


def dickson_left(d: int, e: int, z: int, field: PrimeField) -> FqPoly:
    """Left factor ``g`` of degree d with ``g ∘ T_e(x, z) = T_{de}(x, z)``.

    This is ``T_d(x, z^e)`` shifted by ``T*_e(0, z)``, so it equals
    ``T_d(x, z^e)`` itself whenever e is odd.
    """
    left = dickson(d, pow(z, e, field.p), field)
    shift = dickson_constant(e, z, field)
    return original_shift(left, shift) if shift else left


def exp_component(
    d: int, e: int, w: FqPoly | None = None, field: PrimeField | None = None
) -> FqPoly:
    """The exponential component ``x^k w^e`` of degree ``d = s e + k``.

    For ``e = 1`` the family is all of P_d and ``w`` itself is returned. When
    ``s = 0`` the component is ``x^d`` and ``w`` may be omitted.

    Raises:
        BadArgumentsError: If gcd(d, e) > 1.
        BadDegreeError: If ``deg w`` is not ``s`` (or not ``d`` for e = 1).
    """
    if d < 1 or e < 1 or gcd(d, e) != 1:
        raise BadArgumentsError(f"need coprime d, e >= 1; got d={d}, e={e}")
    if w is None:
        if field is None:
            raise BadArgumentsError("a field is needed when w is omitted")
        w = FqPoly.constant(field, 1)
    if e == 1:
        if w.degree != d:
            raise BadDegreeError(f"deg w = {w.degree}, expected {d}")
        if not w.is_monic_original():
            raise NotMonicOriginalError(f"{w} is not monic original")
        return w
    s, k = divmod(d, e)
    if w.degree != s:
        raise BadDegreeError(f"deg w = {w.degree}, expected {s} for d={d}, e={e}")
    if not w.is_monic():
        raise BadArgumentsError(f"{w} is not monic")
    return FqPoly.monomial(w.field, k) * w**e


def monic_polynomials(field: PrimeField, degree: int) -> Iterator[FqPoly]:
    """All monic polynomials of the given degree, in key order."""
    for lower in product(range(field.p), repeat=degree):
        yield FqPoly(field, lower + (1,))


def monic_originals(field: PrimeField, degree: int) -> Iterator[FqPoly]:
    """All monic original polynomials of the given degree (P_degree), in key order."""
    for middle in product(range(field.p), repeat=degree - 1):
        yield FqPoly(field, (0,) + middle + (1,))


def exp_family(d: int, e: int, field: PrimeField) -> Iterator[FqPoly]:
    """Every element of E_{d,e}."""
    if e == 1:
        yield from monic_originals(field, d)
        return
    for w in monic_polynomials(field, d // e):
        yield exp_component(d, e, w)


def trig_family(d: int, e: int, field: PrimeField) -> Iterator[FqPoly]:
    """Every distinct ``T_d(x, z^e)`` with z nonzero."""
    for y in sorted({pow(z, e, field.p) for z in field.nonzero()}):
        yield dickson(d, y, field)
