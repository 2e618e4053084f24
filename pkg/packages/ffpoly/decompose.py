"""Tame decomposition, two-collision normal forms, Ritt moves and gcd splitting."""

from collections.abc import Iterator
from dataclasses import dataclass
from math import gcd

import structlog

from packages.core.errors import (
    BadArgumentsError,
    BadDivisorError,
    NoSwapExistsError,
    NotACollisionError,
    NotMonicOriginalError,
)
from packages.ffpoly.components import (
    dickson,
    dickson_left,
    exp_component,
    original_shift,
    shift_pair,
)
from packages.ffpoly.field import FqPoly, PrimeField

logger = structlog.get_logger()


@dataclass(frozen=True, slots=True)
class ExponentialForm:
    """``f = (x^k w^e ∘ x^e)^[a]``."""

    w: FqPoly
    a: int


@dataclass(frozen=True, slots=True)
class TrigonometricForm:
    """``f = T_{de}(x, z)^[a]`` with z nonzero."""

    z: int
    a: int


CollisionForm = ExponentialForm | TrigonometricForm


def _truncated_power(series: list[int], exponent: int, length: int, p: int) -> list[int]:
    """First ``length`` coefficients of ``series ** exponent`` (ascending, mod p)."""
    result = [1] + [0] * (length - 1)
    base = (series + [0] * length)[:length]
    while exponent:
        if exponent & 1:
            result = _truncated_product(result, base, length, p)
        exponent >>= 1
        if exponent:
            base = _truncated_product(base, base, length, p)
    return result


def _truncated_product(a: list[int], b: list[int], length: int, p: int) -> list[int]:
    out = [0] * length
    for i, ai in enumerate(a):
        if ai:
            for j in range(length - i):
                out[i + j] = (out[i + j] + ai * b[j]) % p
    return out


def _approximate_root(f: FqPoly, r: int, terms: int) -> list[int]:
    """Top coefficients ``H_1..H_terms`` of the monic r-th root of ``f``.

    With ``h = x^m (1 + H_1/x + H_2/x^2 + ...)`` and ``deg f = r m``, the
    coefficient of ``x^{rm-k}`` in ``h^r`` is ``r H_k`` plus a polynomial in
    ``H_1..H_{k-1}``, so each ``H_k`` follows from the one before.
    """
    p = f.field.p
    inverse = f.field.inv(r)
    n = f.degree
    series = [1]
    for k in range(1, terms + 1):
        carried = _truncated_power(series, r, k + 1, p)[k]
        series.append((f.coefficient(n - k) - carried) * inverse % p)
    return series[1:]


def _h_adic_digits(f: FqPoly, h: FqPoly) -> Iterator[FqPoly]:
    while not f.is_zero():
        f, digit = divmod(f, h)
        yield digit


def h_adic_expand(f: FqPoly, h: FqPoly) -> list[FqPoly]:
    """Digits ``c_0..c_m`` with ``f = Σ c_i h^i`` and ``deg c_i < deg h``."""
    if h.degree < 1:
        raise BadArgumentsError("h-adic expansion needs deg h >= 1")
    digits = list(_h_adic_digits(f, h))
    return digits or [FqPoly.zero(f.field)]


def tame_decompose(f: FqPoly, d: int) -> tuple[FqPoly, FqPoly] | None:
    """Find ``(g, h)`` in P_d × P_{n/d} with ``f = g ∘ h``, or None.

    Raises:
        NotMonicOriginalError: If ``f`` is not monic original.
        BadDivisorError: Unless d is a proper divisor of deg f not divisible by p.
    """
    if not f.is_monic_original():
        raise NotMonicOriginalError(f"{f} is not monic original")
    n = f.degree
    if not 1 < d < n or n % d or f.field.divides(d):
        raise BadDivisorError(f"{d} is not a tame proper divisor of {n} over {f.field}")
    e = n // d
    field = f.field
    top = _approximate_root(f, d, e - 1)
    h = FqPoly(field, (0,) + tuple(reversed(top)) + (1,))
    left: list[int] = []
    for digit in _h_adic_digits(f, h):
        if not digit.is_constant():
            return None
        left.append(digit.coefficient(0))
    g = FqPoly(field, tuple(left))
    if g.degree != d or not g.is_original():
        return None
    return g, h


def decomposes_along(f: FqPoly, degrees: tuple[int, ...]) -> tuple[FqPoly, ...] | None:
    """Components ``(g_1, ..., g_ℓ)`` with the given degrees and ``f = g_1 ∘ ... ∘ g_ℓ``."""
    components: list[FqPoly] = []
    rest = f
    for d in degrees[:-1]:
        found = tame_decompose(rest, d)
        if found is None:
            return None
        outer, rest = found
        components.append(outer)
    if degrees and rest.degree != degrees[-1]:
        raise BadDivisorError(f"degrees {degrees} do not multiply to {f.degree}")
    components.append(rest)
    return tuple(components)


def _check_collision_degrees(d: int, e: int, field: PrimeField) -> None:
    if d < 2 or e < 2 or gcd(d, e) != 1:
        raise BadArgumentsError(f"need coprime d, e >= 2; got d={d}, e={e}")
    if field.divides(d * e):
        raise BadArgumentsError(f"{field} is wild for degree {d * e}")


def classify_two_collision(f: FqPoly, d: int, e: int) -> CollisionForm | None:
    """Normal form of ``f`` if it decomposes at both degrees d and e, else None.

    The larger degree is taken as the left one. When the smaller one is 2
    the trigonometric case is reported as exponential.

    Raises:
        BadArgumentsError: If d, e are not coprime and at least 2, or p | de.
        NotMonicOriginalError: If ``f`` is not monic original.
    """
    field = f.field
    _check_collision_degrees(d, e, field)
    if not f.is_monic_original():
        raise NotMonicOriginalError(f"{f} is not monic original")
    d, e = max(d, e), min(d, e)
    n = d * e
    if f.degree != n:
        return None
    if tame_decompose(f, d) is None or tame_decompose(f, e) is None:
        return None

    p = field.p
    a = f.coefficient(n - 1) * field.inv(n) % p
    centered = original_shift(f, -a)
    found = tame_decompose(centered, d)
    if found is None:
        return None
    g0, h0 = found

    s, k = divmod(d, e)
    if h0 == FqPoly.monomial(field, e):
        quotient, remainder = divmod(g0, FqPoly.monomial(field, k))
        if remainder.is_zero():
            w_top = _approximate_root(quotient, e, s)
            w = FqPoly(field, tuple(reversed(w_top)) + (1,))
            if exp_component(d, e, w) == g0:
                return ExponentialForm(w=w, a=a)

    z = -centered.coefficient(n - 2) * field.inv(n) % p
    if z and centered == dickson(n, z, field):
        return TrigonometricForm(z=z, a=a)
    logger.warning("Double decomposition without normal form", f=str(f), d=d, e=e)
    return None


def _normal_pairs(
    form: CollisionForm, d: int, e: int, field: PrimeField
) -> tuple[tuple[FqPoly, FqPoly], tuple[FqPoly, FqPoly]]:
    """Both decompositions of a two-collision, left degree d first, then left degree e."""
    x_e = FqPoly.monomial(field, e)
    if isinstance(form, ExponentialForm):
        k = d % e
        left_d = (exp_component(d, e, form.w), x_e)
        left_e = (x_e, FqPoly.monomial(field, k) * form.w.compose(x_e))
    else:
        z = form.z
        left_d = (dickson_left(d, e, z, field), dickson(e, z, field))
        left_e = (dickson_left(e, d, z, field), dickson(d, z, field))
    return shift_pair(*left_d, form.a), shift_pair(*left_e, form.a)


def ritt_move(g1: FqPoly, g2: FqPoly) -> tuple[FqPoly, FqPoly]:
    """Exchange two coprime-degree components: ``g1 ∘ g2 = g1* ∘ g2*`` with swapped degrees.

    Raises:
        BadArgumentsError: If the degrees are not coprime and at least 2.
        NoSwapExistsError: If ``g1 ∘ g2`` has no decomposition with swapped degrees.
    """
    field = g1.field
    d1, d2 = g1.degree, g2.degree
    _check_collision_degrees(d1, d2, field)
    f = g1.compose(g2)
    form = classify_two_collision(f, d1, d2)
    if form is None:
        raise NoSwapExistsError(f"{g1} ∘ {g2} is not a two-collision")
    big, small = max(d1, d2), min(d1, d2)
    left_big, left_small = _normal_pairs(form, big, small, field)
    swapped = left_small if d1 == big else left_big
    if swapped[0].compose(swapped[1]) != f:
        raise NoSwapExistsError(f"normal form of {f} does not reproduce it")
    return swapped


def gcd_split(
    g: FqPoly, h: FqPoly, g2: FqPoly, h2: FqPoly
) -> tuple[FqPoly, FqPoly, FqPoly, FqPoly]:
    """Split off the common outer and inner factors of two decompositions.

    For ``g ∘ h = g2 ∘ h2`` returns ``(a, u, v, b)`` with ``g = a ∘ u``,
    ``h = v ∘ b``, ``deg a = gcd(deg g, deg g2)`` and
    ``deg b = gcd(deg h, deg h2)``; ``a`` is also a left factor of ``g2`` and
    ``b`` a right factor of ``h2``.

    Raises:
        NotMonicOriginalError: If an input is not monic original.
        NotACollisionError: If the two decompositions differ or share no such factors.
    """
    for part in (g, h, g2, h2):
        if not part.is_monic_original():
            raise NotMonicOriginalError(f"{part} is not monic original")
    if g.compose(h) != g2.compose(h2):
        raise NotACollisionError("the two decompositions give different polynomials")

    x = FqPoly.x(g.field)
    left = gcd(g.degree, g2.degree)
    right = gcd(h.degree, h2.degree)
    a, u = _split_left(g, left, x)
    v, b = _split_right(h, right, x)

    a2, _ = _split_left(g2, left, x)
    _, b2 = _split_right(h2, right, x)
    if a2 != a or b2 != b:
        raise NotACollisionError("outer or inner common factors disagree")
    return a, u, v, b


def _split_left(g: FqPoly, degree: int, x: FqPoly) -> tuple[FqPoly, FqPoly]:
    if degree == 1:
        return x, g
    if degree == g.degree:
        return g, x
    found = tame_decompose(g, degree)
    if found is None:
        raise NotACollisionError(f"{g} has no left factor of degree {degree}")
    return found


def _split_right(h: FqPoly, degree: int, x: FqPoly) -> tuple[FqPoly, FqPoly]:
    if degree == 1:
        return h, x
    if degree == h.degree:
        return x, h
    found = tame_decompose(h, h.degree // degree)
    if found is None:
        raise NotACollisionError(f"{h} has no right factor of degree {degree}")
    return found


def all_tame_decompositions(f: FqPoly) -> list[tuple[FqPoly, FqPoly]]:
    """Every nontrivial tame decomposition of ``f``, by increasing left degree."""
    n = f.degree
    found: list[tuple[FqPoly, FqPoly]] = []
    for d in range(2, n):
        if n % d == 0 and not f.field.divides(d):
            pair = tame_decompose(f, d)
            if pair is not None:
                found.append(pair)
    return found
