"""Tests for tame decomposition, collision normal forms, Ritt moves and gcd splitting."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from packages.core.errors import (
    BadArgumentsError,
    BadDivisorError,
    NoSwapExistsError,
    NotACollisionError,
    NotMonicOriginalError,
)
from packages.ffpoly.components import (
    compose_all,
    dickson,
    exp_component,
    original_shift,
)
from packages.ffpoly.decompose import (
    ExponentialForm,
    TrigonometricForm,
    all_tame_decompositions,
    classify_two_collision,
    decomposes_along,
    gcd_split,
    h_adic_expand,
    ritt_move,
    tame_decompose,
)
from packages.ffpoly.field import FqPoly, PrimeField

from .strategies import monic_originals, tame_fields


def poly(text: str, field: PrimeField) -> FqPoly:
    return FqPoly.parse(text, field)


class TestHAdicExpand:
    def test_two_digits(self, f3):
        digits = h_adic_expand(poly("x^4+x^2", f3), poly("x^2", f3))
        assert digits == [FqPoly.zero(f3), FqPoly.constant(f3, 1), FqPoly.constant(f3, 1)]

    def test_h_itself(self, f5):
        h = poly("x^2+3*x", f5)
        assert h_adic_expand(h, h) == [FqPoly.zero(f5), FqPoly.constant(f5, 1)]

    def test_low_degree(self, f5):
        f = poly("x+2", f5)
        assert h_adic_expand(f, poly("x^2", f5)) == [f]

    def test_reconstruction(self, f7):
        f, h = poly("x^7+3*x^4+x+5", f7), poly("x^2+x+1", f7)
        digits = h_adic_expand(f, h)
        assert all(c.degree < h.degree for c in digits)
        total = FqPoly.zero(f7)
        for i, c in enumerate(digits):
            total = total + c * h**i
        assert total == f

    def test_constant_h(self, f5):
        with pytest.raises(BadArgumentsError):
            h_adic_expand(poly("x^2", f5), FqPoly.constant(f5, 2))


class TestTameDecompose:
    def test_decomposable(self, f3):
        assert tame_decompose(poly("x^4+x^2", f3), 2) == (poly("x^2+x", f3), poly("x^2", f3))

    def test_indecomposable(self, f5):
        assert tame_decompose(poly("x^4+x^3", f5), 2) is None

    def test_pure_power(self, f5):
        assert tame_decompose(FqPoly.monomial(f5, 6), 3) == (
            FqPoly.monomial(f5, 3),
            FqPoly.monomial(f5, 2),
        )

    @pytest.mark.parametrize("d", [1, 4, 6])
    def test_bad_divisor(self, f5, d):
        with pytest.raises(BadDivisorError):
            tame_decompose(FqPoly.monomial(f5, 6), d)

    def test_wild_divisor(self, f5):
        with pytest.raises(BadDivisorError):
            tame_decompose(FqPoly.monomial(f5, 10), 5)

    def test_not_monic_original(self, f5):
        with pytest.raises(NotMonicOriginalError):
            tame_decompose(poly("x^4+1", f5), 2)

    def test_all_decompositions(self, f5):
        x2, x3 = FqPoly.monomial(f5, 2), FqPoly.monomial(f5, 3)
        assert all_tame_decompositions(FqPoly.monomial(f5, 6)) == [(x2, x3), (x3, x2)]
        assert all_tame_decompositions(poly("x^4+x^3", f5)) == []

    @given(st.data())
    def test_round_trip(self, data):
        field = data.draw(tame_fields)
        g, h = data.draw(monic_originals(field, 2, 6)), data.draw(monic_originals(field, 2, 6))
        assume((g.degree * h.degree) % field.p)
        assert tame_decompose(g.compose(h), g.degree) == (g, h)

    @pytest.mark.slow
    @settings(max_examples=10_000)
    @given(st.data())
    def test_round_trip_many(self, data):
        field = data.draw(tame_fields)
        g, h = data.draw(monic_originals(field, 2, 6)), data.draw(monic_originals(field, 2, 6))
        assume((g.degree * h.degree) % field.p)
        assert tame_decompose(g.compose(h), g.degree) == (g, h)


class TestDecomposesAlong:
    def test_three_components(self, f7):
        parts = (poly("x^2+3*x", f7), poly("x^3+x", f7), poly("x^2", f7))
        f = compose_all(list(parts))
        assert decomposes_along(f, (2, 3, 2)) == parts
        assert decomposes_along(f, (2, 2, 3)) is None

    @given(st.data())
    def test_round_trip(self, data):
        field = PrimeField(7)
        parts = tuple(data.draw(monic_originals(field, 2, 3)) for _ in range(3))
        assert decomposes_along(compose_all(list(parts)), tuple(g.degree for g in parts)) == parts


class TestClassifyTwoCollision:
    def test_pure_power(self, f5):
        form = classify_two_collision(FqPoly.monomial(f5, 6), 3, 2)
        assert form == ExponentialForm(w=FqPoly.x(f5), a=0)

    def test_shifted_dickson(self, f11):
        f = original_shift(dickson(35, 1, f11), 2)
        assert classify_two_collision(f, 7, 5) == TrigonometricForm(z=1, a=2)

    def test_degree_mismatch(self, f7):
        assert classify_two_collision(poly("x^5+x^3", f7), 5, 3) is None

    def test_even_dickson_reported_as_exponential(self, f5):
        form = classify_two_collision(dickson(6, 1, f5), 3, 2)
        assert form == ExponentialForm(w=poly("x+2", f5), a=0)

    def test_argument_order_does_not_matter(self, f5):
        f = FqPoly.monomial(f5, 6)
        assert classify_two_collision(f, 2, 3) == classify_two_collision(f, 3, 2)

    def test_bad_arguments(self, f5, f7):
        with pytest.raises(BadArgumentsError):
            classify_two_collision(FqPoly.monomial(f7, 8), 4, 2)
        with pytest.raises(BadArgumentsError):
            classify_two_collision(FqPoly.monomial(f5, 10), 5, 2)

    @given(st.integers(0, 6), st.integers(0, 6))
    def test_exponential_forms_are_recovered(self, c, a):
        field = PrimeField(7)
        w = FqPoly(field, (c, 1))
        f = original_shift(exp_component(5, 3, w).compose(FqPoly.monomial(field, 3)), a)
        assert classify_two_collision(f, 5, 3) == ExponentialForm(w=w, a=a)

    @given(st.integers(1, 6), st.integers(0, 6))
    def test_trigonometric_forms_are_recovered(self, z, a):
        field = PrimeField(7)
        f = original_shift(dickson(15, z, field), a)
        assert classify_two_collision(f, 5, 3) == TrigonometricForm(z=z, a=a)

    def test_non_collision_of_right_degree(self, f7):
        f = poly("x^5+x^2+x", f7).compose(poly("x^3+x", f7))
        assert classify_two_collision(f, 5, 3) is None


class TestRittMove:
    def test_pure_powers(self, f5):
        x2, x3 = FqPoly.monomial(f5, 2), FqPoly.monomial(f5, 3)
        assert ritt_move(x3, x2) == (x2, x3)
        assert ritt_move(x2, x3) == (x3, x2)

    def test_exponential(self, f7):
        w = poly("x+1", f7)
        x2 = FqPoly.monomial(f7, 2)
        swapped = ritt_move(FqPoly.x(f7) * w**2, x2)
        assert swapped == (x2, FqPoly.x(f7) * w.compose(x2))

    def test_trigonometric(self, f11):
        z = 2
        g1, g2 = dickson(5, z**3, f11), dickson(3, z, f11)
        assert ritt_move(g1, g2) == (dickson(3, z**5, f11), dickson(5, z, f11))

    def test_shifted_pair(self, f7):
        x2 = FqPoly.monomial(f7, 2)
        g1, g2 = poly("x^3+2*x^2+x", f7), x2
        f = original_shift(g1.compose(g2), 3)
        found = tame_decompose(f, 3)
        assert found is not None
        swapped = ritt_move(*found)
        assert [g.degree for g in swapped] == [2, 3]
        assert swapped[0].compose(swapped[1]) == f

    def test_no_swap(self, f7):
        with pytest.raises(NoSwapExistsError):
            ritt_move(poly("x^5+x^2+x", f7), poly("x^3+x", f7))

    def test_degrees_must_be_coprime(self, f7):
        with pytest.raises(BadArgumentsError):
            ritt_move(FqPoly.monomial(f7, 2), FqPoly.monomial(f7, 4))


class TestGcdSplit:
    def test_identical_decompositions(self, f5):
        g, h = poly("x^2+x", f5), poly("x^3", f5)
        x = FqPoly.x(f5)
        assert gcd_split(g, h, g, h) == (g, x, x, h)

    def test_common_left_factor(self, f5):
        a = poly("x^2+x", f5)
        x2, x3 = FqPoly.monomial(f5, 2), FqPoly.monomial(f5, 3)
        result = gcd_split(a.compose(x2), x3, a.compose(x3), x2)
        assert result == (a, x2, x3, FqPoly.x(f5))

    def test_common_right_factor(self, f5):
        b = poly("x^2+2*x", f5)
        x2, x3 = FqPoly.monomial(f5, 2), FqPoly.monomial(f5, 3)
        result = gcd_split(x3, x2.compose(b), x2, x3.compose(b))
        assert result == (FqPoly.x(f5), x3, x2, b)

    def test_coprime_left_degrees_split_off_x(self, f5):
        x2, x3 = FqPoly.monomial(f5, 2), FqPoly.monomial(f5, 3)
        a, u, v, b = gcd_split(x3, x2, x2, x3)
        assert a == FqPoly.x(f5) and b == FqPoly.x(f5)
        assert (u, v) == (x3, x2)

    def test_different_polynomials(self, f5):
        x2, x3 = FqPoly.monomial(f5, 2), FqPoly.monomial(f5, 3)
        with pytest.raises(NotACollisionError):
            gcd_split(x3, x2, x2, poly("x^3+x", f5))

    def test_not_monic_original(self, f5):
        with pytest.raises(NotMonicOriginalError):
            gcd_split(poly("x^2+1", f5), FqPoly.x(f5), poly("x^2+1", f5), FqPoly.x(f5))
