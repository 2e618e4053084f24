"""Tests for ordered factorizations, σ and associatedness."""

from itertools import permutations
from math import gcd

import pytest
from hypothesis import given

from packages.collisions.factorizations import (
    coarsens_to,
    is_associated,
    nontrivial_divisors,
    sigma,
)
from packages.collisions.refine import refine_pair
from packages.core.errors import BasisMismatchError, FactorizationParseError
from packages.core.models.factorization import Basis, OrderedFactorization

from .strategies import factorization_pairs

F = OrderedFactorization.of


class TestOrderedFactorization:
    def test_parse(self):
        d = OrderedFactorization.parse("12,420")
        assert d.parts == (12, 420)
        assert d.n == 5040
        assert str(d) == "12,420"

    def test_parse_with_expected_n(self):
        assert OrderedFactorization.parse("4, 3", 12) == F(4, 3)

    @pytest.mark.parametrize(
        "text, n, position",
        [
            ("4,x", 12, 2),
            ("1,12", 12, 1),
            ("5,3", 60, 2),
            ("4,5", 12, 2),
            ("2,3", 12, 2),
        ],
    )
    def test_parse_errors_carry_position(self, text, n, position):
        with pytest.raises(FactorizationParseError) as excinfo:
            OrderedFactorization.parse(text, n)
        assert excinfo.value.position == position
        assert isinstance(excinfo.value, ValueError)

    def test_single_part_is_trivial_factorization(self):
        assert F(7).parts == (7,)
        assert len(F(7)) == 1

    def test_model_rejects_wrong_product(self):
        with pytest.raises(ValueError):
            OrderedFactorization(n=12, parts=(2, 2))

    def test_basis(self):
        assert F(2, 3, 2).basis == Basis(entries=(2, 2, 3))
        assert F(2, 3, 2).basis.product == 12
        assert F(2, 3, 2).basis.counts()[2] == 2

    def test_frozen(self):
        d = F(2, 3)
        with pytest.raises(ValueError):
            d.parts = (3, 2)


class TestNontrivialDivisors:
    @pytest.mark.parametrize(
        "n, expected",
        [(6, [2, 3]), (7, []), (12, [2, 3, 4, 6]), (1, []), (4, [2])],
    )
    def test_values(self, n, expected):
        assert nontrivial_divisors(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            nontrivial_divisors(0)


class TestSigma:
    def test_repeated_values_keep_order(self):
        assert sigma(F(2, 2, 3), F(2, 3, 2)) == (0, 2, 1)

    def test_identity(self):
        assert sigma(F(6, 7), F(6, 7)) == (0, 1)

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatchError):
            sigma(F(2, 3), OrderedFactorization(n=6, parts=(6,)))

    @given(factorization_pairs())
    def test_sigma_of_self_is_identity(self, pair):
        d, _ = pair
        assert sigma(d, d) == tuple(range(len(d)))


def _associated_by_definition(d: OrderedFactorization, e: OrderedFactorization) -> bool:
    """Search every matching permutation for one satisfying both order conditions."""
    if d.basis != e.basis:
        return False
    parts = d.parts
    for perm in permutations(range(len(parts))):
        if any(parts[i] != e.parts[perm[i]] for i in range(len(parts))):
            continue
        if all(
            perm[i] < perm[j]
            for i in range(len(parts)) for j in range(i + 1, len(parts))
            if parts[i] == parts[j] or gcd(parts[i], parts[j]) > 1
        ):
            return True
    return False


class TestIsAssociated:
    @pytest.mark.parametrize(
        "d, e, expected",
        [
            (F(2, 6, 7, 60), F(2, 7, 6, 60), True),
            (F(2, 2, 3), F(2, 3, 2), True),
            (F(2, 4), F(4, 2), False),
            (F(2, 3), F(3, 3, 2), False),
        ],
    )
    def test_examples(self, d, e, expected):
        assert is_associated(d, e) is expected

    @given(factorization_pairs())
    def test_reflexive_and_symmetric(self, pair):
        d, e = pair
        assert is_associated(d, d)
        assert is_associated(d, e) == is_associated(e, d)

    @given(factorization_pairs())
    def test_matches_definition_on_short_sequences(self, pair):
        d, e = pair
        if len(d) <= 6:
            assert is_associated(d, e) == _associated_by_definition(d, e)


class TestCoarsensTo:
    def test_refinement_blocks_recover_parts(self):
        left, right = refine_pair(F(12, 420), F(14, 360))
        assert coarsens_to(left, F(12, 420))
        assert coarsens_to(right, F(14, 360))

    def test_rejects_non_refinement(self):
        assert not coarsens_to(F(3, 2, 2), F(4, 3))

    @given(factorization_pairs())
    def test_every_refinement_coarsens_back(self, pair):
        d, e = pair
        left, right = refine_pair(d, e)
        assert coarsens_to(left, d)
        assert coarsens_to(right, e)
