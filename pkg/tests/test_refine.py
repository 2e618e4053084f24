"""Tests for the gcd-grid refinement and set normalization."""

import pytest
from hypothesis import given

from packages.collisions.factorizations import is_associated
from packages.collisions.refine import (
    NormalizedSet,
    RefinementMatrix,
    normalize,
    refine_pair,
    refinement_matrix,
)
from packages.core.errors import ProductMismatchError
from packages.core.models.factorization import OrderedFactorization

from .strategies import factorization_pairs, factorization_sets

F = OrderedFactorization.of


class TestRefinePair:
    @pytest.mark.parametrize(
        "d, e, expected",
        [
            (F(12, 420), F(14, 360), (F(2, 6, 7, 60), F(2, 7, 6, 60))),
            (F(4, 3), F(6, 2), (F(2, 2, 3), F(2, 3, 2))),
            (F(6), F(6), (F(6), F(6))),
        ],
    )
    def test_examples(self, d, e, expected):
        assert refine_pair(d, e) == expected

    def test_product_mismatch(self):
        with pytest.raises(ProductMismatchError):
            refine_pair(F(2, 3), F(2, 5))

    @given(factorization_pairs())
    def test_swapping_inputs_swaps_outputs(self, pair):
        d, e = pair
        left, right = refine_pair(d, e)
        assert refine_pair(e, d) == (right, left)

    @given(factorization_pairs())
    def test_outputs_are_associated(self, pair):
        left, right = refine_pair(*pair)
        assert is_associated(left, right)

    @given(factorization_pairs())
    def test_fixed_point_characterizes_associated_pairs(self, pair):
        d, e = pair
        left, right = refine_pair(d, e)
        same_lengths = len(left) == len(d) and len(right) == len(e)
        unchanged = left == d and right == e
        assert same_lengths == unchanged == is_associated(d, e)


class TestRefinementMatrix:
    def test_example_grid(self):
        matrix = refinement_matrix(F(12, 420), F(14, 360))
        assert matrix.cells == ((2, 6, 1), (7, 60, 1), (1, 1, 1))
        assert matrix.row_sequence() == (2, 6, 7, 60)
        assert matrix.column_sequence() == (2, 7, 6, 60)

    @given(factorization_pairs())
    def test_rows_and_columns_multiply_to_parts(self, pair):
        d, e = pair
        matrix = refinement_matrix(d, e)
        for i, part in enumerate(d.parts):
            product = 1
            for j in range(matrix.cols):
                product *= matrix.cells[i][j]
            assert product == part
        for j, part in enumerate(e.parts):
            product = 1
            for i in range(matrix.rows):
                product *= matrix.cells[i][j]
            assert product == part

    @given(factorization_pairs())
    def test_final_grid_is_cross_coprime(self, pair):
        assert refinement_matrix(*pair).is_cross_coprime()

    def test_shape_is_validated(self):
        with pytest.raises(ValueError):
            RefinementMatrix(rows=1, cols=1, cells=((6,),))


class TestNormalize:
    def test_three_sequences(self):
        result = normalize([F(12, 420), F(14, 360), F(20, 252)])
        assert result.members == (
            F(2, 2, 3, 7, 5, 12),
            F(2, 2, 5, 3, 7, 12),
            F(2, 7, 2, 3, 5, 12),
        )
        assert result.canonical_member == F(2, 2, 3, 7, 5, 12)
        assert result.n == 5040

    def test_associated_input_is_kept(self):
        assert normalize([F(7, 6), F(6, 7)]).members == (F(6, 7), F(7, 6))

    def test_single_refinement(self):
        assert normalize([F(4, 3), F(6, 2)]).members == (F(2, 2, 3), F(2, 3, 2))

    def test_duplicates_collapse(self):
        assert normalize([F(2, 3), F(2, 3)]).members == (F(2, 3),)

    def test_empty(self):
        with pytest.raises(ValueError):
            normalize([])

    def test_product_mismatch(self):
        with pytest.raises(ProductMismatchError):
            normalize([F(2, 3), F(2, 2)])

    def test_set_rejects_unassociated_members(self):
        with pytest.raises(ValueError):
            NormalizedSet(members=(F(2, 4), F(4, 2)))

    @given(factorization_sets())
    def test_members_pairwise_associated(self, sequences):
        result = normalize(sequences)
        assert len(result.members) <= len(set(sequences))
        for a in result.members:
            for b in result.members:
                assert is_associated(a, b)

    @given(factorization_sets())
    def test_idempotent(self, sequences):
        once = normalize(sequences)
        assert normalize(once.members) == once

    @given(factorization_sets())
    def test_order_of_input_does_not_matter(self, sequences):
        assert normalize(sequences) == normalize(list(reversed(sequences)))
