import pytest
from schroeder.errors import DomainError, RankMismatchError
from schroeder.hopf.coproduct import (
    connected_components,
    coproduct,
    forest_coproduct_terms,
    half_coproduct_left,
    half_coproduct_right,
    iterated_coproduct,
    iterated_reduced_coproduct,
    reduced_coproduct,
    restrict,
    schroder_iterated_terms,
    split,
)
from schroeder.hopf.tensor import TensorElement, apply_to_slot

WORDS = [(1,), (1, 2), (1, 2, 3), (1, 1, 2), (2, 1, 2, 1)]


def key(*slots):
    return tuple(tuple(tuple(w) for w in slot) for slot in slots)


class TestPositions:
    def test_restrict(self):
        assert restrict((3, 1, 2), [3, 1]) == (3, 2)
        assert restrict((3, 1, 2), []) == ()
        with pytest.raises(DomainError):
            restrict((1, 2), [3])

    def test_connected_components(self):
        assert connected_components([2], [1, 2, 3, 5]) == [(1,), (3,), (5,)]
        assert connected_components([2, 3], range(1, 6)) == [(1,), (4, 5)]
        assert connected_components([], [1, 2]) == [(1, 2)]
        with pytest.raises(DomainError):
            connected_components([4], [1, 2])

    def test_split(self):
        assert split((1, 2, 3, 4, 5), [2, 3]) == ((1,), (4, 5))
        assert split((1, 2, 3), [1, 2, 3]) == ()


class TestCoproduct:
    def test_two_letters(self):
        delta = coproduct((1, 2))
        assert len(delta) == 4
        expected = TensorElement(2, {
            key((), [(1, 2)]): 1,
            key([(1,)], [(2,)]): 1,
            key([(2,)], [(1,)]): 1,
            key([(1, 2)], ()): 1,
        })
        assert delta == expected

    def test_middle_letter_splits_the_rest(self):
        assert coproduct((1, 2, 3))[key([(2,)], [(1,), (3,)])] == 1

    def test_repeated_letters_collect(self):
        assert coproduct((1, 1))[key([(1,)], [(1,)])] == 2

    def test_unit(self):
        assert coproduct(TensorElement.unit()) == TensorElement.unit(2)

    def test_multiplicative_on_bars(self):
        delta = coproduct(((1,), (2,)))
        assert len(delta) == 4
        assert delta[key([(1,)], [(2,)])] == 1

    def test_rank_check(self):
        with pytest.raises(RankMismatchError):
            coproduct(TensorElement.unit(2))

    @pytest.mark.parametrize('w', WORDS)
    def test_coassociative(self, w):
        delta = coproduct(w)
        left = apply_to_slot(delta, 0, coproduct, 2)
        right = apply_to_slot(delta, 1, coproduct, 2)
        assert left == right == iterated_coproduct(w, 3)

    @pytest.mark.parametrize('w', WORDS + [((1, 2), (3,))])
    def test_half_coproducts_split_the_coproduct(self, w):
        assert half_coproduct_left(w) + half_coproduct_right(w) == coproduct(w)

    def test_half_coproducts_two_letters(self):
        assert half_coproduct_left((1, 2)) == TensorElement(2, {key([(1,)], [(2,)]): 1, key([(1, 2)], ()): 1})
        assert half_coproduct_right((1, 2)) == TensorElement(2, {key((), [(1, 2)]): 1, key([(2,)], [(1,)]): 1})


class TestReduced:
    def test_single_letter(self):
        assert not reduced_coproduct((1,))
        assert not reduced_coproduct(TensorElement.unit())

    def test_two_letters(self):
        assert reduced_coproduct((1, 2)) == TensorElement(2, {key([(1,)], [(2,)]): 1, key([(2,)], [(1,)]): 1})

    def test_iterated_base_cases(self):
        assert iterated_reduced_coproduct((1, 2), 1) == TensorElement.from_word((1, 2))
        assert iterated_reduced_coproduct((1, 2), 2) == reduced_coproduct((1, 2))
        assert not iterated_reduced_coproduct((1, 2), 3)
        with pytest.raises(DomainError):
            iterated_reduced_coproduct((1, 2), 0)
        with pytest.raises(DomainError):
            iterated_coproduct((1, 2), 0)

    @pytest.mark.parametrize('w', WORDS)
    def test_tree_expansion_matches_nesting(self, w):
        for k in range(1, len(w) + 2):
            assert schroder_iterated_terms(w, k) == iterated_reduced_coproduct(w, k)

    @pytest.mark.parametrize('monomial', [((1, 2),), ((1, 2), (3,)), ((1,), (2, 3), (1,))])
    def test_forest_expansion(self, monomial):
        assert forest_coproduct_terms(monomial) == reduced_coproduct(monomial)

    def test_forest_expansion_needs_a_word(self):
        with pytest.raises(DomainError):
            forest_coproduct_terms(())
