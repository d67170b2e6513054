import pytest
from schroeder.errors import DegreeOverflowError, DomainError, MissingMomentError
from schroeder.hopf.tensor import TensorElement
from schroeder.ncprob.functionals import (
    Counit,
    CumulantFunctional,
    InfinitesimalCharacter,
    MomentFunctional,
    all_words,
    conv_exp,
    conv_log,
    convolve,
    counit_like,
    default_alphabet,
    geometric_inverse,
    half_shuffle_left,
    half_shuffle_right,
)


class TestMomentFunctional:
    def test_character_on_bars(self, two_letter_moments):
        phi = two_letter_moments
        assert phi(()) == 1
        assert phi(((1,), (2,))) == 2
        assert phi(((1, 2), (2,))) == 1
        assert phi(((1,), (2, 2))) == 5

    def test_evaluate_is_linear(self, two_letter_moments):
        x = TensorElement.from_word((2, 2)) * 2 - TensorElement.unit()
        assert two_letter_moments.evaluate(x) == 9

    def test_words_sorted_by_length(self, two_letter_moments):
        words = two_letter_moments.words()
        assert words[:2] == [(1,), (2,)]
        assert len(words) == 14

    def test_alphabet_inferred(self, two_letter_moments):
        assert two_letter_moments.alphabet == ('a1', 'a2')

    def test_degree_cap(self, two_letter_moments):
        with pytest.raises(DegreeOverflowError):
            two_letter_moments.on_word((1, 1, 1, 1))
        with pytest.raises(DegreeOverflowError):
            MomentFunctional({(1, 1, 1): 1}, 2)

    def test_unknown_letter(self, two_letter_moments):
        with pytest.raises(DomainError):
            two_letter_moments.on_word((3,))

    def test_missing_entry(self):
        phi = MomentFunctional({(1,): 1}, 2)
        with pytest.raises(MissingMomentError) as info:
            phi.on_word((1, 1))
        assert info.value.word == (1, 1)
        assert '1 1' in str(info.value)

    def test_empty_word_rejected(self):
        with pytest.raises(DomainError):
            MomentFunctional({(): 1}, 2)


class TestCumulantFunctional:
    def test_infinitesimal(self):
        c = CumulantFunctional('free', {(1,): 3, (1, 1): 2}, 2)
        assert c(()) == 0
        assert c(((1,), (1,))) == 0
        assert c.on_word((1, 1)) == 2
        assert c.is_infinitesimal and not c.is_character

    def test_kind_checked(self):
        with pytest.raises(DomainError):
            CumulantFunctional('classical', {(1,): 1}, 1)


class TestArithmetic:
    def test_linear_combinations(self, two_letter_moments):
        phi = two_letter_moments
        assert (phi - phi).on_word((1, 2)) == 0
        assert (2 * phi).on_word((2,)) == 4
        assert (-phi).on_word((2, 2)) == -5

    def test_incompatible_caps(self, two_letter_moments, semicircle):
        with pytest.raises(DegreeOverflowError):
            convolve(two_letter_moments, semicircle)

    def test_incompatible_alphabets(self, two_letter_moments):
        other = MomentFunctional({(1,): 1}, 3, default_alphabet(3))
        with pytest.raises(DomainError):
            convolve(two_letter_moments, other)

    def test_counit(self, two_letter_moments):
        eps = counit_like(two_letter_moments)
        assert isinstance(eps, Counit)
        assert eps(()) == 1
        assert eps(((1,),)) == 0

    def test_counit_is_neutral(self, two_letter_moments):
        phi = two_letter_moments
        product = convolve(phi, counit_like(phi))
        for w in phi.words():
            assert product.on_word(w) == phi.on_word(w)

    def test_half_shuffles_split_convolution(self, two_letter_moments):
        phi = two_letter_moments
        f = phi - counit_like(phi)
        for w in phi.words():
            total = half_shuffle_left(f, phi).on_word(w) + half_shuffle_right(f, phi).on_word(w)
            assert total == convolve(f, phi).on_word(w)

    def test_half_shuffles_vanish_on_unit(self, two_letter_moments):
        phi = two_letter_moments
        assert half_shuffle_left(phi, phi)(()) == 0
        assert half_shuffle_right(phi, phi)(()) == 0
        assert convolve(phi, phi)(()) == 1

    def test_middle_shuffle_identity(self, generator):
        f, g, h = (generator.infinitesimal_table(2, 3) for _ in range(3))
        left = half_shuffle_left(half_shuffle_right(f, g), h)
        right = half_shuffle_right(f, half_shuffle_left(g, h))
        for w in all_words(2, 3):
            assert left.on_word(w) == right.on_word(w)


class TestSeries:
    def test_log_then_exp(self, two_letter_moments):
        phi = two_letter_moments
        back = conv_exp(conv_log(phi))
        for w in phi.words():
            assert back.on_word(w) == phi.on_word(w)

    def test_geometric_inverse(self, two_letter_moments):
        phi = two_letter_moments
        product = convolve(phi, geometric_inverse(phi))
        for w in phi.words():
            assert product.on_word(w) == 0

    def test_requires_infinitesimal(self, two_letter_moments):
        with pytest.raises(DomainError):
            conv_exp(two_letter_moments)
        with pytest.raises(DomainError):
            conv_log(InfinitesimalCharacter(lambda w: 1, 3, ('a1',)))

    def test_log_of_univariate(self, constant_one):
        log = conv_log(constant_one)
        assert log.on_word((1,)) == 1
        assert log.on_word((1, 1)) == 0


class TestWords:
    def test_all_words(self):
        assert all_words(2, 2) == [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]
        assert all_words(2, 3, min_degree=3)[0] == (1, 1, 1)
        assert len(all_words(3, 3)) == 39
