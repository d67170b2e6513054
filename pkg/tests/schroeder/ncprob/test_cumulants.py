import pytest
from fractions import Fraction
from schroeder.combinatorics.trees import corolla, parse_tree
from schroeder.data.generators import moments_from_sequence
from schroeder.errors import DomainError, UnknownMethodError
from schroeder.ncprob.cumulants import (
    INVERSE_METHODS,
    available_methods,
    block_product,
    conv_inverse,
    cumulants_from_moments,
    moments_from_cumulants,
    murua_table,
    solve_left_fixed_point,
    solve_right_fixed_point,
)
from schroeder.ncprob.functionals import convolve, exp_left, exp_right

KINDS = ['free', 'boolean', 'monotone']


class TestUnivariate:
    def test_semicircle_free_cumulants(self, semicircle):
        c = cumulants_from_moments('free', semicircle)
        assert [c.table[(1,) * n] for n in range(1, 7)] == [0, 1, 0, 0, 0, 0]

    def test_semicircle_boolean_cumulants(self, semicircle):
        c = cumulants_from_moments('boolean', semicircle)
        assert [c.table[(1,) * n] for n in range(1, 7)] == [0, 1, 0, 1, 0, 2]

    @pytest.mark.parametrize('kind', KINDS)
    def test_constant_moments(self, kind, constant_one):
        c = cumulants_from_moments(kind, constant_one)
        assert [c.table[(1,) * n] for n in range(1, 7)] == [1, 0, 0, 0, 0, 0]

    @pytest.mark.parametrize('kind,expected', [('free', -1), ('boolean', 0), ('monotone', Fraction(-1, 2))])
    def test_third_cumulant(self, kind, expected):
        phi = moments_from_sequence([1, 2, 3])
        m1, m2, m3 = 1, 2, 3
        formulas = {
            'free': m3 - 3 * m1 * m2 + 2 * m1 ** 3,
            'boolean': m3 - 2 * m1 * m2 + m1 ** 3,
            'monotone': m3 - Fraction(5, 2) * m1 * m2 + Fraction(3, 2) * m1 ** 3,
        }
        assert formulas[kind] == expected
        for method in available_methods(kind):
            c = cumulants_from_moments(kind, phi, method)
            assert c.table[(1, 1, 1)] == expected


class TestMultivariate:
    @pytest.mark.parametrize('kind', KINDS)
    def test_methods_agree(self, kind, two_letter_moments):
        reference = cumulants_from_moments(kind, two_letter_moments).table
        for method in available_methods(kind):
            assert cumulants_from_moments(kind, two_letter_moments, method).table == reference

    @pytest.mark.parametrize('kind', KINDS)
    def test_second_order(self, kind, two_letter_moments):
        c = cumulants_from_moments(kind, two_letter_moments)
        assert c.table[(1,)] == 1
        assert c.table[(1, 2)] == Fraction(-3, 2)
        assert c.kind == kind
        assert c.max_degree == 3

    @pytest.mark.parametrize('kind', KINDS)
    def test_round_trip(self, kind, two_letter_moments):
        c = cumulants_from_moments(kind, two_letter_moments)
        assert moments_from_cumulants(kind, c).table == two_letter_moments.table

    def test_selected_words(self, two_letter_moments):
        c = cumulants_from_moments('free', two_letter_moments, words=[(2, 1)])
        assert list(c.table) == [(2, 1)]

    def test_fixed_points(self, two_letter_moments):
        phi = two_letter_moments
        left = exp_left(solve_left_fixed_point(phi))
        right = exp_right(solve_right_fixed_point(phi))
        for w in phi.words():
            assert left.on_word(w) == phi.on_word(w)
            assert right.on_word(w) == phi.on_word(w)

    def test_block_product(self, two_letter_moments):
        assert block_product(two_letter_moments, (1, 2, 2), [(1, 3), (2,)]) == Fraction(1, 2) * 2

    def test_errors(self, two_letter_moments):
        with pytest.raises(DomainError):
            cumulants_from_moments('classical', two_letter_moments)
        with pytest.raises(UnknownMethodError):
            cumulants_from_moments('free', two_letter_moments, 'intervals')
        c = cumulants_from_moments('free', two_letter_moments)
        with pytest.raises(DomainError):
            solve_left_fixed_point(c)
        with pytest.raises(DomainError):
            solve_right_fixed_point(c)


class TestInverse:
    @pytest.mark.parametrize('method', sorted(INVERSE_METHODS))
    def test_inverse_methods(self, method, two_letter_moments):
        phi = two_letter_moments
        inverse = conv_inverse(phi, method)
        assert inverse.on_word((1,)) == -1
        assert inverse.on_word((1, 2)) == Fraction(7, 2)
        product = convolve(phi, inverse)
        for w in phi.words():
            assert product.on_word(w) == 0

    def test_methods_agree(self, two_letter_moments):
        phi = two_letter_moments
        reference = conv_inverse(phi)
        for method in INVERSE_METHODS:
            inverse = conv_inverse(phi, method)
            assert all(inverse.on_word(w) == reference.on_word(w) for w in phi.words())

    def test_errors(self, two_letter_moments):
        with pytest.raises(UnknownMethodError):
            conv_inverse(two_letter_moments, 'magic')
        with pytest.raises(DomainError):
            conv_inverse(cumulants_from_moments('free', two_letter_moments))


class TestMurua:
    def test_degree_two(self):
        table = murua_table(2)
        assert table[corolla(2)] == 1
        assert table[parse_tree('(o,(o,o))')] == Fraction(-1, 2)
        assert table[parse_tree('((o,o),o)')] == Fraction(-1, 2)

    def test_degree_three(self):
        table = murua_table(3)
        assert len(table) == 11
        assert table[parse_tree('((o,o),(o,o))')] == Fraction(1, 6)
        assert table[parse_tree('(o,(o,(o,o)))')] == Fraction(1, 3)
