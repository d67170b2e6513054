import pytest
from schroeder.errors import DomainError
from schroeder.hopf.antipode import antipode
from schroeder.hopf.coproduct import coproduct
from schroeder.hopf.symmetric import (
    comm_monomial,
    commutative_projection,
    sym_antipode,
    sym_coproduct,
    sym_iterated,
    sym_iterated_recursive,
    sym_reduced_coproduct,
)
from schroeder.hopf.tensor import TensorElement


class TestCommutativeVariant:
    def test_comm_monomial(self):
        assert comm_monomial([(2,), (1, 3)]) == ((1, 3), (2,))

    def test_antipode_two_letters(self):
        expected = TensorElement(1, {(((1, 2),),): -1, (((1,), (2,)),): 2}, commutative=True)
        assert sym_antipode((1, 2)) == expected

    @pytest.mark.parametrize('w', [(1, 2, 3), (1, 2, 1), (1, 2, 3, 4)])
    def test_projection_commutes_with_antipode(self, w):
        assert sym_antipode(w) == commutative_projection(antipode(w))

    def test_projection_commutes_with_coproduct(self):
        w = (1, 2, 3)
        assert sym_coproduct(w) == commutative_projection(coproduct(w))

    def test_reduced(self):
        w = (1, 2, 3)
        full = sym_coproduct(w)
        reduced = sym_reduced_coproduct(w)
        assert len(full) - len(reduced) == 2
        assert all(k[0] and k[1] for k in reduced.keys())

    @pytest.mark.parametrize('w', [(1, 2, 3), (1, 1, 2, 2)])
    def test_iterated_tree_expansion(self, w):
        for k in range(1, len(w) + 2):
            assert sym_iterated(w, k) == sym_iterated_recursive(w, k)

    def test_antipode_is_multiplicative(self):
        x = ((3,), (1, 2))
        product = sym_antipode((1, 2)) * sym_antipode((3,))
        assert sym_antipode(x) == product

    def test_k_checked(self):
        with pytest.raises(DomainError):
            sym_iterated((1, 2), 0)
        with pytest.raises(DomainError):
            sym_iterated_recursive((1, 2), 0)
