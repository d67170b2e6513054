import json
import pytest
from fractions import Fraction
from schroeder.data.generators import semicircle_moments
from schroeder.data.io import (
    cumulants_from_json,
    dumps,
    element_from_json,
    element_to_json,
    load_cumulants,
    load_moments,
    moments_from_json,
    moments_to_json,
    save_cumulants,
    save_moments,
)
from schroeder.errors import DataFormatError
from schroeder.hopf.antipode import antipode
from schroeder.hopf.tensor import TensorElement
from schroeder.ncprob.cumulants import cumulants_from_moments


class TestMomentFiles:
    def test_canonical_text(self):
        text = dumps(moments_to_json(semicircle_moments(2)))
        assert text == '{"alphabet":["a1"],"max_degree":2,"moments":{"1":"0/1","1 1":"1/1"}}'

    def test_pretty_indent(self):
        assert dumps({'b': 1, 'a': 2}, indent=2) == '{\n  "a": 2,\n  "b": 1\n}'

    def test_save_and_load(self, tmp_path, two_letter_moments):
        path = tmp_path / 'nested' / 'moments.json'
        save_moments(two_letter_moments, path)
        loaded = load_moments(path)
        assert loaded.table == two_letter_moments.table
        assert loaded.max_degree == 3
        assert loaded.alphabet == ('a1', 'a2')

    def test_integer_values_accepted(self):
        phi = moments_from_json({'alphabet': ['x'], 'max_degree': 1, 'moments': {'1': 2}})
        assert phi.on_word((1,)) == 2

    @pytest.mark.parametrize('data', [
        {'alphabet': 'a1', 'max_degree': 1, 'moments': {}},
        {'alphabet': ['a1'], 'max_degree': -1, 'moments': {}},
        {'alphabet': ['a1'], 'max_degree': True, 'moments': {}},
        {'alphabet': ['a1'], 'max_degree': 1, 'moments': []},
        {'alphabet': ['a1'], 'max_degree': 1, 'moments': {'x': '1/2'}},
        {'alphabet': ['a1'], 'max_degree': 1, 'moments': {'1': '1/0'}},
        {'alphabet': ['a1'], 'max_degree': 1, 'moments': {'1 1': '1'}},
        {'alphabet': ['a1'], 'max_degree': 2, 'moments': {'2': '1'}},
    ])
    def test_schema_violations(self, data):
        with pytest.raises(DataFormatError):
            moments_from_json(data)

    def test_bad_files(self, tmp_path):
        broken = tmp_path / 'broken.json'
        broken.write_text('{not json')
        with pytest.raises(DataFormatError):
            load_moments(broken)
        listed = tmp_path / 'list.json'
        listed.write_text('[1, 2]')
        with pytest.raises(DataFormatError):
            load_moments(listed)
        with pytest.raises(OSError):
            load_moments(tmp_path / 'missing.json')


class TestCumulantFiles:
    def test_save_and_load(self, tmp_path, semicircle):
        c = cumulants_from_moments('boolean', semicircle)
        path = tmp_path / 'cumulants.json'
        save_cumulants(c, path)
        data = json.loads(path.read_text())
        assert data['kind'] == 'boolean'
        assert data['cumulants']['1 1 1 1'] == '1/1'
        loaded = load_cumulants(path)
        assert loaded.kind == 'boolean'
        assert loaded.table == c.table

    def test_kind_required(self):
        with pytest.raises(DataFormatError):
            cumulants_from_json({'alphabet': ['a1'], 'max_degree': 1, 'cumulants': {}})


class TestElements:
    def test_to_json(self):
        x = TensorElement(2, {(((1,),), ((2,), (1, 3))): Fraction(-1, 2)})
        assert element_to_json(x) == {
            'rank': 2,
            'terms': [{'coeff': '-1/2', 'monomials': [[[1]], [[2], [1, 3]]]}],
        }

    def test_commutative_flag(self):
        x = TensorElement(1, {(((2,), (1,)),): 1}, commutative=True)
        obj = element_to_json(x)
        assert obj['commutative'] is True
        assert element_from_json(obj) == x

    def test_from_json_inverts(self):
        s = antipode((1, 2, 3))
        assert element_from_json(json.loads(dumps(element_to_json(s)))) == s

    @pytest.mark.parametrize('obj', [
        [],
        {'rank': 0, 'terms': []},
        {'rank': 1, 'terms': {}},
        {'rank': 1, 'terms': [{'coeff': '1'}]},
        {'rank': 2, 'terms': [{'coeff': '1', 'monomials': [[[1]]]}]},
    ])
    def test_bad_elements(self, obj):
        with pytest.raises(DataFormatError):
            element_from_json(obj)
