import json
import pytest
from schroeder.cli.commands import build_parser, exit_code_for, main
from schroeder.data.generators import semicircle_moments
from schroeder.data.io import element_from_json, save_moments
from schroeder.hopf.antipode import antipode
from schroeder.hopf.coproduct import reduced_coproduct
from schroeder.hopf.tensor import pretty


@pytest.fixture
def moments_file(tmp_path, two_letter_moments):
    path = tmp_path / 'moments.json'
    save_moments(two_letter_moments, path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParser:
    def test_subcommands(self):
        args = build_parser().parse_args(['hopf', 'coproduct', '--word', '1 2', '--reduced'])
        assert args.group == 'hopf'
        assert args.command == 'coproduct'
        assert args.reduced

    def test_usage_errors(self, capsys):
        assert run(capsys, 'trees')[0] == 2
        assert run(capsys, 'trees', 'count')[0] == 2
        assert run(capsys, 'trees', 'enum', '--n', '3', '--prime', '--boolean')[0] == 2

    def test_unexpected_errors_propagate(self):
        with pytest.raises(RuntimeError):
            exit_code_for(RuntimeError('boom'))


class TestTrees:
    def test_count(self, capsys):
        code, out, _ = run(capsys, 'trees', 'count', '--n', '3')
        assert code == 0
        assert json.loads(out) == {'n': 3, 'by_k': {'1': 1, '2': 5, '3': 5}, 'total': 11}

    def test_count_pretty(self, capsys):
        code, out, _ = run(capsys, 'trees', 'count', '--n', '3', '--pretty')
        assert code == 0
        assert out.strip().endswith('total 11')

    def test_enum_boolean(self, capsys):
        code, out, _ = run(capsys, 'trees', 'enum', '--n', '3', '--boolean')
        assert code == 0
        assert len(out.strip().splitlines()) == 4

    def test_enum_with_columns(self, capsys):
        code, out, _ = run(capsys, 'trees', 'enum', '--n', '2', '--with-ncp', '--murua')
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[-1] == '(o,o,o)\t{1,2}\t1/1'
        assert lines[0] == '((o,o),o)\t{1|2}\t-1/2'

    def test_size_cap(self, capsys):
        code, _, err = run(capsys, 'trees', 'enum', '--n', '11')
        assert code == 2
        assert 'error:' in err


class TestHopf:
    def test_antipode_json(self, capsys):
        code, out, _ = run(capsys, 'hopf', 'antipode', '--word', '1 2')
        assert code == 0
        assert element_from_json(json.loads(out)) == antipode((1, 2))

    def test_antipode_pretty(self, capsys):
        code, out, _ = run(capsys, 'hopf', 'antipode', '--word', '1 2', '--method', 'takeuchi', '--pretty')
        assert code == 0
        assert out.strip() == pretty(antipode((1, 2)))

    def test_reduced_coproduct(self, capsys):
        code, out, _ = run(capsys, 'hopf', 'coproduct', '--word', '1 2 3', '--reduced', '--iterate', '2')
        assert code == 0
        assert element_from_json(json.loads(out)) == reduced_coproduct((1, 2, 3))

    def test_bad_input(self, capsys):
        assert run(capsys, 'hopf', 'antipode', '--word', '1 x')[0] == 2
        assert run(capsys, 'hopf', 'antipode', '--word', '1', '--method', 'magic')[0] == 2
        assert run(capsys, 'hopf', 'coproduct', '--word', '1 2', '--half', 'left', '--reduced')[0] == 2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / 'out' / 'delta.json'
        code, out, _ = run(capsys, 'hopf', 'coproduct', '--word', '1 2', '--out', str(target))
        assert code == 0
        assert out == ''
        assert len(json.loads(target.read_text())['terms']) == 4


class TestProb:
    def test_cumulants(self, capsys, moments_file):
        code, out, _ = run(capsys, 'prob', 'cumulants', '--kind', 'free', '--moments', moments_file)
        data = json.loads(out)
        assert code == 0
        assert data['kind'] == 'free'
        assert data['cumulants']['1 2'] == '-3/2'

    def test_moments_round_trip(self, capsys, moments_file, tmp_path):
        cumulants = tmp_path / 'cumulants.json'
        run(capsys, 'prob', 'cumulants', '--kind', 'boolean', '--moments', moments_file, '--out', str(cumulants))
        code, out, _ = run(capsys, 'prob', 'moments', '--kind', 'boolean', '--cumulants', str(cumulants))
        assert code == 0
        assert json.loads(out) == json.loads(open(moments_file).read())

    def test_inverse(self, capsys, moments_file):
        code, out, _ = run(capsys, 'prob', 'inverse', '--moments', moments_file, '--method', 'noncrossing')
        data = json.loads(out)
        assert code == 0
        assert data['inverse']['1 2'] == '7/2'
        assert data['method'] == 'noncrossing'

    def test_wick(self, capsys, moments_file):
        code, out, _ = run(capsys, 'prob', 'wick', '--word', '2', '--moments', moments_file, '--pretty')
        assert code == 0
        assert out.strip() == '-2 + a2'

    def test_data_errors(self, capsys, tmp_path):
        missing = str(tmp_path / 'missing.json')
        assert run(capsys, 'prob', 'cumulants', '--kind', 'free', '--moments', missing)[0] == 3
        small = tmp_path / 'small.json'
        save_moments(semicircle_moments(2), small)
        assert run(capsys, 'prob', 'wick', '--word', '1 1 1', '--moments', str(small))[0] == 3


class TestVerify:
    def test_degree_one(self, capsys):
        code, out, _ = run(capsys, 'verify', '--degree', '1')
        data = json.loads(out)
        assert code == 0
        assert data['passed'] is True
        assert data['degree'] == 1
