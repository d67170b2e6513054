import pytest
from fractions import Fraction
from unittest.mock import MagicMock
from schroeder.config import Config
from schroeder.data.generators import RandomTableGenerator, constant_moments, semicircle_moments
from schroeder.ncprob.functionals import MomentFunctional

@pytest.fixture
def mock_config_dict():
    return {
        'enumeration': {
            'max_degree': 10,
            'max_partition_size': 12
        },
        'linearizations': {
            'bruteforce_max_vertices': 7
        },
        'verification': {
            'degree': 3,
            'seed': 0,
            'random_tables': 3,
            'numerator_bound': 5,
            'denominator_bound': 3,
            'repeated_letter_words': 4,
            'alphabet_size': 2,
            'jobs': 1
        },
        'output': {
            'indent': None
        },
        'logging': {
            'level': 'WARNING',
            'log_file': None
        }
    }

@pytest.fixture
def mock_config(mock_config_dict):
    config = MagicMock(spec=Config)
    config._config = mock_config_dict

    def get(key, default=None):
        keys = key.split('.')
        value = mock_config_dict
        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    config.get.side_effect = get
    config.enumeration = mock_config_dict['enumeration']
    config.verification = mock_config_dict['verification']
    config.output = mock_config_dict['output']
    config.logging_config = mock_config_dict['logging']
    return config

@pytest.fixture
def semicircle():
    return semicircle_moments(6)

@pytest.fixture
def constant_one():
    return constant_moments(6)

@pytest.fixture
def generator():
    return RandomTableGenerator(seed=7)

@pytest.fixture
def two_letter_moments():
    # phi on words over {a1, a2} up to length 3, chosen by hand
    table = {
        (1,): Fraction(1), (2,): Fraction(2),
        (1, 1): Fraction(3), (1, 2): Fraction(1, 2), (2, 1): Fraction(-1), (2, 2): Fraction(5),
        (1, 1, 1): Fraction(2), (1, 1, 2): Fraction(0), (1, 2, 1): Fraction(1, 3), (1, 2, 2): Fraction(4),
        (2, 1, 1): Fraction(-2), (2, 1, 2): Fraction(1), (2, 2, 1): Fraction(3, 2), (2, 2, 2): Fraction(7),
    }
    return MomentFunctional(table, 3)
