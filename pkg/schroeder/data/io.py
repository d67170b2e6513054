"""
Table and Element I/O
=====================

JSON formats for moment tables, cumulant tables and tensor elements.
Keys are space-separated letter indices, values are ``p/q`` strings, and
every output is sorted so identical inputs give byte-identical files.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..config import config
from ..errors import DataFormatError, SchroederError, WordParseError
from ..hopf.tensor import TensorElement, parse_word, word_text
from ..ncprob.functionals import CumulantFunctional, MomentFunctional
from ..utils.rationals import format_fraction, parse_fraction

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def dumps(obj: Any, indent: Optional[int] = None) -> str:
    """Canonical JSON text (sorted keys)."""
    if indent is None:
        indent = config.get('output.indent')
    separators = (',', ': ') if indent else (',', ':')
    return json.dumps(obj, sort_keys=True, indent=indent, separators=separators, ensure_ascii=False)


def _read_json(path: PathLike) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise DataFormatError(f"{path}: not valid JSON ({e})") from e
    if not isinstance(data, dict):
        raise DataFormatError(f"{path}: expected a JSON object")
    return data


def _write_text(text: str, path: PathLike):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text + '\n')
    logger.info(f"Wrote {path}")


def _table_to_json(table: Dict) -> Dict[str, str]:
    return {word_text(w): format_fraction(v) for w, v in table.items()}


def _table_from_json(obj: Any, field: str) -> Dict:
    if not isinstance(obj, dict):
        raise DataFormatError(f"'{field}' must be an object mapping words to rationals")
    table = {}
    for key, value in obj.items():
        try:
            word = parse_word(key)
        except WordParseError as e:
            raise DataFormatError(f"bad key in '{field}': {e}") from e
        table[word] = parse_fraction(value)
    return table


def _header(data: Dict[str, Any]):
    alphabet = data.get('alphabet')
    max_degree = data.get('max_degree')
    if not isinstance(alphabet, list) or not all(isinstance(a, str) for a in alphabet):
        raise DataFormatError("'alphabet' must be a list of strings")
    if isinstance(max_degree, bool) or not isinstance(max_degree, int) or max_degree < 0:
        raise DataFormatError("'max_degree' must be a non-negative integer")
    return alphabet, max_degree


def moments_to_json(phi: MomentFunctional) -> Dict[str, Any]:
    return {
        'alphabet': list(phi.alphabet),
        'max_degree': phi.max_degree,
        'moments': _table_to_json(phi.table),
    }


def moments_from_json(data: Dict[str, Any]) -> MomentFunctional:
    alphabet, max_degree = _header(data)
    table = _table_from_json(data.get('moments'), 'moments')
    try:
        return MomentFunctional(table, max_degree, alphabet)
    except SchroederError as e:
        raise DataFormatError(f"inconsistent moment table: {e}") from e


def cumulants_to_json(c: CumulantFunctional) -> Dict[str, Any]:
    return {
        'alphabet': list(c.alphabet),
        'kind': c.kind,
        'max_degree': c.max_degree,
        'cumulants': _table_to_json(c.table),
    }


def cumulants_from_json(data: Dict[str, Any]) -> CumulantFunctional:
    alphabet, max_degree = _header(data)
    kind = data.get('kind')
    if kind not in CumulantFunctional.KINDS:
        raise DataFormatError(f"'kind' must be one of {', '.join(CumulantFunctional.KINDS)}")
    table = _table_from_json(data.get('cumulants'), 'cumulants')
    try:
        return CumulantFunctional(kind, table, max_degree, alphabet)
    except SchroederError as e:
        raise DataFormatError(f"inconsistent cumulant table: {e}") from e


def load_moments(path: PathLike) -> MomentFunctional:
    """
    Load a moment table.

    Args:
        path: JSON file ``{"alphabet", "max_degree", "moments"}``

    Returns:
        MomentFunctional

    Raises:
        OSError: if the file cannot be read
        DataFormatError: on a schema violation
    """
    phi = moments_from_json(_read_json(path))
    logger.info(f"Loaded {len(phi.table)} moments from {path}")
    return phi


def save_moments(phi: MomentFunctional, path: PathLike):
    _write_text(dumps(moments_to_json(phi)), path)


def load_cumulants(path: PathLike) -> CumulantFunctional:
    c = cumulants_from_json(_read_json(path))
    logger.info(f"Loaded {len(c.table)} {c.kind} cumulants from {path}")
    return c


def save_cumulants(c: CumulantFunctional, path: PathLike):
    _write_text(dumps(cumulants_to_json(c)), path)


def element_to_json(x: TensorElement) -> Dict[str, Any]:
    """``{"rank", "terms": [{"coeff", "monomials"}]}`` in canonical key order."""
    obj: Dict[str, Any] = {
        'rank': x.rank,
        'terms': [
            {
                'coeff': format_fraction(coeff),
                'monomials': [[list(word) for word in monomial] for monomial in key],
            }
            for key, coeff in x.items()
        ],
    }
    if x.commutative:
        obj['commutative'] = True
    return obj


def element_from_json(obj: Dict[str, Any]) -> TensorElement:
    if not isinstance(obj, dict):
        raise DataFormatError("an element is a JSON object")
    rank = obj.get('rank')
    terms = obj.get('terms')
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise DataFormatError("'rank' must be a positive integer")
    if not isinstance(terms, list):
        raise DataFormatError("'terms' must be a list")
    acc = {}
    for term in terms:
        try:
            key = tuple(
                tuple(tuple(int(letter) for letter in word) for word in monomial)
                for monomial in term['monomials']
            )
            coeff = parse_fraction(term['coeff'])
        except (KeyError, TypeError, ValueError) as e:
            raise DataFormatError(f"bad term {term!r}: {e}") from e
        if len(key) != rank:
            raise DataFormatError(f"term {term!r} does not have {rank} slots")
        acc[key] = acc.get(key, 0) + coeff
    return TensorElement(rank, acc, commutative=bool(obj.get('commutative', False)))
