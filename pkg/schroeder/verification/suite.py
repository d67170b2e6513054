"""
Verification Suite
==================

Cross-checks every tree-indexed formula against an independent computation:
enumeration counts against recurrences, the four antipodes against each
other, the iterated coproduct against its tree expansion, and every cumulant,
inverse and Wick method against the others on seeded random tables.

Each check records the number of cases it ran and the first counterexample.
Checks draw from their own seeded generator, so the report is the same for a
fixed (degree, seed) whatever the number of worker threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import factorial
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd

from ..combinatorics.partitions import (
    count_prime_trees_for_ncp,
    count_trees_for_ncp,
    enum_interval,
    enum_monotone,
    enum_nc,
    hat_extension,
    is_refinement,
    moebius_nc,
    nesting_forest,
    one_partition,
    tree_to_ncp,
    zero_partition,
)
from ..combinatorics.trees import (
    SkeletonPoset,
    ascent_free_linearization,
    count_k_linearizations,
    count_k_linearizations_bruteforce,
    enum_schroder,
    enum_schroder_by_k,
    is_boolean,
    is_prime,
    skeleton,
    tree_factorial,
)
from ..config import Config, config as default_config
from ..errors import SchroederError
from ..data.generators import RandomTableGenerator, catalan, constant_moments, semicircle_moments
from ..hopf.antipode import ANTIPODE_METHODS, antipode, antipode_axiom_defect, bijective_linearizations, cancellation_sum
from ..hopf.coproduct import (
    coproduct,
    forest_coproduct_terms,
    half_coproduct_left,
    half_coproduct_right,
    iterated_reduced_coproduct,
    reduced_coproduct,
    schroder_iterated_terms,
)
from ..hopf.symmetric import commutative_projection, sym_antipode, sym_iterated, sym_iterated_recursive
from ..hopf.tensor import TensorElement, apply_to_slot, word_text
from ..ncprob.cumulants import (
    CUMULANT_METHODS,
    INVERSE_METHODS,
    KINDS,
    conv_inverse,
    cumulant_functional,
    cumulants_from_moments,
    moments_from_cumulants,
)
from ..ncprob.functionals import (
    all_words,
    conv_exp,
    conv_log,
    convolve,
    exp_left,
    exp_right,
    half_shuffle_left,
    half_shuffle_right,
)
from ..ncprob.wick import WICK_METHODS, wick

logger = logging.getLogger(__name__)


def little_schroeder_numbers(n: int) -> List[int]:
    """
    |Sch(m)| for m = 0..n by the composition recurrence on leaf counts.

    T(l) counts trees with l leaves; a tree with l >= 2 leaves splits its
    leaves into a first child and a nonempty composition for the rest.
    """
    trees = [0, 1]
    compositions = [1, 1]
    for leaves in range(2, n + 2):
        total = sum(trees[j] * compositions[leaves - j] for j in range(1, leaves))
        trees.append(total)
        compositions.append(total + total)
    return trees[1:n + 2]


def ordered_word(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1))


def bar_monomials(max_degree: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """Every split of 1 2 ... n into consecutive words, n <= max_degree."""
    found = []
    for n in range(1, max_degree + 1):
        for cuts in range(1 << (n - 1)):
            words, start = [], 1
            for position in range(1, n):
                if cuts >> (position - 1) & 1:
                    words.append(tuple(range(start, position + 1)))
                    start = position + 1
            words.append(tuple(range(start, n + 1)))
            found.append(tuple(words))
    return found


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    cases: int = 0
    passed: bool = True
    counterexample: Optional[str] = None

    def record(self, ok: bool, describe: Callable[[], str]):
        self.cases += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = describe()


@dataclass
class VerificationReport:
    degree: int
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            'degree': self.degree,
            'seed': self.seed,
            'passed': self.passed,
            'checks': [asdict(c) for c in self.checks],
        }

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame([asdict(c) for c in self.checks], columns=['name', 'cases', 'passed', 'counterexample'])
        frame['counterexample'] = frame['counterexample'].fillna('')
        return frame

    def summary_table(self) -> str:
        return self.to_frame().to_string(index=False)


@dataclass(frozen=True)
class _Context:
    degree: int
    seed: int
    settings: Dict[str, Any]

    def bound(self, limit: int) -> int:
        return min(self.degree, limit)

    def generator(self, offset: int) -> RandomTableGenerator:
        return RandomTableGenerator(
            self.seed * 1009 + offset,
            self.settings.get('numerator_bound', 5),
            self.settings.get('denominator_bound', 3)
        )

    @property
    def tables(self) -> int:
        return int(self.settings.get('random_tables', 50))

    @property
    def alphabet_size(self) -> int:
        return int(self.settings.get('alphabet_size', 2))


# ---------------------------------------------------------------------------
# Trees and partitions
# ---------------------------------------------------------------------------

def check_schroder_counts(ctx: _Context) -> CheckResult:
    result = CheckResult('schroder_counts')
    top = ctx.bound(9)
    oracle = little_schroeder_numbers(top)
    for n in range(top + 1):
        found = len(enum_schroder(n))
        result.record(found == oracle[n], lambda: f"|Sch({n})| = {found}, recurrence gives {oracle[n]}")
    return result


def check_counts_by_internal_vertices(ctx: _Context) -> CheckResult:
    result = CheckResult('counts_by_internal_vertices')
    for n in range(1, ctx.bound(8) + 1):
        total = sum(len(enum_schroder_by_k(n, k)) for k in range(1, n + 1))
        result.record(total == len(enum_schroder(n)), lambda: f"n={n}: sum over k is {total}")
        binary = len(enum_schroder_by_k(n, n))
        result.record(binary == catalan(n), lambda: f"|Sch_{n}({n})| = {binary}, Catalan is {catalan(n)}")
    return result


def check_prime_and_boolean_counts(ctx: _Context) -> CheckResult:
    result = CheckResult('prime_and_boolean_counts')
    for n in range(1, ctx.bound(10) + 1):
        trees = enum_schroder(n)
        boolean = sum(1 for t in trees if is_boolean(t))
        result.record(boolean == 2 ** (n - 1), lambda: f"n={n}: {boolean} boolean trees")
        if 2 <= n <= 9:
            prime = sum(1 for t in trees if is_prime(t))
            expected = 2 * len(enum_schroder(n - 1))
            result.record(prime == expected, lambda: f"n={n}: {prime} prime trees, expected {expected}")
    return result


def check_ascent_free_linearization(ctx: _Context) -> CheckResult:
    result = CheckResult('ascent_free_linearization')
    for n in range(1, ctx.bound(7) + 1):
        for t in enum_schroder(n):
            free = [g for g, ok in bijective_linearizations(t) if ok]
            result.record(
                free == [ascent_free_linearization(t)],
                lambda: f"{t.serialized}: {len(free)} ascent-free linearizations"
            )
    return result


def check_linearization_counts(ctx: _Context) -> CheckResult:
    result = CheckResult('linearization_counts')
    for n in range(1, ctx.bound(5) + 1):
        for t in enum_schroder(n):
            poset = skeleton(t)
            for k in range(1, poset.size + 1):
                fast = count_k_linearizations(poset, k)
                slow = count_k_linearizations_bruteforce(poset, k)
                result.record(fast == slow, lambda: f"{t.serialized}, k={k}: {fast} vs {slow}")
                if k < poset.height + 1:
                    result.record(fast == 0, lambda: f"{t.serialized}, k={k} below height")
    for m in range(1, ctx.bound(7) + 1):
        chain = SkeletonPoset(tuple(range(-1, m - 1)))
        result.record(tree_factorial(chain) == factorial(m), lambda: f"chain of {m} vertices")
    return result


def check_tree_partitions(ctx: _Context) -> CheckResult:
    result = CheckResult('tree_partitions')
    for n in range(1, ctx.bound(6) + 1):
        image = {tree_to_ncp(t) for t in enum_schroder(n)}
        result.record(image == set(enum_nc(n)), lambda: f"n={n}: pi(t) misses {len(set(enum_nc(n)) - image)} partitions")
    for n in range(1, ctx.bound(8) + 1):
        images = sorted((tree_to_ncp(t) for t in enum_schroder(n) if is_boolean(t)), key=lambda p: p.blocks)
        result.record(images == enum_interval(n), lambda: f"n={n}: boolean trees do not biject onto NCInt")
    return result


def check_moebius(ctx: _Context) -> CheckResult:
    result = CheckResult('moebius')
    for n in range(1, ctx.bound(7) + 1):
        value = moebius_nc(zero_partition(n), one_partition(n))
        expected = (-1) ** (n - 1) * catalan(n - 1)
        result.record(value == expected, lambda: f"Moeb(0_{n}, 1_{n}) = {value}, expected {expected}")
    for n in range(1, ctx.bound(6) + 1):
        top, hat_top = one_partition(n), one_partition(n + 1)
        for p in enum_nc(n):
            primes = count_prime_trees_for_ncp(p)
            result.record(primes == abs(moebius_nc(p, top)), lambda: f"{p}: {primes} prime trees")
            trees = count_trees_for_ncp(p)
            result.record(trees == abs(moebius_nc(hat_extension(p), hat_top)), lambda: f"{p}: {trees} trees")
    for n in range(1, ctx.bound(5) + 1):
        partitions = enum_nc(n)
        for s in partitions:
            for p in partitions:
                if not is_refinement(p, s):
                    continue
                total = sum(moebius_nc(r, s) for r in partitions if is_refinement(p, r) and is_refinement(r, s))
                result.record(total == (1 if p == s else 0), lambda: f"recursion fails at ({p}, {s})")
    return result


def check_monotone_count(ctx: _Context) -> CheckResult:
    result = CheckResult('monotone_count')
    for n in range(1, ctx.bound(6) + 1):
        expected = sum(count_k_linearizations(nesting_forest(p).to_poset(), len(p)) for p in enum_nc(n))
        found = len(enum_monotone(n))
        result.record(found == expected, lambda: f"n={n}: {found} monotone partitions, expected {expected}")
    return result


# ---------------------------------------------------------------------------
# Hopf algebra
# ---------------------------------------------------------------------------

def _test_words(ctx: _Context, limit: int, offset: int) -> List[Tuple[int, ...]]:
    top = ctx.bound(limit)
    words = [ordered_word(n) for n in range(1, top + 1)]
    if top >= 2:
        count = int(ctx.settings.get('repeated_letter_words', 20))
        words += ctx.generator(offset).repeated_letter_words(count, top, ctx.alphabet_size)
    return words


def check_coassociativity(ctx: _Context) -> CheckResult:
    result = CheckResult('coassociativity')
    for monomial in bar_monomials(ctx.bound(5)):
        delta = coproduct(monomial)
        left = apply_to_slot(delta, 0, coproduct, 2)
        right = apply_to_slot(delta, 1, coproduct, 2)
        result.record(left == right, lambda: f"{monomial}")
    return result


def check_half_coproducts(ctx: _Context) -> CheckResult:
    result = CheckResult('half_coproducts')
    for w in _test_words(ctx, 5, 1):
        ok = coproduct(w) == half_coproduct_left(w) + half_coproduct_right(w)
        result.record(ok, lambda: word_text(w))
    return result


def check_antipode_agreement(ctx: _Context) -> CheckResult:
    result = CheckResult('antipode_agreement')
    for w in _test_words(ctx, 6, 2):
        reference = antipode(w, 'schroder')
        for method in ANTIPODE_METHODS:
            result.record(antipode(w, method) == reference, lambda: f"{method} on {word_text(w)}")
        result.record(reference.total_degrees() == [len(w)], lambda: f"grading of S({word_text(w)})")
    return result


def check_antipode_axiom(ctx: _Context) -> CheckResult:
    result = CheckResult('antipode_axiom')
    cases = [(w,) for w in _test_words(ctx, 5, 3)] + bar_monomials(ctx.bound(5))
    for monomial in cases:
        for side in ('left', 'right'):
            defect = antipode_axiom_defect(TensorElement.from_monomial(monomial), 'schroder', side)
            result.record(not defect, lambda: f"{side} axiom on {monomial}: {defect}")
    return result


def check_iterated_coproduct(ctx: _Context) -> CheckResult:
    result = CheckResult('iterated_coproduct')
    for w in _test_words(ctx, 5, 4):
        for k in range(1, len(w) + 1):
            trees = schroder_iterated_terms(w, k)
            nested = iterated_reduced_coproduct(w, k)
            result.record(trees == nested, lambda: f"{word_text(w)}, k={k}")
            result.record(trees.total_degrees() in ([], [len(w)]), lambda: f"grading of {word_text(w)}, k={k}")
    return result


def check_forest_coproduct(ctx: _Context) -> CheckResult:
    result = CheckResult('forest_coproduct')
    for monomial in bar_monomials(ctx.bound(5)):
        ok = forest_coproduct_terms(monomial) == reduced_coproduct(monomial)
        result.record(ok, lambda: f"{monomial}")
    return result


def check_cancellation(ctx: _Context) -> CheckResult:
    result = CheckResult('cancellation')
    for n in range(1, ctx.bound(5) + 1):
        for t in enum_schroder(n):
            for g, ascent_free in bijective_linearizations(t):
                expected = (-1) ** t.internal_count if ascent_free else 0
                total = cancellation_sum(t, g)
                result.record(total == expected, lambda: f"{t.serialized}, g={g.levels}: {total}")
    return result


def check_commutative_variant(ctx: _Context) -> CheckResult:
    result = CheckResult('commutative_variant')
    for n in range(1, ctx.bound(5) + 1):
        w = ordered_word(n)
        for k in range(1, n + 1):
            result.record(sym_iterated(w, k) == sym_iterated_recursive(w, k), lambda: f"{word_text(w)}, k={k}")
        projected = commutative_projection(antipode(w, 'schroder'))
        result.record(projected == sym_antipode(w), lambda: f"S_S({word_text(w)})")
    return result


# ---------------------------------------------------------------------------
# Functionals
# ---------------------------------------------------------------------------

def _agree(result: CheckResult, functionals: Dict[str, Any], words, label: str):
    names = list(functionals)
    reference = functionals[names[0]]
    for w in words:
        expected = reference.on_word(w)
        for name in names[1:]:
            value = functionals[name].on_word(w)
            result.record(
                value == expected,
                lambda: f"{label}: {name} gives {value} on {word_text(w)}, {names[0]} gives {expected}"
            )


def check_cumulant_methods(ctx: _Context) -> CheckResult:
    result = CheckResult('cumulant_methods')
    top = ctx.bound(6)
    if top < 1:
        return result
    gen = ctx.generator(10)
    for index in range(ctx.tables):
        phi = gen.moment_table(ctx.alphabet_size, top)
        for kind in KINDS:
            methods = {m: cumulant_functional(kind, phi, m) for m in CUMULANT_METHODS[kind]}
            _agree(result, methods, phi.words(), f"table {index}, {kind}")
    return result


def check_round_trips(ctx: _Context) -> CheckResult:
    result = CheckResult('round_trips')
    top = ctx.bound(6)
    if top < 1:
        return result
    gen = ctx.generator(11)
    for index in range(ctx.tables):
        for kind in KINDS:
            c = gen.cumulant_table(kind, ctx.alphabet_size, top)
            back = cumulants_from_moments(kind, moments_from_cumulants(kind, c))
            result.record(back.table == c.table, lambda: f"table {index}, {kind}")
    return result


def check_fixtures(ctx: _Context) -> CheckResult:
    result = CheckResult('fixtures')
    top = ctx.bound(8)
    if top < 1:
        return result
    free = cumulants_from_moments('free', semicircle_moments(top))
    for n in range(1, top + 1):
        value = free.table[(1,) * n]
        result.record(value == (1 if n == 2 else 0), lambda: f"semicircle k_{n} = {value}")
    boolean = cumulants_from_moments('boolean', constant_moments(top))
    for n in range(1, top + 1):
        value = boolean.table[(1,) * n]
        result.record(value == (1 if n == 1 else 0), lambda: f"constant b_{n} = {value}")
    return result


def check_inverse_methods(ctx: _Context) -> CheckResult:
    result = CheckResult('inverse_methods')
    top = ctx.bound(5)
    if top < 1:
        return result
    gen = ctx.generator(12)
    for index in range(ctx.tables):
        phi = gen.moment_table(ctx.alphabet_size, top)
        inverses = {m: conv_inverse(phi, m) for m in INVERSE_METHODS}
        _agree(result, inverses, phi.words(), f"table {index}")
        product = convolve(phi, inverses['antipode'])
        for w in phi.words():
            result.record(product.on_word(w) == 0, lambda: f"table {index}: Phi * Phi^-1 on {word_text(w)}")
    return result


def check_exponentials(ctx: _Context) -> CheckResult:
    result = CheckResult('exponentials')
    top = ctx.bound(5)
    if top < 1:
        return result
    gen = ctx.generator(13)
    for index in range(ctx.tables):
        alpha = gen.infinitesimal_table(ctx.alphabet_size, top)
        words = all_words(ctx.alphabet_size, top)
        back = conv_log(conv_exp(alpha))
        inverse_pair = convolve(exp_left(alpha), exp_right(-alpha))
        for w in words:
            result.record(back.on_word(w) == alpha.on_word(w), lambda: f"table {index}: log(exp) on {word_text(w)}")
            result.record(inverse_pair.on_word(w) == 0, lambda: f"table {index}: E<(a) * E>(-a) on {word_text(w)}")
    return result


def check_shuffle_identities(ctx: _Context) -> CheckResult:
    result = CheckResult('shuffle_identities')
    top = ctx.bound(4)
    if top < 1:
        return result
    gen = ctx.generator(15)
    words = all_words(ctx.alphabet_size, top)
    for index in range(max(1, ctx.tables // 10)):
        f, g, h = (gen.infinitesimal_table(ctx.alphabet_size, top) for _ in range(3))
        identities = {
            '(f<g)<h = f<(g*h)': (half_shuffle_left(half_shuffle_left(f, g), h),
                                  half_shuffle_left(f, convolve(g, h))),
            '(f>g)<h = f>(g<h)': (half_shuffle_left(half_shuffle_right(f, g), h),
                                  half_shuffle_right(f, half_shuffle_left(g, h))),
            'f>(g>h) = (f*g)>h': (half_shuffle_right(f, half_shuffle_right(g, h)),
                                  half_shuffle_right(convolve(f, g), h)),
        }
        for label, (left, right) in identities.items():
            for w in words:
                result.record(left.on_word(w) == right.on_word(w), lambda: f"table {index}: {label} on {word_text(w)}")
    return result


def check_wick(ctx: _Context) -> CheckResult:
    result = CheckResult('wick')
    top = ctx.bound(5)
    if top < 1:
        return result
    gen = ctx.generator(14)
    for index in range(max(1, ctx.tables // 10)):
        phi = gen.moment_table(ctx.alphabet_size, top)
        for w in phi.words():
            reference = wick(w, phi, 'schroder')
            for method in WICK_METHODS:
                result.record(wick(w, phi, method) == reference, lambda: f"table {index}: {method} on {word_text(w)}")
            centered = phi.evaluate(reference)
            result.record(centered == 0, lambda: f"table {index}: Phi(W({word_text(w)})) = {centered}")
    return result


CHECKS: List[Callable[[_Context], CheckResult]] = [
    check_schroder_counts,
    check_counts_by_internal_vertices,
    check_prime_and_boolean_counts,
    check_ascent_free_linearization,
    check_linearization_counts,
    check_tree_partitions,
    check_moebius,
    check_monotone_count,
    check_coassociativity,
    check_half_coproducts,
    check_antipode_agreement,
    check_antipode_axiom,
    check_iterated_coproduct,
    check_forest_coproduct,
    check_cancellation,
    check_commutative_variant,
    check_cumulant_methods,
    check_round_trips,
    check_fixtures,
    check_inverse_methods,
    check_exponentials,
    check_shuffle_identities,
    check_wick,
]


class VerificationSuite:
    """
    Runs every cross-formula check up to a degree.

    Args:
        degree: Largest word length / tree degree exercised
        seed: Seed for the random tables
        jobs: Worker threads (1 runs the checks in order on the caller's thread)
        config: Configuration supplying the verification settings
    """

    def __init__(
        self,
        degree: Optional[int] = None,
        seed: Optional[int] = None,
        jobs: Optional[int] = None,
        config: Optional[Config] = None
    ):
        self.config = config or default_config
        settings = dict(self.config.verification)
        self.degree = settings.get('degree', 4) if degree is None else degree
        self.seed = settings.get('seed', 0) if seed is None else seed
        self.jobs = max(1, int(settings.get('jobs', 1) if jobs is None else jobs))
        self.context = _Context(self.degree, self.seed, settings)

    def _run_check(self, check: Callable[[_Context], CheckResult]) -> CheckResult:
        try:
            result = check(self.context)
        except SchroederError as error:
            # e.g. a degree above the configured enumeration cap
            name = check.__name__[len('check_'):]
            result = CheckResult(name, 1, False, f"{type(error).__name__}: {error}")
        status = 'passed' if result.passed else 'FAILED'
        logger.info(f"{result.name}: {result.cases} cases, {status}")
        if not result.passed:
            logger.warning(f"{result.name} counterexample: {result.counterexample}")
        return result

    def run(self) -> VerificationReport:
        logger.info(f"Verifying identities up to degree {self.degree} (seed {self.seed}, jobs {self.jobs})")
        if self.jobs == 1:
            results = [self._run_check(check) for check in CHECKS]
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                results = list(pool.map(self._run_check, CHECKS))
        report = VerificationReport(self.degree, self.seed, results)
        logger.info(f"Verification {'passed' if report.passed else 'failed'}: "
                    f"{len(report.failures)} of {len(results)} checks failed")
        return report
