import pytest
from math import comb, factorial
from schroeder.combinatorics.partitions import (
    MonotonePartition,
    NcPartition,
    SetPartition,
    block_of_root,
    count_prime_trees_for_ncp,
    count_trees_for_ncp,
    enum_interval,
    enum_monotone,
    enum_nc,
    enum_set_partitions,
    forest_factorial,
    hat_extension,
    irreducible_components,
    is_refinement,
    linear_extensions,
    moebius_nc,
    moebius_partition_lattice,
    nesting_forest,
    one_partition,
    parse_monotone_partition,
    parse_partition,
    subtree_blocks,
    tree_monotone_partition,
    tree_to_ncp,
    zero_partition,
)
from schroeder.combinatorics.trees import LEAF, Linearization, enum_schroder, parse_tree
from schroeder.errors import DomainError, OrderError, PartitionParseError, SizeLimitError


def catalan(n):
    return comb(2 * n, n) // (n + 1)


class TestSetPartition:
    def test_canonical_form(self):
        p = SetPartition(4, ((4, 2), (3,), (1,)))
        assert p.blocks == ((1,), (2, 4), (3,))
        assert p.serialize() == '{1|2,4|3}'
        assert p.block_of(4) == (2, 4)

    def test_rejects_non_partition(self):
        with pytest.raises(DomainError):
            SetPartition(3, ((1, 2),))
        with pytest.raises(DomainError):
            SetPartition(2, ((1, 2), ()))

    def test_crossing(self):
        p = SetPartition(4, ((1, 3), (2, 4)))
        assert not p.is_noncrossing
        with pytest.raises(DomainError):
            NcPartition(4, ((1, 3), (2, 4)))

    def test_interval(self):
        assert SetPartition(3, ((1, 2), (3,))).is_interval
        assert not SetPartition(3, ((1, 3), (2,))).is_interval

    def test_parse(self):
        p = parse_partition('{1,5,6|2,3|4}')
        assert p.n == 6
        assert p.blocks == ((1, 5, 6), (2, 3), (4,))
        assert parse_partition('{}') == NcPartition(0, ())

    @pytest.mark.parametrize('text', ['1,2', '{1,a}', '{1|'])
    def test_parse_errors(self, text):
        with pytest.raises(PartitionParseError):
            parse_partition(text)


class TestEnumeration:
    @pytest.mark.parametrize('n', range(0, 7))
    def test_noncrossing_counts(self, n):
        assert len(enum_nc(n)) == catalan(n)

    @pytest.mark.parametrize('n', range(1, 7))
    def test_interval_counts(self, n):
        found = enum_interval(n)
        assert len(found) == 2 ** (n - 1)
        assert all(p.is_interval for p in found)

    def test_bell_numbers(self):
        assert [len(enum_set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]

    @pytest.mark.parametrize('n', range(1, 5))
    def test_monotone_counts(self, n):
        assert len(enum_monotone(n)) == factorial(n + 1) // 2

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            enum_nc(13)
        with pytest.raises(DomainError):
            enum_interval(-1)


class TestMoebius:
    @pytest.mark.parametrize('n', range(1, 7))
    def test_noncrossing_bottom_to_top(self, n):
        assert moebius_nc(zero_partition(n), one_partition(n)) == (-1) ** (n - 1) * catalan(n - 1)

    @pytest.mark.parametrize('n', range(1, 6))
    def test_partition_lattice_bottom_to_top(self, n):
        assert moebius_partition_lattice(zero_partition(n), one_partition(n)) == (-1) ** (n - 1) * factorial(n - 1)

    def test_diagonal(self):
        p = parse_partition('{1,4|2,3}')
        assert moebius_nc(p, p) == 1
        assert moebius_nc(zero_partition(4), p) == 1

    def test_order(self):
        assert is_refinement(zero_partition(3), one_partition(3))
        assert not is_refinement(one_partition(3), zero_partition(3))
        assert not is_refinement(zero_partition(2), zero_partition(3))
        with pytest.raises(OrderError):
            moebius_nc(one_partition(3), zero_partition(3))
        with pytest.raises(OrderError):
            moebius_partition_lattice(one_partition(3), zero_partition(3))

    def test_crossing_argument(self):
        crossing = SetPartition(4, ((1, 3), (2, 4)))
        with pytest.raises(OrderError):
            moebius_nc(crossing, one_partition(4))
        assert moebius_partition_lattice(crossing, one_partition(4)) == -1

    def test_hat_extension(self):
        assert hat_extension(one_partition(2)) == parse_partition('{1|2,3}')
        assert hat_extension(NcPartition(0, ())) == one_partition(1)


class TestNesting:
    def test_forest(self):
        f = nesting_forest(parse_partition('{1,4|2,3|5}'))
        assert [r.block for r in f.roots] == [(1, 4), (5,)]
        assert f.roots[0].children[0].block == (2, 3)
        assert f.size == 3
        assert not f.is_tree
        assert f.serialize() == '{1,4}[{2,3}] {5}'

    def test_forest_factorial(self):
        assert forest_factorial(nesting_forest(parse_partition('{1,6|2,5|3,4}'))) == 6
        assert forest_factorial(nesting_forest(zero_partition(3))) == 1

    def test_irreducible_components(self):
        parts = irreducible_components(parse_partition('{1,2|3,5|4}'))
        assert parts == [one_partition(2), parse_partition('{1,3|2}')]

    def test_linear_extensions(self):
        assert len(linear_extensions(nesting_forest(zero_partition(2)))) == 2
        assert linear_extensions(nesting_forest(parse_partition('{1,3|2}'))) == [((1, 3), (2,))]

    def test_monotone_order(self):
        m = parse_monotone_partition('[1,4 ; 2,3]')
        assert m.underlying == parse_partition('{1,4|2,3}')
        assert len(m) == 2
        with pytest.raises(DomainError):
            MonotonePartition(4, ((2, 3), (1, 4)))
        with pytest.raises(PartitionParseError):
            parse_monotone_partition('1,4 ; 2,3')


class TestTreePartitions:
    def test_reference_tree(self):
        t = parse_tree('(o,(o,o,(o,o)),o,(o,(o,o,o,o)))')
        assert tree_to_ncp(t).serialize() == '{1,5,6|2,3|4|7|8,9,10}'
        assert block_of_root(t) == (1, 5, 6)
        assert subtree_blocks(t, (1,)) == [(2, 3), (4,)]

    def test_corolla_and_leaf(self):
        assert tree_to_ncp(parse_tree('(o,o,o,o)')) == one_partition(3)
        with pytest.raises(DomainError):
            tree_to_ncp(LEAF)

    @pytest.mark.parametrize('n', range(1, 5))
    def test_images_are_noncrossing_and_cover_sch(self, n):
        partitions = enum_nc(n)
        assert sum(count_trees_for_ncp(p) for p in partitions) == len(enum_schroder(n))
        primes = sum(count_prime_trees_for_ncp(p) for p in partitions)
        assert primes == (2 * len(enum_schroder(n - 1)) if n > 1 else 1)

    def test_counts_per_partition(self):
        assert count_trees_for_ncp(one_partition(3)) == 1
        assert count_trees_for_ncp(zero_partition(3)) == 5
        assert count_prime_trees_for_ncp(zero_partition(3)) == 2

    def test_monotone_partition_of_tree(self):
        t = parse_tree('((o,o),(o,o))')
        m = tree_monotone_partition(t, Linearization((1, 2, 2)))
        assert m.serialize() == '[2 ; 1 ; 3]'
