import itertools

import pytest

from frobsum.errors import BudgetError, DegreeMismatchError
from frobsum.frobenius import triple_count
from frobsum.oracle import (
    brute_triple_count,
    canonical_perm,
    compose,
    conjecture_scan,
    cycle_type,
    derangement_classes,
    identity_perm,
    inverse,
    is_transitive,
    perm_cycles_str,
    perms_of_type,
    realizability,
)
from frobsum.partitions import CycleClass, enumerate_partitions


def classes_of(n):
    return [CycleClass(tuple(p)) for p in enumerate_partitions(n)]


class TestPermBasics:
    def test_compose_is_left_to_right(self):
        p = (1, 2, 0, 3)  # (1 2 3) in cycle notation
        q = (0, 3, 1, 2)  # (2 4 3)
        assert compose(p, q) == tuple(q[p[x]] for x in range(4))

    def test_inverse(self):
        p = (2, 0, 3, 1)
        assert compose(p, inverse(p)) == identity_perm(4)

    def test_cycle_type(self):
        assert cycle_type((1, 2, 0, 4, 3)) == (3, 2)
        assert cycle_type(identity_perm(5)) == (1, 1, 1, 1, 1)

    def test_canonical_perm_has_declared_type(self):
        for shape in enumerate_partitions(6):
            c = CycleClass(tuple(shape))
            assert cycle_type(canonical_perm(c)) == c.lengths

    def test_perms_of_type_counts(self):
        for shape in enumerate_partitions(5):
            c = CycleClass(tuple(shape))
            assert sum(1 for _ in perms_of_type(5, c.lengths)) == c.class_size

    def test_cycles_str(self):
        assert perm_cycles_str((1, 2, 0, 3)) == "(1 2 3)"
        assert perm_cycles_str(identity_perm(3)) == "id"


class TestTransitivity:
    def test_klein_four_generators(self):
        assert is_transitive([(1, 0, 3, 2), (2, 3, 0, 1)])

    def test_single_transposition(self):
        assert not is_transitive([(1, 0, 2, 3)])

    def test_full_cycle(self):
        assert is_transitive([(1, 2, 3, 4, 0)])

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            is_transitive([(1, 0), (0, 1, 2)])


class TestBruteCount:
    def test_spec_examples(self):
        assert brute_triple_count((3,), (3,), (3,)) == 2
        assert brute_triple_count((1, 1, 1), (1, 1, 1), (1, 1, 1)) == 1
        assert brute_triple_count((2, 2), (2, 2), (3, 1)) == 0

    def test_cap(self):
        with pytest.raises(BudgetError):
            brute_triple_count((9,), (9,), (9,))

    def test_permutation_invariance(self):
        triple = (CycleClass((3, 2)), CycleClass((5,)), CycleClass((2, 2, 1)))
        counts = {brute_triple_count(*perm) for perm in itertools.permutations(triple)}
        assert len(counts) == 1

    def test_matches_frobenius_small(self):
        for n in range(2, 6):
            for triple in itertools.product(classes_of(n), repeat=3):
                assert brute_triple_count(*triple) == triple_count(*triple)


class TestRealizability:
    def test_three_cycles_in_s4(self):
        v = realizability((3, 1), (3, 1), (3, 1))
        assert v.frobenius_positive and v.realizable
        s1, s2, s3 = v.witness
        assert compose(compose(s1, s2), s3) == identity_perm(4)
        assert cycle_type(s1) == cycle_type(s2) == cycle_type(s3) == (3, 1)
        assert is_transitive([s1, s2, s3])

    def test_vanishing_triple(self):
        v = realizability((2, 2), (2, 2), (3, 1))
        assert not v.frobenius_positive and not v.realizable and v.witness is None

    def test_seven_cycles(self):
        v = realizability((7,), (7,), (7,))
        assert v.realizable

    def test_witness_properties_across_triples(self):
        for n in (4, 5):
            for triple in itertools.combinations_with_replacement(classes_of(n), 3):
                v = realizability(*triple)
                if not v.realizable:
                    assert v.witness is None
                    continue
                assert v.frobenius_positive
                s1, s2, s3 = v.witness
                assert compose(compose(s1, s2), s3) == identity_perm(n)
                for s, c in zip((s1, s2, s3), triple):
                    assert cycle_type(s) == c.lengths
                assert is_transitive([s1, s2])

    def test_realizable_implies_positive_count(self):
        for n in (4, 5, 6):
            for triple in itertools.combinations_with_replacement(classes_of(n), 3):
                v = realizability(*triple)
                count = brute_triple_count(*triple)
                assert v.frobenius_positive == (count > 0)
                if v.realizable:
                    assert count > 0


class TestConjectureScan:
    def test_degree_six_has_no_triples(self):
        assert conjecture_scan(6) == []

    def test_degree_seven_single_triple(self):
        rows = conjecture_scan(7)
        assert len(rows) == 1
        row = rows[0]
        assert [c.lengths for c in row.classes] == [(7,), (7,), (7,)]
        assert row.realizable and not row.is_counterexample

    def test_degree_eight_families(self):
        rows = conjecture_scan(8)
        seen = {tuple(c.lengths for c in row.classes) for row in rows}
        assert seen == {((8,), (8,), (4, 4)), ((4, 4), (4, 4), (4, 4))}
        for row in rows:
            assert row.frobenius_count == row.brute_count
            assert row.frobenius_positive
            assert not row.is_counterexample

    def test_derangement_classes(self):
        assert [c.lengths for c in derangement_classes(7)] == [(7,)]
        assert [c.lengths for c in derangement_classes(8)] == [(8,), (4, 4)]
