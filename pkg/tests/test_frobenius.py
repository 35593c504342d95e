import itertools
import math
from fractions import Fraction

import pytest

from frobsum.errors import DegreeMismatchError, PreconditionError
from frobsum.frobenius import (
    family_sum,
    min_dimension,
    ncycle_family_sum,
    regroup_residual,
    triple_count,
)
from frobsum.characters import two_row_dimension
from frobsum.partitions import CycleClass, FamilySelector, enumerate_partitions


def classes_of(n):
    return [CycleClass(tuple(p)) for p in enumerate_partitions(n)]


class TestFamilySum:
    def test_three_cycles_in_s3(self):
        s = family_sum(3, None, (3,), (3,), (3,))
        assert s.value == Fraction(3, 2)
        assert s.terms == 3

    def test_identity_triple_gives_group_order(self):
        for n in (2, 4, 6):
            identity = (1,) * n
            s = family_sum(n, None, identity, identity, identity)
            assert s.value == math.factorial(n)

    def test_s4_vanishing_example(self):
        s = family_sum(4, None, (2, 2), (2, 2), (3, 1))
        assert s.value == 0

    def test_symmetric_in_classes(self):
        triple = (CycleClass((3, 2)), CycleClass((5,)), CycleClass((2, 2, 1)))
        values = {family_sum(5, None, *perm).value
                  for perm in itertools.permutations(triple)}
        assert len(values) == 1

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            family_sum(4, None, (3,), (3,), (3,))

    def test_family_restriction_splits_total(self):
        c = CycleClass((5, 3))
        full = family_sum(8, None, c, c, c).value
        k = 2
        y = family_sum(8, FamilySelector.y_at_most(k - 1), c, c, c).value
        z = family_sum(8, FamilySelector.z_at_most(k - 1), c, c, c).value
        x = family_sum(8, FamilySelector.x_at_least(k), c, c, c).value
        assert y + z + x == full


class TestTripleCount:
    def test_spec_examples(self):
        assert triple_count((3,), (3,), (3,)) == 2
        assert triple_count((1, 1, 1), (1, 1, 1), (1, 1, 1)) == 1
        assert triple_count((2, 2), (2, 2), (3, 1)) == 0

    def test_always_non_negative_integer(self):
        for n in (4, 5):
            for triple in itertools.product(classes_of(n), repeat=3):
                assert triple_count(*triple) >= 0


class TestRegroup:
    def test_spec_examples(self):
        assert regroup_residual(13, 4, (13,), (13,), (13,)) == 0
        assert regroup_residual(9, 3, (9,), (9,), (9,)) == 0
        assert regroup_residual(8, 2, (8,), (8,), (4, 4)) == 0

    def test_rejects_large_k(self):
        with pytest.raises(PreconditionError):
            regroup_residual(9, 4, (9,), (9,), (9,))

    def test_rejects_odd_sign_product(self):
        with pytest.raises(PreconditionError):
            regroup_residual(8, 2, (8,), (8,), (8,))

    def test_exhaustive_small_degrees(self):
        for n in (5, 6, 7):
            cls = classes_of(n)
            for triple in itertools.product(cls, repeat=3):
                if triple[0].sign * triple[1].sign * triple[2].sign != 1:
                    continue
                for k in range(1, (n - 2) // 2 + 1):
                    assert regroup_residual(n, k, *triple) == 0

    def test_y_equals_z_below_threshold(self):
        # The conjugation identity behind the regroup: Y^{<=k-1} = Z^{<=k-1}
        # whenever the sign product is one.
        for n in (6, 9, 12):
            cls = classes_of(n)
            picks = [(cls[0], cls[0], cls[0]), (cls[1], cls[1], cls[0]),
                     (cls[-1], cls[-1], cls[0]), (cls[2], cls[3], cls[4])]
            for triple in picks:
                if triple[0].sign * triple[1].sign * triple[2].sign != 1:
                    continue
                for k in range(1, (n - 2) // 2 + 1):
                    y = family_sum(n, FamilySelector.y_at_most(k - 1), *triple)
                    z = family_sum(n, FamilySelector.z_at_most(k - 1), *triple)
                    assert y.value == z.value


class TestMinDimension:
    def test_z_family_example(self):
        got = min_dimension(12, FamilySelector.z_exact(5))
        assert got.value == 297
        # The minimum of a Z family sits at the conjugate of the two-row shape.
        assert tuple(got.shape.conjugate()) == (7, 5)
        assert got.value == two_row_dimension(12, 5)

    def test_single_column(self):
        got = min_dimension(9, FamilySelector.z_exact(0))
        assert got.value == 1 and tuple(got.shape) == (1,) * 9

    def test_empty_family(self):
        with pytest.raises(PreconditionError):
            min_dimension(6, FamilySelector.x_at_least(5))


class TestNCycleFastPath:
    def test_closed_form_small(self):
        assert ncycle_family_sum(13).value == Fraction(13, 7)

    def test_equals_generic_path(self):
        for n in range(1, 13):
            fast = ncycle_family_sum(n)
            generic = family_sum(n, None, (n,), (n,), (n,))
            assert fast.value == generic.value

    def test_even_degrees_vanish(self):
        for n in (4, 8, 12):
            assert ncycle_family_sum(n).value == 0


class TestParallel:
    def test_worker_count_does_not_change_sum(self):
        c1 = CycleClass((21, 1, 1, 1))
        c3 = CycleClass((12, 12))
        a = family_sum(24, None, c1, c1, c3, workers=1)
        b = family_sum(24, None, c1, c1, c3, workers=3)
        assert a == b

    def test_worker_count_with_selector(self):
        c1 = CycleClass((21, 1, 1, 1))
        c3 = CycleClass((12, 12))
        sel = FamilySelector.z_at_most(11)
        a = family_sum(24, sel, c1, c1, c3, workers=1)
        b = family_sum(24, sel, c1, c1, c3, workers=2)
        assert a == b
