"""Exact evaluation of the three-class character sums.

The central quantity is the sum over a diagram family of
chi(C1) * chi(C2) * chi(C3) / dim, an exact rational.  Scaled by the class
sizes over n! it counts the ordered triples (s1, s2, s3) in C1 x C2 x C3
with s1 s2 s3 = id, so it must always come out a non-negative integer.

Sums accumulate term-reduced Fractions; rational addition is associative,
so any grouping (including the worker split) yields the identical value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .characters import CharacterEvaluator, _dimension, _evaluator_for
from .errors import DegreeMismatchError, PreconditionError
from .partitions import (
    CycleClass,
    FamilySelector,
    Partition,
    enumerate_partitions,
    max_t_strictly_below_half,
)


@dataclass(frozen=True)
class CharSum:
    """An exact family character sum and the number of diagrams it ran over."""

    value: Fraction
    terms: int


# Below this degree family sums share the per-class evaluator registry; above
# it each sum owns fresh evaluators that skip root caching, so streaming large
# families leaves no per-diagram residue.
_SHARED_MEMO_DEGREE = 20


def _as_class(c) -> CycleClass:
    return c if isinstance(c, CycleClass) else CycleClass(c)


def _common_degree(n, *classes):
    degrees = {c.n for c in classes}
    if len(degrees) != 1:
        raise DegreeMismatchError(f"classes have mixed degrees {sorted(degrees)}")
    degree = degrees.pop()
    if n is not None and degree != n:
        raise DegreeMismatchError(f"expected classes of degree {n}, got {degree}")
    return degree


def _sum_over(n, selector, evaluators) -> CharSum:
    total = Fraction(0)
    terms = 0
    for shape in enumerate_partitions(n, selector):
        terms += 1
        tup = tuple(shape)
        prod = 1
        for ev in evaluators:
            prod *= ev._char(tup, 0)
            if prod == 0:
                break
        if prod:
            total += Fraction(prod, _dimension(tup))
    return CharSum(total, terms)


def _family_sum_chunk(args):
    n, selector, lengths, leads = args
    evaluators = [CharacterEvaluator(ls, cache_roots=False) for ls in lengths]
    total = Fraction(0)
    terms = 0
    for lead in leads:
        sub = selector.intersect(FamilySelector.y_exact(n - lead))
        part = _sum_over(n, sub, evaluators)
        total += part.value
        terms += part.terms
    return total, terms


def family_sum(n: int, selector: Optional[FamilySelector], c1, c2, c3,
               workers: int = 1) -> CharSum:
    """Sum chi(C1) chi(C2) chi(C3) / dim over a diagram family, exactly.

    The unrestricted selector gives the full Y_n sum.  Evaluation order puts
    the class with the longest cycle first so that diagrams without a
    matching rim hook are rejected before any further work.  With
    ``workers > 1`` the stream is split by leading part across processes;
    the merged value is identical for any worker count.
    """
    classes = [_as_class(c) for c in (c1, c2, c3)]
    _common_degree(n, *classes)
    sel = selector if selector is not None else FamilySelector.unrestricted()
    lengths = sorted((c.lengths for c in classes), key=lambda ls: -ls[0])
    if workers > 1 and n >= 24:
        return _family_sum_parallel(n, sel, lengths, workers)
    if n <= _SHARED_MEMO_DEGREE:
        # Repeated sums at small degree hit the same class columns over and
        # over; the shared registry keeps those memos warm.
        evaluators = [_evaluator_for(ls) for ls in lengths]
    else:
        evaluators = [CharacterEvaluator(ls, cache_roots=False) for ls in lengths]
    return _sum_over(n, sel, evaluators)


def _family_sum_parallel(n, sel, lengths, workers) -> CharSum:
    from concurrent.futures import ProcessPoolExecutor

    lead_hi = n - sel.y_lo
    lead_lo = 1 if sel.y_hi is None else max(1, n - sel.y_hi)
    leads = list(range(min(lead_hi, n), lead_lo - 1, -1))
    if not leads:
        return CharSum(Fraction(0), 0)
    chunks = [leads[i::workers] for i in range(workers)]
    jobs = [(n, sel, lengths, chunk) for chunk in chunks if chunk]
    total = Fraction(0)
    terms = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for value, count in pool.map(_family_sum_chunk, jobs):
            total += value
            terms += count
    return CharSum(total, terms)


def triple_count(c1, c2, c3, workers: int = 1) -> int:
    """|C1||C2||C3| / n! times the full character sum: the number of ordered
    triples with product identity.  Exact; raises if the value fails to be a
    non-negative integer, which would mean a bug upstream."""
    classes = [_as_class(c) for c in (c1, c2, c3)]
    n = classes[0].n
    _common_degree(n, *classes)
    y = family_sum(n, None, *classes, workers=workers)
    sizes = classes[0].class_size * classes[1].class_size * classes[2].class_size
    count = Fraction(sizes, math.factorial(n)) * y.value
    if count.denominator != 1 or count < 0:
        raise ArithmeticError(f"triple count came out {count}, not a non-negative integer")
    return int(count)


def regroup_residual(n: int, k: int, c1, c2, c3) -> Fraction:
    """Y_n - 2 Z_n^{<=k-1} - X_n^k; zero under the regrouping identity.

    Requires k < (n-1)/2 and sign product one (the identity's hypotheses).
    """
    classes = [_as_class(c) for c in (c1, c2, c3)]
    _common_degree(n, *classes)
    if k < 1 or k > max_t_strictly_below_half(n):
        raise PreconditionError(f"need 1 <= k < (n-1)/2, got k = {k}, n = {n}")
    if classes[0].sign * classes[1].sign * classes[2].sign != 1:
        raise PreconditionError("sign product must be 1 for the regrouping identity")
    y = family_sum(n, None, *classes)
    z = family_sum(n, FamilySelector.z_at_most(k - 1), *classes)
    x = family_sum(n, FamilySelector.x_at_least(k), *classes)
    return y.value - 2 * z.value - x.value


@dataclass(frozen=True)
class MinDimension:
    value: int
    shape: Partition


def min_dimension(n: int, selector: FamilySelector) -> MinDimension:
    """Smallest dimension over a diagram family, with a witness diagram."""
    best = None
    for shape in enumerate_partitions(n, selector):
        d = _dimension(tuple(shape))
        if best is None or d < best.value:
            best = MinDimension(d, shape)
    if best is None:
        raise PreconditionError("empty family has no minimum dimension")
    return best


def ncycle_family_sum(n: int) -> CharSum:
    """Y_n for three n-cycle classes, via the hook fast path.

    Characters of an n-cycle vanish off hook shapes, where they are
    (-1)^t, so the full sum collapses to sum_t (-1)^t / binom(n-1, t)
    without enumerating Y_n.  Equality with the generic path is covered by
    tests at small n.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    total = Fraction(0)
    for t in range(n):
        term = Fraction(1, math.comb(n - 1, t))
        total += -term if t % 2 else term
    return CharSum(total, n)
