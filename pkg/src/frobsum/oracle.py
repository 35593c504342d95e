"""Brute-force ground truth over explicit permutations.

Everything here works on permutations as tuples of 0-based images.
Composition is left-to-right: (compose(p, q))(x) = q(p(x)), fixed
project-wide.  Triple counts are convention-independent; witnesses are not,
so reports always state permutations explicitly.

The search for a witness fixes s1 as the canonical representative of C1:
all three defining conditions (product identity, cycle types, transitivity)
are preserved by simultaneous conjugation, so this loses nothing and cuts
the search space from |C1| * |C2| to |C2|.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from . import frobenius
from .errors import BudgetError, DegreeMismatchError, PreconditionError
from .partitions import CycleClass, enumerate_partitions

Perm = Tuple[int, ...]

DEFAULT_CAP = 8
_SLOW_DEGREE = 9


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[p[x]] for x in range(len(p)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def cycle_type(p: Perm) -> Tuple[int, ...]:
    """Cycle lengths of p, decreasing."""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def canonical_perm(cycle_class: CycleClass) -> Perm:
    """The representative with cycles laid out consecutively from 0."""
    images = []
    start = 0
    for length in cycle_class.lengths:
        images.extend(list(range(start + 1, start + length)) + [start])
        start += length
    return tuple(images)


def perm_cycles_str(p: Perm) -> str:
    """1-based cycle notation, fixed points omitted (id for the identity)."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = p[x]
        if len(cyc) > 1:
            out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "id"


def perms_of_type(n: int, lengths: Sequence[int]) -> Iterator[Perm]:
    """All permutations of S_n with the given cycle type, in lexicographic order."""
    target = tuple(sorted(lengths, reverse=True))
    for p in itertools.permutations(range(n)):
        if cycle_type(p) == target:
            yield p


def is_transitive(gens: Sequence[Perm]) -> bool:
    """Orbit closure of the point 0 reaches every point."""
    if not gens:
        raise PreconditionError("need at least one generator")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise DegreeMismatchError("generators have mixed degrees")
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def _check_cap(n: int, cap: int):
    if n > cap:
        raise BudgetError(f"degree {n} exceeds the brute-force cap {cap}")
    if n >= _SLOW_DEGREE:
        warnings.warn(
            f"brute-force search at degree {n} may take minutes", RuntimeWarning,
            stacklevel=3)


def _as_class(c) -> CycleClass:
    return c if isinstance(c, CycleClass) else CycleClass(c)


def brute_triple_count(c1, c2, c3, cap: int = DEFAULT_CAP) -> int:
    """#{(s1, s2, s3) in C1 x C2 x C3 : s1 s2 s3 = id}, counted explicitly.

    s3 is forced to (s1 s2)^-1, and s1 may be fixed by conjugation
    equivariance, so the count is |C1| times a single sweep over C2.
    """
    classes = [_as_class(c) for c in (c1, c2, c3)]
    n = classes[0].n
    if any(c.n != n for c in classes):
        raise DegreeMismatchError("classes have mixed degrees")
    _check_cap(n, cap)
    s1 = canonical_perm(classes[0])
    target = classes[2].lengths
    hits = 0
    for s2 in perms_of_type(n, classes[1].lengths):
        if cycle_type(compose(s1, s2)) == target:
            hits += 1
    return classes[0].class_size * hits


@dataclass(frozen=True)
class RealizabilityVerdict:
    """Outcome of the witness search for one class triple."""

    frobenius_positive: bool
    realizable: bool
    witness: Optional[Tuple[Perm, Perm, Perm]]


def realizability(c1, c2, c3, cap: int = DEFAULT_CAP) -> RealizabilityVerdict:
    """Search for (s1, s2, s3) with product id generating a transitive group.

    s1 is the canonical representative of C1; s2 sweeps C2 in lexicographic
    order, so the first witness found is deterministic.
    """
    classes = [_as_class(c) for c in (c1, c2, c3)]
    n = classes[0].n
    if any(c.n != n for c in classes):
        raise DegreeMismatchError("classes have mixed degrees")
    _check_cap(n, cap)
    s1 = canonical_perm(classes[0])
    target = classes[2].lengths
    any_product = False
    for s2 in perms_of_type(n, classes[1].lengths):
        prod = compose(s1, s2)
        if cycle_type(prod) != target:
            continue
        any_product = True
        if is_transitive([s1, s2]):
            return RealizabilityVerdict(True, True, (s1, s2, inverse(prod)))
    return RealizabilityVerdict(any_product, False, None)


@dataclass(frozen=True)
class ConjectureRow:
    """One scanned triple of 3-derangement classes with sign product 1."""

    classes: Tuple[CycleClass, CycleClass, CycleClass]
    frobenius_count: int
    brute_count: int
    frobenius_positive: bool
    realizable: bool
    witness: Optional[Tuple[Perm, Perm, Perm]]

    @property
    def is_counterexample(self) -> bool:
        return not self.realizable


def derangement_classes(n: int, r: int = 3) -> List[CycleClass]:
    """All classes of S_n that are r-derangements (no cycle of length <= r)."""
    out = []
    for shape in enumerate_partitions(n):
        if not shape or shape[-1] > r:
            out.append(CycleClass(tuple(shape)))
    return out


def conjecture_scan(n: int, cap: int = DEFAULT_CAP) -> List[ConjectureRow]:
    """Classify every sign-compatible unordered triple of 3-derangements.

    Rows carry both the Frobenius count and the brute count so the two
    routes can be compared; a row with ``realizable`` False is a
    counterexample candidate for the transitivity conjecture.
    """
    if n > cap:
        raise BudgetError(f"degree {n} exceeds the brute-force cap {cap}")
    rows = []
    classes = derangement_classes(n, 3)
    for triple in itertools.combinations_with_replacement(classes, 3):
        if triple[0].sign * triple[1].sign * triple[2].sign != 1:
            continue
        f_count = frobenius.triple_count(*triple)
        b_count = brute_triple_count(*triple, cap=cap)
        verdict = realizability(*triple, cap=cap)
        rows.append(ConjectureRow(
            classes=triple,
            frobenius_count=f_count,
            brute_count=b_count,
            frobenius_positive=f_count > 0,
            realizable=verdict.realizable,
            witness=verdict.witness,
        ))
    return rows
