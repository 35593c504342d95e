"""Exact irreducible character values of symmetric groups.

The workhorse is a memoized rim-hook (border-strip) recursion: to evaluate
chi^lambda on a cycle type, peel one rim hook per cycle, largest cycle
first, accumulating the sign (-1)^(leg length) of each hook.  Classes of
interest here have few, long cycles, so the first peel prunes almost every
diagram and the memo stays small.

Rim hooks are manipulated through first-column hook lengths ("beta
numbers"): removing a rim hook of length L means lowering one beta number
by L onto a vacant value, and the leg length is the number of beta numbers
jumped over.

Alongside the general recursion there are the closed forms it must agree
with: the hook-length dimension, hook-column values on long-cycle classes,
the exterior-power determinant via Newton's identities, the fixed-point
binomial formula, and the explicit two-row and near-hook dimension
polynomials.
"""

from __future__ import annotations

import math
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Optional, Sequence, Tuple

from .errors import DegreeMismatchError, PreconditionError
from .partitions import CycleClass, Partition, _as_partition_tuple, enumerate_partitions


def _cycle_lengths(cycle_class) -> tuple:
    if isinstance(cycle_class, CycleClass):
        return cycle_class.lengths
    lengths = tuple(sorted((int(c) for c in cycle_class), reverse=True))
    if lengths and lengths[-1] <= 0:
        raise PreconditionError("cycle lengths must be positive")
    return lengths


class CharacterEvaluator:
    """chi^lambda(C) for a fixed class C, memoized across shapes.

    The peel order of the cycles is fixed (largest first), so a recursion
    state is (remaining shape, number of cycles already peeled).  With
    ``cache_roots=False`` full-size shapes are not inserted in the memo;
    family scans visit each top-level shape once, so caching them would
    only grow memory.
    """

    def __init__(self, cycle_class, cache_roots: bool = True):
        self.cycles = _cycle_lengths(cycle_class)
        self.degree = sum(self.cycles)
        self.cache_roots = cache_roots
        self._memo: Dict[tuple, int] = {}

    def character(self, shape) -> int:
        """Exact chi^shape(C).  The shape must be a partition of the degree."""
        shape = _as_partition_tuple(shape)
        if sum(shape) != self.degree:
            raise DegreeMismatchError(
                f"shape has {sum(shape)} boxes but the class has degree {self.degree}")
        return self._char(tuple(shape), 0)

    def _char(self, shape: tuple, depth: int) -> int:
        if not shape:
            return 1
        key = (shape, depth)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        L = self.cycles[depth]
        rows = len(shape)
        betas = [shape[i] + rows - 1 - i for i in range(rows)]
        beta_set = set(betas)
        total = 0
        for i in range(rows):
            nb = betas[i] - L
            if nb < 0 or nb in beta_set:
                continue
            # Slide the lowered beta past the smaller ones; each value crossed
            # is one row of leg.
            moved = list(betas)
            j = i
            while j + 1 < rows and moved[j + 1] > nb:
                moved[j] = moved[j + 1]
                j += 1
            moved[j] = nb
            leg = j - i
            parts = []
            for idx in range(rows):
                p = moved[idx] - (rows - 1 - idx)
                if p <= 0:
                    break
                parts.append(p)
            child = self._char(tuple(parts), depth + 1)
            if child:
                total += -child if leg % 2 else child
        if depth > 0 or self.cache_roots:
            self._memo[key] = total
        return total


_EVALUATORS: "OrderedDict[tuple, CharacterEvaluator]" = OrderedDict()
_EVALUATOR_CAP = 256


def _evaluator_for(cycles: tuple) -> CharacterEvaluator:
    ev = _EVALUATORS.get(cycles)
    if ev is None:
        ev = CharacterEvaluator(cycles)
        _EVALUATORS[cycles] = ev
        if len(_EVALUATORS) > _EVALUATOR_CAP:
            _EVALUATORS.popitem(last=False)
    else:
        _EVALUATORS.move_to_end(cycles)
    return ev


def clear_caches() -> None:
    """Drop all per-class evaluators (memos included)."""
    _EVALUATORS.clear()


def mn_character(shape, cycle_class) -> int:
    """Exact chi^shape on the given cycle type.

    Evaluators are kept per class in a small LRU registry, so sweeping many
    shapes against the same class reuses one memo.
    """
    return _evaluator_for(_cycle_lengths(cycle_class)).character(shape)


def dimension(shape) -> int:
    """chi^shape(1) by the hook length formula, exact."""
    shape = _as_partition_tuple(shape)
    return _dimension(tuple(shape))


def _dimension(shape: tuple) -> int:
    if not shape:
        return 1
    rows = len(shape)
    conj = [0] * shape[0]
    for p in shape:
        for i in range(p):
            conj[i] += 1
    hooks = 1
    for i in range(rows):
        for j in range(shape[i]):
            hooks *= shape[i] - j + conj[j] - i - 1
    return math.factorial(sum(shape)) // hooks


def character_column(n: int, cycle_class) -> Dict[tuple, int]:
    """{shape: chi^shape(C)} over all of Y_n."""
    ev = _evaluator_for(_cycle_lengths(cycle_class))
    if ev.degree != n:
        raise DegreeMismatchError(f"class degree {ev.degree} != {n}")
    return {tuple(shape): ev.character(shape) for shape in enumerate_partitions(n)}


def character_table(n: int) -> Dict[tuple, Dict[tuple, int]]:
    """Full character table of S_n as {cycle type: {shape: value}}."""
    return {tuple(cls): character_column(n, cls) for cls in enumerate_partitions(n)}


class HookValue(NamedTuple):
    value: int
    vanishes_elsewhere: bool


def hook_character(n: int, t: int, cycle_class) -> HookValue:
    """Value of chi^{(n-t, 1^t)} on a class whose cycles all exceed t.

    On such a class every other shape with n - lambda_1 = t has character
    zero, which is what ``vanishes_elsewhere`` records (and the tests check
    against the rim-hook recursion).
    """
    c = cycle_class if isinstance(cycle_class, CycleClass) else CycleClass(cycle_class)
    if c.n != n:
        raise DegreeMismatchError(f"class degree {c.n} != {n}")
    if t < 0 or t > n - 1:
        raise PreconditionError(f"t = {t} out of range for hooks of {n}")
    if c.min_cycle < t + 1:
        raise PreconditionError(
            f"class has a cycle of length {c.min_cycle} <= t = {t}; no vanishing guarantee")
    return HookValue(-1 if t % 2 else 1, True)


def wedge_character(power_traces: Sequence[int], t: int) -> int:
    """chi^{(n-t, 1^t)}(sigma) from the traces chi(sigma), ..., chi(sigma^t).

    chi is the standard (n-1)-dimensional character.  Evaluates the
    exterior-power determinant through the triangular Newton recurrence
    t*e_t = sum_i (-1)^(i-1) e_{t-i} p_i, which keeps every intermediate an
    exact rational of modest size.
    """
    if t < 0:
        raise PreconditionError("t must be non-negative")
    if len(power_traces) < t:
        raise PreconditionError(f"need {t} power traces, got {len(power_traces)}")
    e = [Fraction(1)]
    for s in range(1, t + 1):
        acc = Fraction(0)
        for i in range(1, s + 1):
            term = e[s - i] * power_traces[i - 1]
            acc += term if i % 2 else -term
        e.append(acc / s)
    if e[t].denominator != 1:
        raise PreconditionError(
            f"inconsistent power traces: e_{t} = {e[t]} is not an integer")
    return int(e[t])


def fixed_point_hook_character(l: int, t: int) -> int:
    """chi^{(n-t, 1^t)} on a class with l fixed points and other cycles > t.

    Equals binom(l-1, t): the product (l-1)(l-2)...(l-t)/t!, evaluated
    exactly (including l = 0, where it degenerates to (-1)^t).
    """
    if t < 0:
        raise PreconditionError("t must be non-negative")
    num = 1
    for j in range(t):
        num *= l - 1 - j
    q, r = divmod(num, math.factorial(t))
    if r:
        raise ArithmeticError("falling factorial not divisible by t!")
    return q


def two_row_dimension(n: int, t: int) -> int:
    """chi^{(n-t, t)}(1) = binom(n, t) * (n+1-2t) / (n+1-t), exact."""
    if t < 0 or 2 * t > n:
        raise PreconditionError(f"need 0 <= t <= n/2, got t = {t}, n = {n}")
    q, r = divmod(math.comb(n, t) * (n + 1 - 2 * t), n + 1 - t)
    if r:
        raise ArithmeticError("two-row dimension formula did not divide exactly")
    return q


_NEAR_HOOK_FORMULAS = {
    (4,): lambda n: n * (n - 1) * (n - 2) * (n - 7) // 24,
    (3, 1): lambda n: n * (n - 1) * (n - 3) * (n - 6) // 8,
    (2, 2): lambda n: n * (n - 1) * (n - 4) * (n - 5) // 12,
    (2, 1, 1): lambda n: n * (n - 2) * (n - 3) * (n - 5) // 8,
    (1, 1, 1, 1): lambda n: (n - 1) * (n - 2) * (n - 3) * (n - 4) // 24,
}


def near_hook_dimensions(n: int, mu) -> int:
    """chi^{(n-4, mu)}(1) for mu a partition of 4, by the closed quartics."""
    mu = tuple(_as_partition_tuple(mu))
    if mu not in _NEAR_HOOK_FORMULAS:
        raise PreconditionError(f"mu = {mu} is not a partition of 4")
    if n < 8:
        raise PreconditionError("closed forms assume n >= 8")
    return _NEAR_HOOK_FORMULAS[mu](n)


# ---------------------------------------------------------------------------
# Character polynomials: chi^{(n-w, mu)} as an exact polynomial in the cycle
# counts theta_1..theta_4, recovered by interpolation from rim-hook values
# and verified on held-out classes.
# ---------------------------------------------------------------------------


def _monomial_basis(weight: int) -> Tuple[tuple, ...]:
    basis = []
    for i in range(weight + 1):
        for j in range(weight // 2 + 1):
            for k in range(weight // 3 + 1):
                for m in range(weight // 4 + 1):
                    if i + 2 * j + 3 * k + 4 * m <= weight:
                        basis.append((i, j, k, m))
    basis.sort(key=lambda e: (e[0] + 2 * e[1] + 3 * e[2] + 4 * e[3], e))
    return tuple(basis)


@dataclass
class CharacterPolynomial:
    """Polynomial in theta_1..theta_4 with exact rational coefficients."""

    weight: int
    coefficients: Dict[tuple, Fraction] = field(default_factory=dict)

    def evaluate(self, theta: Sequence[int]) -> Fraction:
        theta = tuple(theta) + (0,) * (4 - len(theta))
        total = Fraction(0)
        for (i, j, k, m), coeff in self.coefficients.items():
            total += coeff * theta[0] ** i * theta[1] ** j * theta[2] ** k * theta[3] ** m
        return total

    def evaluate_class(self, cycle_class: CycleClass) -> Fraction:
        return self.evaluate(cycle_class.theta_vector(4))

    def __str__(self) -> str:
        names = ("t1", "t2", "t3", "t4")
        pieces = []
        for expo in sorted(self.coefficients):
            coeff = self.coefficients[expo]
            if coeff == 0:
                continue
            mono = "*".join(
                f"{nm}^{e}" if e > 1 else nm for nm, e in zip(names, expo) if e)
            pieces.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return " + ".join(pieces) if pieces else "0"


def _sample_classes(n: int, weight: int):
    """Classes of degree n whose theta_1..4 prefix is freely chosen.

    The remainder is left as one cycle of length >= 5 (or nothing) so it
    cannot disturb the small cycle counts.
    """
    for a in range(5):
        for b in range(3):
            for c in range(2):
                for d in range(2):
                    used = a + 2 * b + 3 * c + 4 * d
                    rem = n - used
                    if rem == 0 or rem >= 5:
                        lengths = [1] * a + [2] * b + [3] * c + [4] * d
                        if rem:
                            lengths.append(rem)
                        yield CycleClass(lengths)


def _solve_exact(rows, rhs, ncols):
    """Solve an (overdetermined, consistent) exact linear system.

    Gaussian elimination over Fraction; raises PreconditionError if the
    system is singular or inconsistent.
    """
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, len(aug)) if aug[r][col] != 0), None)
        if pivot is None:
            raise PreconditionError("singular interpolation system (degenerate samples)")
        aug[pivot_row], aug[pivot] = aug[pivot], aug[pivot_row]
        lead = aug[pivot_row][col]
        aug[pivot_row] = [v / lead for v in aug[pivot_row]]
        for r in range(len(aug)):
            if r != pivot_row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
    for r in range(pivot_row, len(aug)):
        if aug[r][ncols] != 0:
            raise PreconditionError("inconsistent interpolation system")
    return [aug[r][ncols] for r in range(ncols)]


def interpolate_character_polynomial(mu, sample_ns: Optional[Iterable[int]] = None,
                                     holdout_ns: Optional[Iterable[int]] = None
                                     ) -> CharacterPolynomial:
    """Recover the character polynomial of chi^{(n-|mu|, mu)}.

    Solves an exact linear system from rim-hook character values on classes
    with varied small-cycle counts, then checks the polynomial reproduces
    chi exactly on held-out (degree, class) pairs.
    """
    mu = _as_partition_tuple(mu)
    weight = sum(mu)
    if not 1 <= weight <= 4:
        raise PreconditionError("mu must be a partition of 1, 2, 3 or 4")
    basis = _monomial_basis(weight)
    if sample_ns is None:
        sample_ns = (2 * weight + 5, 2 * weight + 6, 2 * weight + 7)
    if holdout_ns is None:
        holdout_ns = (2 * weight + 8, 2 * weight + 9)

    rows, rhs = [], []
    for n in sample_ns:
        shape = Partition((n - weight,) + tuple(mu))
        for cls in _sample_classes(n, weight):
            theta = cls.theta_vector(4)
            rows.append([
                theta[0] ** i * theta[1] ** j * theta[2] ** k * theta[3] ** m
                for (i, j, k, m) in basis])
            rhs.append(mn_character(shape, cls))
    coeffs = _solve_exact(rows, rhs, len(basis))
    poly = CharacterPolynomial(
        weight=weight,
        coefficients={e: c for e, c in zip(basis, coeffs) if c != 0})
    for n in holdout_ns:
        shape = Partition((n - weight,) + tuple(mu))
        for cls in _sample_classes(n, weight):
            predicted = poly.evaluate_class(cls)
            actual = mn_character(shape, cls)
            if predicted != actual:
                raise PreconditionError(
                    f"character polynomial failed held-out check at n={n}, "
                    f"class {cls}: {predicted} != {actual}")
    return poly
