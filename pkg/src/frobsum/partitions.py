"""Integer partitions, cycle types, and diagram-family selection for S_n.

A partition of n plays two roles: it is the cycle type of a conjugacy class
and the label of an irreducible character.  This module keeps both
representations cheap (plain tuples underneath) because the character and
character-sum machinery streams over hundreds of thousands of them.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InfeasibleError, DegreeMismatchError, PreconditionError


class Partition(tuple):
    """Weakly decreasing positive integers, i.e. a Young diagram.

    Zero parts are stripped on construction; negative parts are rejected.
    Instances are plain tuples, so they hash and compare structurally and
    can be used directly as memo keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        cleaned = sorted((int(p) for p in parts), reverse=True)
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        if cleaned and cleaned[-1] < 0:
            raise PreconditionError(f"partition parts must be positive, got {cleaned!r}")
        return tuple.__new__(cls, cleaned)

    @property
    def n(self) -> int:
        """Total number of boxes."""
        return sum(self)

    @property
    def leading(self) -> int:
        """First part; 0 for the empty partition."""
        return self[0] if self else 0

    @property
    def rows(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        """Transpose of the diagram.  Involutive."""
        if not self:
            return self
        cols = [0] * self[0]
        for p in self:
            for i in range(p):
                cols[i] += 1
        return tuple.__new__(Partition, tuple(cols))

    def __repr__(self) -> str:
        return f"Partition({format_parts(self)!r})"


def _as_partition_tuple(shape) -> tuple:
    """Accept a Partition or any iterable of parts; return a canonical tuple."""
    if isinstance(shape, Partition):
        return shape
    return Partition(shape)


class CycleClass:
    """A conjugacy class of S_n given by its cycle type.

    Stored canonically as (length, multiplicity) pairs with lengths
    decreasing.  theta(i) is the number of i-cycles; the derived statistics
    (sign, centralizer, class size) are exact integers.
    """

    __slots__ = ("pairs",)

    def __init__(self, cycles: Iterable[int]):
        lengths = sorted((int(c) for c in cycles), reverse=True)
        if lengths and lengths[-1] <= 0:
            raise PreconditionError(f"cycle lengths must be positive, got {lengths!r}")
        pairs = []
        for length in lengths:
            if pairs and pairs[-1][0] == length:
                pairs[-1][1] += 1
            else:
                pairs.append([length, 1])
        self.pairs = tuple((l, m) for l, m in pairs)

    @property
    def n(self) -> int:
        return sum(l * m for l, m in self.pairs)

    @property
    def lengths(self) -> tuple:
        """Cycle lengths expanded, decreasing."""
        out = []
        for l, m in self.pairs:
            out.extend([l] * m)
        return tuple(out)

    @property
    def num_cycles(self) -> int:
        return sum(m for _, m in self.pairs)

    def theta(self, i: int) -> int:
        """Number of cycles of length i."""
        for l, m in self.pairs:
            if l == i:
                return m
        return 0

    def theta_vector(self, up_to: int) -> tuple:
        """(theta_1, ..., theta_up_to)."""
        return tuple(self.theta(i) for i in range(1, up_to + 1))

    @property
    def fixed_points(self) -> int:
        return self.theta(1)

    @property
    def sign(self) -> int:
        """(-1) ** (n - number of cycles)."""
        return -1 if (self.n - self.num_cycles) % 2 else 1

    @property
    def centralizer_size(self) -> int:
        z = 1
        for l, m in self.pairs:
            z *= l ** m * math.factorial(m)
        return z

    @property
    def class_size(self) -> int:
        return math.factorial(self.n) // self.centralizer_size

    @property
    def min_cycle(self) -> int:
        return self.pairs[-1][0] if self.pairs else 0

    @property
    def max_cycle(self) -> int:
        return self.pairs[0][0] if self.pairs else 0

    def min_long_cycle(self) -> int:
        """Smallest cycle length >= 2, or 0 if the class is the identity."""
        longs = [l for l, _ in self.pairs if l >= 2]
        return min(longs) if longs else 0

    def is_r_derangement(self, r: int) -> bool:
        """True iff theta_i = 0 for all i <= r."""
        return self.min_cycle > r if self.pairs else True

    def power(self, k: int) -> "CycleClass":
        """Cycle type of sigma**k for sigma in this class."""
        out = []
        for l, m in self.pairs:
            g = math.gcd(l, k)
            out.extend([l // g] * (g * m))
        return CycleClass(out)

    def to_partition(self) -> Partition:
        return Partition(self.lengths)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleClass) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash((CycleClass, self.pairs))

    def __repr__(self) -> str:
        return f"CycleClass({format_parts(self.lengths)!r})"


@dataclass(frozen=True)
class ClassMetrics:
    """Exact statistics of a conjugacy class."""

    cycle_class: CycleClass
    theta: tuple
    sign: int
    centralizer: int
    class_size: int

    def is_r_derangement(self, r: int) -> bool:
        return self.cycle_class.is_r_derangement(r)


def class_metrics(c: CycleClass) -> ClassMetrics:
    """Bundle theta vector, sign, centralizer and class size of ``c``."""
    return ClassMetrics(
        cycle_class=c,
        theta=c.theta_vector(c.n),
        sign=c.sign,
        centralizer=c.centralizer_size,
        class_size=c.class_size,
    )


# ---------------------------------------------------------------------------
# Diagram families.
#
# For a diagram of n boxes put t_row = n - lambda_1 and t_col = n - lambda_1'.
# The Y/Z/X families are intervals in these two statistics:
#   Y-families constrain t_row, Z-families constrain t_col,
#   X(k) requires both >= k (the diagram avoids a width/height n-k cross).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySelector:
    """Interval constraints on (t_row, t_col).  None means unbounded above."""

    y_lo: int = 0
    y_hi: Optional[int] = None
    z_lo: int = 0
    z_hi: Optional[int] = None

    def __post_init__(self):
        if self.y_lo < 0 or self.z_lo < 0:
            raise PreconditionError("selector bounds must be non-negative")

    @classmethod
    def unrestricted(cls) -> "FamilySelector":
        return cls()

    @classmethod
    def y_exact(cls, t: int) -> "FamilySelector":
        return cls(y_lo=t, y_hi=t)

    @classmethod
    def y_range(cls, lo: int, hi: int) -> "FamilySelector":
        if lo > hi:
            raise PreconditionError(f"malformed Y range: {lo} > {hi}")
        return cls(y_lo=lo, y_hi=hi)

    @classmethod
    def y_at_most(cls, t: int) -> "FamilySelector":
        return cls.y_range(0, t)

    @classmethod
    def z_exact(cls, t: int) -> "FamilySelector":
        return cls(z_lo=t, z_hi=t)

    @classmethod
    def z_range(cls, lo: int, hi: int) -> "FamilySelector":
        if lo > hi:
            raise PreconditionError(f"malformed Z range: {lo} > {hi}")
        return cls(z_lo=lo, z_hi=hi)

    @classmethod
    def z_at_most(cls, t: int) -> "FamilySelector":
        return cls.z_range(0, t)

    @classmethod
    def x_at_least(cls, k: int) -> "FamilySelector":
        return cls(y_lo=k, z_lo=k)

    def intersect(self, other: "FamilySelector") -> "FamilySelector":
        def _min(a, b):
            if a is None:
                return b
            if b is None:
                return a
            return min(a, b)

        return FamilySelector(
            y_lo=max(self.y_lo, other.y_lo),
            y_hi=_min(self.y_hi, other.y_hi),
            z_lo=max(self.z_lo, other.z_lo),
            z_hi=_min(self.z_hi, other.z_hi),
        )

    def contains(self, shape, n: Optional[int] = None) -> bool:
        shape = _as_partition_tuple(shape)
        if n is None:
            n = sum(shape)
        t_row = n - (shape[0] if shape else 0)
        t_col = n - len(shape)
        if t_row < self.y_lo or (self.y_hi is not None and t_row > self.y_hi):
            return False
        if t_col < self.z_lo or (self.z_hi is not None and t_col > self.z_hi):
            return False
        return True

    def describe(self) -> str:
        clauses = []
        if self.y_lo == self.z_lo and self.y_lo > 0 and self.y_hi is None and self.z_hi is None:
            return f"X>={self.y_lo}"
        for name, lo, hi in (("Y", self.y_lo, self.y_hi), ("Z", self.z_lo, self.z_hi)):
            if hi is not None and lo == hi:
                clauses.append(f"{name}={lo}")
            elif hi is not None:
                clauses.append(f"{name}<={hi}" if lo == 0 else f"{name}in[{lo},{hi}]")
            elif lo > 0:
                clauses.append(f"{name}>={lo}")
        return "&".join(clauses) if clauses else "all"


_FAMILY_CLAUSE = re.compile(r"^\s*([YZXyzx])\s*(<=|>=|=|<|>)\s*(\d+)\s*$")


def parse_family(text: str) -> FamilySelector:
    """Parse the family mini-DSL: clauses like ``Y<=4``, ``Z=5``, ``X>=7``.

    Clauses may be joined with ``&`` or ``,`` and are intersected.
    """
    sel = FamilySelector.unrestricted()
    for clause in re.split(r"[,&]", text):
        if not clause.strip():
            continue
        m = _FAMILY_CLAUSE.match(clause)
        if not m:
            raise PreconditionError(f"cannot parse family clause {clause!r}")
        letter, op, value = m.group(1).upper(), m.group(2), int(m.group(3))
        if letter == "X":
            if op not in (">=", "="):
                raise PreconditionError("X families only support X>=k")
            part = FamilySelector.x_at_least(value)
        else:
            maker = FamilySelector
            if op == "=":
                lo, hi = value, value
            elif op == "<=":
                lo, hi = 0, value
            elif op == "<":
                if value == 0:
                    raise PreconditionError(f"empty family clause {clause!r}")
                lo, hi = 0, value - 1
            elif op == ">=":
                lo, hi = value, None
            else:  # ">"
                lo, hi = value + 1, None
            if letter == "Y":
                part = FamilySelector(y_lo=lo, y_hi=hi)
            else:
                part = FamilySelector(z_lo=lo, z_hi=hi)
        sel = sel.intersect(part)
    return sel


def enumerate_partitions(n: int, selector: Optional[FamilySelector] = None) -> Iterator[Partition]:
    """Stream the members of a diagram family in descending lexicographic order.

    Yields each member exactly once; the unrestricted selector gives all of
    Y_n.  The stream is never materialized, so callers can fold over very
    large n.
    """
    if n < 0:
        raise PreconditionError("n must be non-negative")
    sel = selector if selector is not None else FamilySelector.unrestricted()
    if n == 0:
        if sel.contains((), 0):
            yield Partition()
        return

    lead_hi = n - sel.y_lo
    lead_lo = 1 if sel.y_hi is None else max(1, n - sel.y_hi)
    rows_hi = n - sel.z_lo
    rows_lo = 1 if sel.z_hi is None else max(1, n - sel.z_hi)
    if lead_hi < 1 or rows_hi < 1:
        return

    prefix: list = []

    def _rest(remaining: int, cap: int, rows_min: int, rows_max: int):
        if remaining == 0:
            if rows_min <= 0:
                yield tuple.__new__(Partition, tuple(prefix))
            return
        if rows_max <= 0 or remaining > cap * rows_max or remaining < rows_min:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from _rest(remaining - p, p, rows_min - 1, rows_max - 1)
            prefix.pop()

    for lead in range(min(lead_hi, n), lead_lo - 1, -1):
        prefix.append(lead)
        yield from _rest(n - lead, lead, rows_lo - 1, rows_hi - 1)
        prefix.pop()


_PARTITION_COUNTS = [1]  # p(0)


def partition_count(n: int) -> int:
    """p(n), by Euler's pentagonal-number recurrence (exact)."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    while len(_PARTITION_COUNTS) <= n:
        m = len(_PARTITION_COUNTS)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _PARTITION_COUNTS[m - g1]
            if g2 <= m:
                total += sign * _PARTITION_COUNTS[m - g2]
            k += 1
        _PARTITION_COUNTS.append(total)
    return _PARTITION_COUNTS[n]


def max_t_strictly_below_half(n: int) -> int:
    """Largest integer t with t < (n-1)/2, the comparison taken over rationals."""
    return (n - 2) // 2


def min_t_at_least_half(n: int) -> int:
    """Smallest integer t with t >= (n-1)/2, the comparison taken over rationals."""
    return n // 2


# ---------------------------------------------------------------------------
# Condition A / Condition B on class triples.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a condition check; ``failures`` lists the violated clauses."""

    ok: bool
    failures: tuple

    def __bool__(self) -> bool:
        return self.ok


def _require_same_degree(*classes: CycleClass) -> int:
    degrees = {c.n for c in classes}
    if len(degrees) != 1:
        raise DegreeMismatchError(f"classes have mixed degrees {sorted(degrees)}")
    return degrees.pop()


def derangement_order(n: int, P: float) -> int:
    """ceil(P * sqrt(n) * ln(n)), the derangement order required of C3."""
    return math.ceil(P * math.sqrt(n) * math.log(n))


def banned_cycle_max(n: int, P: float) -> int:
    """Largest integer i with i < P * sqrt(n) * ln(n)."""
    return math.ceil(P * math.sqrt(n) * math.log(n)) - 1


def check_condition_a(c1: CycleClass, c2: CycleClass, c3: CycleClass) -> ConditionReport:
    """All three classes 3-derangements, and sign product 1."""
    _require_same_degree(c1, c2, c3)
    failures = []
    for i, c in enumerate((c1, c2, c3), start=1):
        if not c.is_r_derangement(3):
            failures.append(f"C{i} is not a 3-derangement (has a cycle of length <= 3)")
    if c1.sign * c2.sign * c3.sign != 1:
        failures.append("sign product is -1")
    return ConditionReport(not failures, tuple(failures))


def check_condition_b(c1: CycleClass, c2: CycleClass, c3: CycleClass,
                      H: float, P: float) -> ConditionReport:
    """Condition B for (H, P), with the floor refinement theta_1 = floor(H*sqrt(n))."""
    if H <= 0 or P <= 0:
        raise PreconditionError("H and P must be positive")
    n = _require_same_degree(c1, c2, c3)
    m = math.floor(H * math.sqrt(n))
    i_max = banned_cycle_max(n, P)
    r3 = derangement_order(n, P)
    failures = []
    for i, c in ((1, c1), (2, c2)):
        if c.fixed_points != m:
            failures.append(f"C{i} has {c.fixed_points} fixed points, expected floor(H*sqrt(n)) = {m}")
        banned = [length for length, _ in c.pairs if 1 < length <= i_max]
        if banned:
            failures.append(f"C{i} has cycles of banned length {banned} (must vanish for 1 < i < P*sqrt(n)*log(n))")
    if not c3.is_r_derangement(r3):
        failures.append(f"C3 is not a {r3}-derangement")
    if c1.sign * c2.sign * c3.sign != 1:
        failures.append("sign product is -1")
    return ConditionReport(not failures, tuple(failures))


def make_condition_b_classes(n: int, H: float, P: float):
    """Canonical witness triple for Condition B at degree n.

    C1 = C2 = one long cycle plus floor(H*sqrt(n)) fixed points; C3 is a
    single n-cycle (n odd) or two half cycles (n even), whichever has sign
    +1.  Raises InfeasibleError with the violated clause when no such
    triple exists.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if H <= 0 or P <= 0:
        raise PreconditionError("H and P must be positive")
    m = math.floor(H * math.sqrt(n))
    k_c = derangement_order(n, P)
    if m > n:
        raise InfeasibleError(f"floor(H*sqrt(n)) = {m} exceeds n = {n}")
    long = n - m
    if long < max(k_c, 2):
        raise InfeasibleError(
            f"n - floor(H*sqrt(n)) = {long} is too short for the long cycle "
            f"(needs >= max(2, {k_c}))")
    c1 = CycleClass((long,) + (1,) * m)
    # sign(c1) * sign(c2) = 1, so C3 must be even; one n-cycle is even iff n
    # is odd, a two-cycle split is even iff n is even.
    if n % 2 == 1:
        c3 = CycleClass((n,))
    else:
        half = n // 2
        if half < k_c + 1:
            raise InfeasibleError(
                f"no sign-compatible C3: half cycles of length {half} are not "
                f"{k_c}-derangements")
        c3 = CycleClass((half, half))
    if not c3.is_r_derangement(k_c):
        raise InfeasibleError(f"no sign-compatible C3 that is a {k_c}-derangement")
    report = check_condition_b(c1, c1, c3, H, P)
    if not report.ok:
        raise InfeasibleError("; ".join(report.failures))
    return c1, CycleClass(c1.lengths), c3


# ---------------------------------------------------------------------------
# Text format: comma-separated decreasing integers with optional exponent
# shorthand, e.g. "95,1^5".
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_parts(text: str) -> tuple:
    """Parse "95,1^5" style text into a decreasing tuple of positive ints."""
    parts = []
    tokens = [tok.strip() for tok in str(text).split(",")]
    if tokens == [""]:
        raise PreconditionError("empty part list")
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise PreconditionError(f"cannot parse part {tok!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        if value <= 0:
            raise PreconditionError(f"non-positive part {value}")
        if mult < 1:
            raise PreconditionError(f"bad exponent in {tok!r}")
        parts.extend([value] * mult)
    parts.sort(reverse=True)
    return tuple(parts)


def format_parts(parts: Sequence[int]) -> str:
    """Inverse of parse_parts; repeated parts use the exponent shorthand."""
    out = []
    parts = list(parts)
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        count = j - i
        out.append(str(parts[i]) if count == 1 else f"{parts[i]}^{count}")
        i = j
    return ",".join(out)


def parse_partition(text: str) -> Partition:
    return Partition(parse_parts(text))


def parse_cycle_class(text: str) -> CycleClass:
    return CycleClass(parse_parts(text))
