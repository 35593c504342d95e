"""Numeric and exact evaluation of the quantities behind the limit theorems.

Everything asymptotic runs in log space (log-gamma for factorials and
binomials): the bound functions involve e^(sqrt n) scales that overflow
fixed-width floats in linear space.  Exact rational arithmetic is reserved
for character sums and the closed forms cross-checked against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from . import frobenius
from .characters import character_column, fixed_point_hook_character, _dimension
from .errors import BudgetError, InfeasibleError, PreconditionError
from .partitions import (
    CycleClass,
    FamilySelector,
    check_condition_a,
    enumerate_partitions,
    format_parts,
    make_condition_b_classes,
    max_t_strictly_below_half,
    min_t_at_least_half,
    partition_count,
)
from .reports import ScanReport, decimal_str, rational_cells

FULL_SUM_BUDGET = 64
RT_BUDGET = 40
EXPONENT_SCAN_BUDGET = 14


def log_binomial(n: int, k: int) -> float:
    """ln binom(n, k) via log-gamma."""
    if k < 0 or k > n:
        raise PreconditionError(f"binom({n}, {k}) out of range")
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def entropy(p: float) -> float:
    """-p ln p - (1-p) ln(1-p); symmetric about 1/2 with maximum ln 2."""
    if not 0 <= p <= 1:
        raise PreconditionError("entropy needs p in [0, 1]")
    total = 0.0
    for q in (p, 1 - p):
        if q > 0:
            total -= q * math.log(q)
    return total


def tail_phi(n: int, t: int) -> float:
    """e^(2 sqrt(2t)) / (((n+1-2t)/(n+1-t))^(1/5) binom(n,t)^(1/5) t)."""
    if t < 1 or 2 * t > n:
        raise PreconditionError(f"phi needs 1 <= t <= n/2, got t = {t}, n = {n}")
    log_value = (2 * math.sqrt(2 * t)
                 - (math.log(n + 1 - 2 * t) - math.log(n + 1 - t)) / 5
                 - log_binomial(n, t) / 5
                 - math.log(t))
    return math.exp(log_value)


def tail_psi(n: int, t: int) -> float:
    """e^(2 sqrt(2t)) / (binom(n,t)^(1/5) t)."""
    if t < 1 or t > n:
        raise PreconditionError(f"psi needs 1 <= t <= n, got t = {t}, n = {n}")
    log_value = 2 * math.sqrt(2 * t) - log_binomial(n, t) / 5 - math.log(t)
    return math.exp(log_value)


def tail_bounds(n: int, t: int) -> Tuple[float, float]:
    """(phi_n(t), psi_n(t))."""
    return tail_phi(n, t), tail_psi(n, t)


def hr_ratio(n: int) -> float:
    """p(n) * n / e^(2 sqrt(2) sqrt(n)); finite and positive for all n >= 1."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    log_p = math.log(partition_count(n))
    return math.exp(log_p + math.log(n) - 2 * math.sqrt(2) * math.sqrt(n))


def birthday_ratio(H: float, n: int) -> float:
    """binom(n - m, m) / binom(n, m) with m = floor(H sqrt(n)).

    The no-collision probability of two random m-subsets; tends to
    e^(-H^2).
    """
    if H < 0 or n < 1:
        raise PreconditionError("need H >= 0 and n >= 1")
    m = math.floor(H * math.sqrt(n))
    if 2 * m > n:
        raise PreconditionError(f"floor(H sqrt(n)) = {m} exceeds n/2")
    if m == 0:
        return 1.0
    return math.exp(log_binomial(n - m, m) - log_binomial(n, m))


@dataclass(frozen=True)
class SemiGaussianTerms:
    """The alternating series whose limit is e^(-H^2).

    mu_n = (H sqrt(n) - 1)^2 / (n - 1) and
    A(t) = prod_{j<t} (1 - j/(H sqrt(n) - 1))^2 / (1 - j/(n-1)); the
    squared numerator keeps A non-negative even past j = H sqrt(n) - 1.
    """

    H: float
    P: float
    n: int

    def __post_init__(self):
        if self.H <= 0 or self.P <= 0:
            raise PreconditionError("H and P must be positive")
        if self.n < 4:
            raise PreconditionError("n must be >= 4")

    @property
    def mu_n(self) -> float:
        return (self.H * math.sqrt(self.n) - 1) ** 2 / (self.n - 1)

    @property
    def default_t_max(self) -> int:
        """Number of terms: t ranges over 0 <= t < P sqrt(n) log(n)."""
        return math.ceil(self.P * math.sqrt(self.n) * math.log(self.n))

    def factor(self, j: int) -> float:
        return (1 - j / (self.H * math.sqrt(self.n) - 1)) ** 2 / (1 - j / (self.n - 1))

    def A(self, t: int) -> float:
        value = 1.0
        for j in range(t):
            value *= self.factor(j)
        return value

    def partial_sum(self, t_max: Optional[int] = None) -> float:
        """sum_{t < t_max} (-1)^t / t! mu_n^t A(t), accumulated in log space."""
        if t_max is None:
            t_max = self.default_t_max
        log_mu = math.log(self.mu_n)
        total = 1.0  # t = 0 term: A(0) = 1
        log_a = 0.0
        for t in range(1, t_max):
            j = t - 1
            num = 1 - j / (self.H * math.sqrt(self.n) - 1)
            den = 1 - j / (self.n - 1)
            if num == 0.0:
                break  # A vanishes from here on
            log_a += 2 * math.log(abs(num)) - math.log(den)
            log_term = t * log_mu - math.lgamma(t + 1) + log_a
            magnitude = math.exp(log_term)
            total += -magnitude if t % 2 else magnitude
        return total


def semi_gaussian_partial_sum(H: float, P: float, n: int,
                              t_max: Optional[int] = None) -> float:
    """Truncated alternating series; the default range is 0 <= t < P sqrt(n) log n."""
    return SemiGaussianTerms(H, P, n).partial_sum(t_max)


def semigauss_closed_form_exact(n: int, fixed_points: int, t_count: int) -> Fraction:
    """sum_{t < t_count} (-1)^t binom(m-1, t)^2 / binom(n-1, t), exact.

    This is the floor-adjusted alternating series written over rationals:
    with m fixed points the hook characters are binom(m-1, t), the
    derangement side contributes (-1)^t, and the hook dimension is
    binom(n-1, t).
    """
    total = Fraction(0)
    for t in range(t_count):
        num = fixed_point_hook_character(fixed_points, t) ** 2
        term = Fraction(num, math.comb(n - 1, t))
        total += -term if t % 2 else term
    return total


@dataclass(frozen=True)
class RTSums:
    r: float
    t: float


def rt_sums(n: int) -> RTSums:
    """R_n over X^5 and Z below (n-1)/2; T_n over the central square family.

    Dimensions are exact; the fifth roots are floats.  Enumeration budget
    n <= 40.
    """
    if n > RT_BUDGET:
        raise BudgetError(f"rt_sums budget is n <= {RT_BUDGET}")
    r_sel = FamilySelector.x_at_least(5).intersect(
        FamilySelector(z_lo=5, z_hi=max_t_strictly_below_half(n)))
    t_sel = FamilySelector.x_at_least(min_t_at_least_half(n))
    r_total = 0.0
    if r_sel.z_hi is not None and r_sel.z_hi >= r_sel.z_lo:
        for shape in enumerate_partitions(n, r_sel):
            r_total += math.exp(-math.log(_dimension(tuple(shape))) / 5)
    t_total = 0.0
    for shape in enumerate_partitions(n, t_sel):
        t_total += math.exp(-math.log(_dimension(tuple(shape))) / 5)
    return RTSums(r_total, t_total)


def mishchenko_floor(n: int) -> Tuple[int, bool]:
    """(min dim over X_n^{ceil((n-1)/2)}, min dim >= (3/2)^n), exact comparison."""
    if n > RT_BUDGET:
        raise BudgetError(f"mishchenko_floor budget is n <= {RT_BUDGET}")
    k = min_t_at_least_half(n)
    best = frobenius.min_dimension(n, FamilySelector.x_at_least(k))
    holds = Fraction(best.value) >= Fraction(3, 2) ** n
    return best.value, holds


@dataclass(frozen=True)
class CentralizerBound:
    """Exact centralizer against m! ((n-m)/k)! k^((n-m)/k)."""

    m: int
    k: int
    centralizer: int
    bound_log: float
    bound_exact: Optional[int]
    ok: bool


def centralizer_bound(cycle_class, k: Optional[int] = None) -> CentralizerBound:
    """Check the centralizer bound for a class with m fixed points and all
    other cycles of length >= k.  Defaults to the largest admissible k."""
    c = cycle_class if isinstance(cycle_class, CycleClass) else CycleClass(cycle_class)
    n = c.n
    m = c.fixed_points
    min_long = c.min_long_cycle()
    if min_long < 2:
        raise PreconditionError(
            "class has no cycle of length >= 2; the bound does not apply")
    if k is None:
        k = min_long
    if not 2 <= k <= min_long:
        raise PreconditionError(f"k = {k} not admissible (2 <= k <= {min_long})")
    rest = n - m
    exact = None
    if rest % k == 0:
        exact = math.factorial(m) * math.factorial(rest // k) * k ** (rest // k)
        bound_log = math.log(exact)
        ok = c.centralizer_size <= exact
    else:
        bound_log = (math.lgamma(m + 1) + math.lgamma(rest / k + 1)
                     + (rest / k) * math.log(k))
        ok = math.log(c.centralizer_size) <= bound_log + 1e-9
    return CentralizerBound(m, k, c.centralizer_size, bound_log, exact, ok)


def larsen_shalev_exponent(cycle_class) -> Optional[float]:
    """max over nontrivial shapes of ln|chi| / ln dim; None if all values
    vanish off dimension-1 shapes.  Report-only diagnostic."""
    c = cycle_class if isinstance(cycle_class, CycleClass) else CycleClass(cycle_class)
    if c.n > EXPONENT_SCAN_BUDGET:
        raise BudgetError(f"exponent scan budget is n <= {EXPONENT_SCAN_BUDGET}")
    best = None
    for shape, value in character_column(c.n, c).items():
        d = _dimension(shape)
        if d == 1 or value == 0:
            continue
        ratio = math.log(abs(value)) / math.log(d)
        if best is None or ratio > best:
            best = ratio
    return best


@dataclass(frozen=True)
class BoundReport:
    """Per-class diagnostics: centralizer bound, empirical character-growth
    exponent, and the Hardy-Ramanujan ratio at the same degree."""

    n: int
    cycle_class: CycleClass
    centralizer: CentralizerBound
    ls_exponent: Optional[float]
    hardy_ramanujan: float


def bound_report(n: int, cycle_class) -> BoundReport:
    c = cycle_class if isinstance(cycle_class, CycleClass) else CycleClass(cycle_class)
    if c.n != n:
        raise PreconditionError(f"class degree {c.n} != {n}")
    cb = centralizer_bound(c)
    ls = larsen_shalev_exponent(c) if n <= EXPONENT_SCAN_BUDGET else None
    return BoundReport(n, c, cb, ls, hr_ratio(n))


@dataclass(frozen=True)
class ConditionBLogs:
    """Stirling-scale diagnostics for the witness classes: ln c1 against
    (H/2) sqrt(n) ln n, and ln c3."""

    log_c1: float
    c1_reference: float
    log_c3: float
    sqrt_n_log_n: float


def condition_b_centralizer_logs(n: int, H: float, P: float) -> ConditionBLogs:
    c1, _, c3 = make_condition_b_classes(n, H, P)
    scale = math.sqrt(n) * math.log(n)
    return ConditionBLogs(
        log_c1=math.log(c1.centralizer_size),
        c1_reference=(H / 2) * scale,
        log_c3=math.log(c3.centralizer_size),
        sqrt_n_log_n=scale,
    )


# ---------------------------------------------------------------------------
# Convergence scans.
# ---------------------------------------------------------------------------


def four_cycle_class(n: int) -> CycleClass:
    """A 3-derangement built from 4-cycles with sign +1.

    When n/4 is odd an all-fours class is odd, so one 8-cycle replaces two
    4-cycles to fix the parity.
    """
    if n % 4 != 0 or n < 8:
        raise PreconditionError("need n divisible by 4 and n >= 8")
    quarters = n // 4
    if (n - quarters) % 2 == 0:
        return CycleClass([4] * quarters)
    return CycleClass([8] + [4] * (quarters - 2))


def scan_limit2(n_list: Iterable[int], family: str = "ncycle") -> ScanReport:
    """Exact Y_n and |Y_n - 2| along a sign-compatible 3-derangement family.

    ``ncycle``: three n-cycles (odd n only; the hook fast path applies).
    ``four-cycle``: (4-cycle class, n-cycle, n-cycle) at n divisible by 4.
    Degrees where the family violates the derangement or sign conditions
    produce a note instead of a row.
    """
    report = ScanReport(
        title=f"limit-2 scan, {family} family",
        columns=("n", "classes", "y", "y_exact", "deviation", "deviation_exact", "terms"),
    )
    for n in sorted(n_list):
        if family == "ncycle":
            triple = (CycleClass((n,)),) * 3
        elif family == "four-cycle":
            try:
                c1 = four_cycle_class(n)
            except PreconditionError as exc:
                report.notes.append(f"n={n}: {exc}")
                continue
            triple = (c1, CycleClass((n,)), CycleClass((n,)))
        else:
            raise PreconditionError(f"unknown family {family!r}")
        cond = check_condition_a(*triple)
        if not cond.ok:
            report.notes.append(f"n={n}: rejected ({'; '.join(cond.failures)})")
            continue
        if family == "ncycle":
            s = frobenius.ncycle_family_sum(n)
        else:
            s = frobenius.family_sum(n, None, *triple)
        deviation = abs(s.value - 2)
        row = {"n": n, "classes": " | ".join(format_parts(c.lengths) for c in triple),
               "terms": s.terms}
        row.update(rational_cells("y", s.value))
        row.update(rational_cells("deviation", deviation))
        report.add_row(**row)
    return report


@dataclass(frozen=True)
class SemiGaussRow:
    """One degree of the semi-Gaussian scan, exact parts included."""

    n: int
    classes: Tuple[CycleClass, CycleClass, CycleClass]
    fixed_points: int
    k: int
    z_sum: Fraction
    closed_form: Fraction
    identity_ok: bool
    y_value: Optional[Fraction]
    reference: float
    deviation: Optional[float]


def semigauss_row(n: int, H: float, P: float = 0.1, include_full_sum: bool = True,
                  workers: int = 1, override_budget: bool = False) -> SemiGaussRow:
    """Exact Z-identity (and optionally full Y_n) for the Condition-B witness.

    k is the shortest cycle length >= 2 across the witness triple: up to
    t = k - 1 the lemma hypotheses hold, so the enumerated Z_n^{<k} sum must
    equal the floor-adjusted closed form exactly.
    """
    if include_full_sum and n > FULL_SUM_BUDGET and not override_budget:
        raise BudgetError(
            f"full enumeration above n = {FULL_SUM_BUDGET} needs override_budget=True")
    c1, c2, c3 = make_condition_b_classes(n, H, P)
    m = c1.fixed_points
    k = min(c.min_long_cycle() for c in (c1, c2, c3))
    z = frobenius.family_sum(n, FamilySelector.z_at_most(k - 1), c1, c2, c3,
                             workers=workers)
    closed = semigauss_closed_form_exact(n, m, k)
    y_value = None
    deviation = None
    reference = 2 * math.exp(-H * H)
    if include_full_sum:
        y = frobenius.family_sum(n, None, c1, c2, c3, workers=workers)
        y_value = y.value
        deviation = abs(float(y.value) - reference)
    return SemiGaussRow(
        n=n, classes=(c1, c2, c3), fixed_points=m, k=k,
        z_sum=z.value, closed_form=closed, identity_ok=(z.value == closed),
        y_value=y_value, reference=reference, deviation=deviation,
    )


def scan_semigauss(H: float, n_list: Iterable[int], P: float = 0.1,
                   include_full_sum: bool = True, workers: int = 1,
                   override_budget: bool = False) -> ScanReport:
    """Semi-Gaussian scan: exact Z-identity and full Y_n against 2 e^(-H^2)."""
    report = ScanReport(
        title=f"semi-gaussian scan, H = {H}",
        columns=("n", "classes", "fixed_points", "k",
                 "z_sum", "z_sum_exact", "closed_form", "closed_form_exact",
                 "identity_ok", "y", "y_exact", "reference", "deviation"),
    )
    for n in sorted(n_list):
        try:
            row = semigauss_row(n, H, P, include_full_sum, workers, override_budget)
        except InfeasibleError as exc:
            report.notes.append(f"n={n}: infeasible ({exc.reason})")
            continue
        cells = {
            "n": n,
            "classes": " | ".join(format_parts(c.lengths) for c in row.classes),
            "fixed_points": row.fixed_points,
            "k": row.k,
            "identity_ok": row.identity_ok,
            "reference": decimal_str(row.reference),
            "deviation": decimal_str(row.deviation) if row.deviation is not None else "",
        }
        cells.update(rational_cells("z_sum", row.z_sum))
        cells.update(rational_cells("closed_form", row.closed_form))
        if row.y_value is not None:
            cells.update(rational_cells("y", row.y_value))
        else:
            cells.update({"y": "", "y_exact": ""})
        report.add_row(**cells)
    return report
