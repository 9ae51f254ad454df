"""Two-sided approximations: limits, series tails, Riemann sums, and pi.

Everything here produces brackets whose endpoints are exact rationals and
whose containment claims are consequences of monotonicity plus the root
enclosures from :mod:`twoside.exact_core`.  Rounding is always outward, so
refining a computation can only shrink a bracket, never lose its target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact_core import (Bracket, DomainError, NonConvergenceError,
                         RationalLike, root_bracket, rational_power_bracket)
from .report import IdentityReport, report_equal

BracketGenerator = Iterator[Bracket]


@dataclass(frozen=True)
class SqueezeResult:
    bracket: Bracket
    steps: int


def squeeze_limit(gen: BracketGenerator, tol: RationalLike,
                  max_steps: int) -> SqueezeResult:
    """Run a bracket generator until one bracket has width <= tol."""
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if max_steps < 1:
        raise DomainError("max_steps must be at least 1")
    last = None
    steps = 0
    for bracket in gen:
        steps += 1
        last = bracket
        if bracket.width <= tol:
            return SqueezeResult(bracket, steps)
        if steps >= max_steps:
            break
    raise NonConvergenceError(
        f"no bracket of width <= {tol} within {steps} steps",
        last_bracket=last, steps=steps)


def _sqrt_bracket(b: Bracket, eps: Fraction) -> Bracket:
    """Outward square root of a nonnegative bracket via endpoint roots."""
    if b.lo < 0:
        raise DomainError("square root of a bracket reaching below zero")
    return Bracket(root_bracket(b.lo, 2, eps).lo,
                   root_bracket(b.hi, 2, eps).hi)


# --- the nth-root squeeze example ---------------------------------------------

def nth_root_sequence_bracket(n: int) -> Bracket:
    """Bracket [5, hi] enclosing (3^n + 5^n)^(1/n), hi covering 5*2^(1/n)."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    hi = root_bracket(2, n, Fraction(1, 40 * n)).hi * 5
    return Bracket(Fraction(5), hi)


def nth_root_sequence() -> BracketGenerator:
    n = 1
    while True:
        yield nth_root_sequence_bracket(n)
        n += 1


# --- real-exponent powers -------------------------------------------------------

def sqrt2_truncation(digits: int) -> tuple[int, int]:
    """(d, scale) with d/scale <= sqrt(2) <= (d+1)/scale, scale = 10^digits.

    The lower endpoint comes from a root enclosure two digits finer than
    requested; both inequalities are then re-verified by exact squaring.
    """
    if digits < 0:
        raise DomainError("digits must be non-negative")
    scale = 10 ** digits
    enclosure = root_bracket(2, 2, Fraction(1, 10 ** (digits + 2)))
    d = enclosure.lo.numerator * scale // enclosure.lo.denominator
    while (d + 1) ** 2 < 2 * scale * scale:
        d += 1
    assert d * d <= 2 * scale * scale
    return d, scale


def real_power_bracket(a: RationalLike, digits: int) -> Bracket:
    """Enclose a**sqrt(2) between powers with truncated-decimal exponents.

    For a > 1 the power is increasing in the exponent, so the exponent
    bracket [d, d+1]/10^digits maps directly onto a value bracket; for
    0 < a < 1 it is decreasing and the endpoints swap.
    """
    a = Fraction(a)
    if a <= 0 or a == 1:
        raise DomainError("base must be positive and different from 1")
    d, scale = sqrt2_truncation(digits)
    eps = Fraction(1, 10 ** (digits + 2))
    low_exp = rational_power_bracket(a, d, scale, eps)
    high_exp = rational_power_bracket(a, d + 1, scale, eps)
    if a > 1:
        return Bracket(low_exp.lo, high_exp.hi)
    return Bracket(high_exp.lo, low_exp.hi)


def real_power_generator(a: RationalLike = 2, max_digits: int = 8) -> BracketGenerator:
    for digits in range(max_digits + 1):
        yield real_power_bracket(a, digits)


# --- series with exact tails ---------------------------------------------------

@dataclass(frozen=True)
class GeometricReport:
    partial: Fraction
    closed: Fraction
    tail_bracket: Bracket


def geometric_series_sum(a: RationalLike, r: RationalLike,
                         n_terms: int) -> GeometricReport:
    """Partial sum, closed form a/(1-r), and a tail bracket through term N."""
    a, r = Fraction(a), Fraction(r)
    if abs(r) >= 1:
        raise DomainError("series diverges for |r| >= 1")
    if n_terms < 0:
        raise DomainError("N must be non-negative")
    partial = Fraction(0)
    power = Fraction(1)
    for _ in range(n_terms + 1):
        partial += a * power
        power *= r
    closed = a / (1 - r)
    tail = abs(a * power / (1 - r))
    return GeometricReport(partial, closed, Bracket(partial, partial + tail))


@dataclass(frozen=True)
class SwinesheadReport:
    partial: Fraction
    closed_partial: Fraction
    bracket: Bracket
    passed: bool


def swineshead_check(n_terms: int) -> SwinesheadReport:
    """Partial sums of k/2^k equal 2 - (N+2)/2^N exactly and bracket 2."""
    if n_terms < 0:
        raise DomainError("N must be non-negative")
    partial = Fraction(0)
    for k in range(n_terms + 1):
        partial += Fraction(k, 2 ** k)
    remainder = Fraction(n_terms + 2, 2 ** n_terms)
    closed_partial = 2 - remainder
    bracket = Bracket(partial, partial + remainder)
    return SwinesheadReport(partial, closed_partial, bracket,
                            partial == closed_partial and bracket.contains(2))


def swineshead_generator() -> BracketGenerator:
    n = 0
    while True:
        yield swineshead_check(n).bracket
        n += 1


def geometric_tail_generator(a: RationalLike = 1,
                             r: RationalLike = Fraction(1, 10)) -> BracketGenerator:
    n = 0
    while True:
        yield geometric_series_sum(a, r, n).tail_bracket
        n += 1


def rows_rearrangement_check(n_rows: int) -> IdentityReport:
    """Row-of-tails double count: sum_j sum_{i>=j} 2^-i = sum_i i*2^-i."""
    if n_rows < 1:
        raise DomainError("N must be a positive integer")
    by_rows = Fraction(0)
    for j in range(1, n_rows + 1):
        row = Fraction(0)
        for i in range(j, n_rows + 1):
            row += Fraction(1, 2 ** i)
        by_rows += row
    by_columns = Fraction(0)
    for i in range(1, n_rows + 1):
        by_columns += Fraction(i, 2 ** i)
    return report_equal("series.rows", (n_rows,), by_rows, by_columns)


# --- Darboux brackets for monomials ---------------------------------------------

_FAULHABER = {
    1: lambda m: Fraction(m * (m + 1), 2),
    2: lambda m: Fraction(m * (m + 1) * (2 * m + 1), 6),
    3: lambda m: Fraction((m * (m + 1)) ** 2, 4),
}


@dataclass(frozen=True)
class MonomialIntegrand:
    """c * x^k on [0, b] with c > 0, b > 0, k in {1, 2, 3}.

    Non-negative and non-decreasing on its domain, so the endpoint sums are
    honest lower and upper Darboux sums.
    """

    coefficient: Fraction
    exponent: int
    upper: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.coefficient <= 0:
            raise DomainError("coefficient must be positive")
        if self.upper <= 0:
            raise DomainError("interval endpoint must be positive")
        if self.exponent not in _FAULHABER:
            raise DomainError("unsupported exponent (need k in {1, 2, 3})")

    def value(self, x: RationalLike) -> Fraction:
        return self.coefficient * Fraction(x) ** self.exponent

    def exact_integral(self) -> Fraction:
        return (self.coefficient * self.upper ** (self.exponent + 1)
                / (self.exponent + 1))


def riemann_bracket(f: MonomialIntegrand, n: int) -> Bracket:
    """Lower/upper endpoint sums on n equal cells, via exact power sums."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    power_sum = _FAULHABER[f.exponent]
    cell = f.upper / n
    factor = f.coefficient * cell ** (f.exponent + 1)
    return Bracket(factor * power_sum(n - 1), factor * power_sum(n))


def riemann_generator(f: MonomialIntegrand) -> BracketGenerator:
    n = 1
    while True:
        yield riemann_bracket(f, n)
        n *= 2


# --- pi by polygon doubling -------------------------------------------------------

def _polygon_area_pair(n_sides: int, cos_bracket: Bracket,
                       eps: Fraction) -> Bracket:
    """[inscribed area, circumscribed area] for the regular n-gon pair.

    With t the half central angle, the inscribed area is n sin(t) cos(t) and
    the circumscribed one n tan(t); tan comes from sec^2 - 1 so only exact
    reciprocals of the rational cos endpoints are needed.
    """
    c = cos_bracket
    if c.lo <= 0 or c.hi > 1:
        raise DomainError("cosine bracket escaped (0, 1]")
    zero = Fraction(0)
    sin_sq = Bracket(max(zero, 1 - c.hi * c.hi), 1 - c.lo * c.lo)
    s = _sqrt_bracket(sin_sq, eps)
    inscribed = (s * c).scale(n_sides)
    tan_sq = Bracket(max(zero, 1 / (c.hi * c.hi) - 1), 1 / (c.lo * c.lo) - 1)
    t = _sqrt_bracket(tan_sq, eps)
    circumscribed = t.scale(n_sides)
    return Bracket(inscribed.lo, circumscribed.hi)


def pi_bracket_sequence(doublings: int, eps: RationalLike) -> list[Bracket]:
    """Nested pi brackets from the hexagon pair through `doublings` halvings.

    The per-level root precision shrinks by 4 per doubling, which cancels
    the growth of the relative error of sin(t) as t halves; successive
    brackets are intersected so nesting holds by construction while every
    bracket remains a sound enclosure.
    """
    if doublings < 0:
        raise DomainError("doublings must be non-negative")
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    step_eps = min(eps / 16, Fraction(1, 64))
    cos_bracket = root_bracket(3, 2, step_eps).scale(Fraction(1, 2))
    n_sides = 6
    levels: list[Bracket] = []
    current = None
    for level in range(doublings + 1):
        pair = _polygon_area_pair(n_sides, cos_bracket, step_eps)
        current = pair if current is None else current.intersect(pair)
        levels.append(current)
        if level < doublings:
            step_eps = step_eps / 4
            half_angle_sq = cos_bracket.shift(1).scale(Fraction(1, 2))
            cos_bracket = _sqrt_bracket(half_angle_sq, step_eps)
            n_sides *= 2
    return levels


def pi_bracket(doublings: int, eps: RationalLike) -> Bracket:
    """Enclose pi between inscribed/circumscribed 6*2^doublings-gon areas."""
    return pi_bracket_sequence(doublings, eps)[-1]


def pi_generator(eps: RationalLike = Fraction(1, 10 ** 12)) -> BracketGenerator:
    eps = Fraction(eps)
    step_eps = min(eps / 16, Fraction(1, 64))
    cos_bracket = root_bracket(3, 2, step_eps).scale(Fraction(1, 2))
    n_sides = 6
    current = None
    while True:
        pair = _polygon_area_pair(n_sides, cos_bracket, step_eps)
        current = pair if current is None else current.intersect(pair)
        yield current
        step_eps = step_eps / 4
        half_angle_sq = cos_bracket.shift(1).scale(Fraction(1, 2))
        cos_bracket = _sqrt_bracket(half_angle_sq, step_eps)
        n_sides *= 2


def circle_area_bracket(r: RationalLike, doublings: int,
                        eps: RationalLike) -> Bracket:
    """r^2 times the pi bracket; exact scaling keeps enclosure soundness."""
    r = Fraction(r)
    if r <= 0:
        raise DomainError("radius must be positive")
    return pi_bracket(doublings, eps).scale(r * r)


def cylinder_volume_bracket(r: RationalLike, m: RationalLike, doublings: int,
                            eps: RationalLike) -> Bracket:
    """Base-circle bracket times the height, the prism volume rule."""
    m = Fraction(m)
    if m <= 0:
        raise DomainError("height must be positive")
    return circle_area_bracket(r, doublings, eps).scale(m)


# --- generator registry for the CLI ----------------------------------------------

def sqrt_refinement_generator(radicand: RationalLike = 2) -> BracketGenerator:
    step = 0
    while True:
        yield root_bracket(radicand, 2, Fraction(1, 2 ** step))
        step += 1


def named_generator(name: str) -> BracketGenerator:
    factories = {
        "pi": pi_generator,
        "sqrt2": sqrt_refinement_generator,
        "nthroot": nth_root_sequence,
        "power": real_power_generator,
        "riemann2": lambda: riemann_generator(
            MonomialIntegrand(Fraction(1), 2, Fraction(1))),
        "riemann3": lambda: riemann_generator(
            MonomialIntegrand(Fraction(1), 3, Fraction(1))),
        "swineshead": swineshead_generator,
        "chocolate": geometric_tail_generator,
    }
    try:
        return factories[name]()
    except KeyError:
        raise DomainError(f"unknown generator {name!r}; "
                          f"choose from {sorted(factories)}") from None


GENERATOR_NAMES = ("pi", "sqrt2", "nthroot", "power", "riemann2", "riemann3",
                   "swineshead", "chocolate")
