"""Exact rational scalars and enclosure (bracket) arithmetic.

Every scalar in this package is an exact ``fractions.Fraction``; every real
number that has no exact rational representation (roots, powers with
fractional exponents, pi) is handled as a ``Bracket``: a closed rational
interval guaranteed to contain it.  Nothing in this module touches floating
point.  All bracket operations are enclosure-sound: if x is in ``a`` and y is
in ``b``, then x op y is in ``bracket_combine(a, b, op)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int]

__all__ = [
    "Rational",
    "DomainError",
    "NonConvergenceError",
    "rational_normalize",
    "rat_from_str",
    "rat_to_str",
    "rat_to_decimal",
    "Bracket",
    "bracket_point",
    "bracket_combine",
    "root_bracket",
    "rational_power_bracket",
]


class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""


class NonConvergenceError(RuntimeError):
    """A refinement loop hit its step limit before reaching tolerance."""

    def __init__(self, message: str, last_bracket: "Bracket | None" = None,
                 steps: int | None = None):
        super().__init__(message)
        self.last_bracket = last_bracket
        self.steps = steps


def rational_normalize(num: int, den: int) -> Rational:
    """Canonical fraction num/den: positive denominator, lowest terms."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def rat_from_str(s: str) -> Rational:
    """Parse "p/q", "p", or a plain decimal string into an exact rational."""
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {s!r}") from exc


def rat_to_str(q: RationalLike) -> str:
    """Render as "p/q", or just "p" for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_to_decimal(q: RationalLike, digits: int = 12) -> str:
    """Decimal rendering truncated toward zero, presentation only.

    The exact string from :func:`rat_to_str` is the value of record; this
    is never used in comparisons.
    """
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole = q.numerator // q.denominator
    rem = q.numerator - whole * q.denominator
    if digits <= 0:
        return f"{sign}{whole}"
    frac_digits = rem * 10 ** digits // q.denominator
    return f"{sign}{whole}.{frac_digits:0{digits}d}"


@dataclass(frozen=True)
class Bracket:
    """Closed interval [lo, hi] of rationals enclosing one real value."""

    lo: Rational
    hi: Rational

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"inverted bracket: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    def contains(self, x: RationalLike) -> bool:
        return self.lo <= x <= self.hi

    def contains_bracket(self, other: "Bracket") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersect(self, other: "Bracket") -> "Bracket":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise DomainError("disjoint brackets have no intersection")
        return Bracket(lo, hi)

    def midpoint(self) -> Rational:
        return (self.lo + self.hi) / 2

    def scale(self, c: RationalLike) -> "Bracket":
        c = Fraction(c)
        if c >= 0:
            return Bracket(self.lo * c, self.hi * c)
        return Bracket(self.hi * c, self.lo * c)

    def shift(self, c: RationalLike) -> "Bracket":
        return Bracket(self.lo + c, self.hi + c)

    def __add__(self, other: "Bracket") -> "Bracket":
        return Bracket(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Bracket") -> "Bracket":
        return Bracket(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "Bracket") -> "Bracket":
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Bracket(min(products), max(products))

    def to_json(self) -> dict:
        return {"lo": rat_to_str(self.lo), "hi": rat_to_str(self.hi),
                "width": rat_to_str(self.width)}

    def __str__(self) -> str:
        return f"[{rat_to_str(self.lo)}, {rat_to_str(self.hi)}]"


def bracket_point(q: RationalLike) -> Bracket:
    q = Fraction(q)
    return Bracket(q, q)


def bracket_combine(a: Bracket, b: Bracket, op: str) -> Bracket:
    """Enclosure-sound interval arithmetic for op in {"add", "sub", "mul"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unsupported bracket operation: {op!r}")


# ---------------------------------------------------------------------------
# k-th roots by bisection with exact comparisons.
#
# The only predicate bisection needs is the exact sign of mid**k - q.  For
# small exponents the integer cross-product is computed outright.  For large
# exponents (root indices up to 10**8 appear when powers with many-digit
# rational exponents are enclosed) the sign is decided by evaluating mid**k
# as a dyadic interval with directed rounding at increasing precision; the
# answer is exact because the loop only ever reports a sign it has proven,
# and falls back to the full integer product when the operands are small
# enough that "full" is cheap.
# ---------------------------------------------------------------------------

_EXACT_BITS = 1 << 14  # full integer powers allowed up to this many bits


def _ipow(base: int, exp: int) -> int:
    """base**exp with a shift shortcut for powers of two."""
    if base == 0:
        return 0 if exp else 1
    if base & (base - 1) == 0:
        return 1 << ((base.bit_length() - 1) * exp)
    return base ** exp


def _int_pow_equals(x: int, k: int, target: int) -> bool:
    """Exact test x**k == target without materializing x**k if avoidable."""
    if x == 1 or target == 1:
        return x == 1 and target == 1
    bits = target.bit_length()
    if not k * (x.bit_length() - 1) + 1 <= bits <= k * x.bit_length():
        return False
    if x & (x - 1) == 0:
        return target == 1 << ((x.bit_length() - 1) * k)
    if target & (target - 1) == 0:
        return False
    # A power with any residue mismatch cannot be equal; random-looking odd
    # moduli make a false positive astronomically unlikely, and a final
    # exact comparison removes even that.
    for modulus in (2 ** 61 - 1, 2 ** 64 - 59, 2 ** 89 - 1):
        if pow(x, k, modulus) != target % modulus:
            return False
    return _ipow(x, k) == target


def _mul_down_up(alo, ahi, blo, bhi, prec):
    # Interval product of nonnegative dyadic intervals (mant_lo, mant_hi, exp)
    # pairs collapsed to mantissas at a shared exponent, renormalized so the
    # upper mantissa keeps at most `prec` bits.
    lo = alo * blo
    hi = ahi * bhi
    shift = hi.bit_length() - prec
    if shift > 0:
        lo >>= shift
        hi = -((-hi) >> shift)  # ceiling shift
        return lo, hi, shift
    return lo, hi, 0


def _pow_interval(a: int, k: int, prec: int):
    """Dyadic bounds (lo, hi, e) with lo*2**e <= a**k <= hi*2**e, a >= 0."""
    lo, hi, e = 1, 1, 0
    blo, bhi, be = a, a, 0
    kk = k
    while kk:
        if kk & 1:
            lo, hi, s = _mul_down_up(lo, hi, blo, bhi, prec)
            e += be + s
        kk >>= 1
        if kk:
            blo, bhi, s = _mul_down_up(blo, bhi, blo, bhi, prec)
            be = 2 * be + s
    return lo, hi, e


def _dyadic_cmp(m1: int, e1: int, m2: int, e2: int) -> int:
    """Exact sign of m1*2**e1 - m2*2**e2 for nonnegative mantissas."""
    if m1 == 0 or m2 == 0:
        return (m1 > 0) - (m2 > 0)
    top1, top2 = e1 + m1.bit_length(), e2 + m2.bit_length()
    if top1 < top2:
        return -1
    if top1 > top2:
        return 1
    # Same bit length: the exponent gap is at most the mantissa size, so the
    # aligning shift below stays small.
    if e1 >= e2:
        m1 <<= e1 - e2
    else:
        m2 <<= e2 - e1
    return (m1 > m2) - (m1 < m2)


def _round_down(m: int, prec: int) -> tuple[int, int]:
    shift = m.bit_length() - prec
    if shift > 0:
        return m >> shift, shift
    return m, 0


def _round_up(m: int, prec: int) -> tuple[int, int]:
    shift = m.bit_length() - prec
    if shift > 0:
        return -((-m) >> shift), shift
    return m, 0


class _PowComparator:
    """Repeated exact comparisons of mid**k against a fixed rational q.

    Rounded dyadic images of q's numerator and denominator are cached per
    precision level, so bisection never rescans a large radicand twice.
    """

    def __init__(self, k: int, q: Fraction):
        self.k = k
        self.qn = q.numerator
        self.qd = q.denominator
        self._cache: dict[int, tuple] = {}

    def _rounded(self, prec: int) -> tuple:
        cached = self._cache.get(prec)
        if cached is None:
            cached = (_round_down(self.qn, prec), _round_up(self.qn, prec),
                      _round_down(self.qd, prec), _round_up(self.qd, prec))
            self._cache[prec] = cached
        return cached

    def cmp(self, mid: Fraction) -> int:
        """Exact sign of mid**k - q for mid >= 0, q >= 0."""
        a, b = mid.numerator, mid.denominator
        k, qn, qd = self.k, self.qn, self.qd
        # Sign of a**k * qd - qn * b**k.
        lhs_bits = k * a.bit_length() + qd.bit_length()
        rhs_bits = k * b.bit_length() + qn.bit_length()
        if max(lhs_bits, rhs_bits) <= _EXACT_BITS:
            lhs = _ipow(a, k) * qd
            rhs = qn * _ipow(b, k)
            return (lhs > rhs) - (lhs < rhs)
        prec = 128
        while True:
            llo, lhi, le = _pow_interval(a, k, prec)
            rlo, rhi, re = _pow_interval(b, k, prec)
            (qn_lo, qn_le), (qn_hi, qn_he), (qd_lo, qd_le), (qd_hi, qd_he) = \
                self._rounded(prec)
            if _dyadic_cmp(lhi * qd_hi, le + qd_he,
                           rlo * qn_lo, re + qn_le) < 0:
                return -1
            if _dyadic_cmp(llo * qd_lo, le + qd_le,
                           rhi * qn_hi, re + qn_he) > 0:
                return 1
            prec *= 2
            if prec > _EXACT_BITS:
                # Persistent ambiguity after thousands of agreeing leading
                # bits is almost surely equality, which factors
                # coordinatewise because gcd(a, b) = gcd(qn, qd) = 1.
                if _int_pow_equals(a, k, qn) and _int_pow_equals(b, k, qd):
                    return 0
                lhs = _ipow(a, k) * qd
                rhs = qn * _ipow(b, k)
                return (lhs > rhs) - (lhs < rhs)


def _cmp_pow(mid: Fraction, k: int, q: Fraction) -> int:
    return _PowComparator(k, q).cmp(mid)


def _int_kth_root(n: int, k: int) -> int:
    """Largest r with r**k <= n, for n >= 0, k >= 1."""
    if n < 2 or k == 1:
        return n
    comparator = _PowComparator(k, Fraction(n))
    bits = n.bit_length()
    lo = 1 << max(0, (bits - 1) // k)   # lo**k <= 2**(bits-1) <= n
    hi = 1 << ((bits + k - 1) // k)     # hi**k >= 2**bits > n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        c = comparator.cmp(Fraction(mid))
        if c == 0:
            return mid
        if c < 0:
            lo = mid
        else:
            hi = mid
    return lo


def root_bracket(q: RationalLike, k: int, eps: RationalLike) -> Bracket:
    """Enclose the k-th root of q >= 0 to width <= eps by pure bisection.

    The returned bracket [lo, hi] satisfies lo**k <= q <= hi**k exactly; if
    q is a perfect k-th power of a dyadic rational the bracket collapses to
    that point.  Endpoints are dyadic refinements of an integer bracket, so
    repeated calls with smaller eps always nest.
    """
    q = Fraction(q)
    eps = Fraction(eps)
    if k < 1:
        raise DomainError("root index must be a positive integer")
    if q < 0:
        raise DomainError("negative radicand")
    if eps <= 0:
        raise DomainError("eps must be positive")
    if q == 0:
        return bracket_point(0)
    comparator = _PowComparator(k, q)
    if q >= 1:
        r = _int_kth_root(q.numerator // q.denominator, k)
        if comparator.cmp(Fraction(r)) == 0:
            return bracket_point(r)
        lo, hi = Fraction(r), Fraction(r + 1)
    else:
        lo, hi = Fraction(0), Fraction(1)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        c = comparator.cmp(mid)
        if c == 0:
            return bracket_point(mid)
        if c < 0:
            lo = mid
        else:
            hi = mid
    return Bracket(lo, hi)


def rational_power_bracket(a: RationalLike, p: int, q: int,
                           eps: RationalLike) -> Bracket:
    """Enclose a**(p/q) for rational a > 0 with bracket width <= eps.

    Negative exponents are reduced to positive ones on the exact reciprocal
    base, so no interval division is ever needed.
    """
    a = Fraction(a)
    if a <= 0:
        raise DomainError("base must be positive")
    if q < 1:
        raise DomainError("exponent denominator must be a positive integer")
    if p == 0:
        return bracket_point(1)
    base = a if p > 0 else 1 / a
    power = Fraction(_ipow(base.numerator, abs(p)),
                     _ipow(base.denominator, abs(p)))
    return root_bracket(power, q, eps)
