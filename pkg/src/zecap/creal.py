"""Computable reals as lazy rational approximants with a 2^-n error modulus.

A value is an expression tree; asking for precision n yields a Fraction
within 2^-n of the represented real.  Approximants are deterministic and
cached, so the same precision always returns the identical rational.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Callable, Optional

from .errors import InputError


class CReal:
    """A real number given by approximants r_n with |x - r_n| < 2^-n."""

    __slots__ = ("_fn", "description", "exact", "_cache")

    def __init__(
        self,
        fn: Callable[[int], Fraction],
        description: str,
        exact: Optional[Fraction] = None,
    ):
        self._fn = fn
        self.description = description
        self.exact = exact
        self._cache: dict[int, Fraction] = {}

    def approx(self, n: int) -> Fraction:
        if n < 0:
            raise InputError("precision must be nonnegative")
        if self.exact is not None:
            return self.exact
        got = self._cache.get(n)
        if got is None:
            got = self._fn(n)
            self._cache[n] = got
        return got

    def lower_bound(self, n: int) -> Fraction:
        """A rational certainly <= the value (exact when the value is rational)."""
        if self.exact is not None:
            return self.exact
        return self.approx(n) - Fraction(1, 1 << n)

    def upper_bound(self, n: int) -> Fraction:
        if self.exact is not None:
            return self.exact
        return self.approx(n) + Fraction(1, 1 << n)

    def __repr__(self) -> str:
        return f"CReal({self.description})"


def from_rational(q) -> CReal:
    q = Fraction(q)
    return CReal(lambda n: q, str(q), exact=q)


def _int_nth_root(x: int, d: int) -> int:
    """floor(x ** (1/d)) for nonnegative integers, exact."""
    if x < 0:
        raise InputError("radicand must be nonnegative")
    if x == 0:
        return 0
    if d == 1:
        return x
    if d == 2:
        return math.isqrt(x)
    # Newton iteration on integers, seeded from the bit length
    r = 1 << ((x.bit_length() + d - 1) // d)
    while True:
        nr = ((d - 1) * r + x // r ** (d - 1)) // d
        if nr >= r:
            break
        r = nr
    while r ** d > x:
        r -= 1
    return r


def sqrt_int(k: int) -> CReal:
    """Square root of a nonnegative integer."""
    return root_pow2(k, 1)


def root_pow2(k: int, m: int) -> CReal:
    """2^m-th root of a nonnegative integer k; exact when k is a perfect power."""
    if k < 0:
        raise InputError("radicand must be nonnegative")
    if m < 0:
        raise InputError("root level must be nonnegative")
    if m == 0:
        return from_rational(k)
    d = 1 << m
    r = _int_nth_root(k, d)
    if r ** d == k:
        return from_rational(r)

    def fn(n: int, k=k, d=d) -> Fraction:
        # floor((k * 2^(d p)) ** (1/d)) / 2^p with p = n+1 gives error < 2^-(n+1)
        p = n + 1
        t = _int_nth_root(k << (d * p), d)
        return Fraction(t, 1 << p)

    label = f"sqrt({k})" if m == 1 else f"{k}^(1/{d})"
    return CReal(fn, label)


def _magnitude_bound(x: CReal) -> Fraction:
    return abs(x.approx(0)) + 1


def add(x: CReal, y: CReal) -> CReal:
    if x.exact is not None and y.exact is not None:
        return from_rational(x.exact + y.exact)

    def fn(n: int) -> Fraction:
        return x.approx(n + 1) + y.approx(n + 1)

    return CReal(fn, f"({x.description} + {y.description})")


def mul(x: CReal, y: CReal) -> CReal:
    if x.exact is not None and y.exact is not None:
        return from_rational(x.exact * y.exact)
    # |xy - xa*ya| < (Bx + By + 1) * 2^-p, so p = n + bits(Bx+By+1) suffices
    shift = int(math.ceil(_magnitude_bound(x) + _magnitude_bound(y) + 1)).bit_length()

    def fn(n: int) -> Fraction:
        p = n + shift
        return x.approx(p) * y.approx(p)

    return CReal(fn, f"({x.description} * {y.description})")


def pow2k(x: CReal, k: int) -> CReal:
    """x raised to the 2^k-th power by repeated squaring."""
    if k < 0:
        raise InputError("power level must be nonnegative")
    result = x
    for _ in range(k):
        result = mul(result, result)
    return result


def compare_gt(x: CReal, q, n_max: int) -> Optional[int]:
    """Semi-decide x > q: the witnessing precision, or None if unresolved.

    A returned n certifies x > q (since x > approx(n) - 2^-n > q); None
    never claims x <= q.
    """
    q = Fraction(q)
    for n in range(1, n_max + 1):
        if x.approx(n) - q > Fraction(1, 1 << n):
            return n
    return None


_SQRT_RE = re.compile(r"^sqrt\(\s*(\d+)\s*\)$")
_SUM_RE = re.compile(r"^([^+]+)\+\s*sqrt\(\s*(\d+)\s*\)$")


def parse_real(text: str) -> CReal:
    """Parse 'a/b', '2.5', 'sqrt(k)', or 'a+sqrt(k)' into a computable real."""
    t = text.strip().replace(" ", "")
    if not t:
        raise InputError("empty real expression")
    m = _SQRT_RE.match(t)
    if m:
        return sqrt_int(int(m.group(1)))
    m = _SUM_RE.match(t)
    if m:
        return add(_parse_rational(m.group(1)), sqrt_int(int(m.group(2))))
    return _parse_rational(t)


def _parse_rational(t: str) -> CReal:
    try:
        return from_rational(Fraction(t))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse real expression {t!r}") from None


def decimal_string(q: Fraction, digits: int = 12) -> str:
    """Plain decimal rendering of a rational, for reports."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, rem = divmod(q.numerator, q.denominator)
    if rem == 0:
        return f"{sign}{whole}"
    frac = rem * 10**digits // q.denominator
    return f"{sign}{whole}.{str(frac).rjust(digits, '0').rstrip('0')}"
