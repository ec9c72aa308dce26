"""Rational helpers and the coefficient sets M_sm, M_m and P_n.

A coefficient is *standard* when it equals ``1 - 1/m`` for a positive
integer ``m`` or for ``m = infinity`` (the value 1).  ``M_m`` adds the
whole interval ``[6/7, 1]``.  ``P_n`` is the set of ``alpha`` in ``[0, 1]``
with ``floor((n+1) alpha) >= n alpha``; the standard coefficients are exactly
the intersection of all ``P_n``.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, floor

from .errors import NotInMm, OutOfRange, ParseError

REGULAR = (1, 2, 3, 4, 6)
MM_THRESHOLD = Fraction(6, 7)


def as_rational(x):
    """Coerce an int, Fraction or ``"p/q"`` string to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not a rational: {x!r}")


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"``; the sign may sit on either part."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"bad rational {text!r}") from None
    if q == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x):
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def standard(m):
    """The standard coefficient ``1 - 1/m``."""
    return 1 - Fraction(1, m)


class CoeffKind(Enum):
    STANDARD_FINITE = "StandardFinite"
    STANDARD_INFINITE = "StandardInfinite"
    IN_MM_ONLY = "InMmOnly"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class CoeffClass:
    kind: CoeffKind
    m: int | None = None

    @property
    def standard(self):
        return self.kind in (CoeffKind.STANDARD_FINITE, CoeffKind.STANDARD_INFINITE)

    @property
    def in_mm(self):
        return self.kind is not CoeffKind.OUTSIDE

    def __str__(self):
        if self.kind is CoeffKind.STANDARD_FINITE:
            return f"StandardFinite({self.m})"
        return self.kind.value


def _check_unit(alpha):
    if alpha < 0 or alpha > 1:
        raise OutOfRange(f"coefficient {alpha} not in [0, 1]")


def classify_coeff(alpha):
    alpha = as_rational(alpha)
    _check_unit(alpha)
    if alpha == 1:
        return CoeffClass(CoeffKind.STANDARD_INFINITE)
    m = 1 / (1 - alpha)
    if m.denominator == 1:
        return CoeffClass(CoeffKind.STANDARD_FINITE, int(m))
    if alpha >= MM_THRESHOLD:
        return CoeffClass(CoeffKind.IN_MM_ONLY)
    return CoeffClass(CoeffKind.OUTSIDE)


def in_Pn(alpha, n):
    alpha = as_rational(alpha)
    if alpha < 0 or alpha > 1:
        return False
    return floor((n + 1) * alpha) >= n * alpha


def msm_witness(alpha):
    """None for a standard coefficient, else the m with 1-1/m < alpha < 1-1/(m+1).

    ``alpha`` then fails to lie in ``P_m``.
    """
    alpha = as_rational(alpha)
    _check_unit(alpha)
    if classify_coeff(alpha).standard:
        return None
    return floor(1 / (1 - alpha))


def mm_in_regular_pn(alpha):
    """The regular indices n in {1,2,3,4,6} with alpha in P_n."""
    alpha = as_rational(alpha)
    if not classify_coeff(alpha).in_mm:
        raise NotInMm(f"{alpha} is not in M_m")
    return frozenset(n for n in REGULAR if in_Pn(alpha, n))


def standard_tuples(total, max_len=None):
    """All sorted tuples ``(m_1 <= ... <= m_r)`` of finite ``m_i >= 2`` with
    ``sum(1 - 1/m_i) == total``.

    The list is finite: each term is at least 1/2, so ``r <= 2*total``.
    """
    total = as_rational(total)
    limit = floor(2 * total)
    if max_len is not None:
        limit = min(limit, max_len)
    out = []

    def rec(prefix, rem, k, start):
        # choose k more m's >= start with sum(1/m) == rem
        if k == 0:
            if rem == 0:
                out.append(tuple(prefix))
            return
        if rem <= 0:
            return
        # 1/m <= rem, and the k remaining terms (each <= 1/m) must reach rem
        m = max(start, 2, ceil(1 / rem))
        while Fraction(k, m) >= rem:
            prefix.append(m)
            rec(prefix, rem - Fraction(1, m), k - 1, m)
            prefix.pop()
            m += 1

    for r in range(1, limit + 1):
        rec([], r - total, r, 2)
    return sorted(out, key=lambda t: (len(t), t))
