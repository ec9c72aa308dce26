"""Arithmetic checks on del Pezzo surfaces and surface germs.

Fano indices ``r = 2l/H^2 - 1``, Noether's count ``K^2 + rho = 10``,
Nikulin and Keel-McKernan bounds, the toric bound ``sum d_i <= rho + 2``,
log canonical thresholds of quasi-homogeneous curves, and the numeric
constraints of the delta = 2 classification.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .coeff_sets import as_rational
from .errors import BadCase, BadEntry, BelowRange, IndexNotBig, NoReducedCurve, OutOfRange


def fano_index(l, H2):
    if H2 < 1:
        raise OutOfRange("H^2 must be positive")
    if l < 0:
        raise OutOfRange("dim|H| must be nonnegative")
    return Fraction(2 * l, H2) - 1


@dataclass(frozen=True)
class FanoClass:
    tag: str  # P2, Quadric, ConeDegree, Unrepresentable
    degree: int | None = None
    ambiguous: bool = False

    def __str__(self):
        if self.tag == "ConeDegree":
            return f"ConeDegree({self.degree})"
        return self.tag + (" (ambiguous)" if self.ambiguous else "")


def fano_big_index_classify(r):
    """Surfaces with Fano index ``r > 1``: P^2 (r=3), quadrics (r=2), cones (r=1+2/d).

    The plane is the cone of degree 1, and r = 2 covers both the smooth
    quadric and the quadric cone, which ``r`` alone cannot separate;
    ``degree`` carries d in every case.
    """
    r = as_rational(r)
    if r <= 1:
        raise IndexNotBig(f"index {r} <= 1")
    d = 2 / (r - 1)
    if d.denominator != 1:
        return FanoClass("Unrepresentable")
    d = int(d)
    if d == 1:
        return FanoClass("P2", 1)
    if d == 2:
        return FanoClass("Quadric", 2, ambiguous=True)
    return FanoClass("ConeDegree", d)


def noether_rho(K2):
    return 10 - K2


class ToricVerdict(Enum):
    STRICT = "Strict"
    EQUALITY = "Equality"
    VIOLATED = "Violated"


def toric_bound(rho_num, coeffs):
    """Compare ``sum d_i`` with ``rho + 2``; equality marks a toric candidate."""
    if rho_num < 1:
        raise OutOfRange("Picard number must be positive")
    ds = [as_rational(d) for d in coeffs]
    if any(d < 0 or d > 1 for d in ds):
        raise OutOfRange("coefficients must lie in [0, 1]")
    s, bound = sum(ds, Fraction(0)), rho_num + 2
    if s < bound:
        return ToricVerdict.STRICT
    return ToricVerdict.EQUALITY if s == bound else ToricVerdict.VIOLATED


def kem_margin(mP, chiX, chiC):
    """``chi(X) - chi(C) - sum (m_P - 1)/m_P``; the bound holds iff this is >= 0."""
    if any(m < 2 for m in mP):
        raise BadEntry("local orders must be >= 2")
    return chiX - chiC - sum((Fraction(m - 1, m) for m in mP), Fraction(0))


def kem_bound(mP, chiX, chiC):
    return kem_margin(mP, chiX, chiC) >= 0


NIKULIN = {2: 3141, 3: 5317, 4: 17735}


def nikulin_bound(e, variant="standard"):
    """Bound on the Picard number; None where it depends on the unknown eps(e)."""
    if e < 2:
        raise OutOfRange("e must be >= 2")
    if variant == "linear":
        return 352 * e + 1284
    if variant != "standard":
        raise OutOfRange(f"unknown variant {variant!r}")
    return NIKULIN.get(e)


def _monomials(w1, w2, d):
    return [(i, (d - i * w1) // w2) for i in range(d // w1 + 1) if (d - i * w1) % w2 == 0]


def lct_quasihomog(w1, w2, d):
    """Threshold ``min(1, (w1 + w2)/d)`` of a general reduced curve of weighted degree d.

    ``x`` has weight ``w1`` and ``y`` weight ``w2``.
    """
    if w1 < 1 or w2 < 1 or d < 1:
        raise OutOfRange("weights and degree must be positive")
    if gcd(w1, w2) != 1:
        raise BadEntry(f"weights {w1}, {w2} are not coprime")
    mons = _monomials(w1, w2, d)
    # a general member is x^a y^b times distinct binomial factors
    if len(mons) < 2 or min(i for i, _ in mons) > 1 or min(j for _, j in mons) > 1:
        raise NoReducedCurve(f"degree {d} has no reduced member for weights ({w1}, {w2})")
    return min(Fraction(1), Fraction(w1 + w2, d))


def admissible_degree(w1, w2, d):
    try:
        lct_quasihomog(w1, w2, d)
    except NoReducedCurve:
        return False
    return True


LCT_SET = frozenset(Fraction(*p) for p in [(2, 3), (7, 10), (3, 4), (5, 6), (1, 1)])


def lct_set_check(c):
    c = as_rational(c)
    if c < Fraction(2, 3):
        raise BelowRange(f"{c} < 2/3")
    return c in LCT_SET


DELTA2_CASES = ("A21", "A21p", "A22", "A23", "A24", "A25", "A26", "I21", "I22")
_SIX_SEVENTHS = Fraction(6, 7)


def delta2_case_check(case_id, b1, b2):
    """Numeric clause of a delta = 2 case for coefficients ``b1, b2`` in [6/7, 1)."""
    if case_id not in DELTA2_CASES:
        raise BadCase(f"unknown case {case_id!r}")
    b1, b2 = as_rational(b1), as_rational(b2)
    for b in (b1, b2):
        if not _SIX_SEVENTHS <= b < 1:
            raise OutOfRange(f"coefficient {b} not in [6/7, 1)")
    if b1 + b2 >= Fraction(13, 7):
        return False
    if case_id == "A21":
        return b1 + b2 <= Fraction(11, 6)
    if case_id in ("A21p", "I21"):
        return b1 + b2 <= Fraction(7, 4)
    if case_id == "A22":
        return b1 + 2 * b2 <= Fraction(8, 3)
    if case_id == "A23":
        return b1 + 3 * b2 <= Fraction(7, 2)
    if case_id == "A24":
        return 2 * b1 + 3 * b2 <= Fraction(9, 2)
    return b1 == b2 == _SIX_SEVENTHS
