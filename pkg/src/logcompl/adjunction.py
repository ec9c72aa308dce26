"""Coefficients of the different ``Diff_S(B)`` at a point of a curve ``S``.

At a point where ``S`` has index ``m`` and the components ``B_j`` (coefficient
``b_j``) meet ``S`` with local intersection ``n_j``, the coefficient is

    (m - 1)/m + sum_j b_j n_j / m.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coeff_sets import REGULAR, as_rational, classify_coeff, in_Pn
from .errors import OutOfRange, OverUnit


@dataclass(frozen=True)
class DiffInput:
    index_m: int
    terms: tuple = ()  # (b_j, n_j)

    def __post_init__(self):
        if self.index_m < 1:
            raise OutOfRange("index must be positive")
        terms = tuple((as_rational(b), int(n)) for b, n in self.terms)
        for b, n in terms:
            if b < 0 or b > 1:
                raise OutOfRange(f"coefficient {b} not in [0, 1]")
            if n < 1:
                raise OutOfRange("local intersection numbers must be positive")
        object.__setattr__(self, "terms", terms)


@dataclass(frozen=True)
class DiffValue:
    value: Fraction
    over_unit: bool


@dataclass(frozen=True)
class DiffClass:
    coeff_class: object
    value: Fraction
    standard_closure: bool | None
    pn_closure: tuple  # regular n with every input in P_n (so the result is too)


def diff_coeff(inp):
    m = inp.index_m
    v = Fraction(m - 1, m) + sum((b * n for b, n in inp.terms), Fraction(0)) / m
    return DiffValue(v, v > 1)


def diff_class(inp):
    """Classify the coefficient and report which closure facts apply.

    ``standard_closure`` is True when every ``b_j`` is standard (and then the
    result must be standard); ``pn_closure`` lists the regular ``n`` with all
    ``b_j`` in ``P_n``.  Raises ``OverUnit`` for a value above 1.
    """
    d = diff_coeff(inp)
    if d.over_unit:
        raise OverUnit(d.value)
    cls = classify_coeff(d.value)
    bs = [b for b, _ in inp.terms]
    std = all(classify_coeff(b).standard for b in bs)
    if std and not cls.standard:
        raise AssertionError(f"standard inputs gave non-standard {d.value}")
    pn = tuple(n for n in REGULAR if all(in_Pn(b, n) for b in bs))
    for n in pn:
        if not in_Pn(d.value, n):
            raise AssertionError(f"P_{n} inputs gave {d.value} outside P_{n}")
    return DiffClass(cls, d.value, std, pn)
