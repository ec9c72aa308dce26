"""Hirzebruch-Jung continued fractions and toric weighted blowups.

The cyclic quotient ``C^2/Z_m(1, q)`` is resolved by a chain of rational
curves with self-intersections ``-a_1, ..., -a_r`` where

    m/q = a_1 - 1/(a_2 - 1/(... - 1/a_r)),   every a_i >= 2.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadEntry, IndexOutOfRange, NotCoprime, OutOfRange, QuasiReflection


@dataclass(frozen=True)
class CyclicQuot:
    """The quotient datum ``Z_m(1, q)``; ``q`` is reduced into ``[1, m)``."""

    m: int
    q: int

    def __post_init__(self):
        if self.m < 1:
            raise OutOfRange(f"m must be positive, got {self.m}")
        q = 1 if self.m == 1 else self.q % self.m
        object.__setattr__(self, "q", q)

    @property
    def coprime(self):
        return gcd(self.q, self.m) == 1

    def dual(self):
        """The same singularity with the orientation of the chain reversed."""
        return CyclicQuot(self.m, self.m - self.q if self.m > 1 else 1)


@dataclass(frozen=True)
class WeightedBlowup:
    """Weighted blowup of ``C^n/Z_m`` with weights taken as given integers.

    The weights are explicit lifts and are not reduced mod ``m``; the
    blowup depends on the lifts, not only on their residues.
    """

    m: int
    weights: tuple

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        object.__setattr__(self, "weights", w)
        if self.m < 1:
            raise OutOfRange(f"m must be positive, got {self.m}")
        if len(w) < 2:
            raise BadEntry("a weighted blowup needs at least two weights")
        if any(a < 1 for a in w):
            raise BadEntry(f"weights must be positive: {w}")
        g = 0
        for a in w:
            g = gcd(g, a)
        if g != 1:
            raise BadEntry(f"weights {w} have common factor {g}")


def hj_expand(c):
    if not isinstance(c, CyclicQuot):
        c = CyclicQuot(*c)
    if not c.coprime:
        raise NotCoprime(f"gcd({c.q}, {c.m}) != 1")
    if c.m == 1:
        return []
    chain = []
    m, q = c.m, c.q
    while q:
        a = -(-m // q)
        chain.append(a)
        m, q = q, a * q - m
    return chain


def hj_value(chain):
    """Inverse of :func:`hj_expand`: the ``CyclicQuot`` resolved by ``chain``."""
    chain = list(chain)
    if any(a < 2 for a in chain):
        raise BadEntry(f"chain entries must be >= 2: {chain}")
    if not chain:
        return CyclicQuot(1, 1)
    p, q = 1, 0
    for a in reversed(chain):
        p, q = a * p - q, p
    return CyclicQuot(p, q)


def chain_fraction(chain):
    """The value of the continued fraction as a Fraction (``m/q``)."""
    c = hj_value(chain)
    return Fraction(c.m, c.q)


def wblowup_discrepancy(w):
    return Fraction(-1) + Fraction(sum(w.weights), w.m)


def wblowup_strict_mult(w, i):
    if not 0 <= i < len(w.weights):
        raise IndexOutOfRange(f"index {i} out of range for {len(w.weights)} weights")
    return Fraction(w.weights[i], w.m)


def reid_tai_canonical(m, weights):
    """Reid-Tai test for ``C^n/Z_m`` acting with the given weights.

    Canonical iff every nontrivial element ``j`` has age at least one, i.e.
    ``sum(j*w_i mod m) >= m``.  Elements fixing a divisor (exactly one
    nonzero exponent) raise ``QuasiReflection``.
    """
    if m < 1:
        raise OutOfRange(f"m must be positive, got {m}")
    canonical = True
    for j in range(1, m):
        exps = [(j * w) % m for w in weights]
        moving = sum(1 for e in exps if e)
        if moving == 0:
            continue
        if moving == 1:
            raise QuasiReflection(f"element {j} of Z_{m} fixes a divisor")
        if sum(exps) < m:
            canonical = False
    return canonical
