"""n-complements on P^1 and n-semicomplements on nodal rational curves.

On a compact rational component with ``k`` nodes of the total curve, an
n-complement of ``K + D`` is a degree count: ``K`` has degree ``-2`` and each
node contributes ``1`` to ``K + D^+`` restricted to the component, so the
integral divisor ``n D^+`` must have degree ``2n - k n`` with every point
at least its lower bound

    n            if d = 1
    floor((n+1)d) otherwise.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .coeff_sets import as_rational
from .errors import BoundaryOnNode, CapExceeded, NoComplement, OutOfRange, ParseError


def lower_bound(d, n):
    d = as_rational(d)
    if d < 0 or d > 1:
        raise OutOfRange(f"coefficient {d} not in [0, 1]")
    return n if d == 1 else floor((n + 1) * d)


def _fill(residual, n):
    """Split a residual degree into fresh points of weight <= n, full ones first."""
    pts = [n] * (residual // n)
    if residual % n:
        pts.append(residual % n)
    return tuple(pts)


@dataclass(frozen=True)
class ComplementCert:
    n: int
    numerators: tuple
    extra: dict = field(default_factory=dict)  # component id -> fresh point weights
    node_counts: dict = field(default_factory=dict)
    nonklt: bool = False

    @property
    def extra_degree(self):
        return {c: sum(p) for c, p in self.extra.items()}

    def coefficients(self):
        return tuple(Fraction(c, self.n) for c in self.numerators)


def _coeffs(b):
    if isinstance(b, CurveBoundary):
        return [d for _, d, _ in b.points]
    return [as_rational(d) for d in b]


def p1_has_n_complement(b, n):
    """A certificate for an n-complement on P^1, or None when infeasible."""
    ds = _coeffs(b)
    lows = tuple(lower_bound(d, n) for d in ds)
    residual = 2 * n - sum(lows)
    if residual < 0:
        return None
    pts = _fill(residual, n)
    nonklt = n in lows or n in pts
    return ComplementCert(n, lows, {"P1": pts}, {"P1": 0}, nonklt)


def p1_min_complement(b, cap=300):
    for n in range(1, cap + 1):
        if p1_has_n_complement(b, n) is not None:
            return n
    raise CapExceeded(cap)


def p1_is_exceptional(b):
    """True iff every Q-complement is klt.

    A non-klt Q-complement raises one coefficient to 1 (an existing point,
    best the largest, or a new one) keeping total degree <= 2.
    """
    ds = _coeffs(b)
    s = sum(ds, Fraction(0))
    if s > 2:
        raise NoComplement(f"total degree {s} > 2")
    if not ds:
        return False
    return s - max(ds) > 1 and s > 1


# ---------------------------------------------------------------------------
# nodal curves

@dataclass(frozen=True)
class Component:
    id: str
    compact: bool = True
    node_count: int = 0


@dataclass(frozen=True)
class CurveModel:
    components: tuple
    topology: str  # SingleP1, Chain, Cycle, Tree

    @classmethod
    def single_p1(cls):
        return cls((Component("C1"),), "SingleP1")

    @classmethod
    def chain(cls, r, noncompact=()):
        if r < 1:
            raise OutOfRange("a chain needs at least one component")
        if r == 1:
            return cls((Component("C1", 1 not in noncompact),), "SingleP1")
        comps = []
        for i in range(1, r + 1):
            nodes = 1 if i in (1, r) else 2
            comps.append(Component(f"C{i}", i not in noncompact, nodes))
        return cls(tuple(comps), "Chain")

    @classmethod
    def cycle(cls, r):
        if r < 1:
            raise OutOfRange("a cycle needs at least one component")
        return cls(tuple(Component(f"C{i}", True, 2) for i in range(1, r + 1)), "Cycle")

    @classmethod
    def parse(cls, text):
        """``p1``, ``chain:<r>`` or ``cycle:<r>``."""
        kind, _, num = text.partition(":")
        if kind == "p1" and not num:
            return cls.single_p1()
        try:
            r = int(num)
        except ValueError:
            raise ParseError(f"bad curve model {text!r}") from None
        if kind == "chain":
            return cls.chain(r)
        if kind == "cycle":
            return cls.cycle(r)
        raise ParseError(f"bad curve model {text!r}")

    def ends(self):
        ids = [c.id for c in self.components]
        return ids[:1] if len(ids) == 1 or self.topology == "Cycle" else [ids[0], ids[-1]]


@dataclass(frozen=True)
class CurveBoundary:
    points: tuple = ()  # (component id, coefficient, on_node)

    @classmethod
    def on(cls, spec):
        """From ``[(component id, coeff), ...]``."""
        return cls(tuple((c, as_rational(d), False) for c, d in spec))


def nodal_semicomplement(model, b, n):
    ids = {c.id: c for c in model.components}
    per = {c.id: [] for c in model.components}
    for comp, d, on_node in b.points:
        if on_node:
            raise BoundaryOnNode(f"boundary point on a node of {comp}")
        if comp not in ids:
            raise OutOfRange(f"unknown component {comp}")
        per[comp].append(d)
    numerators, extra, nodes = [], {}, {}
    nonklt = False
    for c in model.components:
        lows = [lower_bound(d, n) for d in per[c.id]]
        numerators.extend(lows)
        nodes[c.id] = c.node_count
        if not c.compact:
            continue
        residual = 2 * n - sum(lows) - n * c.node_count
        if residual < 0:
            return None
        extra[c.id] = _fill(residual, n)
        nonklt = nonklt or c.node_count > 0 or n in lows or n in extra[c.id]
    return ComplementCert(n, tuple(numerators), extra, nodes, nonklt)
