"""Degenerate fibers of minimal elliptic fibrations and their dlt models.

A fiber is given by its components, their transverse intersection points
(``e`` lines, counted with multiplicity) and special contacts (``meet``
lines: a tangency of order ``mult`` or a point shared by several
components).  The fiber class ``F = sum n_i C_i`` spans the kernel of the
intersection form, and ``p_a(F) = 1 + K.F/2`` must be 1.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import _linalg
from .errors import BadEntry, Infeasible, MultipleForbidden, NotElliptic, ParseError, Unclassified
from .graph_core import (
    LC_INDEX,
    SING_MARKERS,
    TypeTag,
    iter_directives,
    parse_int,
    parse_vertex,
    split_options,
)


@dataclass(frozen=True)
class FiberComponent:
    id: str
    genus: int = 0
    sing: str = "smooth"
    b: int = 2  # self-intersection is -b

    @property
    def arithmetic_genus(self):
        return self.genus + (0 if self.sing == "smooth" else 1)


@dataclass(frozen=True)
class Meet:
    u: str
    v: str
    mult: int = 1
    shared: str | None = None


@dataclass(frozen=True)
class FiberGraph:
    components: tuple
    edges: tuple = ()  # (u, v, number of transverse points)
    meets: tuple = ()
    m: int = 1

    def __post_init__(self):
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise BadEntry("duplicate component id")
        for c in self.components:
            if c.b < 0 or c.genus < 0 or c.sing not in SING_MARKERS:
                raise BadEntry(f"component {c.id}: bad data")
        for u, v, k in self.edges:
            if u not in ids or v not in ids or u == v or k < 1:
                raise BadEntry(f"bad intersection {u}-{v}")
        for mt in self.meets:
            if mt.u not in ids or mt.v not in ids or mt.u == mt.v or mt.mult < 1:
                raise BadEntry(f"bad meet {mt.u}-{mt.v}")
        if self.m < 1:
            raise BadEntry("fiber multiplicity must be positive")

    @property
    def ids(self):
        return [c.id for c in self.components]

    def intersection_matrix(self):
        idx = {vid: i for i, vid in enumerate(self.ids)}
        M = [[0] * len(idx) for _ in idx]
        for c in self.components:
            M[idx[c.id]][idx[c.id]] = -c.b
        pairs = [(u, v, k) for u, v, k in self.edges] + [(mt.u, mt.v, mt.mult) for mt in self.meets]
        for u, v, k in pairs:
            M[idx[u]][idx[v]] += k
            M[idx[v]][idx[u]] += k
        return M

    def relabel(self, mapping):
        """Same fiber with component ids renamed (used to test id invariance)."""
        comps = tuple(FiberComponent(mapping[c.id], c.genus, c.sing, c.b) for c in self.components)
        edges = tuple((mapping[u], mapping[v], k) for u, v, k in self.edges)
        meets = tuple(Meet(mapping[mt.u], mapping[mt.v], mt.mult, mt.shared) for mt in self.meets)
        return FiberGraph(comps, edges, meets, self.m)


def parse_fiber(text):
    comps, edges, meets = [], [], []
    m = 1
    seen = set()
    for lineno, kw, toks in iter_directives(text):
        if kw == "v":
            v = parse_vertex(lineno, toks, min_b=0)
            if v.id in seen:
                raise ParseError(f"duplicate component {v.id!r}", lineno, toks[0][1])
            seen.add(v.id)
            comps.append(FiberComponent(v.id, v.genus, v.sing, v.b))
        elif kw in ("e", "meet"):
            allowed = {"m"} if kw == "e" else {"mult", "shared"}
            pos, opts = split_options(lineno, toks, allowed)
            if len(pos) != 2:
                raise ParseError(f"expected two component ids after {kw!r}", lineno, 1)
            for tok, col in pos:
                if tok not in seen:
                    raise ParseError(f"unknown component {tok!r}", lineno, col)
            if pos[0][0] == pos[1][0]:
                raise ParseError("a component cannot meet itself", lineno, pos[1][1])
            if kw == "e":
                k = parse_int(opts["m"][0], lineno, opts["m"][1], 1) if "m" in opts else 1
                edges.append((pos[0][0], pos[1][0], k))
            else:
                k = parse_int(opts["mult"][0], lineno, opts["mult"][1], 1) if "mult" in opts else 1
                shared = opts["shared"][0] if "shared" in opts else None
                meets.append(Meet(pos[0][0], pos[1][0], k, shared))
        elif kw == "fiber":
            pos, opts = split_options(lineno, toks, {"m"})
            if pos or "m" not in opts:
                raise ParseError("expected: fiber m=<int>", lineno, 1)
            m = parse_int(opts["m"][0], lineno, opts["m"][1], 1)
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno, 1)
    return FiberGraph(tuple(comps), tuple(edges), tuple(meets), m)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KodairaType:
    kind: str  # I, Istar, II, III, IV, IIstar, IIIstar, IVstar
    b: int | None = None
    m: int = 1

    def __str__(self):
        if self.kind == "I":
            return (f"{self.m}" if self.m > 1 else "") + f"I{self.b}"
        if self.kind == "Istar":
            return f"I{self.b}*"
        return self.kind.replace("star", "*")

    def component_count(self):
        return {
            "I": max(self.b or 0, 1),
            "Istar": (self.b or 0) + 5,
            "II": 1,
            "III": 2,
            "IV": 3,
            "IVstar": 7,
            "IIIstar": 8,
            "IIstar": 9,
        }[self.kind]


def fiber_class(fg):
    """Primitive multiplicities ``n_i`` of the fiber, checking Zariski's lemma."""
    M = fg.intersection_matrix()
    ker = _linalg.nullspace(M)
    if len(ker) != 1:
        raise NotElliptic("intersection form kernel is not one-dimensional")
    v = ker[0]
    if v[0] < 0:
        v = [-x for x in v]
    if any(x <= 0 for x in v):
        raise NotElliptic("kernel vector is not positive")
    sub = [row[1:] for row in M[1:]]
    if not _linalg.is_negative_definite(sub):
        raise NotElliptic("intersection form is not negative semidefinite")
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return dict(zip(fg.ids, (x // g for x in ints)))


def _connected(fg):
    nb = defaultdict(set)
    for u, v, _ in fg.edges:
        nb[u].add(v)
        nb[v].add(u)
    for mt in fg.meets:
        nb[mt.u].add(mt.v)
        nb[mt.v].add(mt.u)
    ids = fg.ids
    seen, stack = {ids[0]}, [ids[0]]
    while stack:
        for w in nb[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(ids), nb


def _tree_type(fg, nb):
    """Star-shaped trees of -2 curves: I_b^*, IV^*, III^*, II^*."""
    degs = {c: len(nb[c]) for c in fg.ids}
    branch = [c for c, d in degs.items() if d >= 3]
    n = len(fg.ids)
    if len(branch) == 1 and degs[branch[0]] == 4 and n == 5:
        return KodairaType("Istar", 0)
    if len(branch) == 1 and degs[branch[0]] == 3:
        center = branch[0]
        lengths = []
        for start in nb[center]:
            prev, cur, k = center, start, 1
            while True:
                nxt = [w for w in nb[cur] if w != prev]
                if not nxt:
                    break
                prev, cur, k = cur, nxt[0], k + 1
            lengths.append(k)
        kind = {(2, 2, 2): "IVstar", (1, 3, 3): "IIIstar", (1, 2, 5): "IIstar"}.get(tuple(sorted(lengths)))
        if kind:
            return KodairaType(kind)
    if len(branch) == 2 and all(degs[c] == 3 for c in branch):
        if all(sum(1 for w in nb[c] if degs[w] == 1) == 2 for c in branch):
            return KodairaType("Istar", n - 5)
    return None


def kodaira_classify(fg):
    if not fg.components:
        raise NotElliptic("empty fiber")
    ok, nb = _connected(fg)
    if not ok:
        raise NotElliptic("fiber is disconnected")
    mults = fiber_class(fg)
    KF = sum(n * (2 * c.arithmetic_genus - 2 + c.b) for c, n in zip(fg.components, mults.values()))
    if KF != 0:
        raise NotElliptic(f"arithmetic genus of the fiber is {1 + Fraction(KF, 2)}")

    t = _shape(fg, nb)
    if t is None:
        raise Unclassified("configuration matches no Kodaira type")
    if fg.m > 1:
        if t.kind != "I":
            raise MultipleForbidden(f"type {t} is simply connected and cannot be multiple")
        t = KodairaType("I", t.b, fg.m)
    return t


def _shape(fg, nb):
    comps = fg.components
    if len(comps) == 1:
        c = comps[0]
        if c.genus == 1 and c.sing == "smooth":
            return KodairaType("I", 0)
        if c.genus == 0 and c.sing == "node":
            return KodairaType("I", 1)
        if c.genus == 0 and c.sing == "cusp":
            return KodairaType("II")
        return None
    if any(c.genus or c.sing != "smooth" or c.b != 2 for c in comps):
        return None
    n = len(comps)
    transverse = sum(k for _, _, k in fg.edges)
    if fg.meets:
        if n == 2 and not fg.edges and len(fg.meets) == 1 and fg.meets[0].mult == 2:
            return KodairaType("III")
        labels = {mt.shared for mt in fg.meets}
        pairs = {frozenset((mt.u, mt.v)) for mt in fg.meets}
        if (n == 3 and not fg.edges and len(fg.meets) == 3 and len(pairs) == 3
                and all(mt.mult == 1 for mt in fg.meets) and len(labels) == 1 and None not in labels):
            return KodairaType("IV")
        return None
    if transverse == n and all(len(nb[c]) == 2 or n == 2 for c in fg.ids):
        return KodairaType("I", n)
    if transverse == n - 1 and all(k == 1 for _, _, k in fg.edges):
        return _tree_type(fg, nb)
    return None


# ---------------------------------------------------------------------------
# dlt models

def dlt_model_map(t):
    """The dlt model class of a fiber type and its complement index."""
    if t.kind == "I":
        tag = TypeTag("Ell") if t.b == 0 else TypeTag("Atilde", t.b if t.b >= 2 else None)
    elif t.kind == "Istar":
        tag = TypeTag("Dtilde", t.b + 4)
    elif t.kind in ("IV", "IVstar"):
        tag = TypeTag("Etilde6")
    elif t.kind in ("III", "IIIstar"):
        tag = TypeTag("Etilde7")
    else:
        tag = TypeTag("Etilde8")
    return tag, lc_index_of_type(tag)


def lc_index_of_type(tag):
    if isinstance(tag, str):
        tag = TypeTag.parse(tag)
    if tag.family not in LC_INDEX:
        raise BadEntry(f"{tag} is not an lc, non-klt type")
    return LC_INDEX[tag.family]


DLT_TABLE = (
    ("dlt", "Ell", "Atilde(n>=1)", "Dtilde(4)", "Dtilde(n>=5)", "Etilde6", "Etilde7", "Etilde8"),
    ("X~=X", "mI0", "mIn(n>=2)", "I0*", "I(n-4)*", "IV*", "III*", "II*"),
    ("X~!=X", "-", "mIb(b<=n-1)", "-", "Ib*(b<=n-5)", "IV", "III", "II"),
    ("compl", "1", "1", "2", "2", "3", "4", "6"),
)


def table_text():
    return "\n".join(",".join(row) for row in DLT_TABLE) + "\n"


def multiple_fiber_solve(r):
    """Solve ``2 - 2/delta = sum (1 - 1/r_i)`` for two or three multiple fibers.

    Returns ``(delta, n)`` with the complement index of the matching row.
    """
    r = sorted(int(x) for x in r)
    if any(x < 2 for x in r):
        raise BadEntry("multiplicities must be >= 2")
    if len(r) not in (2, 3):
        raise Infeasible("only two or three multiple fibers are tabulated")
    s = sum((1 - Fraction(1, x) for x in r), Fraction(0))
    if s >= 2:
        raise Infeasible(f"sum {s} >= 2 leaves no positive delta")
    delta = 2 / (2 - s)
    if len(r) == 2:
        return delta, 1
    if r[:2] == [2, 2]:
        return delta, 2
    return delta, {(2, 3, 3): 3, (2, 3, 4): 4, (2, 3, 5): 6}[tuple(r)]
