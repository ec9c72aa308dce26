"""Weighted dual graphs of surface resolutions.

A vertex is an exceptional curve ``E_i`` with ``E_i^2 = -b``, geometric
genus and a singularity marker (``node``/``cusp`` raise the arithmetic
genus by one).  Boundary attachments record strict transforms ``C_k`` of
boundary components with coefficient ``d_k`` meeting ``E_i`` with local
intersection number ``mult``.

Discrepancies solve the Mumford pullback system obtained by intersecting
``K + D' = f^*(K + D) + sum a_j E_j`` with every ``E_i``::

    sum_j (E_i.E_j) a_j = 2 p_a(E_i) - 2 + b_i + sum_k d_k (C_k.E_i)
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm

from . import _linalg
from .coeff_sets import as_rational, format_rational, parse_rational
from .errors import (
    BadEntry,
    NotContractible,
    NotForkType,
    OutOfRange,
    ParseError,
    SingularComponent,
    Unclassified,
)
from .hj import hj_value

SING_MARKERS = ("smooth", "node", "cusp")


@dataclass(frozen=True)
class Vertex:
    id: str
    b: int
    genus: int = 0
    sing: str = "smooth"

    @property
    def self_int(self):
        return -self.b

    @property
    def arithmetic_genus(self):
        return self.genus + (0 if self.sing == "smooth" else 1)


@dataclass(frozen=True)
class Attachment:
    vertex: str
    coeff: Fraction
    mult: int = 1


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple = ()
    edges: tuple = ()  # (u, v, multiplicity), u < v in vertex order, merged
    attachments: tuple = ()

    def __post_init__(self):
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise BadEntry("duplicate vertex id")
        pos = {v: i for i, v in enumerate(ids)}
        for v in self.vertices:
            if v.b < 1:
                raise BadEntry(f"vertex {v.id}: b must be >= 1")
            if v.genus < 0 or v.sing not in SING_MARKERS:
                raise BadEntry(f"vertex {v.id}: bad genus or marker")
        merged = Counter()
        for u, w, k in self.edges:
            if u not in pos or w not in pos:
                raise BadEntry(f"edge {u}-{w} names an unknown vertex")
            if u == w:
                raise BadEntry(f"self-loop at {u}; encode a nodal curve with sing=node")
            if k < 1:
                raise BadEntry(f"edge {u}-{w}: multiplicity must be >= 1")
            key = (u, w) if pos[u] < pos[w] else (w, u)
            merged[key] += k
        edges = tuple((u, w, merged[(u, w)]) for (u, w) in sorted(merged, key=lambda e: (pos[e[0]], pos[e[1]])))
        object.__setattr__(self, "edges", edges)
        atts = []
        for a in self.attachments:
            c = as_rational(a.coeff)
            if a.vertex not in pos:
                raise BadEntry(f"attachment on unknown vertex {a.vertex}")
            if c < 0 or c > 1:
                raise OutOfRange(f"boundary coefficient {c} not in [0, 1]")
            if a.mult < 1:
                raise BadEntry("attachment multiplicity must be >= 1")
            atts.append(Attachment(a.vertex, c, a.mult))
        object.__setattr__(self, "attachments", tuple(atts))

    @classmethod
    def chain(cls, bs, attachments=(), prefix="E"):
        """Chain ``E1 - E2 - ...`` with ``E_i^2 = -bs[i]``.

        ``attachments`` is a sequence of ``(index, coeff[, mult])``.
        """
        vs = tuple(Vertex(f"{prefix}{i + 1}", b) for i, b in enumerate(bs))
        es = tuple((vs[i].id, vs[i + 1].id, 1) for i in range(len(vs) - 1))
        atts = tuple(Attachment(vs[a[0]].id, as_rational(a[1]), *a[2:]) for a in attachments)
        return cls(vs, es, atts)

    @classmethod
    def fork(cls, center, arms):
        """Star with central ``-center`` curve and chains ``arms`` read outward."""
        vs = [Vertex("E0", center)]
        es = []
        for k, arm in enumerate(arms):
            prev = "E0"
            for j, b in enumerate(arm):
                vid = f"E{k + 1}_{j + 1}"
                vs.append(Vertex(vid, b))
                es.append((prev, vid, 1))
                prev = vid
        return cls(tuple(vs), tuple(es))

    @property
    def ids(self):
        return [v.id for v in self.vertices]

    def vertex(self, vid):
        return next(v for v in self.vertices if v.id == vid)

    def neighbors(self):
        nb = defaultdict(list)
        for u, w, _ in self.edges:
            nb[u].append(w)
            nb[w].append(u)
        return nb

    def degree(self, vid):
        return sum(k for u, w, k in self.edges if vid in (u, w))

    def is_connected(self):
        if not self.vertices:
            return True
        nb = self.neighbors()
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            for w in nb[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


# ---------------------------------------------------------------------------
# text format

def iter_directives(text):
    """Yield ``(lineno, keyword, [(token, column), ...])`` for non-blank lines."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((part, col + 1))
            col += len(part)
        if toks:
            yield lineno, toks[0][0], toks[1:]


def split_options(lineno, toks, allowed):
    """Split ``key=value`` tokens from positional ones; unknown keys are errors."""
    pos, opts = [], {}
    for tok, col in toks:
        if "=" in tok:
            key, _, val = tok.partition("=")
            if key not in allowed:
                raise ParseError(f"unknown option {key!r}", lineno, col)
            if key in opts:
                raise ParseError(f"repeated option {key!r}", lineno, col)
            opts[key] = (val, col)
        else:
            if opts:
                raise ParseError(f"positional argument {tok!r} after options", lineno, col)
            pos.append((tok, col))
    return pos, opts


def parse_int(val, lineno, col, minimum=None):
    try:
        x = int(val)
    except ValueError:
        raise ParseError(f"expected an integer, got {val!r}", lineno, col) from None
    if minimum is not None and x < minimum:
        raise ParseError(f"value {x} below minimum {minimum}", lineno, col)
    return x


def parse_vertex(lineno, toks, min_b=1):
    pos, opts = split_options(lineno, toks, {"b", "g", "sing"})
    if len(pos) != 1:
        raise ParseError("expected: v <id> b=<int> [g=<int>] [sing=node|cusp]", lineno, 1)
    if "b" not in opts:
        raise ParseError("missing b=", lineno, pos[0][1])
    b = parse_int(opts["b"][0], lineno, opts["b"][1], min_b)
    g = parse_int(opts["g"][0], lineno, opts["g"][1], 0) if "g" in opts else 0
    sing = "smooth"
    if "sing" in opts:
        sing, col = opts["sing"]
        if sing not in SING_MARKERS:
            raise ParseError(f"bad marker {sing!r}", lineno, col)
    return Vertex(pos[0][0], b, g, sing)


def parse_graph(text):
    """Parse the ``v``/``e``/``c`` directive format into a :class:`DualGraph`."""
    vertices, edges, atts = [], [], []
    seen = {}
    for lineno, kw, toks in iter_directives(text):
        if kw == "v":
            v = parse_vertex(lineno, toks)
            if v.id in seen:
                raise ParseError(f"duplicate vertex {v.id!r}", lineno, toks[0][1])
            seen[v.id] = lineno
            vertices.append(v)
        elif kw == "e":
            pos, opts = split_options(lineno, toks, {"m"})
            if len(pos) != 2:
                raise ParseError("expected: e <id1> <id2> [m=<int>]", lineno, 1)
            for tok, col in pos:
                if tok not in seen:
                    raise ParseError(f"unknown vertex {tok!r}", lineno, col)
            if pos[0][0] == pos[1][0]:
                raise ParseError("self-loop; use sing=node", lineno, pos[1][1])
            m = parse_int(opts["m"][0], lineno, opts["m"][1], 1) if "m" in opts else 1
            edges.append((pos[0][0], pos[1][0], m))
        elif kw == "c":
            pos, opts = split_options(lineno, toks, {"d", "m"})
            if len(pos) != 1 or "d" not in opts:
                raise ParseError("expected: c <id> d=<p/q> [m=<int>]", lineno, 1)
            if pos[0][0] not in seen:
                raise ParseError(f"unknown vertex {pos[0][0]!r}", lineno, pos[0][1])
            val, col = opts["d"]
            try:
                d = parse_rational(val)
            except ParseError:
                raise ParseError(f"bad coefficient {val!r}", lineno, col) from None
            if d < 0 or d > 1:
                raise ParseError(f"coefficient {val} not in [0, 1]", lineno, col)
            m = parse_int(opts["m"][0], lineno, opts["m"][1], 1) if "m" in opts else 1
            atts.append(Attachment(pos[0][0], d, m))
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno, 1)
    return DualGraph(tuple(vertices), tuple(edges), tuple(atts))


# ---------------------------------------------------------------------------
# matrices and discrepancies

def intersection_matrix(g):
    idx = {vid: i for i, vid in enumerate(g.ids)}
    n = len(idx)
    M = [[0] * n for _ in range(n)]
    for v in g.vertices:
        M[idx[v.id]][idx[v.id]] = -v.b
    for u, w, k in g.edges:
        M[idx[u]][idx[w]] += k
        M[idx[w]][idx[u]] += k
    return M


def is_contractible(g):
    return _linalg.is_negative_definite(intersection_matrix(g))


@dataclass(frozen=True)
class PullbackData:
    discrepancies: dict

    def min(self):
        return min(self.discrepancies.values()) if self.discrepancies else None


def _solve_discrepancies(g):
    if not is_contractible(g):
        raise NotContractible("intersection matrix is not negative definite")
    rhs = {v.id: Fraction(2 * v.arithmetic_genus - 2 + v.b) for v in g.vertices}
    for a in g.attachments:
        rhs[a.vertex] += a.coeff * a.mult
    sol = _linalg.solve(intersection_matrix(g), [rhs[i] for i in g.ids])
    return PullbackData(dict(zip(g.ids, sol)))


def discrepancies(g):
    for v in g.vertices:
        if v.sing != "smooth":
            raise SingularComponent(f"vertex {v.id} is marked {v.sing}")
    return _solve_discrepancies(g)


# ---------------------------------------------------------------------------
# classification

class Grade(Enum):
    TERMINAL = "terminal"
    CANONICAL = "canonical"
    KLT = "klt"
    PLT = "plt"
    LC = "lc"
    NOT_LC = "notlc"


@dataclass(frozen=True)
class TypeTag:
    family: str  # A, D, E6, E7, E8, Ell, Atilde, Dtilde, Etilde6, Etilde7, Etilde8
    n: int | None = None

    def __str__(self):
        return self.family if self.n is None else f"{self.family}({self.n})"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if "(" in text and text.endswith(")"):
            fam, _, num = text[:-1].partition("(")
            return cls(fam, int(num))
        return cls(text)


LC_INDEX = {"Ell": 1, "Atilde": 1, "Dtilde": 2, "Etilde6": 3, "Etilde7": 4, "Etilde8": 6}
EXCEPTIONAL = {"E6", "E7", "E8", "Ell", "Etilde6", "Etilde7", "Etilde8"}

_FORK_TYPES = {
    (2, 3, 3): "E6",
    (2, 3, 4): "E7",
    (2, 3, 5): "E8",
    (3, 3, 3): "Etilde6",
    (2, 4, 4): "Etilde7",
    (2, 3, 6): "Etilde8",
}


@dataclass(frozen=True)
class SingClass:
    grade: Grade
    mindisc: Fraction | None
    type_tag: TypeTag | None = None
    index: int | None = None
    numerical_index: bool = False
    eps_lt: bool | None = None
    pullback: PullbackData | None = None
    notes: tuple = field(default_factory=tuple)

    @property
    def eps_grade(self):
        return None if self.mindisc is None else 1 + self.mindisc


def _valuations(g, pb):
    """Discrepancies of the curves on the resolution and of the first blowups.

    Beyond the ``E_i`` themselves this covers blowups of intersection
    points of exceptional curves, of tangency points with boundary curves,
    and of nodes and cusps.  Blowing up anything else only raises values
    once all of these are >= -1, so their minimum decides the grade.
    """
    a = pb.discrepancies
    vals = list(a.values())
    for u, w, _ in g.edges:
        vals.append(1 + a[u] + a[w])
    for att in g.attachments:
        x = 1 + a[att.vertex] - att.coeff
        vals.extend(k * x for k in range(1, att.mult + 1))
    for v in g.vertices:
        if v.sing == "node":
            vals.append(1 + 2 * a[v.id])
        elif v.sing == "cusp":
            ai = a[v.id]
            vals.extend([1 + 2 * ai, 2 + 3 * ai, 4 + 6 * ai])
    return vals


def _arms(g, center):
    """Chains hanging off ``center`` as lists of b values read outward."""
    nb = g.neighbors()
    arms = []
    for start in nb[center]:
        arm, prev, cur = [], center, start
        while True:
            arm.append(g.vertex(cur).b)
            nxt = [w for w in nb[cur] if w != prev]
            if len(nxt) != 1:
                if nxt:
                    return None
                break
            prev, cur = cur, nxt[0]
        arms.append(arm)
    return arms


def recognize(g):
    """Shape recognition of a minimal, connected, boundary-free graph."""
    vs = g.vertices
    if not vs or not g.is_connected():
        return None
    if len(vs) == 1:
        v = vs[0]
        if v.genus == 1 and v.sing == "smooth":
            return TypeTag("Ell")
        if v.genus == 0 and v.sing == "node":
            return TypeTag("Atilde", 1)
        if v.genus == 0 and v.sing == "smooth":
            return TypeTag("A", 1)
        return None
    if any(v.genus or v.sing != "smooth" for v in vs):
        return None
    n = len(vs)
    nedges = sum(k for _, _, k in g.edges)
    degs = {v.id: g.degree(v.id) for v in vs}
    if nedges == n and all(d == 2 for d in degs.values()):
        return TypeTag("Atilde", n)
    if nedges != n - 1 or any(k > 1 for _, _, k in g.edges):
        return None
    branch = [vid for vid, d in degs.items() if d >= 3]
    if not branch:
        return TypeTag("A", n)
    if len(branch) == 1:
        c = branch[0]
        arms = _arms(g, c)
        if degs[c] == 4:
            if all(arm == [2] for arm in arms):
                return TypeTag("Dtilde", 4)
            return None
        if degs[c] != 3 or arms is None:
            return None
        orders = tuple(sorted(hj_value(arm).m for arm in arms))
        if orders[:2] == (2, 2):
            return TypeTag("D", n)
        fam = _FORK_TYPES.get(orders)
        return TypeTag(fam) if fam else None
    if len(branch) == 2 and all(degs[c] == 3 for c in branch):
        nb = g.neighbors()
        for c in branch:
            leaves = [w for w in nb[c] if degs[w] == 1 and g.vertex(w).b == 2]
            if len(leaves) < 2:
                return None
        return TypeTag("Dtilde", n - 1)
    return None


def _is_minimal(g):
    return all(v.b >= 2 or v.genus > 0 or v.sing != "smooth" for v in g.vertices)


def classify(g, eps=None):
    if not g.vertices:
        eps_lt = None if eps is None else True
        return SingClass(Grade.TERMINAL, None, None, 1, False, eps_lt, PullbackData({}), ("smooth point",))
    pb = _solve_discrepancies(g)
    mind = min(_valuations(g, pb))
    reduced = any(a.coeff == 1 for a in g.attachments)
    if mind < -1:
        grade = Grade.NOT_LC
    elif mind == -1:
        grade = Grade.LC
    elif reduced:
        grade = Grade.PLT
    elif mind > 0:
        grade = Grade.TERMINAL
    elif mind == 0:
        grade = Grade.CANONICAL
    else:
        grade = Grade.KLT

    notes = []
    tag = None
    if g.attachments:
        notes.append("BoundaryPresent")
    elif not _is_minimal(g):
        notes.append("MinimalityRequired")
    else:
        tag = recognize(g)
        if tag is None:
            notes.append("Unrecognized")

    if tag is not None and tag.family in LC_INDEX and grade is Grade.LC:
        index, numerical = LC_INDEX[tag.family], False
    else:
        dens = [x.denominator for x in pb.discrepancies.values()]
        dens += [a.coeff.denominator for a in g.attachments]
        index, numerical = lcm(*dens), True
        notes.append("numerical index")

    if grade in (Grade.PLT, Grade.LC):
        lc_curves = [vid for vid, x in pb.discrepancies.items() if x == -1]
        if all(g.vertex(vid).sing == "smooth" for vid in lc_curves):
            notes.append("dlt-candidate")

    eps_lt = None
    if eps is not None:
        eps_lt = mind > -1 + as_rational(eps)
    return SingClass(grade, mind, tag, index, numerical, eps_lt, pb, tuple(notes))


def is_exceptional_sing(c):
    if c.type_tag is None:
        raise Unclassified("no type tag")
    t = c.type_tag
    return t.family in EXCEPTIONAL or (t.family == "Dtilde" and t.n == 4)


def multiplicity_chain(chain):
    chain = list(chain)
    if any(a < 2 for a in chain):
        raise BadEntry(f"chain entries must be >= 2: {chain}")
    if not chain:
        return 1
    return 2 + sum(a - 2 for a in chain)


def eps_lt_bound_check(g, eps):
    """``p < 2/eps`` for the central ``-p`` curve of a fork.

    Intersecting the pullback with the central curve gives
    ``p(1 + a_0) <= 2``, so an eps-lt fork must have ``p eps < 2``.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise OutOfRange("eps must be positive")
    nedges = sum(k for _, _, k in g.edges)
    degs = [g.degree(v.id) for v in g.vertices]
    is_tree = g.is_connected() and nedges == len(g.vertices) - 1
    if not is_tree or degs.count(3) != 1 or max(degs) > 3:
        raise NotForkType("expected a tree with a single vertex of degree 3")
    center = g.vertices[degs.index(3)]
    return center.b * eps < 2


# ---------------------------------------------------------------------------
# output

def format_class(c):
    """Text rendering used by the CLI."""
    first = f"grade={c.grade.value} type={c.type_tag if c.type_tag else 'none'} mindisc={format_rational(c.mindisc) if c.mindisc is not None else 'none'}"
    lines = [first]
    lines.append(f"eps_grade={format_rational(c.eps_grade) if c.eps_grade is not None else 'none'}")
    idx = f"index={c.index}"
    if c.numerical_index:
        idx += " (numerical index)"
    lines.append(idx)
    if c.eps_lt is not None:
        lines.append(f"eps_lt={'true' if c.eps_lt else 'false'}")
    extra = [n for n in c.notes if n != "numerical index"]
    if extra:
        lines.append("notes=" + ",".join(extra))
    return "\n".join(lines)
