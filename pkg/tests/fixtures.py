"""Fixture graphs shared by the unit and acceptance tests."""

from math import gcd

from logcompl.graph_core import DualGraph, Vertex, is_contractible
from logcompl.hj import CyclicQuot, hj_expand
from logcompl.kodaira import FiberComponent, FiberGraph, Meet


def tails(m):
    """All chains resolving Z_m(1, q), read from the end next to the centre."""
    out = []
    for q in range(1, m):
        if gcd(q, m) == 1:
            chain = hj_expand(CyclicQuot(m, q))
            if chain not in out:
                out.append(chain)
    return out


def forks(orders, centers=range(2, 6)):
    """Contractible forks with central -p and tails of the given orders."""
    out = []
    for p in centers:
        for t1 in tails(orders[0]):
            for t2 in tails(orders[1]):
                for t3 in tails(orders[2]):
                    g = DualGraph.fork(p, [t1, t2, t3])
                    if is_contractible(g):
                        out.append(g)
    return out


def d_type_graphs(max_len=3, entries=(2, 3, 4), centers=(2, 3, 4)):
    """Central -p with two -2 leaves and a chain a_1..a_{r-1} (all contractible)."""
    from itertools import product

    out = []
    for p in centers:
        for r in range(1, max_len + 1):
            for chain in product(entries, repeat=r):
                g = DualGraph.fork(p, [[2], [2], list(chain)])
                if is_contractible(g):
                    out.append(g)
    return out


def dtilde(middle):
    """Two forks of -2 leaves joined through the chain ``middle`` (a_0..a_{n-4})."""
    if len(middle) == 1:
        return DualGraph.fork(middle[0], [[2], [2], [2], [2]])
    vs = [Vertex(f"a{i}", b) for i, b in enumerate(middle)]
    vs += [Vertex(x, 2) for x in ("l1", "l2", "r1", "r2")]
    es = [(f"a{i}", f"a{i + 1}", 1) for i in range(len(middle) - 1)]
    last = f"a{len(middle) - 1}"
    es += [("a0", "l1", 1), ("a0", "l2", 1), (last, "r1", 1), (last, "r2", 1)]
    return DualGraph(tuple(vs), tuple(es))


def wheel(bs):
    vs = tuple(Vertex(f"w{i}", b) for i, b in enumerate(bs))
    n = len(bs)
    if n == 2:
        es = (("w0", "w1", 2),)
    else:
        es = tuple((f"w{i}", f"w{(i + 1) % n}", 1) for i in range(n))
    return DualGraph(vs, es)


# --- elliptic fibers -------------------------------------------------------

def fiber_star(arms, m=1):
    comps = [FiberComponent("c")]
    edges = []
    for k, length in enumerate(arms):
        prev = "c"
        for j in range(length):
            vid = f"a{k}_{j}"
            comps.append(FiberComponent(vid))
            edges.append((prev, vid, 1))
            prev = vid
    return FiberGraph(tuple(comps), tuple(edges), (), m)


def fiber_istar(b):
    """I_b^*: two forks of -2 leaves joined by a chain of b+1 curves."""
    if b == 0:
        return fiber_star((1, 1, 1, 1))
    mid = [f"m{i}" for i in range(b + 1)]
    comps = [FiberComponent(x) for x in mid + ["l1", "l2", "r1", "r2"]]
    edges = [(mid[i], mid[i + 1], 1) for i in range(b)]
    edges += [(mid[0], "l1", 1), (mid[0], "l2", 1), (mid[-1], "r1", 1), (mid[-1], "r2", 1)]
    return FiberGraph(tuple(comps), tuple(edges))


def fiber_I(b, m=1):
    if b == 0:
        return FiberGraph((FiberComponent("e", 1, "smooth", 0),), m=m)
    if b == 1:
        return FiberGraph((FiberComponent("e", 0, "node", 0),), m=m)
    comps = tuple(FiberComponent(f"c{i}") for i in range(b))
    if b == 2:
        return FiberGraph(comps, (("c0", "c1", 2),), (), m)
    return FiberGraph(comps, tuple((f"c{i}", f"c{(i + 1) % b}", 1) for i in range(b)), (), m)


def fiber_II():
    return FiberGraph((FiberComponent("e", 0, "cusp", 0),))


def fiber_III():
    return FiberGraph((FiberComponent("a"), FiberComponent("b")), (), (Meet("a", "b", 2),))


def fiber_IV():
    comps = tuple(FiberComponent(x) for x in "abc")
    meets = (Meet("a", "b", 1, "P"), Meet("b", "c", 1, "P"), Meet("a", "c", 1, "P"))
    return FiberGraph(comps, (), meets)


KODAIRA_FIXTURES = (
    [(f"I{b}", fiber_I(b)) for b in range(1, 6)]
    + [(f"I{b}*", fiber_istar(b)) for b in range(0, 4)]
    + [
        ("II", fiber_II()),
        ("III", fiber_III()),
        ("IV", fiber_IV()),
        ("II*", fiber_star((1, 2, 5))),
        ("III*", fiber_star((1, 3, 3))),
        ("IV*", fiber_star((2, 2, 2))),
    ]
)
