"""Complements of general-position line arrangements on P^2.

A boundary ``B = sum (1 - 1/m_i) L_i`` of lines, no three concurrent, is
n-complementary iff ``deg(-nK - floor((n+1)B)) >= 0``, i.e.

    sum_i floor((n+1)(1 - 1/m_i)) <= 3n.

A non-klt regular complement is searched among line-supported ones: raise
one line to coefficient 1, or add a new general line with coefficient 1.
General position keeps such a configuration lc.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .coeff_sets import REGULAR, as_rational, standard, standard_tuples
from .errors import BadEntry, CapExceeded, NotAmple, NotKlt, OutOfRange, OverDegree

DELTA_LEVEL = Fraction(-6, 7)
DELTA_MAX_DEPTH = 64


def _check(ms):
    ms = tuple(sorted(int(m) for m in ms))
    if any(m < 2 for m in ms):
        raise BadEntry(f"multiplicities must be >= 2: {ms}")
    return ms


def total(ms):
    return sum((standard(m) for m in ms), Fraction(0))


def lower(m, n):
    """``floor((n+1)(1 - 1/m))`` in integer arithmetic."""
    return ((n + 1) * (m - 1)) // m


def p2_degree_ok(ms, n):
    return sum(lower(m, n) for m in ms) <= 3 * n


def _require_ample(ms):
    if total(ms) >= 3:
        raise NotAmple(f"sum of coefficients of {ms} is >= 3")


def p2_min_compl(ms, cap=300):
    ms = _check(ms)
    _require_ample(ms)
    for n in range(1, cap + 1):
        if p2_degree_ok(ms, n):
            return n
    raise CapExceeded(cap)


def p2_nonklt_regular(ms):
    """Smallest regular n admitting a line-supported non-klt n-complement."""
    ms = _check(ms)
    _require_ample(ms)
    for n in REGULAR:
        lows = [lower(m, n) for m in ms]
        s = sum(lows)
        boost = bool(lows) and s - max(lows) + n <= 3 * n
        if boost or s + n <= 3 * n:
            return n
    return None


@dataclass(frozen=True)
class P2Verdict:
    compl: int
    exceptional: bool
    nonklt_regular_n: int | None
    trivial: bool = False

    def text(self):
        s = f"compl={self.compl} exceptional={'true' if self.exceptional else 'false'}"
        if self.nonklt_regular_n is not None:
            s += f" nonklt_regular={self.nonklt_regular_n}"
        if self.trivial:
            s += " trivial=true"
        return s


def p2_classify(ms, cap=300):
    ms = _check(ms)
    t = total(ms)
    if t > 3:
        raise OverDegree(f"sum of coefficients {t} > 3")
    if t == 3:
        return P2Verdict(lcm(*ms), True, None, True)
    nk = p2_nonklt_regular(ms)
    return P2Verdict(p2_min_compl(ms, cap), nk is None, nk)


# ---------------------------------------------------------------------------
# enumeration

def _ample_tuples(r, max_m, first=None):
    """Sorted r-tuples with entries in [2, max_m] and sum(1/m) > r - 3.

    Integer arithmetic: with ``num/den`` the partial sum of 1/m, a branch
    is cut when even k more copies of the current entry cannot exceed r-3.
    """
    need = r - 3
    out = []

    def rec(prefix, num, den, start):
        k = r - len(prefix)
        if k == 0:
            if num > need * den:
                out.append(tuple(prefix))
            return
        lo, hi = (first, first) if (first is not None and not prefix) else (start, max_m)
        for m in range(lo, hi + 1):
            # num/den + k/m > need  <=>  num*m + k*den > need*den*m
            if num * m + k * den <= need * den * m:
                break
            prefix.append(m)
            rec(prefix, num * m + den, den * m, m)
            prefix.pop()

    rec([], 0, 1, 2)
    return out


def _classify_shard(args):
    r, max_m, first, cap = args
    return [(t, p2_classify(t, cap)) for t in _ample_tuples(r, max_m, first)]


def p2_enumerate(mode="ample", max_lines=6, max_m=66, cap=300, workers=1):
    """Classified tuples sorted by ``(compl, tuple)``.

    ``ample``: sizes 1..max_lines, entries <= max_m, sum of coefficients < 3.
    ``trivial``: the finite list with sum exactly 3 (bounds are ignored).
    """
    if mode == "trivial":
        rows = [(t, p2_classify(t, cap)) for t in standard_tuples(3)]
    elif mode == "ample":
        if max_lines < 1 or max_m < 2:
            raise OutOfRange("max_lines must be >= 1 and max_m >= 2")
        shards = [(r, max_m, f, cap) for r in range(1, max_lines + 1) for f in range(2, max_m + 1)]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                parts = list(ex.map(_classify_shard, shards))
        else:
            parts = [_classify_shard(s) for s in shards]
        rows = [row for part in parts for row in part]
    else:
        raise OutOfRange(f"unknown mode {mode!r}")
    rows.sort(key=lambda row: (row[1].compl, row[0]))
    return rows


def format_tuple(t):
    return "(" + ",".join(str(m) for m in t) + ")"


def table_csv(rows):
    """One ``compl,(m1,...,mr),tags`` row per tuple, no header.

    The tuple is written unquoted, so a row has more than three
    comma-separated fields; read it back with :func:`parse_table_row`.
    """
    lines = []
    for t, v in rows:
        tags = "exceptional" if v.exceptional else "nonexceptional"
        if v.trivial:
            tags += ";trivial"
        lines.append(f"{v.compl},{format_tuple(t)},{tags}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_table_row(line):
    head, _, rest = line.partition(",")
    inner, _, tags = rest.partition("),")
    return int(head), tuple(int(x) for x in inner.strip("(").split(",")), tags.split(";")


# ---------------------------------------------------------------------------
# delta invariant

def delta_invariant(coeffs, max_depth=DELTA_MAX_DEPTH):
    """Number of divisors E with ``a(E, B) <= -6/7`` for lines with these coefficients.

    The lines count with ``a = -d``.  Blowing up where two divisors with
    discrepancies x, y cross gives ``x + y + 1``; every other blowup has
    nonnegative discrepancy.  In the klt range a new value exceeds both
    parents, so branches above -6/7 are dropped.
    """
    ds = [as_rational(d) for d in coeffs]
    for d in ds:
        if d < 0:
            raise OutOfRange(f"negative coefficient {d}")
        if d >= 1:
            raise NotKlt(f"coefficient {d} >= 1")
    count = sum(1 for d in ds if -d <= DELTA_LEVEL)

    def crossings(x, y, depth):
        v = x + y + 1
        if v > DELTA_LEVEL:
            return 0
        if v <= -1:
            raise NotKlt("a divisor with discrepancy <= -1")
        if depth >= max_depth:
            raise OutOfRange(f"delta search deeper than {max_depth}")
        return 1 + crossings(x, v, depth + 1) + crossings(v, y, depth + 1)

    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            count += crossings(-ds[i], -ds[j], 1)
    return count


def delta_of_multiplicities(ms):
    return delta_invariant([standard(m) for m in _check(ms)])
