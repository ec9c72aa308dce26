"""Command-line front end: ``logcompl <command> ...``.

Exit status is 0 on success, 1 on a domain error (the error class name is
written to stderr) and 2 on malformed input or usage errors.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import adjunction, coeff_sets, complements_curves as cc, geometry_checks as gc
from . import graph_core, hj, kodaira, p2
from .coeff_sets import format_rational, parse_rational
from .errors import DomainError, ParseError


def jsonable(x):
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _ints(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _rats(text):
    return [parse_rational(t) for t in text.split(",") if t.strip()]


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


class Out:
    def __init__(self, args, stream):
        self.fmt = "json" if getattr(args, "json", False) else "csv" if getattr(args, "csv", False) else "text"
        self.stream = stream

    def line(self, text=""):
        self.stream.write(text + "\n")

    def emit(self, text, data):
        if self.fmt == "json":
            self.line(json.dumps(jsonable(data), sort_keys=True))
        else:
            self.line(text)


# ---------------------------------------------------------------------------
# commands

def cmd_coeff(args, out):
    a = parse_rational(args.alpha)
    c = coeff_sets.classify_coeff(a)
    w = coeff_sets.msm_witness(a)
    regular = sorted(coeff_sets.mm_in_regular_pn(a)) if c.in_mm else []
    text = f"class={c} witness={w if w is not None else 'none'} regular_pn={','.join(map(str, regular)) or 'none'}"
    out.emit(text, {"alpha": a, "class": str(c), "witness": w, "regular_pn": regular})


def cmd_hj(args, out):
    if args.action == "expand":
        m, sep, q = args.value.partition("/")
        try:
            c = hj.CyclicQuot(int(m), int(q) if sep else 1)
        except ValueError:
            raise ParseError(f"expected m/q, got {args.value!r}") from None
        chain = hj.hj_expand(c)
        out.emit(",".join(map(str, chain)), {"chain": chain})
    else:
        c = hj.hj_value(_ints(args.value))
        out.emit(format_rational(Fraction(c.m, c.q)), {"m": c.m, "q": c.q})


def cmd_wblow(args, out):
    w = hj.WeightedBlowup(args.m, tuple(_ints(args.weights)))
    a = hj.wblowup_discrepancy(w)
    mults = [hj.wblowup_strict_mult(w, i) for i in range(len(w.weights))]
    text = f"discrepancy={format_rational(a)}\nstrict_mult={','.join(map(format_rational, mults))}"
    out.emit(text, {"discrepancy": a, "strict_mult": mults})


def cmd_reidtai(args, out):
    ok = hj.reid_tai_canonical(args.m, _ints(args.weights))
    out.emit(f"canonical={'true' if ok else 'false'}", {"canonical": ok})


def cmd_graph(args, out):
    g = graph_core.parse_graph(_read(args.file))
    if args.action == "discrep":
        pb = graph_core.discrepancies(g)
        text = "\n".join(f"{k} {format_rational(v)}" for k, v in pb.discrepancies.items())
        out.emit(text, {"discrepancies": pb.discrepancies})
        return
    eps = parse_rational(args.eps) if args.eps else None
    c = graph_core.classify(g, eps)
    data = {
        "grade": c.grade.value,
        "type": str(c.type_tag) if c.type_tag else None,
        "mindisc": c.mindisc,
        "eps_grade": c.eps_grade,
        "index": c.index,
        "numerical_index": c.numerical_index,
        "eps_lt": c.eps_lt,
        "exceptional": graph_core.is_exceptional_sing(c) if c.type_tag else None,
        "discrepancies": c.pullback.discrepancies,
        "notes": list(c.notes),
    }
    out.emit(graph_core.format_class(c), data)


def cmd_diff(args, out):
    terms = []
    for t in args.term or []:
        b, sep, n = t.partition(":")
        terms.append((parse_rational(b), int(n) if sep else 1))
    inp = adjunction.DiffInput(args.index, tuple(terms))
    d = adjunction.diff_coeff(inp)
    data = {"value": d.value, "over_unit": d.over_unit}
    text = f"value={format_rational(d.value)}"
    if d.over_unit:
        text += " over_unit=true"
    else:
        dc = adjunction.diff_class(inp)
        data["class"] = str(dc.coeff_class)
        text += f" class={dc.coeff_class}"
    out.emit(text, data)


def _cert_text(cert):
    nums = ",".join(map(str, cert.numerators))
    extra = ";".join(f"{k}:{','.join(map(str, v)) or '-'}" for k, v in cert.extra.items())
    return f"n={cert.n} numerators={nums or '-'} extra={extra} nonklt={'true' if cert.nonklt else 'false'}"


def _cert_data(cert):
    return {"n": cert.n, "numerators": list(cert.numerators), "extra": {k: list(v) for k, v in cert.extra.items()}, "nonklt": cert.nonklt}


def cmd_p1(args, out):
    ds = _rats(args.coeffs) if args.coeffs else []
    lines, data = [], {}
    if args.n is not None:
        cert = cc.p1_has_n_complement(ds, args.n)
        lines.append(_cert_text(cert) if cert else f"n={args.n} none")
        data["complement"] = _cert_data(cert) if cert else None
    if args.min:
        n = cc.p1_min_complement(ds, args.cap)
        lines.append(f"compl={n}")
        data["compl"] = n
    if args.exceptional:
        e = cc.p1_is_exceptional(ds)
        lines.append(f"exceptional={'true' if e else 'false'}")
        data["exceptional"] = e
    if not lines:
        raise ParseError("give --n, --min or --exceptional")
    out.emit("\n".join(lines), data)


def cmd_nodal(args, out):
    model = cc.CurveModel.parse(args.model)
    pts = []
    ends = _rats(args.ends) if args.ends else []
    for comp in model.ends():
        pts.extend((comp, d) for d in ends)
    for spec in args.point or []:
        comp, _, d = spec.partition(":")
        pts.append((comp, parse_rational(d)))
    cert = cc.nodal_semicomplement(model, cc.CurveBoundary.on(pts), args.n)
    out.emit(_cert_text(cert) if cert else f"n={args.n} none", {"complement": _cert_data(cert) if cert else None})


def _verdict_data(t, v):
    return {"tuple": list(t), "compl": v.compl, "exceptional": v.exceptional,
            "nonklt_regular": v.nonklt_regular_n, "trivial": v.trivial}


def cmd_p2(args, out):
    if args.action == "classify":
        t = tuple(sorted(_ints(args.tuple)))
        v = p2.p2_classify(t, args.cap)
        out.emit(v.text(), _verdict_data(t, v))
    elif args.action == "delta":
        toks = [s for s in args.tuple.split(",") if s.strip()]
        ds = [parse_rational(s) if "/" in s else coeff_sets.standard(int(s)) for s in toks]
        n = p2.delta_invariant(ds)
        out.emit(f"delta={n}", {"delta": n})
    else:
        rows = p2.p2_enumerate(args.mode, args.max_lines, args.max_m, args.cap, args.workers)
        if out.fmt == "json":
            out.line(json.dumps([_verdict_data(t, v) for t, v in rows], sort_keys=True))
        elif out.fmt == "csv":
            out.stream.write(p2.table_csv(rows))
        else:
            for t, v in rows:
                out.line(f"{p2.format_tuple(t)} {v.text()}")


def cmd_fano(args, out):
    r = gc.fano_index(args.l, args.h2)
    text = f"r={format_rational(r)}"
    data = {"r": r}
    if r > 1:
        fc = gc.fano_big_index_classify(r)
        text += f" class={fc}"
        data.update({"class": fc.tag, "degree": fc.degree, "ambiguous": fc.ambiguous})
    out.emit(text, data)


def cmd_bounds(args, out):
    if args.kind == "nikulin":
        b = gc.nikulin_bound(args.e, args.variant)
        out.emit(f"bound={b if b is not None else 'none'}", {"bound": b})
    elif args.kind == "kem":
        margin = gc.kem_margin(_ints(args.mp), args.chix, args.chic)
        out.emit(f"holds={'true' if margin >= 0 else 'false'} margin={format_rational(margin)}",
                 {"holds": margin >= 0, "margin": margin})
    elif args.kind == "toric":
        v = gc.toric_bound(args.rho, _rats(args.coeffs))
        text = v.value + (" (toric candidate)" if v is gc.ToricVerdict.EQUALITY else "")
        out.emit(text, {"verdict": v.value})
    else:
        rho = gc.noether_rho(args.k2)
        out.emit(f"rho={rho}", {"rho": rho})


def cmd_lct(args, out):
    w = _ints(args.weights)
    if len(w) != 2:
        raise ParseError("--weights takes two integers")
    c = gc.lct_quasihomog(w[0], w[1], args.deg)
    in_s = c >= Fraction(2, 3) and gc.lct_set_check(c)
    out.emit(f"lct={format_rational(c)} in_S={'true' if in_s else 'false'}", {"lct": c, "in_S": in_s})


def cmd_delta2(args, out):
    ok = gc.delta2_case_check(args.case, parse_rational(args.b1), parse_rational(args.b2))
    out.emit(f"holds={'true' if ok else 'false'}", {"holds": ok})


def cmd_kodaira(args, out):
    if args.action == "table":
        if out.fmt == "json":
            out.line(json.dumps([list(r) for r in kodaira.DLT_TABLE]))
        else:
            out.stream.write(kodaira.table_text())
    elif args.action == "multifiber":
        delta, n = kodaira.multiple_fiber_solve(_ints(args.arg))
        out.emit(f"delta={format_rational(delta)} n={n}", {"delta": delta, "n": n})
    else:
        t = kodaira.kodaira_classify(kodaira.parse_fiber(_read(args.arg)))
        tag, n = kodaira.dlt_model_map(t)
        out.emit(f"type={t} dlt={tag} compl={n}", {"type": str(t), "dlt": str(tag), "compl": n})


def emit_tables(out_dir, max_lines=6, max_m=66, cap=300, workers=1):
    """Write the P^2 tables and the fiber/dlt-model table; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    files = {
        "p2_ample.csv": p2.table_csv(p2.p2_enumerate("ample", max_lines, max_m, cap, workers)),
        "p2_trivial.csv": p2.table_csv(p2.p2_enumerate("trivial", cap=cap)),
        "kodaira.csv": kodaira.table_text(),
    }
    paths = []
    for name, body in files.items():
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(body)
        paths.append(path)
    return paths


def cmd_tables(args, out):
    for path in emit_tables(args.out, args.max_lines, args.max_m, args.cap, args.workers):
        out.line(path)


# ---------------------------------------------------------------------------

def _format_options(parser, default):
    parser.add_argument("--json", action="store_true", default=default(False), help="JSON output")
    parser.add_argument("--csv", action="store_true", default=default(False), help="CSV output (tables)")
    parser.add_argument("--cap", type=int, default=default(300), help="bound for minimal-index searches")


def build_parser():
    # the options are accepted before or after the command; the copies on
    # the subparsers must not carry defaults or they would reset the flags
    fmt = argparse.ArgumentParser(add_help=False)
    _format_options(fmt, lambda _: argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="logcompl", description=__doc__.splitlines()[0])
    _format_options(ap, lambda d: d)
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, **kw):
        p = sub.add_parser(name, parents=[fmt], **kw)
        p.set_defaults(func=func)
        return p

    p = add("coeff", cmd_coeff, help="classify a coefficient")
    p.add_argument("alpha")

    p = add("hj", cmd_hj, help="Hirzebruch-Jung continued fractions")
    p.add_argument("action", choices=["expand", "value"])
    p.add_argument("value", help="m/q for expand, a1,a2,... for value")

    p = add("wblow", cmd_wblow, help="weighted blowup discrepancy")
    p.add_argument("m", type=int)
    p.add_argument("weights")

    p = add("reidtai", cmd_reidtai, help="Reid-Tai canonicity test")
    p.add_argument("m", type=int)
    p.add_argument("weights")

    p = add("graph", cmd_graph, help="dual graph discrepancies and classification")
    p.add_argument("action", choices=["classify", "discrep"])
    p.add_argument("file")
    p.add_argument("--eps")

    p = add("diff", cmd_diff, help="coefficient of the different")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--term", action="append", help="b:n, repeatable")

    p = add("p1", cmd_p1, help="complements on P^1")
    p.add_argument("--coeffs", default="")
    p.add_argument("--n", type=int)
    p.add_argument("--min", action="store_true")
    p.add_argument("--exceptional", action="store_true")

    p = add("nodal", cmd_nodal, help="semicomplements on nodal curves")
    p.add_argument("--model", required=True, help="p1, chain:<r> or cycle:<r>")
    p.add_argument("--ends", help="coefficients placed on each end component")
    p.add_argument("--point", action="append", help="component:coeff, repeatable")
    p.add_argument("--n", type=int, required=True)

    p = add("p2", cmd_p2, help="line arrangements on P^2")
    p.add_argument("action", choices=["classify", "enum", "delta"])
    p.add_argument("tuple", nargs="?", default="")
    p.add_argument("--mode", choices=["ample", "trivial"], default="ample")
    p.add_argument("--max-lines", type=int, default=6)
    p.add_argument("--max-m", type=int, default=66)
    p.add_argument("--workers", type=int, default=1)

    p = add("fano", cmd_fano, help="Fano index from dim|H| and H^2")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--h2", type=int, required=True)

    p = add("bounds", cmd_bounds, help="Nikulin, Keel-McKernan, toric and Noether checks")
    p.add_argument("kind", choices=["nikulin", "kem", "toric", "noether"])
    p.add_argument("--e", type=int)
    p.add_argument("--variant", choices=["standard", "linear"], default="standard")
    p.add_argument("--mp", default="")
    p.add_argument("--chix", type=int)
    p.add_argument("--chic", type=int)
    p.add_argument("--rho", type=int)
    p.add_argument("--coeffs", default="")
    p.add_argument("--k2", type=int)

    p = add("lct", cmd_lct, help="threshold of a quasi-homogeneous curve")
    p.add_argument("--weights", required=True)
    p.add_argument("--deg", type=int, required=True)

    p = add("delta2", cmd_delta2, help="numeric clause of a delta=2 case")
    p.add_argument("--case", required=True, choices=gc.DELTA2_CASES)
    p.add_argument("--b1", required=True)
    p.add_argument("--b2", required=True)

    p = add("kodaira", cmd_kodaira, help="elliptic fibers")
    p.add_argument("action", choices=["classify", "table", "multifiber"])
    p.add_argument("arg", nargs="?", default="")

    p = add("tables", cmd_tables, help="write the P^2 and fiber tables")
    p.add_argument("--out", required=True)
    p.add_argument("--max-lines", type=int, default=6)
    p.add_argument("--max-m", type=int, default=66)
    p.add_argument("--workers", type=int, default=1)
    return ap


_REQUIRED = {
    ("bounds", "nikulin"): ("e",),
    ("bounds", "kem"): ("chix", "chic"),
    ("bounds", "toric"): ("rho",),
    ("bounds", "noether"): ("k2",),
}


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    for name in _REQUIRED.get((args.command, getattr(args, "kind", None)), ()):
        if getattr(args, name) is None:
            stderr.write(f"logcompl: error: --{name} is required\n")
            return 2
    try:
        args.func(args, Out(args, stdout))
    except ParseError as e:
        stderr.write(f"ParseError: {e}\n")
        return 2
    except DomainError as e:
        stderr.write(f"{type(e).__name__}: {e}\n")
        return 1
    except OSError as e:
        stderr.write(f"IoError: {e}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
