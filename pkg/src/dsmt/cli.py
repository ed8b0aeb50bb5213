"""Command-line front end.

Scenario files are JSON::

    {"frame": ["S", "R"], "model": "dst",
     "sources": [{"name": "m1", "masses": {"S": 0.8, "R": 0.12, "S | R": 0.08}}]}

Exit codes: 0 success, 2 validation or parse error, 3 total contradiction.
Values are printed with 4 decimals (Python's round-half-even on the binary
value); JSON output keeps full precision.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from decimal import Decimal

from . import entropy as ent
from . import neutro
from .errors import DSMTError, TotalContradiction
from .frame import DEFAULT_MAX_N, Frame, enumerate_hyper_power_set, strength
from .fusion import dempster_combine, dsm_combine, fusion_table, normalize
from .interval_model import interval_to_bpa, solve_mstar
from .mass import (
    Granule, HyperPowerSet, PowerSet, _member_bits, belief, make_granule, pignistic_classical,
    pignistic_general, plausibility,
)
from .nfusion import combine_report, fuse_reports, report_from_dict

EXIT_OK, EXIT_INVALID, EXIT_CONTRADICTION = 0, 2, 3
LOW_K_WARNING = 0.5


def fmt(x: float) -> str:
    return f"{x + 0.0:.4f}"  # + 0.0 turns -0.0 into 0.0


# ---- scenarios ---------------------------------------------------------------

class Scenario:
    def __init__(self, frame: Frame, model: str, sources: list, rule: str | None = None,
                 normalize: bool = False):
        self.frame = frame
        self.model = model
        self.sources = sources  # list of (name, Granule)
        self.rule = rule or ("dempster" if model == "dst" else "dsm")
        self.normalize = normalize


def scenario_from_dict(data) -> Scenario:
    if not isinstance(data, dict):
        raise DSMTError("a scenario must be a JSON object")
    try:
        frame = Frame(tuple(str(x) for x in data["frame"]))
        raw_sources = data["sources"]
    except KeyError as exc:
        raise DSMTError(f"scenario is missing {exc.args[0]!r}") from None
    model = str(data.get("model", "dsm")).lower()
    if model not in ("dst", "dsm"):
        raise DSMTError(f"model must be 'dst' or 'dsm', got {model!r}")
    mode = PowerSet if model == "dst" else HyperPowerSet
    sources = []
    for k, src in enumerate(raw_sources):
        name = str(src.get("name", f"m{k + 1}"))
        masses = [(key, float(v)) for key, v in src.get("masses", {}).items()]
        # DSm sources may be paraconsistent (sum > 1) or intuitionist (sum < 1)
        g = make_granule(frame, masses, mode, allow_unnormalized=(model == "dsm"))
        sources.append((name, g))
    if not sources:
        raise DSMTError("scenario has no sources")
    return Scenario(frame, model, sources, data.get("rule"), bool(data.get("normalize", False)))


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh, parse_float=Decimal)


def load_scenario(path) -> Scenario:
    return scenario_from_dict(load_json(path))


def granule_to_json(g: Granule) -> dict:
    return {str(p): v for p, v in _sorted_items(g)}


def _sorted_items(g: Granule):
    return sorted(g.items(), key=lambda pv: (-pv[1], str(pv[0])))


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _print_granule(g: Granule):
    width = max((len(str(p)) for p in g), default=4)
    for p, v in _sorted_items(g):
        print(f"  {str(p):<{width}}  {fmt(v)}")


# ---- commands ------------------------------------------------------------------

def cmd_hyperset(args):
    if args.n > DEFAULT_MAX_N and not args.allow_huge:
        raise DSMTError(f"n={args.n} is above {DEFAULT_MAX_N}; pass --allow-huge for n=6")
    frame = Frame.of_size(args.n)
    props = enumerate_hyper_power_set(frame, allow_huge=args.allow_huge)
    if args.json:
        _emit_json({"n": args.n, "count": len(props),
                    "elements": [{"expr": str(p), "mask": p.mask} for p in props]})
        return EXIT_OK
    for p in props:
        print(f"{str(p)}  {p.mask:#x}" if p.mask else "{}")
    print(f"# |D| = {len(props)}")
    return EXIT_OK


def _fold(sc: Scenario, rule: str):
    """Combine all sources; returns (granule, info dict)."""
    grans = [g for _, g in sc.sources]
    if rule == "dempster":
        out, K = grans[0], 1.0
        for g in grans[1:]:
            out, rep = dempster_combine(out, g)
            K *= rep.K
        return out, {"rule": "dempster", "K": K, "conflict": 1.0 - K,
                     "weight_of_conflict": math.log(1.0 / K)}
    out = grans[0].promote()
    for g in grans[1:]:
        out = dsm_combine(out, g)
    return out, {"rule": "dsm", "total": out.total()}


def cmd_fuse(args):
    sc = load_scenario(args.scenario)
    if len(sc.sources) < 2:
        raise DSMTError("fuse needs at least two sources")
    rule = args.rule or sc.rule
    fused, info = _fold(sc, rule)
    if rule == "dsm" and (args.normalize or sc.normalize):
        fused = normalize(fused)
        info["normalized"] = True
    if args.json:
        model = "dst" if rule == "dempster" else "dsm"
        _emit_json({"frame": list(sc.frame.labels), "model": model,
                    "sources": [{"name": "fused", "masses": granule_to_json(fused)}],
                    "meta": info})
        return EXIT_OK
    print(f"# rule: {rule}")
    _print_granule(fused)
    if rule == "dempster":
        print(f"K = {fmt(info['K'])}")
        print(f"conflict = {fmt(info['conflict'])}")
        print(f"weight of conflict = {fmt(info['weight_of_conflict'])}")
        if info["K"] < LOW_K_WARNING:
            print(f"warning: sources are highly conflicting (K = {info['K']:.4g}); "
                  "the normalized result may be counter-intuitive", file=sys.stderr)
    else:
        print(f"total before normalization = {fmt(info['total'])}")
    return EXIT_OK


def cmd_entropy(args):
    sc = load_scenario(args.scenario)
    if len(sc.sources) not in (1, 2):
        raise DSMTError("entropy needs one or two sources")
    out = {}
    for k, (name, g) in enumerate(sc.sources, 1):
        out[f"H(M{k})"] = ent.shannon(g)
    if len(sc.sources) == 2:
        t = fusion_table(sc.sources[0][1], sc.sources[1][1])
        h1, h2 = out["H(M1)"], out["H(M2)"]
        hj = ent.joint_entropy(t)
        c12 = ent.conditional_entropy(t, given="m2")
        c21 = ent.conditional_entropy(t, given="m1")
        out["H(M)"] = hj
        out["H(M1|M2)"] = c12
        out["H(M2|M1)"] = c21
        out["chain residual"] = max(abs(hj - h2 - c12), abs(hj - h1 - c21))
        out["H~"] = ent.entropy_of_combined(t.collapse())
    if args.generalized:
        for k, (_, g) in enumerate(sc.sources, 1):
            out[f"Hg(M{k})"] = ent.generalized_entropy(g)
    if args.json:
        _emit_json(out)
        return EXIT_OK
    for key, v in out.items():
        print(f"{key} = {v:.4g}" if key == "chain residual" else f"{key} = {fmt(v)}")
    if args.generalized:
        for name, g in sc.sources:
            print(f"# {name}: focal element, mass, s(A)")
            for p, v in g.items():
                print(f"  {str(p)}  {fmt(v)}  {strength(p)}")
    return EXIT_OK


def cmd_pignistic(args):
    sc = load_scenario(args.scenario)
    res = {}
    for name, g in sc.sources:
        res[name] = pignistic_classical(g) if g.mode is PowerSet else pignistic_general(g)
    if args.json:
        _emit_json(res)
        return EXIT_OK
    for name, probs in res.items():
        print(f"# {name}")
        for label, v in probs.items():
            print(f"  P{{{label}}} = {fmt(v)}")
    return EXIT_OK


def _inside(g, p, a):
    if g.mode is PowerSet:
        return _member_bits(p) & ~_member_bits(a) == 0
    return p <= a


def _meets(g, p, a):
    if g.mode is PowerSet:
        return bool(_member_bits(p) & _member_bits(a))
    return bool(p & a)


def cmd_query(args):
    sc = load_scenario(args.scenario)
    if len(sc.sources) > 1:
        g, _ = _fold(sc, args.rule or sc.rule)
    else:
        g = sc.sources[0][1]
    if not (args.bel or args.pl):
        raise DSMTError("give --bel and/or --pl")
    res = {}
    for kind, exprs in (("Bel", args.bel or []), ("Pl", args.pl or [])):
        for text in exprs:
            a = sc.frame.prop(text)
            if kind == "Bel":
                value = belief(g, a)
                contrib = [(p, v) for p, v in g.items() if _inside(g, p, a)]
            else:
                value = plausibility(g, a)
                contrib = [(p, v) for p, v in g.items() if _meets(g, p, a)]
            res[f"{kind}({a})"] = {"value": value,
                                   "from": {str(p): v for p, v in contrib}}
    if args.json:
        _emit_json(res)
        return EXIT_OK
    for key, r in res.items():
        print(f"{key} = {fmt(r['value'])}")
        for p, v in r["from"].items():
            print(f"  <- {p}  {fmt(v)}")
    return EXIT_OK


def cmd_interval2bpa(args):
    bg = interval_to_bpa(args.lo, args.hi)
    mstar = solve_mstar(args.lo, args.hi)
    rows = {"m(A)": bg.a, "m(A^c)": bg.a_c, "m(A | A^c)": bg.union, "m(A & A^c)": bg.inter,
            "m*": mstar}
    if args.json:
        _emit_json(rows)
        return EXIT_OK
    for key, v in rows.items():
        print(f"{key} = {fmt(v)}")
    return EXIT_OK


def cmd_nfuse(args):
    reports = [report_from_dict(load_json(p), percent=args.percent) for p in args.reports]
    if len(reports) == 1:
        g = combine_report(reports[0], strict_paper=args.strict_paper)
    elif len(reports) == 2:
        g = fuse_reports(reports[0], reports[1], strict_paper=args.strict_paper)
    else:
        raise DSMTError("nfuse takes one or two reports")
    if args.normalize:
        g = normalize(g)
    if args.json:
        _emit_json({"frame": list(g.frame.labels), "model": "dsm",
                    "sources": [{"name": "fused", "masses": granule_to_json(g)}]})
        return EXIT_OK
    _print_granule(g)
    print(f"total = {fmt(g.total())}")
    return EXIT_OK


def cmd_classify(args):
    v = neutro.parse_nvalue(args.value, percent=args.percent)
    labels = sorted(neutro.classify(v))
    if args.json:
        _emit_json({"value": neutro.format_nvalue(v), "n_sup": v.n_sup, "n_inf": v.n_inf,
                    "classes": labels})
        return EXIT_OK
    print(neutro.format_nvalue(v))
    print(" ".join(labels) if labels else "(none)")
    return EXIT_OK


_SET_OPS = {
    "complement": lambda x, y, a: neutro.ns_complement(x),
    "intersect": lambda x, y, a: neutro.ns_intersect(x, y),
    "union": lambda x, y, a: neutro.ns_union(x, y),
    "difference": lambda x, y, a: neutro.ns_difference(x, y, legacy=a.legacy_preface_difference),
    "np-add": lambda x, y, a: neutro.np_add(x, y),
    "np-sub": lambda x, y, a: neutro.np_sub(x, y),
    "np-mul": lambda x, y, a: neutro.np_mul(x, y),
    "np-not": lambda x, y, a: neutro.np_not(x),
    "np-union": lambda x, y, a: neutro.np_union(x, y),
}
_UNARY = {"not", "complement", "np-not"}


def cmd_nset(args):
    x = neutro.parse_nvalue(args.x, percent=args.percent)
    y = neutro.parse_nvalue(args.y, percent=args.percent) if args.y is not None else None
    if args.op not in _UNARY and y is None:
        raise DSMTError(f"{args.op} needs two operands")
    if args.op == "subset":
        print("true" if neutro.ns_is_subset(x, y) else "false")
        return EXIT_OK
    if args.op in neutro.CONNECTIVES:
        fn = neutro.CONNECTIVES[args.op]
        res = fn(x) if args.op == "not" else fn(x, y)
    else:
        res = _SET_OPS[args.op](x, y, args)
    print(neutro.format_nvalue(res))
    return EXIT_OK


# ---- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dsmt", description="Plausible and paradoxical fusion toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hyperset", help="list D^Theta for n hypotheses")
    p.add_argument("n", type=int)
    p.add_argument("--allow-huge", action="store_true", help="permit n = 6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hyperset)

    p = sub.add_parser("fuse", help="combine the sources of a scenario")
    p.add_argument("scenario")
    p.add_argument("--rule", choices=("dempster", "dsm"))
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("entropy", help="entropies of one or two sources")
    p.add_argument("scenario")
    p.add_argument("--generalized", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("pignistic", help="pignistic probabilities per source")
    p.add_argument("scenario")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pignistic)

    p = sub.add_parser("query", help="belief / plausibility of expressions")
    p.add_argument("scenario")
    p.add_argument("--bel", action="append", metavar="EXPR")
    p.add_argument("--pl", action="append", metavar="EXPR")
    p.add_argument("--rule", choices=("dempster", "dsm"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("interval2bpa", help="interval evidence to masses on A, A^c, A|A^c, A&A^c")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_interval2bpa)

    p = sub.add_parser("nfuse", help="fuse one or two neutrosophic reports")
    p.add_argument("reports", nargs="+")
    p.add_argument("--strict-paper", action="store_true",
                   help="falsity granule quartic with constant term 4 (1 - sup I) inf I")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--percent", action="store_true", help="component numbers are percentages")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nfuse)

    p = sub.add_parser("classify", help="classify a neutrosophic value")
    p.add_argument("value")
    p.add_argument("--percent", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("nset", help="neutrosophic logic / set / probability operations")
    ops = sorted(set(neutro.CONNECTIVES) | set(_SET_OPS) | {"subset"})
    p.add_argument("op", choices=ops)
    p.add_argument("x")
    p.add_argument("y", nargs="?")
    p.add_argument("--legacy-preface-difference", action="store_true",
                   help="difference as T_M - T_N instead of T_M - T_M*T_N")
    p.add_argument("--percent", action="store_true")
    p.set_defaults(func=cmd_nset)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TotalContradiction as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (DSMTError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
