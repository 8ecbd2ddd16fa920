"""Command line front end.

Subcommands: classify, verify, det, sweep, construct.  Exit codes are 0 on
success, 1 when a sweep finds a disagreement, 2 on bad arguments and 3 when
a graded piece exceeds the basis budget.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict

from . import classify as cl
from . import constructions as cons
from . import lefschetz as lf
from . import toeplitz as tz
from .exactarith import check_prime, padic_order

EXIT_OK, EXIT_DISAGREE, EXIT_ARGS, EXIT_BUDGET = 0, 1, 2, 3
CSV_HEADER = ["p", "n", "d", "classify", "oracle", "E", "mgd_syzbar", "agree", "witness_degree"]


class ArgumentProblem(Exception):
    pass


def _ints(text):
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _plain(x):
    """Replace infinite floats by the string "infinity", recursively."""
    if isinstance(x, float) and math.isinf(x):
        return "infinity"
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _dump(obj):
    return json.dumps(_plain(obj), indent=2, sort_keys=True, allow_nan=False)


def _emit(text, out=None):
    if out:
        try:
            with open(out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise ArgumentProblem(f"cannot write {out}: {exc}")
    else:
        sys.stdout.write(text)


# classify

def cmd_classify(args):
    check_prime(args.p)
    verdict = cl.classify(args.p, args.n, args.d)
    report = {"p": args.p, "n": args.n, "d": args.d, "decision": verdict.decision.value}
    if args.n == 4 and args.p != 2:
        dec = cl.cond_decompose(args.p, args.d)
        report["decomposition"] = dec.to_dict() if dec else None
    if args.json:
        print(_dump(report))
        return EXIT_OK
    if verdict.decision is lf.Decision.UNSUPPORTED:
        print(f"p={args.p} n={args.n} d={args.d}: Unsupported "
              "(no closed form for n = 3; use `verify` for the rank oracle)")
        return EXIT_OK
    print(f"p={args.p} n={args.n} d={args.d}: {verdict.decision.value}")
    if "decomposition" in report:
        dec = report["decomposition"]
        if dec:
            print(f"  d = k*q + r with k={dec['k']}, q={dec['q']} (e={dec['e']}), r={dec['r']}")
        else:
            print("  d has no decomposition d = kq + r with 1 <= k <= (p-1)/2, r in {(q-1)/2, (q+1)/2}")
    return EXIT_OK


# verify

def cmd_verify(args):
    check_prime(args.p)
    a = tuple(args.a)
    if args.n is not None and args.n != len(a):
        raise ArgumentProblem(f"--n {args.n} does not match {len(a)} exponents")
    n = len(a)
    if args.all_degrees:
        verdict = lf.wlp_all_degrees(args.p, n, a, args.budget)
    else:
        verdict = lf.wlp_bruteforce(args.p, n, a, args.budget)
    bnds = lf.bounds(n, a)
    report = {"p": args.p, "n": n, "a": list(a), "E": bnds.E, "socle_degree": bnds.sigma,
              "verdict": verdict.to_dict()}
    if n >= 2:
        suite = lf.equivalence_suite(args.p, n, a, args.budget)
        report["equivalence"] = suite.to_dict()
    if args.json:
        print(_dump(report))
        return EXIT_OK
    print(f"p={args.p} a={','.join(map(str, a))}: {verdict.decision.value}")
    print(f"  socle degree {bnds.sigma}, E = {bnds.E}")
    print("  degree  rank  expected")
    for c in verdict.ranks:
        print(f"  {c.degree:>6}  {c.rank:>4}  {c.expected:>8}")
    if verdict.witness is not None:
        w = verdict.witness
        print(f"  kernel witness in degree {w.degree}: {w.poly.format()} (checked: {w.check(a)})")
    if n >= 2:
        flags = ", ".join(str(c) for c in suite.conditions)
        print(f"  equivalent conditions (1)-(5): {flags}  agree={suite.agree}")
    return EXIT_OK


# det

def cmd_det(args):
    if not 0 <= args.b <= args.t or args.s < 1:
        raise ArgumentProblem("need 0 <= b <= t and s >= 1")
    direct = tz.det_direct(args.t, args.b, args.s)
    report = {"t": args.t, "b": args.b, "s": args.s, "det": direct}
    if args.mod is not None:
        check_prime(args.mod)
        report["mod"] = {"p": args.mod, "residue": direct % args.mod}
    if args.valuation is not None:
        p = args.valuation
        check_prime(p)
        val = {"p": p, "order": padic_order(direct, p)}
        if args.b == args.s and p != 2 and args.b <= args.t:
            total, wits = tz.valuation_by_counting(args.t, args.b, p)
            val["counted"] = total
            val["witnesses"] = [asdict(w) for w in wits]
        report["valuation"] = val
    if args.json:
        print(_dump(report))
        return EXIT_OK
    print(f"det M({args.t}, {args.b}, {args.s}, {args.s}) = {direct}")
    if "mod" in report:
        print(f"  mod {args.mod}: {report['mod']['residue']}")
    if "valuation" in report:
        val = report["valuation"]
        print(f"  {val['p']}-adic order: {val['order']}")
        if "witnesses" in val:
            print(f"  counted from factors: {val['counted']}")
            print("  lam  rho  u  sharp  b  N  D")
            for w in val["witnesses"]:
                cells = [w[k] for k in ("lam", "rho", "u", "sharp", "b", "N", "D")]
                print("  " + "  ".join("-" if c is None else str(c) for c in cells))
    return EXIT_OK


# sweep

def sweep_row(p, n, d, budget):
    a = (d,) * n
    verdict = cl.classify(p, n, d)
    oracle = lf.wlp_bruteforce(p, n, a, budget)
    e = lf.E(n, a)
    syzbar = None
    consistent = True
    if n >= 2:
        try:
            syzbar = lf.mgd_syzbar(p, n, a, budget).value
        except lf.InconsistencyError:
            consistent = False
    supported = verdict.decision is not lf.Decision.UNSUPPORTED
    agree = consistent and (not supported or verdict.decision == oracle.decision)
    if syzbar is not None:
        agree = agree and ((e <= syzbar) == oracle.has_wlp)
    wdeg = oracle.witness.degree if oracle.witness is not None else None
    return {"p": p, "n": n, "d": d, "classify": verdict.decision.value,
            "oracle": oracle.decision.value, "E": e, "mgd_syzbar": syzbar,
            "agree": agree, "witness_degree": wdeg}


def _rows_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        cells = []
        for k in CSV_HEADER:
            v = r[k]
            if v is None or v == lf.INF:
                cells.append("")
            elif isinstance(v, bool):
                cells.append("true" if v else "false")
            else:
                cells.append(v)
        w.writerow(cells)
    return buf.getvalue()


def cmd_sweep(args):
    for p in args.p:
        check_prime(p)
    rows = []
    for p in sorted(set(args.p)):
        for n in sorted(set(args.n)):
            for d in range(1, args.d + 1):
                rows.append(sweep_row(p, n, d, args.budget))
    if args.format == "json":
        text = _dump(rows) + "\n"
    else:
        text = _rows_csv(rows)
    _emit(text, args.out)
    bad = [r for r in rows if not r["agree"]]
    if args.out:
        print(f"{len(rows)} rows written to {args.out}; {len(bad)} disagreements")
    return EXIT_DISAGREE if bad else EXIT_OK


# construct

def _base_relation(p, k):
    res = lf.mgd_syz(p, 4, (k,) * 4)
    return res.witness


def build_construction(args):
    kind, p = args.kind, args.p
    check_prime(p)
    need = {
        "g-relation": ["k"],
        "frobenius-n4-1": ["e", "k", "r"],
        "frobenius-n4-2": ["e", "k", "r"],
        "frobenius-general": ["n", "d", "l"],
        "power": ["n", "d", "e"],
        "low-power": ["n", "d", "e"],
        "high-n": ["n", "d"],
    }[kind]
    missing = [f"--{x}" for x in need if getattr(args, x) is None]
    if missing:
        raise ArgumentProblem(f"{kind} needs {' '.join(missing)}")
    info = {}
    if kind == "g-relation":
        eta = cons.relation_2k_minus_1(p, args.k)
    elif kind == "frobenius-n4-1":
        if args.k < 1:
            raise cons.PreconditionError("need k >= 1")
        eta = cons.frobenius_lift_n4_part1(p, args.e, _base_relation(p, args.k), args.r)
    elif kind == "frobenius-n4-2":
        if args.k < 0:
            raise cons.PreconditionError("need k >= 0")
        eta = cons.frobenius_lift_n4_part2(p, args.e, _base_relation(p, args.k + 1), args.r)
    elif kind == "frobenius-general":
        eta = cons.frobenius_lift_general(p, args.n, args.d, args.l, args.e, args.budget)
    elif kind == "power":
        eta = cons.power_relation(p, args.n, args.d, args.e)
    elif kind == "low-power":
        eta = cons.low_power_relation(p, args.n, args.d, args.e)
    else:
        choice = cons.high_n_witness(p, args.n, args.d, args.budget)
        eta = choice.relation
        info = {"case": choice.case, "method": choice.method, "params": choice.params}
    return eta, info


def cmd_construct(args):
    eta, info = build_construction(args)
    report = {"kind": args.kind, "relation": eta.to_dict()}
    report.update(info)
    if args.verify:
        report["verified"] = {
            "annihilates": cons.verify_syzygy(eta),
            "non_koszul": cons.verify_non_koszul(eta),
            "E": lf.E(eta.n, eta.a),
        }
    if args.json:
        print(_dump(report))
        return EXIT_OK
    print(f"{args.kind} over F_{eta.p}, exponents {','.join(map(str, eta.a))}, degree {eta.total_degree}")
    if info:
        print(f"  case {info['case']}: {info['method']} {info['params']}")
    for i, e in enumerate(eta.entries, 1):
        print(f"  v{i} = {e.format(signed=True)}")
    if args.verify:
        v = report["verified"]
        print(f"  annihilates the row: {v['annihilates']}; non-Koszul: {v['non_koszul']}; "
              f"E = {v['E']}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="wlpci",
                                 description="Weak Lefschetz Property of monomial complete intersections over F_p.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, budget=False):
        sp.add_argument("--json", action="store_true", help="print a JSON report")
        if budget:
            sp.add_argument("--budget", type=int, default=lf.DEFAULT_BUDGET,
                            help="largest graded piece (monomials) to handle")

    sp = sub.add_parser("classify", help="closed-form decision for (d:n)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="rank oracle and equivalent conditions for any exponent tuple")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=_ints, required=True, help="exponents, e.g. 2,3,4")
    sp.add_argument("--all-degrees", action="store_true", help="check maximal rank in every degree")
    common(sp, budget=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("det", help="determinant of the binomial Toeplitz matrix M(t, b, s, s)")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--mod", type=int, help="also reduce mod this prime")
    sp.add_argument("--valuation", type=int, help="p-adic order, with factor counts when b = s")
    common(sp)
    sp.set_defaults(func=cmd_det)

    sp = sub.add_parser("sweep", help="classification against the rank oracle over a grid")
    sp.add_argument("--p", type=_ints, required=True)
    sp.add_argument("--n", type=_ints, required=True)
    sp.add_argument("--d", type=int, required=True, help="largest d")
    sp.add_argument("--out", help="output file (stdout by default)")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--budget", type=int, default=lf.DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("construct", help="build an explicit relation")
    sp.add_argument("kind", choices=["g-relation", "frobenius-n4-1", "frobenius-n4-2",
                                     "frobenius-general", "power", "low-power", "high-n"])
    sp.add_argument("--p", type=int, required=True)
    for name in ("n", "d", "e", "k", "r", "l"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--verify", action="store_true", help="check annihilation and non-Koszulness")
    common(sp, budget=True)
    sp.set_defaults(func=cmd_construct)
    return ap


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ARGS if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except lf.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except cons.PreconditionError as exc:
        print(f"error: precondition violated: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (ArgumentProblem, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
