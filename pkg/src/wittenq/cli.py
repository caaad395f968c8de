"""Command-line surface: instance files in, genus reports and verdicts out.

Exit codes: 0 success, 1 verification-suite failure, 2 malformed input,
3 precondition failure, 4 internal integrality failure.  The default
q-order is 20, overridable per-invocation by --q-order and globally by
the WITTENQ_Q_ORDER environment variable (which sets the default only).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import bundles, modforms, theta
from .errors import DimensionError, NonIntegralError
from .gci import GCIData, condition_report, dims, thm42_ok
from .genera import mod2_witten, wc_genus, witten_genus
from .qseries import QSeries
from .search import SearchQuery, find_string, find_stringc

EXIT_OK = 0
EXIT_SUITE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_INTEGRALITY = 4


def default_q_order():
    try:
        return int(os.environ.get("WITTENQ_Q_ORDER", "20"))
    except ValueError:
        return 20


def _load_instance(path, q_order=None):
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "n" not in doc or "D" not in doc:
        raise ValueError("instance file must be an object with 'n' and 'D'")
    qo = q_order if q_order is not None else doc.get("q_order",
                                                     default_q_order())
    return GCIData(doc["n"], doc["D"], doc.get("C"), q_order=qo)


def _conditions_dict(rep):
    return {
        "spin": rep.spin,
        "string": rep.string,
        "stringc": rep.stringc,
        "codim_ok": rep.codim_ok,
        "thm42_ok": rep.thm42_ok,
        "even_row": rep.even_row,
        "dims": list(rep.dims),
        "sufficient_only": rep.sufficient_only,
        "diagnostics": rep.diagnostics,
    }


def _instance_dict(g):
    out = {"n": list(g.n), "D": [list(r) for r in g.D], "q_order": g.q_order}
    if g.C is not None:
        out["C"] = list(g.C)
    return out


def _series_entries(series):
    if isinstance(series, QSeries):
        return [{"q_exp": k, "value": str(c)}
                for k, c in enumerate(series.coeffs)]
    return [{"q_exp": k, "value": str(b)} for k, b in enumerate(series.bits)]


def cmd_check(args):
    try:
        g = _load_instance(args.instance)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rep = condition_report(g)
    print(json.dumps(_conditions_dict(rep), indent=2))
    return EXIT_OK


def cmd_genus(args):
    try:
        g = _load_instance(args.instance, args.q_order)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.kind == "W":
            rep = witten_genus(g)
        elif args.kind == "Wc":
            rep = wc_genus(g)
        else:
            rep = mod2_witten(g, even_row=args.even_row)
    except NonIntegralError as exc:
        print(f"integrality failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except (DimensionError, ValueError) as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    doc = {
        "instance": _instance_dict(g),
        "kind": "phi2" if rep.kind == "PHI_MOD2"
                else ("Wc" if rep.kind.startswith("Wc") else "W"),
        "coeffs": _series_entries(rep.coeffs),
        "integral": rep.integral,
        "even_q_support": rep.even_q_support,
        "conditions": _conditions_dict(condition_report(g)),
        "modular_fit": None,
    }
    if args.modfit and isinstance(rep.coeffs, QSeries):
        weight = dims(g)[1] // 2
        try:
            ft = modforms.fit(rep.coeffs, weight)
            doc["modular_fit"] = {
                "weight": ft.weight,
                "basis": [list(p) for p in ft.basis],
                "solution": [str(v) for v in ft.solution]
                            if ft.solution is not None else None,
                "ok": ft.ok,
                "failure_exponent": ft.failure_exponent,
            }
        except ValueError as exc:
            doc["modular_fit"] = {"ok": False, "error": str(exc)}
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


# -- verification suites ----------------------------------------------

def suite_theta(q_order):
    results = {}
    results["jacobi_identity"] = theta.jacobi_check(max(q_order, 50))
    num = theta.numeric_transform_suite()
    results["numeric_transforms"] = num["passed"]
    return results


def suite_bundles(q_order):
    x_order = 8
    results = {}
    results["root_factor=x/Phi"] = (
        bundles.root_factor(x_order, q_order)
        == theta.x_over_phi(x_order, q_order))
    results["lfactor_4k=Psi1Psi2Psi3"] = (
        bundles.lfactor_4k(x_order, q_order)
        == theta.psi_product(x_order, q_order))
    results["lfactor_4k2=Phi/2"] = (
        bundles.lfactor_4k2(x_order, q_order)
        == theta.phi(x_order, q_order) * QSeries.constant("1/2", q_order))
    results["lemma42"] = bundles.lemma42_check(q_order, w_degree=6)
    results["lemma42_negative_control"] = not bundles.lemma42_check(
        q_order, flip_sign=True)
    return results


def vanishing_cases(query):
    """(label, instance, zero_fn) triples for every theorem-qualified instance."""
    cases = []
    for inst in find_string(query):
        g = inst.g
        rdim = dims(g)[1]
        if rdim % 4 == 0:
            cases.append(("W", g, lambda g=g: witten_genus(g).coeffs.is_zero()))
        ok, _ = thm42_ok(g)
        if ok:
            cases.append(("phi2", g,
                          lambda g=g: mod2_witten(g).coeffs.is_zero()))
    for parity in ("dim4k", "dim4k2"):
        for inst in find_stringc(query, parity):
            g = inst.g
            # C and -C give the same genus up to overall sign (the twist is
            # even or odd in ell_c), so vanishing needs only one of the pair
            first = next((c for c in g.C if c), 0)
            if first < 0:
                continue
            cases.append(("Wc", g, lambda g=g: wc_genus(g).coeffs.is_zero()))
    return cases


def suite_vanishing(q_order, query=None):
    if query is None:
        query = SearchQuery(q_order=q_order)
    results = {}
    for label, g, fn in vanishing_cases(query):
        name = f"{label} n={list(g.n)} D={[list(r) for r in g.D]}" + (
            f" C={list(g.C)}" if g.C is not None else "")
        results[name] = fn()
    return results


def suite_modular(q_order):
    results = {}
    tilde = q_order // 2
    for weight in range(0, 26, 2):
        basis = modforms.weight_basis(weight)
        ok = True
        for i, _ in enumerate(basis):
            synth = QSeries.zero(q_order)
            mono = (modforms.eisenstein(4, tilde) ** basis[i][0]
                    * modforms.eisenstein(6, tilde) ** basis[i][1])
            lifted = [mono.coefficient(j // 2) if j % 2 == 0 else 0
                      for j in range(q_order + 1)]
            ft = modforms.fit(QSeries(lifted, q_order), weight)
            ok = ok and ft.ok and ft.solution is not None
        results[f"roundtrip_weight_{weight}"] = ok
    e2 = modforms.eisenstein(2, tilde)
    lifted = [e2.coefficient(j // 2) if j % 2 == 0 else 0
              for j in range(q_order + 1)]
    results["E2_rejected"] = not modforms.fit(QSeries(lifted, q_order), 2).ok
    results["theta_constant_E4"] = modforms.theta_constant_e4_check(
        max(tilde, 10))
    return results


def cmd_verify(args):
    q_order = args.q_order if args.q_order is not None else default_q_order()
    suites = {
        "theta": lambda: suite_theta(q_order),
        "bundles": lambda: suite_bundles(q_order),
        "vanishing": lambda: suite_vanishing(
            args.q_order if args.q_order is not None else 12),
        "modular": lambda: suite_modular(q_order),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    failures = 0
    for name in names:
        results = suites[name]()
        npass = sum(1 for v in results.values() if v)
        nfail = len(results) - npass
        failures += nfail
        print(f"[{name}] {npass} passed, {nfail} failed")
        for key, ok in results.items():
            if not ok:
                print(f"  FAIL {key}")
    return EXIT_OK if failures == 0 else EXIT_SUITE


def cmd_search(args):
    query = SearchQuery(s_max=args.s, t_max=args.t, d_max=args.dmax,
                        c_max=args.cmax, positive=args.positive,
                        require_codim=args.codim,
                        target_real_dim=args.target_dim,
                        q_order=args.q_order if args.q_order is not None
                        else default_q_order())
    if args.parity == "string":
        results = find_string(query)
    else:
        results = find_stringc(query, args.parity)
    for inst in results:
        doc = _instance_dict(inst.g)
        doc["conditions"] = _conditions_dict(inst.report)
        print(json.dumps(doc))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="wittenq",
        description="Witten-type genera of generalized complete intersections")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("check", help="evaluate condition checkers")
    pc.add_argument("instance")
    pc.set_defaults(fn=cmd_check)

    pg = sub.add_parser("genus", help="compute a genus report")
    pg.add_argument("instance")
    pg.add_argument("--kind", choices=["W", "Wc", "phi2"], default="W")
    pg.add_argument("--q-order", type=int, default=None)
    pg.add_argument("--modfit", action="store_true")
    pg.add_argument("--even-row", type=int, default=None)
    pg.add_argument("--out", default=None)
    pg.set_defaults(fn=cmd_genus)

    pv = sub.add_parser("verify", help="run property suites")
    pv.add_argument("--suite",
                    choices=["theta", "bundles", "vanishing", "modular", "all"],
                    default="all")
    pv.add_argument("--q-order", type=int, default=None)
    pv.set_defaults(fn=cmd_verify)

    ps = sub.add_parser("search", help="enumerate instances within bounds")
    ps.add_argument("--s", type=int, default=2)
    ps.add_argument("--t", type=int, default=4)
    ps.add_argument("--dmax", type=int, default=4)
    ps.add_argument("--cmax", type=int, default=2)
    ps.add_argument("--parity", choices=["string", "dim4k", "dim4k2"],
                    default="string")
    ps.add_argument("--positive", action=argparse.BooleanOptionalAction,
                    default=True)
    ps.add_argument("--codim", action=argparse.BooleanOptionalAction,
                    default=True)
    ps.add_argument("--target-dim", type=int, default=None)
    ps.add_argument("--q-order", type=int, default=None)
    ps.set_defaults(fn=cmd_search)
    return p


def run(argv=None):
    args = build_parser().parse_args(argv)
    return sys.exit(args.fn(args)) if argv is None else args.fn(args)
