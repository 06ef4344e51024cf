"""Command-line surface.

Exit codes: 0 = check passed, 1 = check failed (witness in the report),
2 = error.  ``--json`` prints a canonical machine-readable report (stable
field names, sorted keys, no timing); the human text output carries timing
and no stability guarantee.  The resolution bound defaults to 6 and can be
overridden per call (``-n``) or via the STRATKOS_BOUND environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .allorders import (classify_tensor, cokernel_closure_check,
                        enumerate_orders, is_ss_all_linear_orders)
from .covers import is_self_injective, splitting_property_status
from .errors import StratkosError
from .homological import (DEFAULT_BOUND, ExtTable, is_koszul_module,
                          is_quasi_koszul_algebra)
from .module import a0_module, projective_module, simple_module
from .specfile import (emit_algebra_file, field_to_str, parse_algebra_file,
                       parse_ei_file)
from .stratification import (LinearOrder, StandardSystem,
                             is_properly_stratified, is_standardly_stratified,
                             theorem_gamma_koszul_check)
from .tensoralg import is_quadratic

SCHEMA = "stratkos.report/1"


def default_bound():
    env = os.environ.get("STRATKOS_BOUND")
    if env:
        try:
            return int(env)
        except ValueError:
            raise StratkosError(f"STRATKOS_BOUND must be an integer, got {env!r}")
    return DEFAULT_BOUND


def make_report(command, input_info, field, bound, result, witness, status):
    return {
        "tool": "stratkos",
        "schema": SCHEMA,
        "command": command,
        "input": input_info,
        "field": field,
        "bound": bound,
        "result": result,
        "witness": witness,
        "status": status,
    }


def parse_order_flag(algebra, text):
    """Comma list greatest-first: ``--order y,x,z`` means y > x > z."""
    labels = [t.strip() for t in text.split(",") if t.strip()]
    return LinearOrder.from_descending(algebra, labels)


def resolve_module(algebra, selector, order_flag=None):
    """Builtin selectors: P:x, S:x, A0, rad:SEL, Delta:x@y,x,z."""
    selector = selector.strip()
    if selector == "A0":
        return a0_module(algebra)
    if selector.startswith("rad:"):
        inner = resolve_module(algebra, selector[4:], order_flag)
        sub, _ = inner.radical_submodule()
        return sub
    if selector.startswith("P:"):
        return projective_module(algebra, selector[2:])
    if selector.startswith("S:"):
        return simple_module(algebra, selector[2:])
    if selector.startswith("Delta:"):
        rest = selector[6:]
        if "@" in rest:
            vertex, order_text = rest.split("@", 1)
            order = parse_order_flag(algebra, order_text)
        else:
            vertex = rest
            if order_flag is None:
                raise StratkosError("Delta selector needs @ORDER or --order")
            order = order_flag
        system = StandardSystem(algebra, order)
        return system.delta(vertex)
    raise StratkosError(f"unknown module selector {selector!r}")


def load_algebra(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_file(fh.read())


def emit_and_note(result, algebra, emit_path, name):
    if emit_path:
        text = emit_algebra_file(algebra, name)
        with open(emit_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        result["emitted"] = emit_path


# ----------------------------------------------------------------------
# commands


def cmd_build(args):
    parsed = load_algebra(args.file)
    a = parsed.algebra
    a.check_associativity()
    dims = {}
    for v in a.vertices:
        dims[v] = projective_module(a, v).dim
    result = {
        "name": parsed.name,
        "dim": a.dim,
        "basis": list(a.names),
        "projective_dims": dims,
        "graded_dims": {str(d): len(a.degree_indices(d))
                        for d in range(a.max_degree + 1)},
        "generated_in_degrees_01": a.is_generated_in_degrees_01(),
    }
    return make_report("build", {"file": args.file}, field_to_str(a.field),
                       None, result, None, "ok"), 0


def cmd_check(args):
    parsed = load_algebra(args.file)
    a = parsed.algebra
    bound = args.bound if args.bound is not None else default_bound()
    order = parse_order_flag(a, args.order) if args.order else None
    sub = args.subcommand
    witness = None
    if sub == "koszul":
        m = resolve_module(a, args.module or "A0", order)
        verdict = is_koszul_module(m, bound)
        value = verdict.holds
        result = {"holds": verdict.holds, "unconditional": verdict.unconditional,
                  "failing_stage": verdict.failing_stage}
        if not verdict.holds:
            witness = {"stage": verdict.failing_stage, "reason": verdict.reason}
    elif sub == "quasikoszul":
        value = is_quasi_koszul_algebra(a, bound)
        result = {"holds": value}
    elif sub == "stratified":
        if order is None:
            raise StratkosError("stratified needs --order")
        value, data = is_standardly_stratified(a, order)
        result = {"holds": value,
                  "filtrations": {k: (v if isinstance(v, dict) else None)
                                  for k, v in data.items()}}
        if not value:
            bad = {k: repr(v) for k, v in data.items() if not isinstance(v, dict)}
            witness = {"failures": bad}
    elif sub == "proper":
        if order is None:
            raise StratkosError("proper needs --order")
        value = is_properly_stratified(a, order)
        result = {"holds": value}
    elif sub == "coker-closed":
        if order is None:
            raise StratkosError("coker-closed needs --order")
        value, witness = cokernel_closure_check(a, order)
        result = {"holds": value}
    elif sub == "quadratic":
        value = is_quadratic(a)
        result = {"holds": value}
    elif sub == "directed":
        top = a.is_directed()
        value = top is not None
        result = {"holds": value,
                  "order": [a.vertices[v] for v in top] if top else None}
    elif sub == "tensor":
        rep, gr = classify_tensor(a)
        value = rep["classification"] != "not-all-orders"
        result = rep
    elif sub == "selfinjective":
        a0, _ = a.degree_zero_subalgebra()
        value = is_self_injective(a0)
        result = {"holds": value,
                  "splitting_status": splitting_property_status(a0)}
    else:
        raise StratkosError(f"unknown check {sub!r}")
    status = "ok" if value else "fail"
    report = make_report(f"check {sub}",
                         {"file": args.file, "module": args.module,
                          "order": args.order},
                         field_to_str(a.field), bound, result, witness, status)
    return report, 0 if value else 1


def cmd_orders(args):
    parsed = load_algebra(args.file)
    a = parsed.algebra
    os_ = enumerate_orders(a)
    result = {
        "count": len(os_),
        "orders": [",".join(lbls) for lbls in os_.descending_label_lists()],
        "dead_branches": [",".join(chain) for chain, _ in os_.dead_branches],
    }
    verdict, trace = is_ss_all_linear_orders(a) if len(a.vertices) <= 5 else (None, {})
    result["ss_all_linear_orders"] = verdict
    return make_report("orders", {"file": args.file}, field_to_str(a.field),
                       None, result, None, "ok"), 0


def cmd_ext(args):
    parsed = load_algebra(args.file)
    a = parsed.algebra
    bound = args.bound if args.bound is not None else default_bound()
    order = parse_order_flag(a, args.order) if args.order else None
    M = resolve_module(a, args.source, order)
    N = resolve_module(a, args.target, order)
    table = ExtTable(M, N, bound)
    graded = {}
    for i in range(bound + 1):
        g = table.graded_dims(i)
        if g:
            graded[str(i)] = {str(j): d for j, d in g.items()}
    result = {"dims": {str(i): table.dim(i) for i in range(bound + 1)},
              "graded": graded}
    return make_report("ext", {"file": args.file, "from": args.source,
                               "to": args.target},
                       field_to_str(a.field), bound, result, None, "ok"), 0


def cmd_gamma(args):
    parsed = load_algebra(args.file)
    a = parsed.algebra
    bound = args.bound if args.bound is not None else default_bound()
    order = parse_order_flag(a, args.order)
    report, gamma = theorem_gamma_koszul_check(a, order, bound)
    result = {"gamma_dim": report["gamma_dim"],
              "gamma_graded_dims": {str(k): v
                                    for k, v in report["gamma_graded_dims"].items()},
              "hom_condition": report["hom_condition"],
              "linearly_filtered": report["linearly_filtered"],
              "hypotheses_hold": report["hypotheses_hold"],
              "gamma0_linear": report.get("gamma0_linear"),
              "diagnostics": report["gamma_diagnostics"]}
    emit_and_note(result, gamma, args.emit, f"gamma_{parsed.name}")
    return make_report("gamma", {"file": args.file, "order": args.order},
                       field_to_str(a.field), bound, result, None, "ok"), 0


def cmd_reduce(args):
    parsed = load_algebra(args.file)
    a = parsed.algebra
    abar, proj, ideal = a.radical_reduction()
    result = {"dim": abar.dim, "ideal_dim": ideal.dim,
              "vertices": list(abar.vertices)}
    emit_and_note(result, abar, args.emit, f"reduced_{parsed.name}")
    return make_report("reduce", {"file": args.file}, field_to_str(a.field),
                       None, result, None, "ok"), 0


def cmd_graded(args):
    parsed = load_algebra(args.file)
    a = parsed.algebra
    gr = a.associated_graded()
    result = {"dim": gr.dim,
              "graded_dims": {str(d): len(gr.degree_indices(d))
                              for d in range(gr.max_degree + 1)}}
    emit_and_note(result, gr, args.emit, f"graded_{parsed.name}")
    return make_report("graded", {"file": args.file}, field_to_str(a.field),
                       None, result, None, "ok"), 0


def cmd_ei(args):
    from .eicat import category_algebra, ei_theorem_checks, free_ei_category
    from .field import Field
    with open(args.file, "r", encoding="utf-8") as fh:
        name, quiver = parse_ei_file(fh.read())
    cat = free_ei_category(quiver)
    field = Field(args.char)
    checks = ei_theorem_checks(cat, field, args.bound or default_bound())
    alg = category_algebra(cat, field)
    result = {
        "name": name,
        "objects": [str(o) for o in cat.objects],
        "morphisms": cat.size,
        "free": checks["free"],
        "gradable": checks["gradable"],
        "algebra_dim": alg.dim,
        "projective_dims": {str(v): projective_module(alg, v).dim
                            for v in alg.vertices},
        "pd_heads": str(checks["pd_heads"]),
        "standardly_stratified": checks["standardly_stratified"],
        "left_regular": [str(o) for o in checks["left_regular"]],
        "right_regular": [str(o) for o in checks["right_regular"]],
    }
    for key in ("koszul", "quasi_koszul", "equivalence_consistent"):
        if key in checks:
            result[key] = checks[key]
    emit_and_note(result, alg, args.emit, name)
    return make_report("ei", {"file": args.file, "char": args.char},
                       field_to_str(field), args.bound or default_bound(),
                       result, None, "ok"), 0


# ----------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="stratkos",
                                description="exact checks for graded quiver algebras")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="parse a spec file and report dimensions")
    b.add_argument("file")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", help="run a boolean check")
    c.add_argument("file")
    c.add_argument("subcommand",
                   choices=["koszul", "quasikoszul", "stratified", "proper",
                            "coker-closed", "quadratic", "directed", "tensor",
                            "selfinjective"])
    c.add_argument("-m", "--module", help="module selector (P:x, S:x, A0, rad:SEL, Delta:x)")
    c.add_argument("--order", help="comma list, greatest first (y,x,z means y > x > z)")
    c.add_argument("-n", "--bound", type=int)
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("orders", help="enumerate the candidate linear orders")
    o.add_argument("file")
    o.set_defaults(func=cmd_orders)

    e = sub.add_parser("ext", help="Ext dimension table between two modules")
    e.add_argument("file")
    e.add_argument("--from", dest="source", required=True)
    e.add_argument("--to", dest="target", required=True)
    e.add_argument("--order")
    e.add_argument("-n", "--bound", type=int)
    e.set_defaults(func=cmd_ext)

    g = sub.add_parser("gamma", help="extension algebra of the standard modules")
    g.add_argument("file")
    g.add_argument("--order", required=True)
    g.add_argument("-n", "--bound", type=int)
    g.add_argument("--emit", help="write the result as a table-format algebra file")
    g.set_defaults(func=cmd_gamma)

    r = sub.add_parser("reduce", help="radical reduction of the degree-0 part")
    r.add_argument("file")
    r.add_argument("--emit")
    r.set_defaults(func=cmd_reduce)

    gr = sub.add_parser("graded", help="associated graded algebra along the off-diagonal ideal")
    gr.add_argument("file")
    gr.add_argument("--emit")
    gr.set_defaults(func=cmd_graded)

    ei = sub.add_parser("ei", help="build a free EI category and run its checks")
    ei.add_argument("file")
    ei.add_argument("--char", type=int, default=0)
    ei.add_argument("-n", "--bound", type=int)
    ei.add_argument("--emit")
    ei.set_defaults(func=cmd_ei)

    for s in (b, c, o, e, g, r, gr, ei):
        s.add_argument("--json", action="store_true",
                       help="canonical machine-readable output")
    return p


def render_text(report, elapsed):
    lines = [f"stratkos {report['command']}  [{report['field']}]"]
    if report["bound"] is not None:
        lines.append(f"  bound: {report['bound']}")
    for k, v in report["result"].items():
        lines.append(f"  {k}: {v}")
    if report["witness"]:
        lines.append(f"  witness: {report['witness']}")
    lines.append(f"  status: {report['status']}  ({elapsed:.3f}s)")
    return "\n".join(lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        report, code = args.func(args)
    except StratkosError as e:
        err = {"tool": "stratkos", "schema": SCHEMA, "command": args.command,
               "input": {"file": getattr(args, "file", None)}, "field": None,
               "bound": None, "result": None,
               "witness": {"error": str(e)}, "status": "error"}
        if getattr(args, "json", False):
            print(json.dumps(err, sort_keys=True, default=str))
        else:
            print(f"error: {e}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - started
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        print(render_text(report, elapsed))
    return code


if __name__ == "__main__":
    sys.exit(main())
