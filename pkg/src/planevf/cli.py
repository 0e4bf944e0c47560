"""Command line interface: parse a field, run an analysis, print text or JSON.

Exit codes: 0 on success (whatever the verdict), 1 on analysis errors such as
a non-rational singularity or an exhausted blow-up budget, 2 on usage errors
including syntax errors in the input expression.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraError, BiPoly, GaussRat
from .blowup import BlowupError
from .charts import ChartError, make_mero_field, singularities_at_infinity, to_chart
from .fields import FieldError, PolyVectorField, infinity_invariant, saturate
from .invariants import (
    DEFAULT_TRUNCATION,
    CurveWitness,
    InvariantError,
    asymptotic_order,
    dicritical_hint,
    eigen_data,
    index_along,
    milnor_number,
    multiplicity_along,
)
from .parse import (
    ParseError,
    format_field,
    format_polynomial,
    parse_polynomial,
    parse_vector_field,
)
from .pipeline import (
    PipelineError,
    classify_top_component,
    completeness_verdict,
    invariant_line_escape,
    theorem_a_match,
)
from .resolution import ResolutionError, adapted_poles, dual_graph_dot, seidenberg_resolve
from .rules import (
    LaurentGerm,
    RuleError,
    check_le31,
    classify_saddle_node,
    recognize_model,
    sc_1d_germ,
    timeform_residues,
    ModelPreconditionError,
)

ANALYSIS_ERRORS = (
    AlgebraError,
    BlowupError,
    ChartError,
    FieldError,
    InvariantError,
    ModelPreconditionError,
    PipelineError,
    ResolutionError,
    RuleError,
)


def _parse_germ(args) -> "MeroField":
    field = parse_vector_field(args.expr)
    num = parse_polynomial(args.num) if args.num else BiPoly.const(1)
    den = parse_polynomial(args.den) if args.den else BiPoly.const(1)
    return make_mero_field(field.p_comp, field.q_comp, num, den)


def _parse_line(text: str) -> CurveWitness:
    if text.strip() == "y":
        return CurveWitness.x_axis()
    if text.strip() == "x":
        return CurveWitness.y_axis()
    p = parse_polynomial(text)
    if p.degree() != 1 or not p.coeff(0, 0).is_zero():
        raise ParseError("line must be a*x + b*y", 1, 1)
    return CurveWitness.line(p.coeff(1, 0), p.coeff(0, 1))


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_analyze(args) -> int:
    field = parse_vector_field(args.expr)
    sat = saturate(field)
    inv = infinity_invariant(field)
    payload = {
        "field": format_field(field),
        "degree": field.degree(),
        "scalar_factor": format_polynomial(sat.scalar),
        "core_degree": sat.core_degree,
        "infinity_line_invariant": inv,
    }
    lines = [
        f"field: {format_field(field)}",
        f"degree: {field.degree()}",
        f"scalar factor: {format_polynomial(sat.scalar)} (core degree {sat.core_degree})",
        f"line at infinity invariant: {inv}",
    ]
    if field.degree() >= 2 and inv:
        top = classify_top_component(field)
        payload["top_component_item"] = top.item
        payload["top_component_parameters"] = [str(p) for p in top.parameters]
        lines.append(f"top component: item {top.item} parameters {top.parameters}")
    if field.degree() >= 1:
        scan = singularities_at_infinity(
            field, hint_fn=lambda local: (eigen_data(local), _hint_or_unknown(local, args.trunc))
        )
        pts = []
        for pt in scan.points:
            rec = {
                "chart": pt.chart,
                "location": [str(pt.location[0]), str(pt.location[1])],
                "ratio_class": pt.eigen.ratio_class if pt.eigen else None,
                "ratio": str(pt.eigen.ratio) if pt.eigen and pt.eigen.ratio is not None else None,
                "dicritical_hint": pt.dicritical_hint,
            }
            pts.append(rec)
            lines.append(
                f"infinity singularity: chart {rec['chart']} at {rec['location']} "
                f"class {rec['ratio_class']} hint {rec['dicritical_hint']}"
            )
        payload["infinity_singularities"] = pts
        payload["unresolved_factors"] = [
            {"chart": c, "degree": r.degree()} for c, r in scan.unresolved
        ]
    verdict = completeness_verdict(field, truncation=args.trunc, max_blowups=args.max_blowups)
    payload["verdict"] = verdict.to_json()
    lines.append(f"verdict: {verdict.status}")
    _emit(args, payload, lines)
    return 0


def _hint_or_unknown(local, trunc):
    try:
        return dicritical_hint(local, trunc)
    except ANALYSIS_ERRORS:
        return "needs-resolution"


def _cmd_resolve(args) -> int:
    if args.germ:
        germ = _parse_germ(args)
    else:
        field = parse_vector_field(args.expr)
        scan = singularities_at_infinity(field)
        if args.infinity >= len(scan.points):
            print(
                f"error: infinity singularity index {args.infinity} out of range "
                f"({len(scan.points)} found)",
                file=sys.stderr,
            )
            return 1
        pt = scan.points[args.infinity]
        chart_field = to_chart(field, pt.chart)
        germ = chart_field.shift(pt.location[0], pt.location[1])
    tree = seidenberg_resolve(germ, max_blowups=args.max_blowups)
    if args.dot:
        print(dual_graph_dot(tree), end="")
        return 0
    payload = tree.to_json()
    payload["adapted_poles"] = adapted_poles(tree).to_json()
    lines = [
        f"blow-ups: {tree.blowup_count()}",
        f"components: "
        + ", ".join(
            f"D{c.id}(s={c.self_intersection}, ord={c.field_order}, inv={c.invariant})"
            for c in tree.created_components()
        ),
        f"terminal singularities: "
        + "; ".join(
            f"{t.kind} at {t.chart}{[str(v) for v in t.location]}"
            for t in tree.terminal_singularities
        ),
        f"adapted poles: {adapted_poles(tree).adapted}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_invariants(args) -> int:
    germ = _parse_germ(args)
    witness = _parse_line(args.line)
    mult = multiplicity_along(germ, witness)
    ind = index_along(germ, witness, args.trunc)
    asy = asymptotic_order(germ, witness, args.trunc)
    mil = milnor_number(germ)
    payload = {
        "multiplicity": mult,
        "index": str(ind),
        "asymptotic_order": str(asy),
        "milnor": mil if mil is not None else "undefined",
    }
    _emit(
        args,
        payload,
        [
            f"multiplicity along line: {mult}",
            f"index along line: {ind}",
            f"asymptotic order: {asy}",
            f"milnor number: {payload['milnor']}",
        ],
    )
    return 0


def _cmd_check_complete(args) -> int:
    field = parse_vector_field(args.expr)
    verdict = completeness_verdict(field, truncation=args.trunc, max_blowups=args.max_blowups)
    payload = verdict.to_json()
    lines = [f"status: {verdict.status}"]
    for step in verdict.certificate:
        lines.append(f"  step: {dict(step)['rule']}")
    _emit(args, payload, lines)
    return 0


def _cmd_sc_rules(args) -> int:
    if args.rule == "obsidiota":
        poly = parse_polynomial(args.expr)
        if poly.ord_y() not in (None, 0) or any(j for _i, j in poly.terms):
            print("error: obsidiota expects a polynomial in x only", file=sys.stderr)
            return 2
        coeffs = {i - args.pole: c for (i, _j), c in poly.terms.items()}
        verdict = sc_1d_germ(LaurentGerm.of(coeffs))
        print(json.dumps(verdict.to_json(), indent=2))
        return 0
    if args.rule == "le31":
        num = parse_polynomial(args.num or "1")
        den = parse_polynomial(args.den or "1")
        verdict = check_le31(num, den, args.m, args.n)
        print(json.dumps(verdict.to_json(), indent=2))
        return 0
    if args.rule == "selano":
        germ = _parse_germ(args)
        data = classify_saddle_node(germ, args.trunc)
        payload = {
            "p": data.p,
            "pole_order_on_strong": data.pole_order_on_strong,
            "form": data.selano_form,
            "verdict": data.verdict().to_json(),
        }
        print(json.dumps(payload, indent=2))
        return 0
    if args.rule == "model":
        germ = _parse_germ(args)
        tag = recognize_model(germ)
        print(json.dumps(tag.to_json(), indent=2))
        return 0
    if args.rule == "timeform":
        germ = _parse_germ(args)
        witness = _parse_line(args.line)
        points, flagged = timeform_residues(germ, witness)
        payload = {
            "residues": [{"at": str(pt), "residue": str(r)} for pt, r in points],
            "zero_sum_subsets": [list(s) for s in flagged],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"error: unknown rule {args.rule}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="planevf",
        description="Exact completeness analysis of planar polynomial vector fields",
    )
    ap.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION,
                    help="series truncation order for residues and normal forms")
    ap.add_argument("--max-blowups", type=int, default=64)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, expr_help):
        p.add_argument("expr", help=expr_help)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("analyze", help="full report for an affine field")
    common(p, "field expression, e.g. 'x^2*y Dx - x*y^2 Dy'")

    p = sub.add_parser("resolve", help="resolution tree of a germ or infinity point")
    common(p, "field or germ expression")
    p.add_argument("--germ", action="store_true", help="treat the input as a local germ at the origin")
    p.add_argument("--infinity", type=int, default=0, help="index of the infinity singularity to resolve")
    p.add_argument("--num", help="scalar numerator polynomial for a germ")
    p.add_argument("--den", help="scalar denominator polynomial for a germ")
    p.add_argument("--dot", action="store_true", help="print the dual graph in DOT form")

    p = sub.add_parser("invariants", help="multiplicity/index/asymptotic order along a line")
    common(p, "germ expression")
    p.add_argument("--line", required=True, help="'y' for {y=0}, 'x' for {x=0}, or a*x+b*y")
    p.add_argument("--num", help="scalar numerator polynomial")
    p.add_argument("--den", help="scalar denominator polynomial")

    p = sub.add_parser("check-complete", help="completeness verdict with certificate")
    common(p, "field expression")

    p = sub.add_parser("sc-rules", help="run a named semi-completeness rule")
    p.add_argument("rule", choices=["obsidiota", "le31", "selano", "model", "timeform"])
    p.add_argument("expr", nargs="?", default="0", help="expression for the rule")
    p.add_argument("--json", action="store_true")
    p.add_argument("--pole", type=int, default=0, help="obsidiota: pole order to divide by")
    p.add_argument("--num", help="scalar numerator polynomial")
    p.add_argument("--den", help="scalar denominator polynomial")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--line", default="y")
    return ap


def run_command(argv) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    handlers = {
        "analyze": _cmd_analyze,
        "resolve": _cmd_resolve,
        "invariants": _cmd_invariants,
        "check-complete": _cmd_check_complete,
        "sc-rules": _cmd_sc_rules,
    }
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except ANALYSIS_ERRORS as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
