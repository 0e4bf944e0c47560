"""Seidenberg reduction: blow up non-simple singularities until every
terminal singularity has at least one nonzero eigenvalue, while tracking the
divisor combinatorics (self-intersections, invariance, field orders and the
dual graph).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import BiPoly, GaussRat, UniPoly
from .blowup import CHART_SY, CHART_XT, BlowupResult, blow_up
from .charts import MeroField
from .invariants import classify_singularity, eigen_data, is_simple, EigenData


class ResolutionError(Exception):
    def __init__(self, message, factor: Optional[UniPoly] = None):
        super().__init__(message)
        self.factor = factor


@dataclass
class DivisorComponent:
    id: int
    self_intersection: int
    invariant: bool
    field_order: int
    birth_center: Optional[int]  # index of the blow-up node that created it
    created_by_blowup: bool = True


@dataclass(frozen=True)
class BlowupNode:
    index: int
    center_germ: MeroField
    center_components: tuple  # component ids through the center
    result: BlowupResult
    new_component: int


@dataclass(frozen=True)
class TerminalSingularity:
    components: tuple  # ids of divisor components through the point
    node: Optional[int]  # blow-up node where it lives (None: the root germ)
    chart: str
    location: tuple
    kind: str
    eigen: EigenData
    germ: MeroField


@dataclass
class ResolutionTree:
    root: MeroField
    nodes: list
    components: dict  # id -> DivisorComponent
    edges: set  # frozenset pairs of component ids
    terminal_singularities: list

    def created_components(self):
        return [c for c in self.components.values() if c.created_by_blowup]

    def blowup_count(self) -> int:
        return len(self.nodes)

    def has_dicritical_component(self) -> bool:
        return any(not c.invariant for c in self.created_components())

    def to_json(self):
        def loc_enc(loc):
            return [str(loc[0]), str(loc[1])]

        return {
            "blowups": [
                {
                    "index": n.index,
                    "center_components": list(n.center_components),
                    "new_component": n.new_component,
                    "exceptional_order": n.result.exceptional_order,
                    "dicritical": n.result.dicritical,
                }
                for n in self.nodes
            ],
            "components": [
                {
                    "id": c.id,
                    "self_intersection": c.self_intersection,
                    "invariant": c.invariant,
                    "field_order": c.field_order,
                    "birth_center": c.birth_center,
                    "created_by_blowup": c.created_by_blowup,
                }
                for c in sorted(self.components.values(), key=lambda c: c.id)
            ],
            "edges": sorted(sorted(e) for e in self.edges),
            "terminals": [
                {
                    "components": list(t.components),
                    "node": t.node,
                    "chart": t.chart,
                    "location": loc_enc(t.location),
                    "kind": t.kind,
                    "trace": str(t.eigen.trace),
                    "det": str(t.eigen.det),
                    "ratio_class": t.eigen.ratio_class,
                }
                for t in self.terminal_singularities
            ],
        }


@dataclass(frozen=True)
class _Pending:
    germ: MeroField
    through: tuple  # (component id, local equation BiPoly)
    node: Optional[int]
    chart: str
    location: tuple
    order_key: tuple


def _loc_key(loc):
    a, b = loc
    return (a.re, a.im, b.re, b.im)


def _transform_through(through, chart, t0_loc):
    """Proper-transform the through-equations into a blow-up chart and keep
    the ones passing through the given divisor point (translated to 0)."""
    out = []
    x, t = BiPoly.var_x(), BiPoly.var_y()
    for cid, eq in through:
        if chart == CHART_XT:
            total = eq.subst(x, t * x)
            k = total.ord_x()
            proper = BiPoly({(i - k, j): c for (i, j), c in total.terms.items()})
        else:
            total = eq.subst(x * t, t)
            k = total.ord_y()
            proper = BiPoly({(i, j - k): c for (i, j), c in total.terms.items()})
        shifted = proper.shift(t0_loc[0], t0_loc[1])
        if shifted.eval(GaussRat(0), GaussRat(0)).is_zero():
            out.append((cid, shifted))
    return out


def seidenberg_resolve(
    germ: MeroField,
    max_blowups: int = 64,
    initial_curves: tuple = (),
    force_first: bool = False,
) -> ResolutionTree:
    """Blow up every non-simple singularity until all are simple.

    initial_curves: (id, equation, self_intersection, invariant, field_order)
    tuples for boundary curves already present (e.g. the line at infinity);
    their ids must be <= 0.  force_first blows the root up once even if it is
    already simple.
    """
    components: dict = {}
    for cid, eq, si, inv, fo in initial_curves:
        components[cid] = DivisorComponent(cid, si, inv, fo, None, False)
    tree = ResolutionTree(germ, [], components, set(), [])
    pending = [
        _Pending(
            germ,
            tuple((cid, eq) for cid, eq, *_ in initial_curves),
            None,
            "root",
            (GaussRat(0), GaussRat(0)),
            (-1, "root", _loc_key((GaussRat(0), GaussRat(0)))),
        )
    ]
    forced = force_first
    next_id = 1
    while pending:
        pending.sort(key=lambda item: item.order_key)
        item = pending.pop(0)
        kind = classify_singularity(item.germ)
        if kind == "REGULAR" and not (forced and item.node is None):
            continue
        # centers: singularities with both eigenvalues zero, plus radial-jet
        # points (vanishing tangent-cone pairing), whose first blow-up is
        # dicritical and must be exhibited
        radial_jet = item.germ.core.tangent_pairing().is_zero()
        if is_simple(item.germ) and not radial_jet and not (forced and item.node is None):
            tree.terminal_singularities.append(
                TerminalSingularity(
                    tuple(sorted(cid for cid, _ in item.through)),
                    item.node,
                    item.chart,
                    item.location,
                    kind,
                    eigen_data(item.germ),
                    item.germ,
                )
            )
            continue
        forced = False
        if len(tree.nodes) >= max_blowups:
            raise ResolutionError(f"blow-up budget of {max_blowups} exhausted")
        result = blow_up(item.germ, allow_regular=True)
        if result.unresolved:
            raise ResolutionError(
                "non-rational singularity on the exceptional divisor",
                factor=result.unresolved[0][1],
            )
        node_index = len(tree.nodes)
        new_id = next_id
        next_id += 1
        through_ids = tuple(sorted(cid for cid, _ in item.through))
        tree.nodes.append(
            BlowupNode(node_index, item.germ, through_ids, result, new_id)
        )
        tree.components[new_id] = DivisorComponent(
            new_id, -1, not result.dicritical, result.exceptional_order, node_index
        )
        for cid in through_ids:
            tree.components[cid].self_intersection -= 1
            tree.edges.add(frozenset((cid, new_id)))
        for pair in [frozenset((a, b)) for a in through_ids for b in through_ids if a < b]:
            tree.edges.discard(pair)
        for chart, loc, _eig in result.divisor_singularities:
            m = result.chart_xt if chart == CHART_XT else result.chart_sy
            local = m.shift(loc[0], loc[1])
            divisor_eq = BiPoly.var_x() if chart == CHART_XT else BiPoly.var_y()
            through = [(new_id, divisor_eq)] + _transform_through(
                item.through, chart, loc
            )
            pending.append(
                _Pending(
                    local,
                    tuple(through),
                    node_index,
                    chart,
                    loc,
                    (new_id, chart, _loc_key(loc)),
                )
            )
    return tree


@dataclass(frozen=True)
class AdaptedPolesReport:
    adapted: bool
    offending_components: tuple

    def to_json(self):
        return {
            "adapted": self.adapted,
            "offending_components": list(self.offending_components),
        }


def adapted_poles(tree: ResolutionTree) -> AdaptedPolesReport:
    """Every invariant created component must be a zero or pole component.

    An empty tree (already-simple root) is probed with one forced blow-up so
    that the answer never rests on a vacuous quantifier.
    """
    comps = tree.created_components()
    if not comps:
        probe = blow_up(tree.root, allow_regular=True)
        comps = [
            DivisorComponent(1, -1, not probe.dicritical, probe.exceptional_order, 0)
        ]
    offending = tuple(
        c.id for c in comps if c.invariant and c.field_order == 0
    )
    return AdaptedPolesReport(not offending, offending)


def dual_graph_dot(tree: ResolutionTree) -> str:
    """Dual graph of the divisor in DOT form: one node per component, one
    edge per intersection, terminal singularities as annotated leaves."""
    lines = ["graph resolution {"]
    for c in sorted(tree.components.values(), key=lambda c: c.id):
        shape = "box" if c.created_by_blowup else "ellipse"
        lines.append(
            f'  D{c.id} [label="D{c.id} (s={c.self_intersection}, ord={c.field_order})", shape={shape}];'
        )
    for e in sorted(sorted(pair) for pair in tree.edges):
        lines.append(f"  D{e[0]} -- D{e[1]};")
    for k, t in enumerate(tree.terminal_singularities):
        label = f"{t.kind} ratio={t.eigen.ratio}" if t.eigen.ratio is not None else t.kind
        lines.append(f'  t{k} [label="{label}", shape=plaintext];')
        for cid in t.components:
            lines.append(f"  D{cid} -- t{k} [style=dotted];")
    lines.append("}")
    return "\n".join(lines) + "\n"
