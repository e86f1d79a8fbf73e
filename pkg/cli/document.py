"""
Serialization of a mined lattice: the JSON lattice document, Graphviz DOT and
the plain-text rule listing.

Documents are built the same way from a pipeline run and from the oracle, so
two results can be compared with diff_documents.
"""
import json
from typing import Any, Iterable

from mining.base import MiningRun
from mining.context import MiningParams, TransactionContext
from mining.itemset import Itemset
from mining.oracle import OracleResult
from mining.rules import GenericRule

LatticeDocument = dict[str, Any]


def _labels(ctx: TransactionContext, s: Itemset) -> list[int]:
    return ctx.labels_of(s)


def format_itemset(ctx: TransactionContext, s: Itemset) -> str:
    return " ".join(str(label) for label in ctx.labels_of(s)) if s else "{}"


def _assemble(
    ctx: TransactionContext,
    params: MiningParams,
    classes: Iterable[tuple[Itemset, int, list[Itemset]]],
    arcs: Iterable[tuple[Itemset, Itemset]],
    rules: Iterable[GenericRule],
) -> LatticeDocument:
    # ids follow (support desc, representative), so the bottom class is 0
    ordered = sorted(classes, key=lambda c: (-c[1], min(c[2])))
    ids = {closure: i for i, (closure, _, _) in enumerate(ordered)}
    upper: dict[Itemset, list[int]] = {closure: [] for closure, _, _ in ordered}
    for low, up in arcs:
        upper[low].append(ids[up])

    return {
        "metadata": {
            "context": ctx.name,
            "objects": ctx.n_objects,
            "items": ctx.n_items,
            "minsupp": params.minsupp_abs,
            "minconf": str(params.minconf),
        },
        "classes": [
            {
                "id": ids[closure],
                "support": support,
                "closure": _labels(ctx, closure),
                "generators": [_labels(ctx, g) for g in sorted(generators)],
                "upper_covers": sorted(upper[closure]),
            }
            for closure, support, generators in ordered
        ],
        "rules": [
            {
                "kind": rule.kind.value,
                "premise": _labels(ctx, rule.premise),
                "conclusion": _labels(ctx, rule.conclusion),
                "support": rule.support,
                "confidence_num": rule.confidence.numerator,
                "confidence_den": rule.confidence.denominator,
            }
            for rule in sorted(rules, key=lambda r: r.sort_key)
        ],
    }


def build_document(run: MiningRun) -> LatticeDocument:
    """Document of a completed pipeline run."""
    lattice = run.lattice
    classes = [(c.closure, c.support, [m.itemset for m in c.members]) for c in lattice.classes]
    arcs = [(low.closure, up.closure) for low, up in lattice.arcs()]
    return _assemble(run.context, run.params, classes, arcs, run.rules.all_rules)


def build_oracle_document(ctx: TransactionContext, params: MiningParams, result: OracleResult) -> LatticeDocument:
    """Document of a brute-force result, in the same layout."""
    classes = [(closure, result.closed_sets[closure], gens) for closure, gens in result.classes.items()]
    return _assemble(ctx, params, classes, result.hasse, result.bg + result.ri)


def to_json(doc: LatticeDocument) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_dot(doc: LatticeDocument) -> str:
    """Hasse diagram, edges from predecessor to successor."""
    def show(labels: list[int]) -> str:
        return " ".join(map(str, labels)) if labels else "{}"

    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for c in doc["classes"]:
        generators = ", ".join(show(g) for g in c["generators"])
        label = f"{show(c['closure'])} ({c['support']}) | {generators}"
        lines.append(f'  n{c["id"]} [label="{label}"];')
    for c in doc["classes"]:
        for up in c["upper_covers"]:
            lines.append(f"  n{c['id']} -> n{up};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def rules_text(ctx: TransactionContext, rules: Iterable[GenericRule]) -> str:
    """One rule per line: premise => conclusion (supp=s, conf=p/q)."""
    return "".join(rule.format(lambda s: format_itemset(ctx, s)) + "\n" for rule in rules)


def diff_documents(expected: LatticeDocument, actual: LatticeDocument) -> list[str]:
    """Human-readable differences between two documents; empty when equal."""
    diffs = []
    for key in sorted(set(expected["metadata"]) | set(actual["metadata"])):
        a, b = expected["metadata"].get(key), actual["metadata"].get(key)
        if a != b and key != "context":
            diffs.append(f"metadata.{key}: expected {a!r}, got {b!r}")

    exp_classes, act_classes = expected["classes"], actual["classes"]
    if len(exp_classes) != len(act_classes):
        diffs.append(f"classes: expected {len(exp_classes)}, got {len(act_classes)}")
    for a, b in zip(exp_classes, act_classes):
        for field in ("support", "closure", "generators", "upper_covers"):
            if a[field] != b[field]:
                diffs.append(f"class {a['id']}.{field}: expected {a[field]}, got {b[field]}")

    def rule_keys(doc):
        return {json.dumps(r, sort_keys=True) for r in doc["rules"]}

    exp_rules, act_rules = rule_keys(expected), rule_keys(actual)
    diffs.extend(f"missing rule {r}" for r in sorted(exp_rules - act_rules))
    diffs.extend(f"unexpected rule {r}" for r in sorted(act_rules - exp_rules))
    return diffs
