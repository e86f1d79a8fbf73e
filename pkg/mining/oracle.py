"""
Brute-force reference miner.

Every itemset of the context is enumerated and closed through the Galois
operators; nothing from the level-wise pipeline is reused. Exponential in
the number of items, guarded by max_items.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .context import MiningParams, TransactionContext
from .errors import MiningError, OracleRefusal
from .itemset import Itemset, all_subsets, difference, is_subset, make_itemset
from .rules import GenericRule, RuleKind

logger = logging.getLogger(__name__)


@dataclass
class OracleResult:
    closed_sets: dict[Itemset, int]
    # closed set -> its minimal generators, sorted
    classes: dict[Itemset, list[Itemset]]
    hasse: list[tuple[Itemset, Itemset]]
    bg: list[GenericRule]
    ri: list[GenericRule]
    empty_closure: Itemset


def _closure(ctx: TransactionContext, s: Itemset) -> Itemset:
    return ctx.galois_phi(ctx.galois_psi(s))


def check_closure_laws(closures: dict[Itemset, Itemset], items: Itemset) -> list[str]:
    """Extensivity, idempotence and isotony of a complete closure table."""
    problems = []
    for s, c in closures.items():
        if not is_subset(s, c):
            problems.append(f"not extensive on {s}")
        if closures[c] != c:
            problems.append(f"not idempotent on {s}")
        for item in difference(items, s):
            t = make_itemset(s + (item,))
            if not is_subset(c, closures[t]):
                problems.append(f"not isotone on {s} <= {t}")
    return problems


def oracle_mine(ctx: TransactionContext, params: MiningParams, max_items: int = 20) -> OracleResult:
    """Closed sets, generators, covers and rule bases by exhaustive enumeration."""
    if ctx.n_items > max_items:
        raise OracleRefusal(f"{ctx.n_items} items exceed the oracle limit of {max_items}")

    all_items = tuple(range(ctx.n_items))
    closures = {s: _closure(ctx, s) for s in all_subsets(all_items)}
    problems = check_closure_laws(closures, all_items)
    if problems:
        raise MiningError(f"closure operator check failed: {problems[:3]}")

    empty_closure = closures[()]
    supports = {s: ctx.support(s) for s in closures}

    # the class of the empty set is kept even when infrequent
    members: dict[Itemset, list[Itemset]] = {}
    for s, c in closures.items():
        if supports[s] >= params.minsupp_abs or c == empty_closure:
            members.setdefault(c, []).append(s)

    classes = {
        c: sorted(s for s in group if not any(is_subset(t, s) and t != s for t in group))
        for c, group in members.items()
    }
    closed_sets = {c: supports[c] for c in classes}

    order = nx.DiGraph()
    order.add_nodes_from(closed_sets)
    order.add_edges_from((a, b) for a in closed_sets for b in closed_sets
                         if a != b and is_subset(a, b))
    hasse = sorted(nx.transitive_reduction(order).edges())

    frequent_bottom = supports[()] >= params.minsupp_abs
    bg = [
        GenericRule(g, difference(c, g), closed_sets[c], Fraction(1), RuleKind.EXACT)
        for c, gens in classes.items()
        if c != empty_closure or frequent_bottom
        for g in gens
        if g != c
    ]
    ri = []
    for low, up in hasse:
        confidence = Fraction(closed_sets[up], closed_sets[low])
        if confidence >= params.minconf:
            ri.extend(GenericRule(g, difference(up, g), closed_sets[up], confidence, RuleKind.APPROXIMATE)
                      for g in classes[low])

    bg.sort(key=lambda r: r.sort_key)
    ri.sort(key=lambda r: r.sort_key)
    logger.debug("oracle on %s: %d closed sets, %d arcs", ctx.name, len(closed_sets), len(hasse))
    return OracleResult(closed_sets, classes, hasse, bg, ri, empty_closure)
