"""
Third stage: closed itemsets and the generic bases of association rules.

The lattice is walked bottom-up; each class closure is the union of its
generators with the closure of any immediate predecessor. Exact rules go to
the generic base BG, approximate rules between adjacent classes to RI.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from .base import BaseStage, MiningRun
from .context import MiningParams, TransactionContext
from .itemset import Itemset, difference, union
from .lattice import EquivalenceClass, GeneratorLattice

logger = logging.getLogger(__name__)


class RuleKind(Enum):
    EXACT = "exact"
    APPROXIMATE = "approximate"

    @property
    def rank(self) -> int:
        return 0 if self is RuleKind.EXACT else 1


def truncate_confidence(confidence: Fraction) -> str:
    """Two-digit decimal, truncated: 2/3 gives "0.66"."""
    hundredths = confidence.numerator * 100 // confidence.denominator
    return f"{hundredths // 100}.{hundredths % 100:02d}"


@dataclass(frozen=True)
class GenericRule:
    """premise => conclusion, with the support of their union."""
    premise: Itemset
    conclusion: Itemset
    support: int
    confidence: Fraction
    kind: RuleKind

    @property
    def confidence_display(self) -> str:
        return truncate_confidence(self.confidence)

    @property
    def sort_key(self) -> tuple:
        return (self.kind.rank, -self.support, self.premise, self.conclusion)

    def format(self, label: Callable[[Itemset], str] = str) -> str:
        conf = self.confidence
        return (f"{label(self.premise)} => {label(self.conclusion)} "
                f"(supp={self.support}, conf={conf.numerator}/{conf.denominator})")

    def __str__(self) -> str:
        return self.format()


@dataclass
class RuleStats:
    closure_derivations: int = 0
    approximate_filtered: int = 0


@dataclass
class RuleBases:
    bg: list[GenericRule]
    ri: list[GenericRule]
    stats: RuleStats = field(default_factory=RuleStats)

    @property
    def all_rules(self) -> list[GenericRule]:
        return self.bg + self.ri


def derive_closure(
    cls: EquivalenceClass,
    predecessor_closure: Itemset,
    stats: Optional[RuleStats] = None,
) -> Itemset:
    """
    Closure of a class from its generators and one immediate predecessor.

    A closure already set is returned unchanged.
    """
    if cls.closure is not None:
        return cls.closure

    closure = predecessor_closure
    for member in cls.members:
        closure = union(closure, member.itemset)
    cls.closure = closure
    for member in cls.members:
        member.closure = closure
    if stats is not None:
        stats.closure_derivations += 1
    return closure


def _exact_rules(cls: EquivalenceClass) -> list[GenericRule]:
    return [
        GenericRule(g.itemset, difference(cls.closure, g.itemset), cls.support, Fraction(1), RuleKind.EXACT)
        for g in cls.members
        if g.itemset != cls.closure
    ]


def gen_bgrs(lat: GeneratorLattice, empty_closure: Itemset, params: MiningParams) -> RuleBases:
    """
    Derive every closure and emit the BG and RI rule bases.

    Classes are visited breadth-first from the bottom class, each once.
    Closures already derived by an earlier call are reused.
    """
    stats = RuleStats()
    bg: list[GenericRule] = []
    ri: list[GenericRule] = []

    bottom = lat.bottom
    derive_closure(bottom, empty_closure, stats)
    frequent_bottom = bottom.support >= params.minsupp_abs

    seen = {bottom}
    queue = deque([bottom])
    while queue:
        cls = queue.popleft()
        if cls is not bottom or frequent_bottom:
            bg.extend(_exact_rules(cls))

        for cover in cls.upper_covers:
            if cover not in seen:
                seen.add(cover)
                derive_closure(cover, cls.closure, stats)
                queue.append(cover)

            confidence = Fraction(cover.support, cls.support)
            if confidence < params.minconf:
                stats.approximate_filtered += len(cls.members)
                continue
            for g in cls.members:
                ri.append(GenericRule(
                    g.itemset, difference(cover.closure, g.itemset),
                    cover.support, confidence, RuleKind.APPROXIMATE,
                ))

    bg.sort(key=lambda r: r.sort_key)
    ri.sort(key=lambda r: r.sort_key)
    logger.debug("rules: %d exact, %d approximate (%d below minconf), %d closures", len(bg), len(ri),
                 stats.approximate_filtered, stats.closure_derivations)
    return RuleBases(bg=bg, ri=ri, stats=stats)


def validate_rule(rule: GenericRule, ctx: TransactionContext) -> bool:
    """Recount a rule's support and confidence on the context."""
    premise_support = ctx.support(rule.premise)
    if premise_support == 0:
        return False
    support = ctx.support(union(rule.premise, rule.conclusion))
    return support == rule.support and Fraction(support, premise_support) == rule.confidence


class RuleStage(BaseStage):
    """Stage 3: closures and rule bases."""

    STAGE_NAME = "rules"
    PROGRESS_SPAN = (75.0, 100.0)

    def _execute(self, run: MiningRun) -> str:
        run.rules = gen_bgrs(run.lattice, run.miner_output.empty_closure, run.params)
        stats = run.rules.stats
        return (f"{len(run.rules.bg)} exact, {len(run.rules.ri)} approximate, "
                f"{stats.approximate_filtered} below minconf")
