"""
First stage: level-wise extraction of the frequent minimal generators,
their negative border and the closure of the empty set.

Supports of candidates are counted against the context; every other support
question is answered from the generator trie without touching the context.
"""
import logging
from dataclasses import dataclass, field
from itertools import groupby
from typing import Callable, Iterator, NamedTuple, Optional

from .base import BaseStage, MiningRun
from .context import MiningParams, TransactionContext
from .itemset import Itemset, immediate_subsets

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class GeneratorRecord:
    """
    One minimal generator.

    immediate_subsets is filled by stage 1, representative and
    successor_list by stage 2, closure by stage 3.
    """
    itemset: Itemset
    support: int
    immediate_subsets: list["GeneratorRecord"] = field(default_factory=list)
    representative: Optional["GeneratorRecord"] = None
    successor_list: list["GeneratorRecord"] = field(default_factory=list)
    closure: Optional[Itemset] = None

    @property
    def size(self) -> int:
        return len(self.itemset)

    def __repr__(self) -> str:
        return f"GeneratorRecord({self.itemset}, support={self.support})"


class BorderEntry(NamedTuple):
    itemset: Itemset
    support: int


@dataclass(frozen=True)
class SupportInference:
    """
    Answer of a support query on the trie.

    exact is False when the walk stopped early on a generator whose support
    is below the requested threshold; support is then that witness' value,
    an upper bound of the real one.
    """
    frequent: bool
    support: Optional[int] = None
    exact: bool = True


INFREQUENT = SupportInference(frequent=False)


class _TrieNode:
    __slots__ = ("children", "record", "border_support")

    def __init__(self):
        self.children: dict[int, "_TrieNode"] = {}
        self.record: Optional[GeneratorRecord] = None
        self.border_support: Optional[int] = None


class GeneratorTrie:
    """
    Lexicographic prefix tree holding the frequent minimal generators and the
    infrequent ones of the negative border.

    Frequent generators form an order ideal, so every root path spells a
    generator and a single tree serves every level.
    """

    def __init__(self, root: GeneratorRecord, ignored: frozenset[int], minsupp: int):
        self._root = _TrieNode()
        self._root.record = root
        self.ignored = ignored
        self.minsupp = minsupp

    @property
    def root(self) -> GeneratorRecord:
        return self._root.record

    def _node(self, itemset: Itemset, create: bool = False) -> Optional[_TrieNode]:
        node = self._root
        for item in itemset:
            child = node.children.get(item)
            if child is None:
                if not create:
                    return None
                child = node.children[item] = _TrieNode()
            node = child
        return node

    def insert_generator(self, record: GeneratorRecord):
        self._node(record.itemset, create=True).record = record

    def insert_border(self, itemset: Itemset, support: int):
        self._node(itemset, create=True).border_support = support

    def get(self, itemset: Itemset) -> Optional[GeneratorRecord]:
        """Frequent generator record stored for itemset, if any."""
        node = self._node(itemset)
        return node.record if node is not None else None

    def is_generator(self, itemset: Itemset) -> bool:
        return self.get(itemset) is not None

    def generators(self) -> Iterator[GeneratorRecord]:
        stack = [self._root]
        while stack:
            node = stack.pop()
            if node.record is not None:
                yield node.record
            stack.extend(node.children.values())

    def border(self) -> list[BorderEntry]:
        entries = []
        stack: list[tuple[_TrieNode, Itemset]] = [(self._root, ())]
        while stack:
            node, path = stack.pop()
            if node.border_support is not None:
                entries.append(BorderEntry(path, node.border_support))
            stack.extend((child, path + (item,)) for item, child in node.children.items())
        return sorted(entries)

    def infer_support(self, s: Itemset, threshold: Optional[int] = None) -> SupportInference:
        """
        Support of s from the stored generators alone.

        s is infrequent as soon as it contains a border itemset; otherwise
        its support is the smallest support among its generator subsets.
        With a threshold, the walk stops at the first generator subset whose
        support falls below it.
        """
        if self.ignored:
            s = tuple(i for i in s if i not in self.ignored)

        best = self._root.record.support
        if threshold is not None and best < threshold:
            return SupportInference(True, best, exact=False)

        stack = [(self._root, 0)]
        while stack:
            node, pos = stack.pop()
            for j in range(pos, len(s)):
                child = node.children.get(s[j])
                if child is None:
                    continue
                if child.border_support is not None:
                    return INFREQUENT
                support = child.record.support
                if support < best:
                    best = support
                    if threshold is not None and best < threshold:
                        return SupportInference(True, best, exact=False)
                stack.append((child, j + 1))

        if best < self.minsupp:
            return INFREQUENT
        return SupportInference(True, best)


def infer_support(trie: GeneratorTrie, s: Itemset, threshold: Optional[int] = None) -> SupportInference:
    return trie.infer_support(s, threshold)


@dataclass
class CandidateBatch:
    """Outcome of one level-wise step."""
    generators: list[GeneratorRecord]
    border: list[BorderEntry]
    candidates: int = 0
    non_minimal_frequent: int = 0


@dataclass
class MinerOutput:
    """Frequent generators by descending support, border and gamma(empty set)."""
    gmf_sorted: list[GeneratorRecord]
    border: list[BorderEntry]
    empty_closure: Itemset
    trie: GeneratorTrie
    n_objects: int
    # size of the first frequent candidate found not minimal, if any
    first_unclosed_level: Optional[int] = None

    @property
    def bottom(self) -> GeneratorRecord:
        return self.gmf_sorted[0]

    def support_groups(self) -> list[tuple[int, list[GeneratorRecord]]]:
        return [(support, list(group))
                for support, group in groupby(self.gmf_sorted, key=lambda r: r.support)]


def candidate_step(
    ctx: TransactionContext,
    trie: GeneratorTrie,
    level: list[GeneratorRecord],
    minsupp: int,
) -> CandidateBatch:
    """
    Build the generators of size k + 1 from the lexicographically sorted
    generators of size k.

    Candidates join two generators sharing their first k - 1 items. A
    candidate with a missing immediate subset breaks the order ideal and is
    dropped; one whose counted support equals the minimum of its immediate
    subsets is not minimal and is dropped too.
    """
    batch = CandidateBatch(generators=[], border=[])

    for _, group in groupby(level, key=lambda r: r.itemset[:-1]):
        members = list(group)
        for a_pos, a in enumerate(members):
            for b in members[a_pos + 1:]:
                candidate = a.itemset + (b.itemset[-1],)

                subsets: list[GeneratorRecord] = []
                estimated = None
                for sub in immediate_subsets(candidate):
                    record = trie.get(sub)
                    if record is None:
                        break
                    subsets.append(record)
                    if estimated is None or record.support < estimated:
                        estimated = record.support
                else:
                    batch.candidates += 1
                    real = ctx.support(candidate)
                    if real == estimated:
                        if real >= minsupp:
                            batch.non_minimal_frequent += 1
                    elif real >= minsupp:
                        record = GeneratorRecord(candidate, real, subsets)
                        trie.insert_generator(record)
                        batch.generators.append(record)
                    else:
                        trie.insert_border(candidate, real)
                        batch.border.append(BorderEntry(candidate, real))

    return batch


def gen_gms(
    ctx: TransactionContext,
    params: MiningParams,
    level_hook: Optional[Callable[[int, int], None]] = None,
) -> MinerOutput:
    """
    Extract every frequent minimal generator with its support.

    Items held by every object form gamma(empty set) and never enter a
    candidate. level_hook, when given, receives (level, generators found).
    """
    n = ctx.n_objects
    minsupp = params.minsupp_abs
    root = GeneratorRecord((), n)

    supports = [column.count() for column in ctx.column_bitmaps]
    empty_closure = tuple(i for i, supp in enumerate(supports) if supp == n)
    trie = GeneratorTrie(root, frozenset(empty_closure), minsupp)

    level: list[GeneratorRecord] = []
    for i, supp in enumerate(supports):
        if supp == n or n < minsupp:
            # with the empty set infrequent no itemset has all proper subsets frequent
            continue
        if supp >= minsupp:
            record = GeneratorRecord((i,), supp, [root])
            trie.insert_generator(record)
            level.append(record)
        else:
            trie.insert_border((i,), supp)

    generators = [root] + level
    first_unclosed = None
    k = 1
    logger.debug("level 1: %d frequent items, gamma(empty)=%s", len(level), empty_closure)
    if level_hook:
        level_hook(1, len(level))

    while level:
        batch = candidate_step(ctx, trie, level, minsupp)
        k += 1
        if batch.non_minimal_frequent and first_unclosed is None:
            first_unclosed = k
        logger.debug(
            "level %d: %d candidates, %d generators, %d border",
            k, batch.candidates, len(batch.generators), len(batch.border),
        )
        generators.extend(batch.generators)
        level = batch.generators
        if level_hook:
            level_hook(k, len(level))

    gmf_sorted = sorted(generators, key=lambda r: (-r.support, r.itemset))
    return MinerOutput(
        gmf_sorted=gmf_sorted,
        border=trie.border(),
        empty_closure=empty_closure,
        trie=trie,
        n_objects=n,
        first_unclosed_level=first_unclosed,
    )


class GeneratorStage(BaseStage):
    """Stage 1: minimal generators and negative border."""

    STAGE_NAME = "generators"
    PROGRESS_SPAN = (0.0, 40.0)

    def _execute(self, run: MiningRun) -> str:
        n_items = max(1, run.context.n_items)

        def hook(k: int, found: int):
            self._report(min(0.95, k / n_items), f"level {k}: {found} generators")

        output = gen_gms(run.context, run.params, level_hook=hook)
        run.miner_output = output
        return f"{len(output.gmf_sorted)} generators, {len(output.border)} border"
