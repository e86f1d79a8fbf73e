"""
Second stage: the lattice of minimal generators.

Classes are keyed by a representative (their lexicographically smallest
generator) and ordered by comparing generators against the successor lists
of their immediate subsets' representatives. Only supports are compared;
no closure is ever computed here.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .base import BaseStage, MiningRun
from .errors import StateError
from .genminers import GeneratorRecord, GeneratorTrie, MinerOutput
from .itemset import Itemset, union

logger = logging.getLogger(__name__)


class Relation(Enum):
    SAME_CLASS = "same-class"
    X_SUCCESSOR_OF_Y = "x-successor-of-y"
    INCOMPARABLE = "incomparable"


def compare_classes(x: GeneratorRecord, y: GeneratorRecord, trie: GeneratorTrie) -> Relation:
    """
    Relation between the classes of x and y, with supp(x) <= supp(y).

    Same class iff supp(x) = supp(y) = supp(x u y); [x] succeeds [y] iff
    supp(x) < supp(y) and supp(x) = supp(x u y); incomparable otherwise.
    """
    u = union(x.itemset, y.itemset)
    if u == x.itemset:
        # y is a subset of x
        return Relation.X_SUCCESSOR_OF_Y if x.support < y.support else Relation.SAME_CLASS
    if trie.is_generator(u):
        # a generator has a strictly smaller support than both halves
        return Relation.INCOMPARABLE

    inferred = trie.infer_support(u, threshold=min(x.support, y.support))
    if not inferred.frequent or not inferred.exact or inferred.support != x.support:
        return Relation.INCOMPARABLE
    if x.support == y.support:
        return Relation.SAME_CLASS
    return Relation.X_SUCCESSOR_OF_Y


def find_representative(g: GeneratorRecord) -> GeneratorRecord:
    """Representative of g's class; g must have gone through stage 2."""
    if g.representative is None:
        raise StateError(f"generator {g.itemset} has not been placed in the lattice yet")
    return g.representative


@dataclass(eq=False)
class EquivalenceClass:
    """A lattice node: one closed itemset seen through its generators."""
    id: int
    representative: GeneratorRecord
    members: list[GeneratorRecord]
    support: int
    upper_covers: list["EquivalenceClass"] = field(default_factory=list)
    lower_covers: list["EquivalenceClass"] = field(default_factory=list)
    closure: Optional[Itemset] = None

    def __repr__(self) -> str:
        return f"EquivalenceClass(#{self.id}, {self.representative.itemset}, support={self.support})"


@dataclass
class LatticeStats:
    """Work counters of one gen_ordre run."""
    list_scans: int = 0
    duplicate_scans: int = 0
    comparisons: int = 0
    shortcut_generators: int = 0


@dataclass
class GeneratorLattice:
    """Classes sorted by (support desc, representative), bottom first."""
    classes: list[EquivalenceClass]
    class_of: dict[Itemset, EquivalenceClass]
    stats: LatticeStats = field(default_factory=LatticeStats)

    @property
    def bottom(self) -> EquivalenceClass:
        return self.classes[0]

    def arcs(self) -> list[tuple[EquivalenceClass, EquivalenceClass]]:
        return [(c, up) for c in self.classes for up in c.upper_covers]


class _OrderBuilder:
    """Runs the generator-insertion loop over one miner output."""

    def __init__(self, output: MinerOutput, shortcut: bool):
        self.output = output
        self.trie = output.trie
        self.stats = LatticeStats()
        self.members: dict[GeneratorRecord, list[GeneratorRecord]] = {}
        # placement state stays here until _assemble; MinerOutput records are shared
        self.rep_of: dict[GeneratorRecord, GeneratorRecord] = {}
        self.successors: dict[GeneratorRecord, list[GeneratorRecord]] = {}
        # list owners each representative has already been compared against
        self.visited: dict[GeneratorRecord, set[GeneratorRecord]] = {}
        self._scanned_pairs: set[tuple[Itemset, Itemset]] = set()

        # generators up to this size are closed (modulo gamma(empty set))
        level = output.first_unclosed_level
        if not shortcut:
            self.closed_size_limit = -1
        elif level is None:
            self.closed_size_limit = math.inf
        else:
            self.closed_size_limit = level - 2

    def _compare(self, x: GeneratorRecord, y: GeneratorRecord) -> Relation:
        self.stats.comparisons += 1
        return compare_classes(x, y, self.trie)

    def _representative(self, g: GeneratorRecord) -> GeneratorRecord:
        try:
            return self.rep_of[g]
        except KeyError:
            raise StateError(f"generator {g.itemset} has not been placed in the lattice yet") from None

    def _link(self, lower: GeneratorRecord, upper: GeneratorRecord):
        successors = self.successors.setdefault(lower, [])
        if upper not in successors:
            successors.append(upper)

    def _scan(
        self,
        x: GeneratorRecord,
        owner: GeneratorRecord,
        rep: Optional[GeneratorRecord] = None,
    ) -> tuple[list[GeneratorRecord], Optional[GeneratorRecord]]:
        """
        Compare x with the successors of owner, whose class x succeeds.

        Returns the immediate predecessors of [x] found at or above owner,
        and the representative of [x] when it is met and rep is unknown.
        A successor h preceding x is kept only if none of its own
        successors of larger support than x also precedes x.
        """
        self.stats.list_scans += 1
        pair = (x.itemset, owner.itemset)
        if pair in self._scanned_pairs:
            self.stats.duplicate_scans += 1
        self._scanned_pairs.add(pair)

        n = x.support
        preds: list[GeneratorRecord] = []
        precedes: dict[GeneratorRecord, bool] = {}
        found: Optional[GeneratorRecord] = None

        def expand(node: GeneratorRecord) -> bool:
            nonlocal found
            hit = False
            for h in self.successors.get(node, ()):
                if h.support < n:
                    continue
                if h.support == n:
                    if h is rep:
                        hit = True
                    elif rep is None and self._compare(x, h) is Relation.SAME_CLASS:
                        found = h
                        return True
                    continue
                known = precedes.get(h)
                if known is None:
                    known = self._compare(x, h) is Relation.X_SUCCESSOR_OF_Y
                    precedes[h] = known
                    if known and expand(h):
                        return True
                hit = hit or known
            if not hit:
                preds.append(node)
            return False

        expand(owner)
        return preds, found

    def _insert(self, g: GeneratorRecord):
        subsets = g.immediate_subsets

        if g.size <= self.closed_size_limit:
            # closed generator: its lower covers are its immediate subsets
            self.stats.shortcut_generators += 1
            self.rep_of[g] = g
            self.members[g] = [g]
            self.visited[g] = set()
            for s in subsets:
                self._link(s, g)
            return

        scanned: set[GeneratorRecord] = set()
        pred_g: list[GeneratorRecord] = []
        rep = None
        position = 0
        for position, g1 in enumerate(subsets):
            owner = self._representative(g1)
            if owner in scanned:
                continue
            scanned.add(owner)
            preds, rep = self._scan(g, owner)
            pred_g.extend(preds)
            if rep is not None:
                break

        if rep is None:
            self.rep_of[g] = g
            self.members[g] = [g]
            self.visited[g] = scanned
            for p in pred_g:
                self._link(p, g)
            return

        self.rep_of[g] = rep
        self.members[rep].append(g)
        for p in pred_g:
            self._link(p, rep)

        # remaining subsets go through the representative, starting again
        # from the list where it was met
        visited = self.visited[rep]
        for g1 in subsets[position:]:
            owner = self._representative(g1)
            if owner in visited:
                continue
            visited.add(owner)
            preds, _ = self._scan(rep, owner, rep=rep)
            for p in preds:
                self._link(p, rep)

    def build(self, progress=None) -> GeneratorLattice:
        groups = self.output.support_groups()
        bottom = self.output.bottom
        self.rep_of[bottom] = bottom
        self.members[bottom] = [bottom]
        self.visited[bottom] = set()

        for done, (support, group) in enumerate(groups, start=1):
            for g in group:
                if g is not bottom:
                    self._insert(g)
            if progress:
                progress(done / len(groups), support)

        return self._assemble()

    def _assemble(self) -> GeneratorLattice:
        # publish the placement; a later run on the same output overwrites it whole
        for g, rep in self.rep_of.items():
            g.representative = rep
            g.successor_list = list(self.successors.get(g, ()))

        reps = sorted(self.members, key=lambda r: (-r.support, r.itemset))
        classes = [
            EquivalenceClass(
                id=i,
                representative=r,
                members=sorted(self.members[r], key=lambda m: m.itemset),
                support=r.support,
            )
            for i, r in enumerate(reps)
        ]
        by_rep = {c.representative: c for c in classes}
        for c in classes:
            c.upper_covers = sorted((by_rep[s] for s in self.successors.get(c.representative, ())),
                                    key=lambda u: u.id)
            for up in c.upper_covers:
                up.lower_covers.append(c)
        for c in classes:
            c.lower_covers.sort(key=lambda low: low.id)

        class_of = {m.itemset: c for c in classes for m in c.members}
        return GeneratorLattice(classes=classes, class_of=class_of, stats=self.stats)


def gen_ordre(
    miner_output: MinerOutput,
    use_closed_level_shortcut: bool = False,
    progress=None,
) -> GeneratorLattice:
    """
    Build the minimal-generator lattice from stage 1 output.

    Generators are processed by decreasing support, lexicographically within
    a support, so a class can only succeed classes already in place.
    """
    builder = _OrderBuilder(miner_output, use_closed_level_shortcut)
    lattice = builder.build(progress)
    logger.debug(
        "lattice: %d classes, %d arcs, %d list scans, %d comparisons",
        len(lattice.classes), len(lattice.arcs()), lattice.stats.list_scans,
        lattice.stats.comparisons,
    )
    return lattice


class OrderStage(BaseStage):
    """Stage 2: equivalence classes and their cover relation."""

    STAGE_NAME = "order"
    PROGRESS_SPAN = (40.0, 75.0)

    def _execute(self, run: MiningRun) -> str:
        def progress(fraction: float, support: int):
            self._report(fraction, f"support {support} placed")

        run.lattice = gen_ordre(
            run.miner_output,
            use_closed_level_shortcut=run.config.use_closed_level_shortcut,
            progress=progress,
        )
        return f"{len(run.lattice.classes)} classes, {len(run.lattice.arcs())} arcs"
