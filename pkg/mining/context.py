"""
Binary extraction contexts: loading, synthesis, support counting and the
Galois operators.
"""
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from bitarray import bitarray, frozenbitarray
from bitarray.util import zeros

from .errors import ContextParseError, DomainError
from .itemset import Itemset

logger = logging.getLogger(__name__)


def _ones(length: int) -> bitarray:
    bits = bitarray(length)
    bits.setall(1)
    return bits


def _set_positions(bits: bitarray) -> list[int]:
    return [i for i, bit in enumerate(bits) if bit]


def _to_fraction(value: Union[Fraction, float, int, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # str() keeps 0.66 as 33/50 instead of the binary expansion
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class MiningParams:
    """Thresholds of one mining run."""
    minsupp_abs: int
    minconf: Fraction = Fraction(0)

    def __post_init__(self):
        if isinstance(self.minsupp_abs, bool) or not isinstance(self.minsupp_abs, int):
            raise DomainError(f"minsupp must be an integer, got {self.minsupp_abs!r}")
        if self.minsupp_abs < 1:
            raise DomainError(f"minsupp must be at least 1, got {self.minsupp_abs}")
        conf = _to_fraction(self.minconf)
        if not 0 <= conf <= 1:
            raise DomainError(f"minconf must lie in [0, 1], got {conf}")
        object.__setattr__(self, "minconf", conf)


@dataclass(frozen=True)
class ContextStats:
    """Dataset characteristics as reported in benchmark tables."""
    name: str
    objects: int
    items: int
    avg_object_size: float
    density: float


@dataclass(frozen=True)
class TransactionContext:
    """
    Objects x items incidence relation.

    Dense item ids follow ascending external labels; object ids start at 1.
    Each object row has one bit per item and each item column one bit per
    object, so that support counting is a chain of column intersections.
    """
    items: tuple[int, ...]
    objects: tuple[int, ...]
    incidence: tuple[frozenbitarray, ...]
    column_bitmaps: tuple[frozenbitarray, ...]
    name: str = field(default="context", compare=False)

    @classmethod
    def from_transactions(
        cls,
        transactions: Sequence[Iterable[int]],
        labels: Optional[Iterable[int]] = None,
        name: str = "context",
    ) -> "TransactionContext":
        """Build a context from per-object label collections."""
        rows_labels = [set(t) for t in transactions]
        all_labels = set().union(*rows_labels) if rows_labels else set()
        if labels is not None:
            all_labels |= set(labels)
        ordered = tuple(sorted(all_labels))
        dense = {label: i for i, label in enumerate(ordered)}

        n_items, n_objects = len(ordered), len(rows_labels)
        columns = [zeros(n_objects) for _ in range(n_items)]
        rows = []
        for o, row_labels in enumerate(rows_labels):
            row = zeros(n_items)
            for label in row_labels:
                row[dense[label]] = 1
                columns[dense[label]][o] = 1
            rows.append(frozenbitarray(row))

        return cls(
            items=ordered,
            objects=tuple(range(1, n_objects + 1)),
            incidence=tuple(rows),
            column_bitmaps=tuple(frozenbitarray(c) for c in columns),
            name=name,
        )

    @property
    def n_items(self) -> int:
        return len(self.items)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def _check_items(self, s: Itemset):
        for i in s:
            if not 0 <= i < self.n_items:
                raise DomainError(f"unknown item id {i} (context has {self.n_items} items)")

    def item_id(self, label: int) -> int:
        """Dense id of an external label."""
        try:
            return self.items.index(label)
        except ValueError:
            raise DomainError(f"unknown item label {label}") from None

    def itemset_of(self, labels: Iterable[int]) -> Itemset:
        return tuple(sorted({self.item_id(label) for label in labels}))

    def labels_of(self, s: Itemset) -> list[int]:
        return [self.items[i] for i in s]

    def extent(self, s: Itemset) -> bitarray:
        """Bitmap of the objects containing every item of s."""
        self._check_items(s)
        if not s:
            return _ones(self.n_objects)
        bits = bitarray(self.column_bitmaps[s[0]])
        for i in s[1:]:
            bits &= self.column_bitmaps[i]
        return bits

    def support(self, s: Itemset) -> int:
        """Absolute support; support(()) is the object count."""
        return self.extent(s).count()

    def galois_psi(self, s: Itemset) -> frozenset[int]:
        """Object ids containing every item of s."""
        return frozenset(self.objects[o] for o in _set_positions(self.extent(s)))

    def galois_phi(self, object_ids: Iterable[int]) -> Itemset:
        """Items shared by every given object."""
        common = _ones(self.n_items)
        for oid in object_ids:
            if not 1 <= oid <= self.n_objects:
                raise DomainError(f"unknown object id {oid}")
            common &= self.incidence[oid - 1]
        return tuple(_set_positions(common))

    def closure(self, s: Itemset) -> Itemset:
        """gamma(s) = phi(psi(s))."""
        ext = self.extent(s)
        return tuple(
            i for i, column in enumerate(self.column_bitmaps)
            if not (ext & ~column).any()
        )


def parse_context(
    data: Union[bytes, str],
    name: str = "context",
    keep_empty: bool = False,
) -> TransactionContext:
    """
    Parse a FIMI transaction stream.

    One object per line, whitespace separated non-negative integer labels.
    Blank lines are skipped unless keep_empty is set, in which case they
    become objects without items (the form write_fimi emits for them).
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            line_no = data[:e.start].count(b"\n") + 1
            raise ContextParseError(f"invalid byte 0x{data[e.start]:02x}", line_no) from None
    else:
        text = data
    transactions: list[set[int]] = []

    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens and not keep_empty:
            continue
        labels = set()
        for token in tokens:
            try:
                label = int(token)
            except ValueError:
                raise ContextParseError(f"not an integer item label: {token!r}", line_no) from None
            if label < 0:
                raise ContextParseError(f"negative item label: {label}", line_no)
            labels.add(label)
        transactions.append(labels)

    if keep_empty:
        # a final newline does not open another object
        while transactions and not transactions[-1]:
            transactions.pop()

    ctx = TransactionContext.from_transactions(transactions, name=name)
    logger.debug("parsed %s: %d objects, %d items", name, ctx.n_objects, ctx.n_items)
    return ctx


def write_fimi(ctx: TransactionContext) -> str:
    """Render a context back to FIMI text, one line per object."""
    lines = [" ".join(str(label) for label in ctx.labels_of(tuple(_set_positions(row))))
             for row in ctx.incidence]
    return "".join(line + "\n" for line in lines)


def worst_case_context(n: int) -> TransactionContext:
    """
    Context where every item is held by n objects.

    Object k (1 <= k <= n) lacks only item k, object n + 1 holds every
    item; each itemset of size k then has support n - k + 1 and is closed.
    """
    if n < 1:
        raise DomainError(f"worst-case size must be positive, got {n}")
    labels = range(1, n + 1)
    transactions = [[label for label in labels if label != k] for k in labels]
    transactions.append(list(labels))
    return TransactionContext.from_transactions(transactions, labels=labels, name=f"worst{n}")


def random_context(
    n_items: int,
    n_objects: int,
    density: float,
    rng: random.Random,
) -> TransactionContext:
    """Bernoulli(density) incidence over labels 1..n_items."""
    labels = range(1, n_items + 1)
    transactions = [[label for label in labels if rng.random() < density]
                    for _ in range(n_objects)]
    return TransactionContext.from_transactions(transactions, labels=labels, name="random")


def describe(ctx: TransactionContext) -> ContextStats:
    cells = sum(row.count() for row in ctx.incidence)
    avg = cells / ctx.n_objects if ctx.n_objects else 0.0
    density = cells / (ctx.n_objects * ctx.n_items) if ctx.n_objects and ctx.n_items else 0.0
    return ContextStats(ctx.name, ctx.n_objects, ctx.n_items, avg, density)


def parse_minsupp(text: str, n_objects: int) -> int:
    """
    Absolute threshold from "12" or "12.5%".

    Percentages convert with ceiling(p / 100 * |objects|); a positive
    percentage of an empty context is 1 object.
    """
    text = text.strip()
    percent = None
    try:
        if text.endswith("%"):
            percent = Fraction(text[:-1].strip())
        else:
            value = int(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"malformed minsupp: {text!r}") from None
    if percent is not None:
        if not 0 <= percent <= 100:
            raise DomainError(f"minsupp percentage out of range: {text}")
        value = math.ceil(percent * n_objects / 100)
        if percent > 0:
            value = max(value, 1)
    if value < 1:
        raise DomainError(f"minsupp must be at least 1 object, got {text!r}")
    return value


def parse_minconf(text: str) -> Fraction:
    """Exact confidence threshold from "0.5" or "1/2"."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"malformed minconf: {text!r}") from None
    if not 0 <= value <= 1:
        raise DomainError(f"minconf must lie in [0, 1], got {text!r}")
    return value
