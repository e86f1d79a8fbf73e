"""
Itemsets are plain tuples of dense item ids in strictly ascending order.

Tuple comparison gives the lexicographic order used to pick class
representatives, so no wrapper type is needed.
"""
from itertools import combinations
from typing import Iterable, Iterator

Itemset = tuple[int, ...]

EMPTY: Itemset = ()


def make_itemset(items: Iterable[int]) -> Itemset:
    """Canonical form of an arbitrary collection of item ids."""
    return tuple(sorted(set(items)))


def union(a: Itemset, b: Itemset) -> Itemset:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(set(a).union(b)))


def difference(a: Itemset, b: Itemset) -> Itemset:
    drop = set(b)
    return tuple(i for i in a if i not in drop)


def is_subset(a: Itemset, b: Itemset) -> bool:
    return set(a).issubset(b)


def immediate_subsets(s: Itemset) -> list[Itemset]:
    """All subsets of size |s| - 1, in ascending lexicographic order."""
    return sorted(s[:i] + s[i + 1:] for i in range(len(s)))


def all_subsets(s: Itemset) -> Iterator[Itemset]:
    for k in range(len(s) + 1):
        yield from combinations(s, k)
