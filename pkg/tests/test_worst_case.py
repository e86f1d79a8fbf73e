"""
Worst-case contexts: every itemset is a closed minimal generator, so the
lattice is the Boolean lattice on n items.
"""
from fractions import Fraction

import pytest

from mining import MiningConfig, MiningManager, MiningParams, oracle_mine, worst_case_context


def mine_worst_case(n: int, shortcut: bool = False):
    config = MiningConfig(MiningParams(1, Fraction(0)), use_closed_level_shortcut=shortcut)
    return MiningManager().mine(worst_case_context(n), config)


def check_boolean_lattice(run, n: int):
    lattice = run.lattice
    assert len(lattice.classes) == 2 ** n
    assert len(lattice.arcs()) == n * 2 ** (n - 1)
    for c in lattice.classes:
        assert c.members == [c.representative]
        assert c.closure == c.representative.itemset
        assert c.support == n - c.representative.size + 1
    assert run.rules.bg == []
    assert len(run.rules.ri) == n * 2 ** (n - 1)


@pytest.mark.parametrize("n", [4, 8])
def test_boolean_lattice(n):
    check_boolean_lattice(mine_worst_case(n), n)


@pytest.mark.parametrize("n", [4, 8])
def test_boolean_lattice_with_shortcut(n):
    check_boolean_lattice(mine_worst_case(n, shortcut=True), n)


@pytest.mark.slow
def test_twelve_items():
    run = mine_worst_case(12)
    check_boolean_lattice(run, 12)
    assert run.summary()["generators"] == 4096


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_agrees_with_brute_force(n):
    run = mine_worst_case(n)
    oracle = oracle_mine(worst_case_context(n), MiningParams(1))
    assert len(oracle.closed_sets) == 2 ** n
    assert all(closure == gens[0] for closure, gens in oracle.classes.items())
    assert {c.closure for c in run.lattice.classes} == set(oracle.closed_sets)
    assert run.rules.ri == oracle.ri
