from fractions import Fraction

import pytest

from mining import (
    MiningParams,
    RuleKind,
    derive_closure,
    gen_bgrs,
    gen_gms,
    gen_ordre,
    oracle_mine,
    parse_context,
    random_context,
    validate_rule,
)
from mining.rules import GenericRule, RuleStats, truncate_confidence


def mine(ctx, params):
    output = gen_gms(ctx, params)
    lattice = gen_ordre(output)
    return lattice, gen_bgrs(lattice, output.empty_closure, params)


@pytest.fixture
def example_result(example_context, example_params):
    return mine(example_context, example_params)


def test_exact_base(example_result, letters):
    _, bases = example_result
    assert [(r.premise, r.conclusion, r.support) for r in bases.bg] == [
        (letters("B"), letters("E"), 4),
        (letters("E"), letters("B"), 4),
        (letters("A"), letters("C"), 3),
        (letters("BC"), letters("E"), 3),
        (letters("CE"), letters("B"), 3),
        (letters("AB"), letters("CE"), 2),
        (letters("AE"), letters("BC"), 2),
    ]
    assert all(r.kind is RuleKind.EXACT and r.confidence == 1 for r in bases.bg)


def test_approximate_base(example_result, letters):
    _, bases = example_result
    assert [(r.premise, r.conclusion, r.support, r.confidence) for r in bases.ri] == [
        ((), letters("BE"), 4, Fraction(4, 5)),
        ((), letters("C"), 4, Fraction(4, 5)),
        (letters("B"), letters("CE"), 3, Fraction(3, 4)),
        (letters("C"), letters("A"), 3, Fraction(3, 4)),
        (letters("C"), letters("BE"), 3, Fraction(3, 4)),
        (letters("E"), letters("BC"), 3, Fraction(3, 4)),
        (letters("A"), letters("BCE"), 2, Fraction(2, 3)),
        (letters("BC"), letters("AE"), 2, Fraction(2, 3)),
        (letters("CE"), letters("AB"), 2, Fraction(2, 3)),
    ]
    assert all(r.kind is RuleKind.APPROXIMATE for r in bases.ri)


def test_closures(example_result, letters):
    lattice, bases = example_result
    assert [c.closure for c in lattice.classes] == [
        (), letters("BE"), letters("C"), letters("AC"), letters("BCE"), letters("ABCE"),
    ]
    assert bases.stats.closure_derivations == len(lattice.classes)
    for c in lattice.classes:
        assert all(m.closure == c.closure for m in c.members)


def test_derive_closure_once(example_result, letters):
    lattice, _ = example_result
    cls = lattice.class_of[letters("BC")]
    stats = RuleStats()
    assert derive_closure(cls, letters("C"), stats) == letters("BCE")
    assert stats.closure_derivations == 0


def test_derive_closure_from_predecessor(example_context, example_params, letters):
    lattice = gen_ordre(gen_gms(example_context, example_params))
    stats = RuleStats()
    assert derive_closure(lattice.class_of[letters("BC")], letters("BE"), stats) == letters("BCE")
    assert derive_closure(lattice.class_of[letters("E")], (), stats) == letters("BE")
    # a closed generator only adds items it already holds
    assert derive_closure(lattice.class_of[letters("C")], (), stats) == letters("C")
    assert stats.closure_derivations == 3


def test_minconf_one_keeps_exact_rules_only(example_context, example_result):
    _, reference = example_result
    _, bases = mine(example_context, MiningParams(2, Fraction(1)))
    assert bases.ri == []
    assert bases.bg == reference.bg


def test_minconf_boundary_is_inclusive(example_context):
    _, bases = mine(example_context, MiningParams(2, Fraction(4, 5)))
    assert [r.confidence for r in bases.ri] == [Fraction(4, 5), Fraction(4, 5)]


def test_empty_set_rule():
    ctx = parse_context("1 2\n1 3\n1\n")
    _, bases = mine(ctx, MiningParams(1))
    assert bases.bg[0].premise == ()
    assert bases.bg[0].conclusion == (0,)
    assert bases.bg[0].support == 3


def test_nothing_frequent(example_context):
    lattice, bases = mine(example_context, MiningParams(6, Fraction(1, 2)))
    assert len(lattice.classes) == 1
    assert bases.bg == [] and bases.ri == []


class TestValidateRule:
    def test_valid_rules(self, example_context, letters):
        c_a = GenericRule(letters("C"), letters("A"), 3, Fraction(3, 4), RuleKind.APPROXIMATE)
        a_bce = GenericRule(letters("A"), letters("BCE"), 2, Fraction(2, 3), RuleKind.APPROXIMATE)
        assert validate_rule(c_a, example_context)
        assert validate_rule(a_bce, example_context)

    def test_wrong_support(self, example_context, letters):
        rule = GenericRule(letters("C"), letters("A"), 2, Fraction(3, 4), RuleKind.APPROXIMATE)
        assert not validate_rule(rule, example_context)

    def test_wrong_confidence(self, example_context, letters):
        rule = GenericRule(letters("C"), letters("A"), 3, Fraction(2, 3), RuleKind.APPROXIMATE)
        assert not validate_rule(rule, example_context)

    def test_every_mined_rule_holds(self, example_context, example_result):
        _, bases = example_result
        assert all(validate_rule(r, example_context) for r in bases.all_rules)


def test_confidence_display():
    assert truncate_confidence(Fraction(2, 3)) == "0.66"
    assert truncate_confidence(Fraction(4, 5)) == "0.80"
    assert truncate_confidence(Fraction(1)) == "1.00"
    rule = GenericRule((2,), (0,), 3, Fraction(3, 4), RuleKind.APPROXIMATE)
    assert rule.confidence_display == "0.75"
    assert str(rule) == "(2,) => (0,) (supp=3, conf=3/4)"


def test_rule_bases_match_brute_force(rng):
    for _ in range(40):
        ctx = random_context(rng.randint(3, 7), rng.randint(4, 14), rng.uniform(0.2, 0.8), rng)
        params = MiningParams(rng.randint(1, 4), rng.choice([Fraction(0), Fraction(1, 2), Fraction(1)]))
        lattice, bases = mine(ctx, params)
        oracle = oracle_mine(ctx, params)
        assert bases.bg == oracle.bg
        assert bases.ri == oracle.ri
        for c in lattice.classes:
            assert c.closure == ctx.closure(c.representative.itemset)
        for r in bases.ri:
            assert params.minconf <= r.confidence < 1


def test_lattice_reused_for_another_minconf(example_context, example_params):
    output = gen_gms(example_context, example_params)
    lattice = gen_ordre(output)
    first = gen_bgrs(lattice, output.empty_closure, example_params)
    second = gen_bgrs(lattice, output.empty_closure, MiningParams(2, Fraction(0)))
    assert (len(first.bg), len(first.ri)) == (7, 9)
    assert second.bg == first.bg
    assert second.ri == first.ri
    # closures come from the first pass
    assert second.stats.closure_derivations == 0
    _, fresh = mine(example_context, MiningParams(2, Fraction(4, 5)))
    again = gen_bgrs(lattice, output.empty_closure, MiningParams(2, Fraction(4, 5)))
    assert again.bg == fresh.bg
    assert again.ri == fresh.ri


def test_filtered_approximate_rules_are_counted(example_context):
    _, loose = mine(example_context, MiningParams(2, Fraction(0)))
    _, strict = mine(example_context, MiningParams(2, Fraction(4, 5)))
    _, exact_only = mine(example_context, MiningParams(2, Fraction(1)))
    assert loose.stats.approximate_filtered == 0
    assert strict.stats.approximate_filtered == 7
    assert exact_only.stats.approximate_filtered == 9
