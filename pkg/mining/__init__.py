"""
Mining module - closed itemsets, minimal generators and generic rule bases.
"""
from .base import (
    BaseStage,
    MiningConfig,
    MiningProgress,
    MiningRun,
)
from .context import (
    MiningParams,
    TransactionContext,
    describe,
    parse_context,
    parse_minconf,
    parse_minsupp,
    random_context,
    worst_case_context,
    write_fimi,
)
from .errors import ContextParseError, DomainError, MiningError, OracleRefusal, StateError
from .genminers import GeneratorRecord, GeneratorStage, MinerOutput, gen_gms, infer_support
from .lattice import (
    EquivalenceClass,
    GeneratorLattice,
    OrderStage,
    Relation,
    compare_classes,
    find_representative,
    gen_ordre,
)
from .manager import MiningManager, STAGES
from .oracle import OracleResult, oracle_mine
from .rules import GenericRule, RuleBases, RuleKind, RuleStage, derive_closure, gen_bgrs, validate_rule


__all__ = [
    # Core classes
    "BaseStage",
    "MiningConfig",
    "MiningProgress",
    "MiningRun",
    "MiningParams",
    "TransactionContext",
    # Context helpers
    "describe",
    "parse_context",
    "parse_minconf",
    "parse_minsupp",
    "random_context",
    "worst_case_context",
    "write_fimi",
    # Errors
    "MiningError",
    "ContextParseError",
    "DomainError",
    "StateError",
    "OracleRefusal",
    # Stages
    "GeneratorRecord",
    "GeneratorStage",
    "MinerOutput",
    "gen_gms",
    "infer_support",
    "EquivalenceClass",
    "GeneratorLattice",
    "OrderStage",
    "Relation",
    "compare_classes",
    "find_representative",
    "gen_ordre",
    "GenericRule",
    "RuleBases",
    "RuleKind",
    "RuleStage",
    "derive_closure",
    "gen_bgrs",
    "validate_rule",
    # Manager
    "MiningManager",
    "STAGES",
    # Reference
    "OracleResult",
    "oracle_mine",
]
