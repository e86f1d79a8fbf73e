"""
Mining manager that runs the stages in order.
"""
import logging
from typing import Callable, Optional, Type

from .base import BaseStage, MiningConfig, MiningProgress, MiningRun
from .context import TransactionContext
from .genminers import GeneratorStage
from .lattice import OrderStage
from .rules import RuleStage

logger = logging.getLogger(__name__)

# Registry of the pipeline stages, in execution order
STAGES: list[Type[BaseStage]] = [
    GeneratorStage,
    OrderStage,
    RuleStage,
]


class MiningManager:
    """
    Runs a context through every registered stage.
    Stage instances are created once and reused across runs.
    """

    def __init__(self, progress_callback: Optional[Callable[[MiningProgress], None]] = None):
        self.progress_callback = progress_callback
        self._stages: list[BaseStage] = [stage_cls(progress_callback) for stage_cls in STAGES]

    def mine(self, ctx: TransactionContext, config: MiningConfig) -> MiningRun:
        """Mine a context; the returned run holds every stage's output and timings."""
        run = MiningRun(context=ctx, config=config)
        logger.info(
            "mining %s (%d objects, %d items), minsupp=%d minconf=%s",
            ctx.name, ctx.n_objects, ctx.n_items, config.params.minsupp_abs, config.params.minconf,
        )
        for stage in self._stages:
            stage.run(run)

        if self.progress_callback:
            self.progress_callback(MiningProgress(
                percent=100.0,
                stage="done",
                status="finished",
                message=" ".join(f"{k}={v}" for k, v in run.summary().items()),
            ))
        return run

    @staticmethod
    def get_stage_names() -> list[str]:
        return [s.STAGE_NAME for s in STAGES]
