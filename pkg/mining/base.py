"""
Base stage class with the functionality shared by every mining stage.
"""
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, Optional

from .context import MiningParams, TransactionContext

if TYPE_CHECKING:
    from .genminers import MinerOutput
    from .lattice import GeneratorLattice
    from .rules import RuleBases

logger = logging.getLogger(__name__)


@dataclass
class MiningProgress:
    """Progress information for a mining run."""
    percent: float = 0.0
    stage: str = ""
    status: str = "idle"  # idle, running, finished, error
    message: str = ""


@dataclass
class MiningConfig:
    """Configuration for a mining run."""
    params: MiningParams
    use_closed_level_shortcut: bool = False
    oracle_max_items: int = 20


@dataclass
class MiningRun:
    """State carried from one stage to the next; the final value is the result."""
    context: TransactionContext
    config: MiningConfig
    miner_output: Optional["MinerOutput"] = None
    lattice: Optional["GeneratorLattice"] = None
    rules: Optional["RuleBases"] = None
    timings_ms: dict[str, float] = field(default_factory=dict)

    @property
    def params(self) -> MiningParams:
        return self.config.params

    def summary(self) -> dict[str, int]:
        """Counts printed on the summary line."""
        return {
            "classes": len(self.lattice.classes) if self.lattice else 0,
            "generators": len(self.miner_output.gmf_sorted) if self.miner_output else 0,
            "border": len(self.miner_output.border) if self.miner_output else 0,
            "bg": len(self.rules.bg) if self.rules else 0,
            "ri": len(self.rules.ri) if self.rules else 0,
        }


class BaseStage(ABC):
    """Abstract base class for the three mining stages."""

    STAGE_NAME: str = "Unknown"
    # share of the whole run covered once this stage is done
    PROGRESS_SPAN: tuple[float, float] = (0.0, 100.0)

    def __init__(self, progress_callback: Optional[Callable[[MiningProgress], None]] = None):
        self.progress_callback = progress_callback

    def _report_progress(self, progress: MiningProgress):
        """Report progress to the callback if set."""
        if self.progress_callback:
            self.progress_callback(progress)

    def _report(self, fraction: float, message: str, status: str = "running"):
        start, end = self.PROGRESS_SPAN
        self._report_progress(MiningProgress(
            percent=start + (end - start) * fraction,
            stage=self.STAGE_NAME,
            status=status,
            message=message,
        ))

    @abstractmethod
    def _execute(self, run: MiningRun) -> str:
        """Fill this stage's part of the run; returns a short outcome message."""

    def run(self, run: MiningRun) -> MiningRun:
        """
        Execute the stage on a run.

        Returns:
            MiningRun: the same run, completed with this stage's output.

        Raises:
            Exception: whatever the stage raised, after an error report.
        """
        self._report(0.0, f"{self.STAGE_NAME}…")
        started = time.perf_counter()

        try:
            outcome = self._execute(run)
        except Exception as e:
            self._report_progress(MiningProgress(
                stage=self.STAGE_NAME,
                status="error",
                message=f"Error: {e}",
            ))
            raise

        elapsed = (time.perf_counter() - started) * 1000
        run.timings_ms[self.STAGE_NAME] = elapsed
        logger.info("%s done in %.1f ms: %s", self.STAGE_NAME, elapsed, outcome)
        self._report(1.0, f"{self.STAGE_NAME}: {outcome}")
        return run
