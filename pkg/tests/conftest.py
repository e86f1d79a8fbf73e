"""
Shared fixtures: the five-object running example, seeded randomness and
the project root on sys.path (the same trick main.py uses).
"""
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

project_root = Path(__file__).resolve().parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from mining import MiningParams, parse_context  # noqa: E402

# A=1 B=2 C=3 D=4 E=5, dense ids A=0 .. E=4
EXAMPLE_TEXT = "1 3 4\n2 3 5\n1 2 3 5\n2 5\n1 2 3 5\n"
DEFAULT_SEED = 20240501


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for random contexts")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long sweeps and the largest worst-case context")
    config.addinivalue_line("markers", "dataset: needs an external FIMI file (MINING_DATASET_DIR)")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def example_context():
    return parse_context(EXAMPLE_TEXT, name="example")


@pytest.fixture
def example_params() -> MiningParams:
    return MiningParams(2, Fraction(1, 2))


@pytest.fixture
def letters(example_context):
    """Itemset of the running example from letters: letters("BCE") == (1, 2, 4)."""
    def convert(text: str) -> tuple[int, ...]:
        return example_context.itemset_of("ABCDE".index(c) + 1 for c in text)
    return convert


@pytest.fixture
def example_file(tmp_path) -> Path:
    path = tmp_path / "example.dat"
    path.write_text(EXAMPLE_TEXT)
    return path
