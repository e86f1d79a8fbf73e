"""
Counts on the Mushroom benchmark at 0.10 %, run only when the FIMI file is
available under $MINING_DATASET_DIR.
"""
import os
from pathlib import Path

import pytest

from mining import MiningParams, gen_gms, gen_ordre, parse_context, parse_minsupp

EXPECTED_GENERATORS = 360166
EXPECTED_CLASSES = 164117


@pytest.fixture(scope="module")
def mushroom():
    directory = os.environ.get("MINING_DATASET_DIR")
    path = Path(directory) / "mushroom.dat" if directory else None
    if path is None or not path.is_file():
        pytest.skip("mushroom.dat not available (set MINING_DATASET_DIR)")
    return parse_context(path.read_bytes(), name="mushroom")


def counts(ctx, minsupp: int) -> tuple[int, int]:
    output = gen_gms(ctx, MiningParams(minsupp))
    return len(output.gmf_sorted), len(gen_ordre(output).classes)


@pytest.mark.dataset
@pytest.mark.slow
def test_mushroom_counts(mushroom):
    assert mushroom.n_objects == 8124
    minsupp = parse_minsupp("0.10%", mushroom.n_objects)
    assert minsupp == 9
    found = counts(mushroom, minsupp)
    if found != (EXPECTED_GENERATORS, EXPECTED_CLASSES):
        # truncating 8.124 instead of rounding it up
        found = counts(mushroom, minsupp - 1)
    assert found == (EXPECTED_GENERATORS, EXPECTED_CLASSES)
