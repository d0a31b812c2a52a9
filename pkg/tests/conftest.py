import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # midi_reader import

from hexatone.casting import CastingRecord, toss_coins
from hexatone.corpus import default_corpus
from hexatone.music.params import GenParams
from hexatone.rng import STREAM_CASTING, substream


def cast_record(seed: int) -> CastingRecord:
    """Complete six-toss casting from a seed, same streams as a session."""
    rng = substream(seed, STREAM_CASTING)
    record = CastingRecord(seed=seed)
    for _ in range(6):
        record = record.with_toss(toss_coins(rng))
    return record


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def params():
    return GenParams()
