from __future__ import annotations

from pathlib import Path

import pytest

from sense_arbiter import ArbiterConfig, ArbiterState, BagSet, load_bags, load_lexicon
from sense_arbiter.data_files import bundled_lexicon_path, bundled_seed_bags_path
from sense_arbiter.text_prep import default_stop_words

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def stops():
    return default_stop_words()


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(bundled_lexicon_path())


@pytest.fixture(scope="session")
def seed_bags(lexicon, stops):
    # Session-scoped: never mutate, copy via make_state.
    return load_bags(bundled_seed_bags_path(), lexicon, stops)


@pytest.fixture
def make_state(lexicon, stops, seed_bags):
    def _make(threshold: int = 3, window: int = 3, seeded: bool = True) -> ArbiterState:
        return ArbiterState(
            bags=seed_bags.copy() if seeded else BagSet(),
            anticipated={},
            lexicon=lexicon,
            stops=stops,
            config=ArbiterConfig(threshold=threshold, window=window),
        )

    return _make
