"""Paths to the bundled data files (stop words, mini-lexicon, seed bags)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def _data_path(name: str) -> Path:
    return Path(str(resources.files("sense_arbiter").joinpath("data", name)))


def bundled_stopwords_path() -> Path:
    return _data_path("stopwords.txt")


def bundled_lexicon_path() -> Path:
    return _data_path("mini_lexicon.tsv")


def bundled_seed_bags_path() -> Path:
    return _data_path("seed_bags.tsv")
