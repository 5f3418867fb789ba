"""Sentence segmentation, tokenization and stop-word removal.

Input text and gloss text go through the exact same functions here, so
overlap counting downstream always compares like with like.  Everything
in this module is a pure function over immutable values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .errors import FileFormatError

# Words every stop list must contain; the bundled list is a superset.
REQUIRED_STOP_WORDS = frozenset(
    "a an the to for of in on and is are was he she it this we you must can".split()
)

# A sentence ends at . ! ? only when what follows is end-of-text, or
# whitespace and then an uppercase letter.  "Rs. 10,000" therefore never
# splits ("1" is not uppercase).
_BOUNDARY_RE = re.compile(r"(?<=[.!?])\s+(?=[A-Z])")

# Word characters: letters, digits, apostrophes and hyphens.  Any other
# character separates tokens.
_TOKEN_RE = re.compile(r"[A-Za-z0-9'-]+")


@dataclass(frozen=True)
class TokenList:
    """Normalized tokens plus their position in the source sentence.

    Positions are the ordinal of the raw word in the scan of the
    sentence, so they stay strictly increasing even after tokens are
    dropped by normalization or stop-word removal.
    """

    tokens: tuple[str, ...] = ()
    positions: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __bool__(self) -> bool:
        return bool(self.tokens)


def split_sentences(text: str) -> list[str]:
    """Split raw text into sentences; empty input gives an empty list."""
    if not text or not text.strip():
        return []
    return [part.strip() for part in _BOUNDARY_RE.split(text) if part.strip()]


def _strip_suffix(word: str) -> str:
    # Crude suffix stripping, off by default everywhere.
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("ing") and len(word) > 5:
        return word[:-3]
    if word.endswith("ed") and len(word) > 4:
        return word[:-2]
    if word.endswith("es") and len(word) > 4:
        return word[:-2]
    if word.endswith("s") and len(word) > 3 and not word.endswith("ss"):
        return word[:-1]
    return word


def tokenize(sentence: str, *, strip_suffixes: bool = False) -> TokenList:
    """Normalize a sentence into lowercase word tokens.

    Punctuation is stripped, tokens without a single alphabetic character
    (pure numbers, stray symbols) are dropped, and apostrophes/hyphens
    survive only in word-internal position.
    """
    tokens: list[str] = []
    positions: list[int] = []
    for pos, match in enumerate(_TOKEN_RE.finditer(sentence)):
        word = match.group().strip("'-").lower()
        if not word or not any(ch.isalpha() for ch in word):
            continue
        if strip_suffixes:
            word = _strip_suffix(word)
        tokens.append(word)
        positions.append(pos)
    return TokenList(tuple(tokens), tuple(positions))


def remove_stop_words(tokens: TokenList, stops: frozenset[str]) -> TokenList:
    """Drop stop words, keeping the order and positions of survivors."""
    kept = [(tok, pos) for tok, pos in zip(tokens.tokens, tokens.positions) if tok not in stops]
    if not kept:
        return TokenList()
    toks, poss = zip(*kept)
    return TokenList(toks, poss)


def load_stop_words(path) -> frozenset[str]:
    """Read a stop-word file: one word per line, '#' comments, blanks ignored.

    The file must cover REQUIRED_STOP_WORDS; anything smaller would let
    function words leak into overlap counts.
    """
    words: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if len(line.split()) != 1:
                raise FileFormatError(path, line_no, "expected one word per line")
            words.add(line.lower())
    missing = REQUIRED_STOP_WORDS - words
    if missing:
        raise FileFormatError(path, 0, f"missing required stop words: {', '.join(sorted(missing))}")
    return frozenset(words)


@lru_cache(maxsize=1)
def default_stop_words() -> frozenset[str]:
    """The bundled stop-word list."""
    path = resources.files("sense_arbiter").joinpath("data/stopwords.txt")
    words = {
        line.strip().lower()
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    }
    return frozenset(words)
