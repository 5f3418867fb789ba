"""Flat-file gloss dictionary.

Stands in for a live dictionary service: each lemma maps to an ordered
list of senses, each sense carrying a short stable id, a human-readable
label and a gloss.  Immutable after load, so it can be shared freely.

File format (UTF-8, one record per line, '#' comments and blanks ignored):

    lemma <TAB> sense_id <TAB> label <TAB> gloss [<TAB> examples]

The optional fifth column holds example usage text; it is parsed but
excluded from gloss token sets unless explicitly requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import MalformedLexicon
from .text_prep import remove_stop_words, tokenize


@dataclass(frozen=True)
class Sense:
    lemma: str
    sense_id: str
    label: str
    gloss: str
    examples: str = ""


class Lexicon:
    """Mapping lemma -> ordered list of senses; sense ids are unique."""

    def __init__(self, senses: Iterable[Sense]):
        entries: dict[str, list[Sense]] = {}
        seen: set[str] = set()
        for sense in senses:
            if sense.sense_id in seen:
                raise ValueError(f"duplicate sense_id {sense.sense_id!r}")
            if not sense.gloss:
                raise ValueError(f"empty gloss for {sense.sense_id!r}")
            seen.add(sense.sense_id)
            entries.setdefault(sense.lemma, []).append(sense)
        self._entries = entries

    def senses_of(self, lemma: str) -> list[Sense]:
        """All senses of a lemma, in file order; empty list if unknown."""
        return list(self._entries.get(lemma.lower(), ()))

    def find_sense(self, lemma: str, sense_id: str) -> Sense | None:
        for sense in self._entries.get(lemma.lower(), ()):
            if sense.sense_id == sense_id:
                return sense
        return None

    def has_sense(self, lemma: str, sense_id: str) -> bool:
        return self.find_sense(lemma, sense_id) is not None

    def is_ambiguous(self, lemma: str) -> bool:
        return len(self._entries.get(lemma.lower(), ())) >= 2

    def lemmas(self) -> list[str]:
        return sorted(self._entries)

    def __contains__(self, lemma: str) -> bool:
        return lemma.lower() in self._entries

    def __iter__(self) -> Iterator[Sense]:
        # Senses grouped by sorted lemma, file order within a lemma;
        # this is also the serialization order of save_lexicon.
        for lemma in sorted(self._entries):
            yield from self._entries[lemma]

    def __len__(self) -> int:
        return sum(len(senses) for senses in self._entries.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"Lexicon(lemmas={len(self._entries)}, senses={len(self)})"


def load_lexicon(path) -> Lexicon:
    """Parse a lexicon file; raises MalformedLexicon with line context."""
    senses: list[Sense] = []
    seen: dict[str, int] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) not in (4, 5):
                raise MalformedLexicon(
                    path, line_no, f"expected 4 or 5 tab-separated fields, got {len(parts)}"
                )
            lemma = parts[0].strip().lower()
            sense_id = parts[1].strip()
            label = parts[2].strip()
            gloss = parts[3].strip()
            examples = parts[4].strip() if len(parts) == 5 else ""
            if not lemma:
                raise MalformedLexicon(path, line_no, "empty lemma")
            if not sense_id:
                raise MalformedLexicon(path, line_no, "empty sense_id")
            if not gloss:
                raise MalformedLexicon(path, line_no, "empty gloss")
            if sense_id in seen:
                raise MalformedLexicon(
                    path, line_no, f"duplicate sense_id {sense_id!r} (first seen at line {seen[sense_id]})"
                )
            seen[sense_id] = line_no
            senses.append(Sense(lemma, sense_id, label, gloss, examples))
    if not senses:
        raise MalformedLexicon(path, 0, "no senses defined")
    return Lexicon(senses)


def save_lexicon(lexicon: Lexicon, path) -> None:
    """Write the load_lexicon format, records sorted by (lemma, file order)."""
    with open(path, "w", encoding="utf-8") as handle:
        for sense in lexicon:
            fields = [sense.lemma, sense.sense_id, sense.label, sense.gloss]
            if sense.examples:
                fields.append(sense.examples)
            handle.write("\t".join(fields) + "\n")


def gloss_token_set(
    sense: Sense, stops: frozenset[str], *, include_examples: bool = False
) -> frozenset[str]:
    """Distinct content tokens of a gloss, preprocessed like input text.

    The sense's own lemma is kept if the gloss mentions it; scorers that
    need it excluded do that on the context side instead.
    """
    return _gloss_token_set(sense, frozenset(stops), include_examples)


@lru_cache(maxsize=4096)
def _gloss_token_set(sense: Sense, stops: frozenset[str], include_examples: bool) -> frozenset[str]:
    text = sense.gloss
    if include_examples and sense.examples:
        text = f"{text} {sense.examples}"
    return frozenset(remove_stop_words(tokenize(text), stops))
