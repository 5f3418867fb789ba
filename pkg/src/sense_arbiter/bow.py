"""Bag-of-Words classifier with growable per-sense cue bags.

Each sense of a lemma owns a bag of cue words.  Context words that hit a
bag vote for that sense; words that hit nothing are collected so the
pipeline can learn from them later.  Bags of the same lemma stay
disjoint: one cue word votes for at most one sense.

Bag file format (UTF-8, '#' comments and blanks ignored):

    lemma <TAB> sense_id <TAB> word
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedBagFile, NoSenses, UnknownSense
from .lexicon import Lexicon
from .lesk import DecisionOutcome, decide_from_counters


@dataclass
class SenseBag:
    lemma: str
    sense_id: str
    words: set[str]


@dataclass(frozen=True)
class BowOutcome:
    decision: DecisionOutcome
    unmatched: frozenset[str]


@dataclass(frozen=True)
class BagAddReport:
    """What an add actually did: words inserted, words refused as conflicts."""

    added: frozenset[str]
    conflicts: frozenset[str]


class BagSet:
    """All sense bags, keyed by (lemma, sense_id)."""

    def __init__(self):
        self._bags: dict[tuple[str, str], SenseBag] = {}

    def bag(self, lemma: str, sense_id: str) -> SenseBag | None:
        return self._bags.get((lemma.lower(), sense_id))

    def words(self, lemma: str, sense_id: str) -> set[str]:
        bag = self.bag(lemma, sense_id)
        return set(bag.words) if bag else set()

    def owner(self, lemma: str, word: str) -> str | None:
        """Which sense's bag (if any) holds this word for the lemma."""
        lemma = lemma.lower()
        for (bag_lemma, sense_id), bag in self._bags.items():
            if bag_lemma == lemma and word in bag.words:
                return sense_id
        return None

    def sense_ids(self, lemma: str) -> list[str]:
        lemma = lemma.lower()
        return sorted(sid for (lem, sid) in self._bags if lem == lemma)

    def items(self) -> list[SenseBag]:
        return [self._bags[key] for key in sorted(self._bags)]

    def copy(self) -> "BagSet":
        duplicate = BagSet()
        for key, bag in self._bags.items():
            duplicate._bags[key] = SenseBag(bag.lemma, bag.sense_id, set(bag.words))
        return duplicate

    def _ensure(self, lemma: str, sense_id: str) -> SenseBag:
        key = (lemma, sense_id)
        if key not in self._bags:
            self._bags[key] = SenseBag(lemma, sense_id, set())
        return self._bags[key]

    def __len__(self) -> int:
        return len(self._bags)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BagSet):
            return NotImplemented
        return self._bags == other._bags

    def __repr__(self) -> str:
        total = sum(len(bag.words) for bag in self._bags.values())
        return f"BagSet(bags={len(self._bags)}, words={total})"


def bow_classify(context, keyword: str, bags: BagSet, lexicon: Lexicon) -> BowOutcome:
    """Vote senses by bag hits over the distinct non-keyword context words.

    Every distinct word counts once.  Words in none of the keyword's bags
    come back in ``unmatched`` for the enrichment stage.
    """
    keyword = keyword.lower()
    sense_ids = [sense.sense_id for sense in lexicon.senses_of(keyword)]
    if not sense_ids:
        sense_ids = bags.sense_ids(keyword)
    if not sense_ids:
        raise NoSenses(f"{keyword!r} has neither lexicon senses nor bags")

    counters = {sense_id: 0 for sense_id in sense_ids}
    unmatched: set[str] = set()
    for word in sorted(set(context)):
        if word == keyword:
            continue
        owner = bags.owner(keyword, word)
        if owner is None:
            unmatched.add(word)
        else:
            counters.setdefault(owner, 0)
            counters[owner] += 1
    return BowOutcome(decide_from_counters(keyword, counters), frozenset(unmatched))


def add_to_bag(
    bags: BagSet,
    lemma: str,
    sense_id: str,
    words,
    lexicon: Lexicon,
    stops: frozenset[str],
) -> BagAddReport:
    """Insert cue words into one bag, preserving per-lemma disjointness.

    The lemma itself and stop words are silently skipped; a word already
    living in a different bag of the same lemma is skipped and reported
    as a conflict.  Mutates ``bags`` in place.
    """
    lemma = lemma.lower()
    if not lexicon.has_sense(lemma, sense_id):
        raise UnknownSense(f"{sense_id!r} is not a sense of {lemma!r}")
    added: set[str] = set()
    conflicts: set[str] = set()
    for word in sorted({str(w).lower() for w in words}):
        if not word or word == lemma or word in stops:
            continue
        owner = bags.owner(lemma, word)
        if owner == sense_id:
            continue
        if owner is not None:
            conflicts.add(word)
            continue
        bags._ensure(lemma, sense_id).words.add(word)
        added.add(word)
    return BagAddReport(frozenset(added), frozenset(conflicts))


def load_bags(path, lexicon: Lexicon | None = None, stops: frozenset[str] | None = None) -> BagSet:
    """Parse a bag file, validating disjointness (and, when given a
    lexicon/stop list, sense existence and cue-word legality)."""
    bags = BagSet()
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise MalformedBagFile(
                    path, line_no, f"expected 3 tab-separated fields, got {len(parts)}"
                )
            lemma = parts[0].strip().lower()
            sense_id = parts[1].strip()
            word = parts[2].strip().lower()
            if not lemma or not sense_id or not word:
                raise MalformedBagFile(path, line_no, "empty field")
            if word == lemma:
                raise MalformedBagFile(path, line_no, f"bag word {word!r} equals its lemma")
            if lexicon is not None and not lexicon.has_sense(lemma, sense_id):
                raise MalformedBagFile(path, line_no, f"unknown sense {sense_id!r} for {lemma!r}")
            if stops is not None and word in stops:
                raise MalformedBagFile(path, line_no, f"stop word {word!r} in bag")
            owner = bags.owner(lemma, word)
            if owner is not None and owner != sense_id:
                raise MalformedBagFile(
                    path, line_no, f"word {word!r} already belongs to {owner!r} of {lemma!r}"
                )
            bags._ensure(lemma, sense_id).words.add(word)
    return bags


def save_bags(bags: BagSet, path) -> None:
    """Write the load_bags format, lines sorted by (lemma, sense, word)."""
    with open(path, "w", encoding="utf-8") as handle:
        for bag in bags.items():
            for word in sorted(bag.words):
                handle.write(f"{bag.lemma}\t{bag.sense_id}\t{word}\n")
