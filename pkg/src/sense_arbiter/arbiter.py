"""Pipeline orchestration: fuse the two scorers, then learn from them.

Per sentence instance the flow is

    tokenize -> drop stop words -> bag-of-words + gloss overlap (independent)
             -> OR-formulation (any verdict at all?)
             -> AND-verification (do the verdicts agree?)
             -> enrichment (bank agreed words, count the rest toward promotion)

Words the classifier could not match are the per-instance temporary
store.  When both scorers agree they go straight into the winning
sense's bag; when only one scorer decides they accumulate in the
anticipated store and join the bag once their count exceeds the
configured threshold.

State is mutated in place; everything is single-writer and strictly
sequential per state, and replaying the same instances from the same
initial state reproduces the same final state byte for byte.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .bow import BagSet, BowOutcome, add_to_bag, bow_classify, load_bags, save_bags
from .errors import KeywordAbsent, MalformedStateFile, NoSenses
from .lexicon import Lexicon, load_lexicon, save_lexicon
from .lesk import DecisionOutcome, modified_lesk
from .text_prep import load_stop_words, remove_stop_words, tokenize

# Confidence levels of an instance result.
DISAMBIGUATED = "disambiguated"  # both scorers decided and agree
PROBABLE = "probable"            # one scorer decided, or they disagree
UNDECIDED = "undecided"          # neither scorer decided

MARGIN_THEN_LESK = "margin-then-lesk"

_STATE_FILES = ("bags.tsv", "anticipated.tsv", "config.tsv", "lexicon.tsv", "stopwords.txt")

AnticipatedKey = tuple[str, str, str]  # (lemma, sense_id, word)


@dataclass(frozen=True)
class ArbiterConfig:
    threshold: int = 3
    window: int = 3
    conflict_rule: str = MARGIN_THEN_LESK

    def __post_init__(self):
        if self.threshold < 1:
            raise ValueError(f"threshold must be >= 1, got {self.threshold}")
        if self.window < 1 or self.window % 2 == 0:
            raise ValueError(f"window must be a positive odd integer, got {self.window}")
        if self.conflict_rule != MARGIN_THEN_LESK:
            raise ValueError(f"unsupported conflict rule {self.conflict_rule!r}")


@dataclass
class ArbiterState:
    bags: BagSet
    anticipated: dict[AnticipatedKey, int]
    lexicon: Lexicon
    stops: frozenset[str]
    config: ArbiterConfig = field(default_factory=ArbiterConfig)

    def copy(self) -> "ArbiterState":
        """Independent mutable copy; lexicon/stops/config are immutable and shared."""
        return ArbiterState(
            bags=self.bags.copy(),
            anticipated=dict(self.anticipated),
            lexicon=self.lexicon,
            stops=self.stops,
            config=self.config,
        )


@dataclass(frozen=True)
class InstanceResult:
    keyword: str
    sentence_index: int
    sense: str | None
    confidence: str
    lesk_outcome: DecisionOutcome
    bow_outcome: BowOutcome
    banked_words: frozenset[str]
    promoted_words: frozenset[str]


def _decision_of(outcome) -> DecisionOutcome:
    return outcome.decision if isinstance(outcome, BowOutcome) else outcome


def formulate(
    lesk_out: DecisionOutcome, bow_out, rule: str = MARGIN_THEN_LESK
) -> tuple[str | None, int]:
    """OR-combine the two verdicts into (sense, or_bit).

    or_bit is 1 when at least one scorer decided.  If both decided but
    disagree, the scorer with the larger winning margin names the sense;
    on equal margins the gloss-overlap scorer wins.
    """
    if rule != MARGIN_THEN_LESK:
        raise ValueError(f"unsupported conflict rule {rule!r}")
    bow_dec = _decision_of(bow_out)
    if lesk_out.decided and bow_dec.decided:
        if lesk_out.sense == bow_dec.sense:
            return lesk_out.sense, 1
        if bow_dec.margin() > lesk_out.margin():
            return bow_dec.sense, 1
        return lesk_out.sense, 1
    if lesk_out.decided:
        return lesk_out.sense, 1
    if bow_dec.decided:
        return bow_dec.sense, 1
    return None, 0


def verify(lesk_out: DecisionOutcome, bow_out) -> int:
    """AND-check: 1 iff both scorers decided on the same sense."""
    bow_dec = _decision_of(bow_out)
    return int(lesk_out.decided and bow_dec.decided and lesk_out.sense == bow_dec.sense)


def enrich(
    state: ArbiterState,
    keyword: str,
    sense: str | None,
    unmatched,
    and_bit: int,
) -> tuple[frozenset[str], frozenset[str]]:
    """Grow the learning set from one instance's unmatched words.

    Verified instances (and_bit = 1) bank their unmatched words directly
    into the winning sense's bag.  Unverified ones count occurrences in
    the anticipated store instead.  Afterwards every stored entry whose
    count exceeds the threshold moves into its bag.  Returns the sets of
    (banked, promoted) words actually inserted.
    """
    if sense is None:
        # Nothing was formulated, so there is no sense to tag words with.
        return frozenset(), frozenset()
    keyword = keyword.lower()
    banked: frozenset[str] = frozenset()
    if and_bit:
        report = add_to_bag(state.bags, keyword, sense, unmatched, state.lexicon, state.stops)
        banked = report.added
        for word in banked:
            state.anticipated.pop((keyword, sense, word), None)
    else:
        for word in sorted({str(w).lower() for w in unmatched}):
            if not word or word == keyword or word in state.stops:
                continue
            if state.bags.owner(keyword, word) is not None:
                continue
            key = (keyword, sense, word)
            state.anticipated[key] = state.anticipated.get(key, 0) + 1

    promoted: set[str] = set()
    threshold = state.config.threshold
    due = sorted(key for key, count in state.anticipated.items() if count > threshold)
    for lemma, sense_id, word in due:
        del state.anticipated[(lemma, sense_id, word)]
        report = add_to_bag(state.bags, lemma, sense_id, {word}, state.lexicon, state.stops)
        promoted |= report.added
    return banked, frozenset(promoted)


def disambiguate_instance(
    state: ArbiterState, sentence: str, keyword: str, sentence_index: int = 0
) -> InstanceResult:
    """Run the full pipeline on one sentence; mutates state via enrichment."""
    keyword = keyword.lower()
    tokens = tokenize(sentence)
    if keyword not in tokens.tokens:
        raise KeywordAbsent(f"{keyword!r} does not occur in {sentence!r}")
    if not state.lexicon.senses_of(keyword):
        raise NoSenses(f"{keyword!r} has no senses in the lexicon")
    context = remove_stop_words(tokens, state.stops)

    bow_out = bow_classify(context, keyword, state.bags, state.lexicon)
    lesk_out = modified_lesk(context, keyword, state.lexicon, state.stops)

    sense, or_bit = formulate(lesk_out, bow_out, state.config.conflict_rule)
    and_bit = verify(lesk_out, bow_out)

    banked: frozenset[str] = frozenset()
    promoted: frozenset[str] = frozenset()
    if or_bit:
        banked, promoted = enrich(state, keyword, sense, set(bow_out.unmatched), and_bit)

    if and_bit:
        confidence = DISAMBIGUATED
    elif or_bit:
        confidence = PROBABLE
    else:
        confidence = UNDECIDED
    return InstanceResult(
        keyword=keyword,
        sentence_index=sentence_index,
        sense=sense,
        confidence=confidence,
        lesk_outcome=lesk_out,
        bow_outcome=bow_out,
        banked_words=banked,
        promoted_words=promoted,
    )


def save_state(state: ArbiterState, directory) -> None:
    """Serialize a state directory; all files sorted for byte determinism."""
    os.makedirs(directory, exist_ok=True)
    save_bags(state.bags, os.path.join(directory, "bags.tsv"))
    with open(os.path.join(directory, "anticipated.tsv"), "w", encoding="utf-8") as handle:
        for (lemma, sense_id, word), count in sorted(state.anticipated.items()):
            handle.write(f"{lemma}\t{sense_id}\t{word}\t{count}\n")
    with open(os.path.join(directory, "config.tsv"), "w", encoding="utf-8") as handle:
        handle.write(f"threshold\t{state.config.threshold}\n")
        handle.write(f"window\t{state.config.window}\n")
    save_lexicon(state.lexicon, os.path.join(directory, "lexicon.tsv"))
    with open(os.path.join(directory, "stopwords.txt"), "w", encoding="utf-8") as handle:
        for word in sorted(state.stops):
            handle.write(word + "\n")


def _load_config(path) -> ArbiterConfig:
    values: dict[str, int] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise MalformedStateFile(path, line_no, "expected key <TAB> value")
            key, value = parts[0].strip(), parts[1].strip()
            if key not in ("threshold", "window"):
                raise MalformedStateFile(path, line_no, f"unknown config key {key!r}")
            try:
                values[key] = int(value)
            except ValueError:
                raise MalformedStateFile(path, line_no, f"{key} must be an integer, got {value!r}") from None
    try:
        return ArbiterConfig(threshold=values.get("threshold", 3), window=values.get("window", 3))
    except ValueError as exc:
        raise MalformedStateFile(path, 0, str(exc)) from None


def _load_anticipated(path, bags: BagSet, lexicon: Lexicon) -> dict[AnticipatedKey, int]:
    counts: dict[AnticipatedKey, int] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise MalformedStateFile(
                    path, line_no, f"expected 4 tab-separated fields, got {len(parts)}"
                )
            lemma = parts[0].strip().lower()
            sense_id = parts[1].strip()
            word = parts[2].strip().lower()
            try:
                count = int(parts[3].strip())
            except ValueError:
                raise MalformedStateFile(path, line_no, f"count must be an integer, got {parts[3]!r}") from None
            if count < 1:
                raise MalformedStateFile(path, line_no, f"count must be >= 1, got {count}")
            if not lexicon.has_sense(lemma, sense_id):
                raise MalformedStateFile(path, line_no, f"unknown sense {sense_id!r} for {lemma!r}")
            if word in bags.words(lemma, sense_id):
                raise MalformedStateFile(
                    path, line_no, f"{word!r} is already in the {sense_id!r} bag"
                )
            key = (lemma, sense_id, word)
            if key in counts:
                raise MalformedStateFile(path, line_no, f"duplicate entry {key!r}")
            counts[key] = count
    return counts


def load_state(directory) -> ArbiterState:
    """Load a state directory written by save_state."""
    paths = {name: os.path.join(directory, name) for name in _STATE_FILES}
    for name, path in paths.items():
        if not os.path.isfile(path):
            raise FileNotFoundError(f"state directory {directory!r} is missing {name}")
    config = _load_config(paths["config.tsv"])
    lexicon = load_lexicon(paths["lexicon.tsv"])
    stops = load_stop_words(paths["stopwords.txt"])
    bags = load_bags(paths["bags.tsv"], lexicon, stops)
    anticipated = _load_anticipated(paths["anticipated.tsv"], bags, lexicon)
    return ArbiterState(bags=bags, anticipated=anticipated, lexicon=lexicon, stops=stops, config=config)
