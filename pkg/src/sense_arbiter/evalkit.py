"""Gold corpora, precision/recall/F-measure, and the comparison runner.

A gold corpus is an ordered list of (sentence, keyword, gold sense)
instances; order matters because the combined pipeline learns as it
goes.  The runner scores three configurations against the same corpus:
the gloss-overlap scorer alone, the bag-of-words classifier alone with
its bags frozen, and the full combined pipeline with enrichment.

Ratios are kept exact as fractions and only rendered to two decimals at
the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arbiter import (
    DISAMBIGUATED,
    PROBABLE,
    UNDECIDED,
    ArbiterState,
    disambiguate_instance,
)
from .bow import BowOutcome, bow_classify
from .errors import KeywordAbsent, MalformedGoldFile, UnknownSense
from .lexicon import Lexicon
from .lesk import DecisionOutcome, modified_lesk
from .text_prep import remove_stop_words, tokenize

LESK_ONLY = "lesk_only"
BOW_ONLY = "bow_only"
COMBINED = "combined"
MODES = (LESK_ONLY, BOW_ONLY, COMBINED)

STRICT = "strict"      # only verified (both-scorer) answers count as responses
LENIENT = "lenient"    # probable answers count too
POLICIES = (STRICT, LENIENT)

TRACE_HEADER = "# index\tkeyword\tmode\tlesk\tbow\tor\tand\tsense\tgold\tpromoted"


@dataclass(frozen=True)
class GoldInstance:
    sentence: str
    keyword: str
    gold_sense: str


@dataclass(frozen=True)
class Metrics:
    responded: int
    matched: int
    total: int

    @property
    def precision(self) -> Fraction:
        return Fraction(self.matched, self.responded) if self.responded else Fraction(0)

    @property
    def recall(self) -> Fraction:
        return Fraction(self.matched, self.total) if self.total else Fraction(0)

    @property
    def f_measure(self) -> Fraction:
        return f_measure(self.precision, self.recall)

    def row(self) -> str:
        return (
            f"{float(self.precision):.2f}\t{float(self.recall):.2f}\t{float(self.f_measure):.2f}"
        )


def f_measure(precision, recall) -> Fraction:
    """Harmonic mean 2PR/(P+R), with 0 when both inputs are 0."""
    p = Fraction(precision)
    r = Fraction(recall)
    if p + r == 0:
        return Fraction(0)
    return 2 * p * r / (p + r)


def average_metrics(metrics_list) -> tuple[Fraction, Fraction, Fraction]:
    """Arithmetic mean of (precision, recall, F) over several corpora.

    Informational only: averaging already-derived ratios is lossy, so
    nothing downstream depends on these numbers.
    """
    metrics_list = list(metrics_list)
    if not metrics_list:
        raise ValueError("no metrics to average")
    n = len(metrics_list)
    return (
        sum((m.precision for m in metrics_list), Fraction(0)) / n,
        sum((m.recall for m in metrics_list), Fraction(0)) / n,
        sum((m.f_measure for m in metrics_list), Fraction(0)) / n,
    )


@dataclass(frozen=True)
class InstanceTrace:
    """Everything one instance did, for audit and golden-file diffs."""

    index: int
    keyword: str
    mode: str
    lesk_outcome: DecisionOutcome | None
    bow_outcome: BowOutcome | None
    or_bit: int | None
    and_bit: int | None
    sense: str | None
    gold: str
    promoted: tuple[str, ...]

    def line(self) -> str:
        def bit(value):
            return "-" if value is None else str(value)

        lesk = self.lesk_outcome.describe() if self.lesk_outcome else "-"
        bow = self.bow_outcome.decision.describe() if self.bow_outcome else "-"
        promoted = ",".join(self.promoted) if self.promoted else "-"
        return "\t".join(
            [
                str(self.index),
                self.keyword,
                self.mode,
                lesk,
                bow,
                bit(self.or_bit),
                bit(self.and_bit),
                self.sense or "-",
                self.gold,
                promoted,
            ]
        )


def load_gold(path, lexicon: Lexicon) -> list[GoldInstance]:
    """Parse `sentence <TAB> keyword <TAB> gold_sense_id` lines in order."""
    instances: list[GoldInstance] = []
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise MalformedGoldFile(
                    path, line_no, f"expected 3 tab-separated fields, got {len(parts)}"
                )
            sentence = parts[0].strip()
            keyword = parts[1].strip().lower()
            gold_sense = parts[2].strip()
            if not sentence or not keyword or not gold_sense:
                raise MalformedGoldFile(path, line_no, "empty field")
            if not lexicon.has_sense(keyword, gold_sense):
                raise UnknownSense(
                    f"{path}:{line_no}: gold sense {gold_sense!r} is not a sense of {keyword!r}"
                )
            instances.append(GoldInstance(sentence, keyword, gold_sense))
    return instances


def score(responses, gold, policy: str = LENIENT) -> Metrics:
    """Precision/recall/F over aligned (sense, confidence) responses.

    Under the strict policy only fully verified answers are system
    responses; under the lenient policy probable answers respond too.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if len(responses) != len(gold):
        raise ValueError(f"got {len(responses)} responses for {len(gold)} gold instances")
    responded = 0
    matched = 0
    for (sense, confidence), instance in zip(responses, gold):
        responds = sense is not None and (
            confidence == DISAMBIGUATED or (policy == LENIENT and confidence == PROBABLE)
        )
        if responds:
            responded += 1
            if sense == instance.gold_sense:
                matched += 1
    return Metrics(responded=responded, matched=matched, total=len(gold))


def _single_scorer_response(outcome: DecisionOutcome) -> tuple[str | None, str]:
    return (outcome.sense, DISAMBIGUATED) if outcome.decided else (None, UNDECIDED)


def run_comparison(
    corpus,
    initial_state: ArbiterState,
    mode: str,
    policy: str = LENIENT,
) -> tuple[Metrics, list[InstanceTrace]]:
    """Score one mode over the corpus; the caller's state is never touched.

    Single-scorer modes run without enrichment (bags stay as seeded);
    combined mode runs the full learning pipeline sequentially.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    state = initial_state.copy()
    responses: list[tuple[str | None, str]] = []
    traces: list[InstanceTrace] = []
    for index, instance in enumerate(corpus):
        keyword = instance.keyword
        if mode == COMBINED:
            result = disambiguate_instance(state, instance.sentence, keyword, sentence_index=index)
            responses.append((result.sense, result.confidence))
            traces.append(
                InstanceTrace(
                    index=index,
                    keyword=keyword,
                    mode=mode,
                    lesk_outcome=result.lesk_outcome,
                    bow_outcome=result.bow_outcome,
                    or_bit=0 if result.confidence == UNDECIDED else 1,
                    and_bit=1 if result.confidence == DISAMBIGUATED else 0,
                    sense=result.sense,
                    gold=instance.gold_sense,
                    promoted=tuple(sorted(result.promoted_words)),
                )
            )
            continue
        tokens = tokenize(instance.sentence)
        if keyword not in tokens.tokens:
            raise KeywordAbsent(f"{keyword!r} does not occur in {instance.sentence!r}")
        context = remove_stop_words(tokens, state.stops)
        if mode == LESK_ONLY:
            outcome = modified_lesk(context, keyword, state.lexicon, state.stops)
            lesk_outcome, bow_outcome = outcome, None
        else:
            bow_outcome = bow_classify(context, keyword, state.bags, state.lexicon)
            outcome = bow_outcome.decision
            lesk_outcome = None
        sense, confidence = _single_scorer_response(outcome)
        responses.append((sense, confidence))
        traces.append(
            InstanceTrace(
                index=index,
                keyword=keyword,
                mode=mode,
                lesk_outcome=lesk_outcome,
                bow_outcome=bow_outcome,
                or_bit=None,
                and_bit=None,
                sense=sense,
                gold=instance.gold_sense,
                promoted=(),
            )
        )
    return score(responses, corpus, policy), traces
