"""Dictionary-overlap scorers.

Two flavors:

* ``typical_lesk`` is the windowed baseline: every sense of the keyword
  is scored by summing gloss overlaps against every sense of every other
  word inside a small window of content words.
* ``modified_lesk`` is the pipeline scorer: each keyword sense is scored
  by overlapping its gloss directly with the stop-filtered sentence.

Both report per-sense counters and decide only on a strict unique
positive maximum; ties and all-zero counters stay undecided.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoSenses
from .lexicon import Lexicon, gloss_token_set
from .text_prep import TokenList

# Undecided reasons.
TIE = "tie"
ALL_ZERO = "all_zero"
NO_SENSES = "no_senses"


@dataclass(frozen=True)
class DecisionOutcome:
    """One scorer's verdict: per-sense counters plus winner or reason."""

    keyword: str
    counters: dict[str, int] = field(default_factory=dict)
    sense: str | None = None
    reason: str | None = None

    @property
    def decided(self) -> bool:
        return self.sense is not None

    def margin(self) -> int:
        """Winning counter minus runner-up counter; 0 when undecided."""
        if not self.decided:
            return 0
        values = sorted(self.counters.values(), reverse=True)
        return values[0] - (values[1] if len(values) > 1 else 0)

    def describe(self) -> str:
        return self.sense if self.decided else f"undecided({self.reason})"


def decide_from_counters(keyword: str, counters: dict[str, int]) -> DecisionOutcome:
    """Apply the strict-unique-maximum rule to a counter map."""
    if not counters:
        return DecisionOutcome(keyword, {}, None, NO_SENSES)
    best = max(counters.values())
    if best <= 0:
        return DecisionOutcome(keyword, dict(counters), None, ALL_ZERO)
    winners = [sense for sense, value in counters.items() if value == best]
    if len(winners) > 1:
        return DecisionOutcome(keyword, dict(counters), None, TIE)
    return DecisionOutcome(keyword, dict(counters), winners[0], None)


def overlap(a, b) -> int:
    """Number of distinct word forms two collections share."""
    return len(set(a) & set(b))


def window_slice(tokens: TokenList, center: int, window: int) -> list[str]:
    """The ``window`` consecutive tokens centered on ``center``.

    Truncates at the edges rather than padding.  ``window`` must be a
    positive odd integer.
    """
    if window < 1 or window % 2 == 0:
        raise ValueError(f"window must be a positive odd integer, got {window}")
    if not 0 <= center < len(tokens):
        raise ValueError(f"center {center} out of range for {len(tokens)} tokens")
    half = window // 2
    lo = max(0, center - half)
    hi = min(len(tokens), center + half + 1)
    return list(tokens.tokens[lo:hi])


def typical_lesk(
    tokens: TokenList,
    keyword_position: int,
    window: int,
    lexicon: Lexicon,
    stops: frozenset[str],
) -> DecisionOutcome:
    """Windowed baseline scorer over already stop-filtered tokens.

    For each keyword sense, sums the gloss overlap against every sense
    of every other word in the window; words missing from the lexicon
    contribute nothing.
    """
    if window < 1 or window % 2 == 0:
        raise ValueError(f"window must be a positive odd integer, got {window}")
    if not 0 <= keyword_position < len(tokens):
        raise ValueError(f"keyword_position {keyword_position} out of range")
    keyword = tokens.tokens[keyword_position]
    senses = lexicon.senses_of(keyword)
    if not senses:
        raise NoSenses(f"{keyword!r} has no senses in the lexicon")

    half = window // 2
    lo = max(0, keyword_position - half)
    hi = min(len(tokens), keyword_position + half + 1)

    counters = {sense.sense_id: 0 for sense in senses}
    for index in range(lo, hi):
        if index == keyword_position:
            continue
        for other in lexicon.senses_of(tokens.tokens[index]):
            other_gloss = gloss_token_set(other, stops)
            for sense in senses:
                counters[sense.sense_id] += overlap(gloss_token_set(sense, stops), other_gloss)
    return decide_from_counters(keyword, counters)


def modified_lesk(
    context,
    keyword: str,
    lexicon: Lexicon,
    stops: frozenset[str],
) -> DecisionOutcome:
    """Score each keyword sense by gloss overlap with the whole sentence.

    ``context`` is any iterable of stop-filtered tokens.  The keyword's
    own token is excluded from the context set so a lemma mentioned in
    its own glosses cannot vote for every sense at once.
    """
    keyword = keyword.lower()
    senses = lexicon.senses_of(keyword)
    if not senses:
        raise NoSenses(f"{keyword!r} has no senses in the lexicon")
    context_words = set(context) - {keyword}
    counters = {
        sense.sense_id: overlap(context_words, gloss_token_set(sense, stops))
        for sense in senses
    }
    return decide_from_counters(keyword, counters)
