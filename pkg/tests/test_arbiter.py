import random

import pytest

from sense_arbiter.arbiter import (
    DISAMBIGUATED,
    PROBABLE,
    UNDECIDED,
    ArbiterConfig,
    disambiguate_instance,
    enrich,
    formulate,
    load_state,
    save_state,
    verify,
)
from sense_arbiter.bow import BowOutcome
from sense_arbiter.errors import (
    KeywordAbsent,
    MalformedBagFile,
    MalformedStateFile,
    NoSenses,
)
from sense_arbiter.lesk import decide_from_counters


def bow_wrap(decision, unmatched=()):
    return BowOutcome(decision, frozenset(unmatched))


def decided(sense_id, margin=2, other="other.sense"):
    return decide_from_counters("bank", {sense_id: margin, other: 0})


def undecided():
    return decide_from_counters("bank", {"s1": 0, "s2": 0})


def test_formulate_takes_the_single_decided_scorer():
    sense, or_bit = formulate(decided("finance"), bow_wrap(undecided()))
    assert (sense, or_bit) == ("finance", 1)
    sense, or_bit = formulate(undecided(), bow_wrap(decided("finance")))
    assert (sense, or_bit) == ("finance", 1)


def test_formulate_or_zero_when_both_undecided():
    assert formulate(undecided(), bow_wrap(undecided())) == (None, 0)


def test_formulate_agreement():
    assert formulate(decided("finance"), bow_wrap(decided("finance"))) == ("finance", 1)


def test_formulate_conflict_larger_margin_wins():
    lesk_out = decide_from_counters("bank", {"riverside": 4, "finance": 1})  # margin 3
    bow_out = decide_from_counters("bank", {"finance": 2, "riverside": 1})  # margin 1
    sense, or_bit = formulate(lesk_out, bow_wrap(bow_out))
    assert (sense, or_bit) == ("riverside", 1)
    assert verify(lesk_out, bow_wrap(bow_out)) == 0


def test_formulate_conflict_equal_margins_prefer_lesk():
    lesk_out = decide_from_counters("bank", {"riverside": 2, "finance": 0})
    bow_out = decide_from_counters("bank", {"finance": 2, "riverside": 0})
    sense, _ = formulate(lesk_out, bow_wrap(bow_out))
    assert sense == "riverside"


def test_formulate_rejects_unknown_rule():
    with pytest.raises(ValueError):
        formulate(undecided(), bow_wrap(undecided()), rule="coin-flip")


def test_verify_truth_table():
    assert verify(decided("finance"), bow_wrap(decided("finance"))) == 1
    assert verify(decided("finance"), bow_wrap(undecided())) == 0
    assert verify(decided("finance"), bow_wrap(decided("riverside"))) == 0
    assert verify(undecided(), bow_wrap(undecided())) == 0


def test_and_implies_or_randomized():
    rng = random.Random(17)
    senses = ["s1", "s2", "s3"]
    for _ in range(500):
        lesk_out = decide_from_counters("w", {s: rng.randrange(0, 4) for s in senses})
        bow_out = bow_wrap(decide_from_counters("w", {s: rng.randrange(0, 4) for s in senses}))
        _, or_bit = formulate(lesk_out, bow_out)
        assert verify(lesk_out, bow_out) <= or_bit


def test_enrich_banks_unmatched_on_agreement(make_state):
    state = make_state()
    banked, promoted = enrich(state, "bank", "bank.finance", {"pnb", "transfer"}, and_bit=1)
    assert banked == {"pnb", "transfer"}
    assert promoted == frozenset()
    assert {"pnb", "transfer"} <= state.bags.words("bank", "bank.finance")
    assert state.anticipated == {}


def test_enrich_promotes_on_the_fourth_arrival(make_state):
    state = make_state(threshold=3)
    key = ("bank", "bank.finance", "pnb")
    for arrival in (1, 2, 3):
        banked, promoted = enrich(state, "bank", "bank.finance", {"pnb"}, and_bit=0)
        assert banked == promoted == frozenset()
        assert state.anticipated[key] == arrival
        assert "pnb" not in state.bags.words("bank", "bank.finance")
    _, promoted = enrich(state, "bank", "bank.finance", {"pnb"}, and_bit=0)
    assert promoted == {"pnb"}
    assert key not in state.anticipated
    assert "pnb" in state.bags.words("bank", "bank.finance")
    # Later sightings are no-ops: the word lives in the bag now.
    _, promoted = enrich(state, "bank", "bank.finance", {"pnb"}, and_bit=0)
    assert promoted == frozenset()
    assert key not in state.anticipated


def test_enrich_without_a_sense_changes_nothing(make_state):
    state = make_state()
    before_bags = state.bags.copy()
    banked, promoted = enrich(state, "bank", None, {"pnb"}, and_bit=0)
    assert banked == promoted == frozenset()
    assert state.bags == before_bags
    assert state.anticipated == {}


def test_enrich_banking_purges_matching_anticipated_entry(make_state):
    state = make_state()
    enrich(state, "bank", "bank.finance", {"pnb"}, and_bit=0)
    assert state.anticipated == {("bank", "bank.finance", "pnb"): 1}
    enrich(state, "bank", "bank.finance", {"pnb"}, and_bit=1)
    assert state.anticipated == {}
    assert "pnb" in state.bags.words("bank", "bank.finance")


def test_disambiguate_instance_agreed(make_state):
    state = make_state()
    result = disambiguate_instance(state, "He deposited Rs. 10,000 in SBI bank account.", "bank")
    assert result.confidence == DISAMBIGUATED
    assert result.sense == "bank.finance"
    assert result.banked_words == {"rs"}
    assert "rs" in state.bags.words("bank", "bank.finance")


def test_disambiguate_instance_single_scorer_is_probable(make_state):
    state = make_state()
    result = disambiguate_instance(state, "This is SBI bank.", "bank")
    assert result.confidence == PROBABLE
    assert result.sense == "bank.finance"
    assert result.bow_outcome.decision.decided
    assert not result.lesk_outcome.decided


def test_disambiguate_instance_undecided(make_state):
    state = make_state()
    result = disambiguate_instance(state, "He goes to bank.", "bank")
    assert result.confidence == UNDECIDED
    assert result.sense is None
    assert state.anticipated == {}  # nothing to tag words with


def test_disambiguate_instance_keyword_absent(make_state):
    with pytest.raises(KeywordAbsent):
        disambiguate_instance(make_state(), "Ram is a good boy.", "bank")


def test_disambiguate_instance_unknown_keyword(make_state):
    with pytest.raises(NoSenses):
        disambiguate_instance(make_state(), "The zzzz is here.", "zzzz")


def test_confidence_levels_are_exclusive(make_state):
    sentences = [
        "He deposited Rs. 10,000 in SBI bank account.",
        "This is SBI bank.",
        "He goes to bank.",
        "Are you near the bank of river?",
    ]
    state = make_state()
    for sentence in sentences:
        result = disambiguate_instance(state, sentence, "bank")
        assert result.confidence in (DISAMBIGUATED, PROBABLE, UNDECIDED)
        if result.confidence == DISAMBIGUATED:
            assert verify(result.lesk_outcome, result.bow_outcome) == 1
        if result.confidence == UNDECIDED:
            assert result.sense is None
            assert not result.lesk_outcome.decided
            assert not result.bow_outcome.decision.decided


def test_replay_is_deterministic(make_state):
    sentences = [
        "He was in PNB bank for money transfer.",
        "This is PNB bank.",
        "He deposited Rs 10,000 in PNB bank account.",
        "This is PNB bank.",
        "He was in PNB bank for money transfer.",
    ]
    runs = []
    for _ in range(2):
        state = make_state()
        results = [disambiguate_instance(state, s, "bank", i) for i, s in enumerate(sentences)]
        runs.append((state, results))
    (state_a, results_a), (state_b, results_b) = runs
    assert state_a.bags == state_b.bags
    assert state_a.anticipated == state_b.anticipated
    assert results_a == results_b


def test_bags_never_shrink_during_replay(make_state):
    sentences = [
        "He was in PNB bank for money transfer.",
        "Are you near the bank of river?",
        "This is PNB bank.",
        "He deposited Rs 10,000 in PNB bank account.",
        "He was in PNB bank for money transfer.",
    ]
    state = make_state()
    sizes = {}
    for index, sentence in enumerate(sentences):
        disambiguate_instance(state, sentence, "bank", index)
        for bag in state.bags.items():
            key = (bag.lemma, bag.sense_id)
            assert len(bag.words) >= sizes.get(key, 0)
            sizes[key] = len(bag.words)


def test_state_roundtrip(tmp_path, make_state):
    state = make_state(threshold=4, window=5)
    enrich(state, "bank", "bank.finance", {"pnb"}, and_bit=0)
    enrich(state, "plant", "plant.covert", {"mole"}, and_bit=1)
    save_state(state, tmp_path / "state")
    loaded = load_state(tmp_path / "state")
    assert loaded.bags == state.bags
    assert loaded.anticipated == state.anticipated
    assert loaded.lexicon == state.lexicon
    assert loaded.stops == state.stops
    assert loaded.config == state.config


def test_load_state_rejects_zero_count(tmp_path, make_state):
    save_state(make_state(), tmp_path / "state")
    (tmp_path / "state" / "anticipated.tsv").write_text(
        "bank\tbank.finance\tpnb\t0\n", encoding="utf-8"
    )
    with pytest.raises(MalformedStateFile, match="count"):
        load_state(tmp_path / "state")


def test_load_state_rejects_bag_disjointness_violation(tmp_path, make_state):
    save_state(make_state(), tmp_path / "state")
    bags_path = tmp_path / "state" / "bags.tsv"
    bags_path.write_text(
        bags_path.read_text(encoding="utf-8") + "bank\tbank.riverside\tsbi\n", encoding="utf-8"
    )
    with pytest.raises(MalformedBagFile) as err:
        load_state(tmp_path / "state")
    assert err.value.line_no > 0


def test_load_state_rejects_anticipated_word_already_in_bag(tmp_path, make_state):
    save_state(make_state(), tmp_path / "state")
    (tmp_path / "state" / "anticipated.tsv").write_text(
        "bank\tbank.finance\tsbi\t2\n", encoding="utf-8"
    )
    with pytest.raises(MalformedStateFile, match="already"):
        load_state(tmp_path / "state")


def test_load_state_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_state(tmp_path / "nowhere")


def test_config_validation():
    with pytest.raises(ValueError):
        ArbiterConfig(threshold=0)
    with pytest.raises(ValueError):
        ArbiterConfig(window=4)
    with pytest.raises(ValueError):
        ArbiterConfig(conflict_rule="random")
