"""Word sense disambiguation via fused gloss-overlap and bag-of-words scorers."""

from .arbiter import (
    DISAMBIGUATED,
    PROBABLE,
    UNDECIDED,
    ArbiterConfig,
    ArbiterState,
    InstanceResult,
    disambiguate_instance,
    enrich,
    formulate,
    load_state,
    save_state,
    verify,
)
from .bow import BagSet, BowOutcome, SenseBag, add_to_bag, bow_classify, load_bags, save_bags
from .errors import (
    FileFormatError,
    KeywordAbsent,
    MalformedBagFile,
    MalformedGoldFile,
    MalformedLexicon,
    MalformedStateFile,
    NoSenses,
    SenseArbiterError,
    UnknownSense,
)
from .evalkit import (
    GoldInstance,
    InstanceTrace,
    Metrics,
    average_metrics,
    f_measure,
    load_gold,
    run_comparison,
    score,
)
from .lexicon import Lexicon, Sense, gloss_token_set, load_lexicon, save_lexicon
from .lesk import DecisionOutcome, decide_from_counters, modified_lesk, overlap, typical_lesk
from .text_prep import (
    TokenList,
    default_stop_words,
    load_stop_words,
    remove_stop_words,
    split_sentences,
    tokenize,
)

__version__ = "0.1.0"
