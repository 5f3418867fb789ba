"""Command-line front end.

Subcommands:

    disambiguate   run the pipeline over text and print per-instance verdicts
    eval           score lesk / bow / combined against a gold corpus
    state          init, inspect, and report on a state directory

Exit codes: 0 success, 1 usage error, 2 data or file-format error.
Output is plain TAB-separated text and byte-deterministic for identical
inputs; nothing on disk changes unless --learn (or state init) is given.
"""

from __future__ import annotations

import argparse
import sys

from .arbiter import (
    ArbiterConfig,
    ArbiterState,
    disambiguate_instance,
    load_state,
    save_state,
)
from .bow import BagSet, load_bags
from .errors import SenseArbiterError
from .evalkit import TRACE_HEADER, load_gold, run_comparison
from .lexicon import load_lexicon
from .text_prep import default_stop_words, load_stop_words, split_sentences, tokenize

_MODE_BY_FLAG = {"lesk": "lesk_only", "bow": "bow_only", "combined": "combined"}


class UsageError(Exception):
    """Bad invocation detected after argument parsing."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; this CLI reserves 2 for
    # data errors, so remap parse failures to exit code 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sense-arbiter",
        description="Disambiguate word senses with fused gloss-overlap and bag-of-words scorers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dis = sub.add_parser("disambiguate", help="disambiguate a keyword in text")
    dis.add_argument("--state", required=True, help="state directory")
    dis.add_argument("--keyword", required=True, help="ambiguous target word")
    source = dis.add_mutually_exclusive_group(required=True)
    source.add_argument("--text", help="input text")
    source.add_argument("--file", help="read input text from this file")
    dis.add_argument("--learn", action="store_true", help="persist the enriched state")
    dis.add_argument("--verbose", action="store_true", help="also print counters and learning details")
    dis.set_defaults(func=cmd_disambiguate)

    ev = sub.add_parser("eval", help="score modes against a gold corpus")
    ev.add_argument("--state", required=True, help="state directory")
    ev.add_argument("--gold", required=True, help="gold corpus file")
    ev.add_argument("--mode", choices=["lesk", "bow", "combined", "all"], default="all")
    ev.add_argument("--policy", choices=["strict", "lenient"], default="lenient")
    ev.add_argument("--trace", help="write per-instance trace lines to this file")
    ev.set_defaults(func=cmd_eval)

    st = sub.add_parser("state", help="manage a state directory")
    st.add_argument("action", choices=["init", "show", "promote-report"])
    st.add_argument("--state", required=True, help="state directory")
    st.add_argument("--bags", help="seed bag file (init)")
    st.add_argument("--lexicon", help="lexicon file (init)")
    st.add_argument("--stops", help="stop-word file (init); bundled default if omitted")
    st.add_argument("--threshold", type=int, default=3, help="promotion threshold (init)")
    st.add_argument("--window", type=int, default=3, help="baseline scorer window (init)")
    st.set_defaults(func=cmd_state)

    return parser


def _render_counters(outcome) -> str:
    return ",".join(f"{sense}:{count}" for sense, count in outcome.counters.items())


def _words_or_dash(words) -> str:
    return ",".join(sorted(words)) if words else "-"


def cmd_disambiguate(args) -> int:
    state = load_state(args.state)
    if args.file is not None:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = args.text
    keyword = args.keyword.lower()

    for index, sentence in enumerate(split_sentences(text)):
        if keyword not in tokenize(sentence).tokens:
            continue
        result = disambiguate_instance(state, sentence, keyword, sentence_index=index)
        sense = result.sense or "-"
        label = "-"
        if result.sense is not None:
            found = state.lexicon.find_sense(keyword, result.sense)
            if found is not None:
                label = found.label
        fields = [str(index), keyword, sense, label, result.confidence]
        if args.verbose:
            fields.append(f"lesk={_render_counters(result.lesk_outcome)}")
            fields.append(f"bow={_render_counters(result.bow_outcome.decision)}")
            fields.append(f"unmatched={_words_or_dash(result.bow_outcome.unmatched)}")
            fields.append(f"banked={_words_or_dash(result.banked_words)}")
            fields.append(f"promoted={_words_or_dash(result.promoted_words)}")
        print("\t".join(fields))

    if args.learn:
        save_state(state, args.state)
    return 0


def cmd_eval(args) -> int:
    state = load_state(args.state)
    corpus = load_gold(args.gold, state.lexicon)
    if args.mode == "all":
        selected = ["lesk", "bow", "combined"]
    else:
        selected = [args.mode]

    trace_lines: list[str] = []
    print("mode\tprecision\trecall\tf_measure")
    for flag in selected:
        metrics, traces = run_comparison(corpus, state, _MODE_BY_FLAG[flag], args.policy)
        print(f"{flag}\t{metrics.row()}")
        trace_lines.extend(trace.line() for trace in traces)

    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as handle:
            handle.write(TRACE_HEADER + "\n")
            for line in trace_lines:
                handle.write(line + "\n")
    return 0


def cmd_state(args) -> int:
    if args.action == "init":
        if not args.lexicon:
            raise UsageError("state init requires --lexicon")
        if args.threshold < 1:
            raise UsageError("--threshold must be >= 1")
        if args.window < 1 or args.window % 2 == 0:
            raise UsageError("--window must be a positive odd integer")
        lexicon = load_lexicon(args.lexicon)
        stops = load_stop_words(args.stops) if args.stops else default_stop_words()
        bags = load_bags(args.bags, lexicon, stops) if args.bags else BagSet()
        config = ArbiterConfig(threshold=args.threshold, window=args.window)
        state = ArbiterState(bags=bags, anticipated={}, lexicon=lexicon, stops=stops, config=config)
        save_state(state, args.state)
        return 0

    state = load_state(args.state)
    if args.action == "show":
        print(f"threshold\t{state.config.threshold}")
        print(f"window\t{state.config.window}")
        for bag in state.bags.items():
            print(f"bag\t{bag.lemma}\t{bag.sense_id}\t{len(bag.words)}")
        for (lemma, sense_id, word), count in sorted(state.anticipated.items()):
            print(f"anticipated\t{lemma}\t{sense_id}\t{word}\t{count}")
        return 0

    # promote-report: entries within one occurrence of promotion.
    threshold = state.config.threshold
    for (lemma, sense_id, word), count in sorted(state.anticipated.items()):
        if count >= threshold - 1:
            print(f"{lemma}\t{sense_id}\t{word}\t{count}\t{threshold + 1 - count}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sense-arbiter: error: {exc}", file=sys.stderr)
        return 1
    except (SenseArbiterError, OSError) as exc:
        print(f"sense-arbiter: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
