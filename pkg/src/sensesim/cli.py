"""Command line interface.

Subcommands: train, classify, eval-pseudo, thesaurus.  Configuration comes
from an optional JSON config file; individual flags override file values.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import PipelineConfig
from .errors import SensesimError
from .evaluation import derive_definition_words, evaluate_pseudo_word
from .model_io import load_model, save_model
from .pipeline import train
from .stemming import stem
from .text import Mode, tokenize_and_stem
from .thesaurus import format_thesaurus


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file (flags override it)")
    parser.add_argument("--epsilon", type=float)
    parser.add_argument("--max-iterations", type=int, dest="max_iterations")
    parser.add_argument("--window", type=int, choices=(0, 1))
    parser.add_argument("--min-feature-count", type=int, dest="min_feature_count")
    parser.add_argument("--weight-threshold", type=float, dest="weight_threshold")
    parser.add_argument("--high-freq-cutoff", type=float, dest="high_freq_cutoff")
    parser.add_argument("--freq-damping-constant", type=float, dest="freq_damping_constant")
    parser.add_argument("--mode", choices=("tagged", "plain"))
    parser.add_argument("--toy-mode", action="store_true", default=None, dest="toy_mode")


def _build_config(args: argparse.Namespace) -> PipelineConfig:
    overrides = {
        name: getattr(args, name)
        for name in (
            "epsilon",
            "max_iterations",
            "window",
            "min_feature_count",
            "weight_threshold",
            "high_freq_cutoff",
            "freq_damping_constant",
            "mode",
            "toy_mode",
        )
        if getattr(args, name, None) is not None
    }
    if args.config:
        return PipelineConfig.load(args.config, overrides)
    return PipelineConfig.from_dict(overrides)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sensesim")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a disambiguation model")
    p_train.add_argument("--corpus", required=True)
    p_train.add_argument("--inventory", required=True)
    p_train.add_argument("--target", help="must match the inventory's target word")
    p_train.add_argument("--out", required=True, help="model output file (JSON)")
    p_train.add_argument("--trace", help="iteration trace output file (CSV)")
    _add_config_flags(p_train)

    p_classify = sub.add_parser("classify", help="classify contexts of the target word")
    p_classify.add_argument("--model", required=True)
    p_classify.add_argument("--input", help="input file, one context line each (default stdin)")

    p_eval = sub.add_parser("eval-pseudo", help="pseudo-word evaluation")
    p_eval.add_argument("--corpus", required=True)
    p_eval.add_argument("--w1", required=True)
    p_eval.add_argument("--w2", required=True)
    p_eval.add_argument("--definitions1", help="comma-separated definition words for w1")
    p_eval.add_argument("--definitions2", help="comma-separated definition words for w2")
    p_eval.add_argument("--report", help="write the text report here (default stdout)")
    p_eval.add_argument("--csv", help="also write the report as CSV")
    _add_config_flags(p_eval)

    p_thes = sub.add_parser("thesaurus", help="expand sense definitions into related words")
    p_thes.add_argument("--model", required=True)
    p_thes.add_argument("--k", type=int, required=True, help="neighbors added per word and round")
    p_thes.add_argument("--min-new", type=int, default=1, dest="min_new")
    p_thes.add_argument("--sense", help="a single sense id (default: all senses)")
    return parser


def _cmd_train(args: argparse.Namespace) -> int:
    config = _build_config(args)
    with open(args.corpus, "r", encoding="utf-8") as fh:
        corpus_text = fh.read()
    with open(args.inventory, "rb") as fh:
        inventory_data = fh.read()
    model = train(corpus_text, inventory_data, config)
    if args.target and stem(args.target) != model.inventory.target:
        raise SensesimError(
            f"--target {args.target!r} does not match inventory target "
            f"{model.inventory.target!r}"
        )
    save_model(model, args.out)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(model.result.trace.to_csv())
    n = len(model.originals)
    print(f"trained on {n} contexts of {model.inventory.target!r}; model written to {args.out}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    if args.input:
        fh = open(args.input, "r", encoding="utf-8")
    else:
        fh = sys.stdin
    try:
        for line in fh:
            if not line.strip():
                continue
            decision = model.classify_line(line)
            print(
                json.dumps(
                    {"winner": decision.winner, "scores": decision.per_sense},
                    sort_keys=True,
                )
            )
    finally:
        if args.input:
            fh.close()
    return 0


def _cmd_eval_pseudo(args: argparse.Namespace) -> int:
    config = _build_config(args)
    with open(args.corpus, "r", encoding="utf-8") as fh:
        corpus_text = fh.read()
    sentences = tokenize_and_stem(corpus_text, config.tokenize_mode())
    w1, w2 = stem(args.w1), stem(args.w2)
    if args.definitions1:
        def1 = [stem(w) for w in args.definitions1.split(",") if w]
    else:
        def1 = derive_definition_words(sentences, w1, exclude=(w2,), high_freq_cutoff=config.high_freq_cutoff)
    if args.definitions2:
        def2 = [stem(w) for w in args.definitions2.split(",") if w]
    else:
        def2 = derive_definition_words(sentences, w2, exclude=(w1,), high_freq_cutoff=config.high_freq_cutoff)
    report, _ = evaluate_pseudo_word(sentences, w1, w2, def1, def2, config)
    text = report.to_text()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
    return 0


def _cmd_thesaurus(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    if args.sense:
        from .thesaurus import related_words

        related = related_words(model, args.sense, args.k, args.min_new)
        print("\t".join([args.sense] + related.ordered()))
    else:
        print(format_thesaurus(model, args.k, args.min_new), end="")
    return 0


_COMMANDS = {
    "train": _cmd_train,
    "classify": _cmd_classify,
    "eval-pseudo": _cmd_eval_pseudo,
    "thesaurus": _cmd_thesaurus,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SensesimError, OSError, ValueError) as exc:
        print(f"sensesim {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
