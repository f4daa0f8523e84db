"""``pictropes`` command line: extract -> stats -> fit -> rank -> report.

Exit status: 0 success, 1 usage error, 2 malformed input, 3 I/O error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .distributions import FAMILIES
from .extraction import ConfigError, ExtractionConfig, extract_dataset
from .fitting import DEFAULT_FAMILIES, select_best
from .ntriples import NTriplesSyntaxError, TripleStream, open_dump
from .ranking import degree_sequence, top_k
from .report import AXES, analyze, axis_index, render_report
from .stats import summarize
from .store import DatasetFormatError, load_dataset, reverse_index, save_dataset
from .synthetic import synthetic_dataset

EXIT_OK, EXIT_USAGE, EXIT_SYNTAX, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _families(text: str) -> list[str]:
    names = [n.strip() for n in text.split(",") if n.strip()]
    unknown = [n for n in names if n not in FAMILIES]
    if not names or unknown:
        raise argparse.ArgumentTypeError(
            f"unknown families {', '.join(unknown) or '(none given)'}; choose from {', '.join(FAMILIES)}"
        )
    return names


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _axes(args) -> Sequence[str]:
    return (args.axis,) if args.axis else AXES


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --------------------------------------------------------------------------


def cmd_extract(args) -> int:
    config = ExtractionConfig.load(args.config) if args.config else ExtractionConfig()
    with open_dump(args.input) as fh:
        stream = TripleStream(fh, policy=args.policy)
        dataset, ext_report = extract_dataset(stream, config)
    size = save_dataset(dataset, args.output)
    report = stream.report
    _emit(f"parse: {report.summary()}")
    _emit(f"extract: {ext_report.summary()}")
    _emit(f"dataset: films={len(dataset)} tropes={len(reverse_index(dataset))} edges={dataset.edge_count}")
    _emit(f"wrote {size} bytes to {args.output}")
    return EXIT_OK


def cmd_stats(args) -> int:
    dataset = load_dataset(args.dataset)
    reverse = reverse_index(dataset)
    out = {}
    for axis in _axes(args):
        out[axis] = summarize(degree_sequence(axis_index(dataset, axis, reverse))).to_dict()
    if args.json:
        _emit(json.dumps(out, indent=2, sort_keys=True))
        return EXIT_OK
    for axis, s in out.items():
        _emit(f"[{axis}]")
        for key, value in s.items():
            _emit(f"  {key:<9} {value if value is not None else 'undefined'}")
    return EXIT_OK


def cmd_fit(args) -> int:
    dataset = load_dataset(args.dataset)
    reverse = reverse_index(dataset)
    out = {}
    for axis in _axes(args):
        degrees = degree_sequence(axis_index(dataset, axis, reverse))
        out[axis] = [r.to_dict() for r in select_best(args.families, degrees)]
    if args.json:
        _emit(json.dumps(out, indent=2, sort_keys=True))
        return EXIT_OK
    for axis, results in out.items():
        _emit(f"[{axis}]")
        for rank, r in enumerate(results, start=1):
            if "error" in r:
                _emit(f"  {rank}. {r['family']:<12} failed: {r['error']}")
                continue
            _emit(
                f"  {rank}. {r['family']:<12} location={r['location']:.4f} shape={r['shape']:.4f} "
                f"scale={r['scale']:.4f} ks={r['ks']:.5f} aic={r['aic']:.3f} "
                f"nll={r['nll']:.3f} converged={r['converged']}"
            )
    return EXIT_OK


def cmd_rank(args) -> int:
    dataset = load_dataset(args.dataset)
    reverse = reverse_index(dataset)
    out = {}
    for axis in _axes(args):
        out[axis] = top_k(axis_index(dataset, axis, reverse), args.top)
    if args.json:
        payload = {a: [{"position": e.position, "name": e.name, "count": e.count} for e in r] for a, r in out.items()}
        _emit(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    for axis, ranking in out.items():
        _emit(f"[{axis}]")
        for e in ranking:
            _emit(f"{e.position:>4}  {e.name}  {e.count}")
    return EXIT_OK


def cmd_report(args) -> int:
    dataset = load_dataset(args.dataset)
    analysis = analyze(dataset, args.families, args.top)
    written = render_report(analysis, args.output)
    for name in sorted(written):
        _emit(str(written[name]))
    return EXIT_OK


def cmd_synth(args) -> int:
    dataset = synthetic_dataset(args.films, args.tropes, args.seed)
    size = save_dataset(dataset, args.output)
    _emit(f"wrote {size} bytes to {args.output} (films={len(dataset)} edges={dataset.edge_count})")
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pictropes", description="Film-trope dataset extraction and analysis.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extract", help="parse an N-Triples dump and write the dataset")
    p.add_argument("--input", required=True, help="N-Triples dump, plain or gzip")
    p.add_argument("--output", required=True, help="dataset JSON to write")
    p.add_argument("--config", help="extraction config JSON (default: DBTropes layout)")
    p.add_argument("--policy", choices=("strict", "lenient"), default="lenient")
    p.set_defaults(func=cmd_extract)

    def dataset_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--dataset", required=True, help="dataset JSON")
        p.set_defaults(func=func)
        return p

    p = dataset_cmd("stats", cmd_stats, "descriptive statistics per axis")
    p.add_argument("--axis", choices=AXES)
    p.add_argument("--json", action="store_true")

    p = dataset_cmd("fit", cmd_fit, "fit and rank candidate distributions")
    p.add_argument("--axis", choices=AXES)
    p.add_argument("--families", type=_families, default=list(DEFAULT_FAMILIES), help="comma-separated")
    p.add_argument("--json", action="store_true")

    p = dataset_cmd("rank", cmd_rank, "top-K table per axis")
    p.add_argument("--axis", choices=AXES)
    p.add_argument("--top", type=_positive, default=25)
    p.add_argument("--json", action="store_true")

    p = dataset_cmd("report", cmd_report, "write the report bundle into a directory")
    p.add_argument("--output", required=True, help="output directory")
    p.add_argument("--families", type=_families, default=list(DEFAULT_FAMILIES), help="comma-separated")
    p.add_argument("--top", type=_positive, default=25)

    p = sub.add_parser("synth", help="write a seeded synthetic dataset")
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--films", type=_positive, default=500)
    p.add_argument("--tropes", type=_positive, default=2000)
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except NTriplesSyntaxError as exc:
        print(f"pictropes: syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (DatasetFormatError, ConfigError) as exc:
        print(f"pictropes: invalid input: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (OSError, EOFError) as exc:
        print(f"pictropes: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"pictropes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
