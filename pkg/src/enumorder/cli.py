"""Command-line surface.

Every command emits a single JSON object per result line (``--format json``,
the default) or a human-oriented text rendering (``--format text``).  Prefix
inputs are uniform across commands: the literal word ``inline`` followed by
space-separated naturals (or a JSON array), ``file:<path>`` for the one-line
prefix file format, or an enumerator spec materialized with ``--prefix-len``
and ``--budget``.

Exit codes: 0 success/pass, 1 property violation, 2 invalid input,
3 insufficient prefix.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import enumerators, extraction, oracle
from .algebra import Chain, chain_stabilize, make_strict_chain, transport
from .errors import EnumOrderError, TooLarge
from .extraction import Membership, PairedListings, decide_membership, predecessor
from .prefixes import (
    PrefixListing,
    SetSample,
    inversions,
    leq_eo,
    make_prefix,
    standardize,
)

DEFAULT_PREFIX_LEN = 32
DEFAULT_BUDGET = 10000

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BAD_INPUT = 2
EXIT_INSUFFICIENT = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_BAD_INPUT):
        super().__init__(message)
        self.code = code


def _parse_values(text: str) -> List[int]:
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliError(f"bad JSON array: {exc}")
        if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
            raise CliError("JSON input must be a flat array of integers")
        return data
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise CliError(f"not a space-separated list of naturals: {text!r}")


def _read_prefix_line(path: str) -> List[int]:
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    return _parse_values(line)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    return []


def parse_sources(tokens: Sequence[str], prefix_len: int, budget: int) -> List[PrefixListing]:
    """Resolve a token stream of prefix sources.

    ``inline`` consumes the following token as literal values; ``file:<path>``
    reads the first prefix line of a file; anything else is an enumerator
    spec, materialized at --prefix-len under --budget.
    """
    out: List[PrefixListing] = []
    it = iter(tokens)
    for tok in it:
        if tok == "inline":
            try:
                raw = next(it)
            except StopIteration:
                raise CliError("'inline' must be followed by a value string")
            out.append(make_prefix(_parse_values(raw)))
        elif tok.startswith("file:"):
            out.append(make_prefix(_read_prefix_line(tok[len("file:"):])))
        else:
            e = enumerators.parse_spec(tok)
            out.append(enumerators.take_prefix(e, prefix_len, budget))
    return out


def _emit(obj: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, separators=(", ", ": ")))
    else:
        print(text)


def load_paired_file(path: str) -> PairedListings:
    """Two prefix lines then ``m=<nat>``."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    if len(lines) != 3 or not lines[2].startswith("m="):
        raise CliError("paired file needs two prefix lines then 'm=<nat>'")
    f = make_prefix(_parse_values(lines[0]))
    g = make_prefix(_parse_values(lines[1]))
    try:
        m = int(lines[2][2:])
    except ValueError:
        raise CliError(f"bad m line: {lines[2]!r}")
    return PairedListings(f, g, m)


def _cmd_compare(args) -> int:
    prefixes = parse_sources(args.sources, args.prefix_len, args.budget)
    if len(prefixes) != 2:
        raise CliError("compare needs exactly two prefix sources")
    f, g = prefixes
    fg = leq_eo(f, g)
    gf = leq_eo(g, f)
    fail_at = fg.fail_at or gf.fail_at
    obj = {
        "f_le_g": fg.holds,
        "g_le_f": gf.holds,
        "equiv": fg.holds and gf.holds,
        "fail_at": list(fail_at) if fail_at else None,
    }
    text = (
        f"f <=eo g: {fg.holds}; g <=eo f: {gf.holds}; equivalent: {obj['equiv']}"
        + (f"; first violation at positions {fail_at}" if fail_at else "")
    )
    _emit(obj, args.format, text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.property == "all":
        ids = list(oracle.REGISTRY)
    elif args.property in oracle.REGISTRY:
        ids = [args.property]
    else:
        raise CliError(f"unknown property: {args.property}")
    all_pass = True
    for pid in ids:
        cap = oracle.REGISTRY[pid][0]
        n = min(args.n, cap) if args.property == "all" else args.n
        try:
            report = oracle.run_property(pid, n)
        except TooLarge as exc:
            raise CliError(str(exc))
        all_pass &= report.passed
        text = (
            f"{pid} (n={report.n}): {'pass' if report.passed else 'FAIL'} "
            f"over {report.instances} instances"
        )
        _emit(report.to_json(), args.format, text)
    return EXIT_OK if all_pass else EXIT_VIOLATION


def _cmd_decide(args) -> int:
    paired = load_paired_file(args.paired)
    report = decide_membership(paired, args.x)
    obj = {"x": report.x, "result": report.result.value, "descent": list(report.descent)}
    text = f"x={report.x}: {report.result.value}; descent {list(report.descent)}"
    _emit(obj, args.format, text)
    return EXIT_INSUFFICIENT if report.result is Membership.INSUFFICIENT else EXIT_OK


def _cmd_pattern(args) -> int:
    (p,) = parse_sources(args.source, args.prefix_len, args.budget)
    ranks = standardize(p).ranks
    _emit(
        {"values": list(p.values), "pattern": list(ranks)},
        args.format,
        " ".join(str(r) for r in ranks),
    )
    return EXIT_OK


def _cmd_inversions(args) -> int:
    (p,) = parse_sources(args.source, args.prefix_len, args.budget)
    pairs = sorted(inversions(p))
    _emit(
        {"values": list(p.values), "inversions": [list(pr) for pr in pairs]},
        args.format,
        " ".join(f"({i},{j})" for i, j in pairs) or "(none)",
    )
    return EXIT_OK


def _cmd_transport(args) -> int:
    prefixes = parse_sources(args.sources, args.prefix_len, args.budget)
    if len(prefixes) != 3:
        raise CliError("transport needs h, h_prime and g_prime sources")
    result = transport(*prefixes)
    _emit(
        {"result": list(result.values)},
        args.format,
        " ".join(str(v) for v in result.values),
    )
    return EXIT_OK


def _read_chain(path: str) -> Chain:
    try:
        with open(path, encoding="utf-8") as fh:
            listings = tuple(
                make_prefix(_parse_values(ln)) for ln in fh if ln.strip()
            )
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    return Chain(listings)


def _cmd_stabilize(args) -> int:
    chain = _read_chain(args.chain)
    repeat = chain_stabilize(chain)
    _emit(
        {"length": len(chain), "repeat": list(repeat) if repeat else None},
        args.format,
        f"repeat at {repeat}" if repeat else "no repeat in chain",
    )
    return EXIT_OK


def _cmd_lemma8(args) -> int:
    f, g = parse_sources(args.sources, args.prefix_len, args.budget)
    report = extraction.check_inverse_positions(f, g)
    obj = {
        "clause1": {
            "fpos": report.clause1.fpos,
            "gpos": report.clause1.gpos,
            "holds": report.clause1.holds,
        },
        "clause2": [
            {
                "i": e.index,
                "premise": e.premise_held,
                "fpos": e.fpos,
                "gpos": e.gpos,
                "holds": e.holds,
            }
            for e in report.clause2
        ],
        "all_hold": report.all_hold,
    }
    _emit(obj, args.format, f"all clauses hold: {report.all_hold}")
    return EXIT_OK if report.all_hold else EXIT_VIOLATION


def _cmd_pred(args) -> int:
    paired = load_paired_file(args.paired)
    value = predecessor(paired, args.a)
    _emit({"a": args.a, "predecessor": value}, args.format, str(value))
    return EXIT_OK


def _cmd_family(args) -> int:
    elements = frozenset(_parse_values(args.elements))
    sample = SetSample(elements, args.bound)
    members = extraction.family_below(sample, args.n)
    obj = {
        "bound": args.bound,
        "family": [sorted(s.elements) for s in members],
    }
    text = "\n".join(" ".join(str(v) for v in sorted(s.elements)) for s in members)
    _emit(obj, args.format, text)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    e = enumerators.parse_spec(args.spec)
    p = enumerators.take_prefix(e, args.prefix_len, args.budget)
    _emit(
        {"spec": args.spec, "values": list(p.values)},
        args.format,
        " ".join(str(v) for v in p.values),
    )
    return EXIT_OK


def _cmd_chain_make(args) -> int:
    chain = make_strict_chain(args.n)
    obj = {"n": args.n, "chain": [list(p.values) for p in chain.listings]}
    text = "\n".join(" ".join(str(v) for v in p.values) for p in chain.listings)
    _emit(obj, args.format, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enumorder",
        description="Enumeration-order analysis of listing prefixes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--prefix-len", type=int, default=DEFAULT_PREFIX_LEN)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        return p

    p = add("compare", _cmd_compare, "reducibility both ways plus equivalence")
    p.add_argument("sources", nargs="+")

    p = add("verify", _cmd_verify, "run brute-force property checks")
    p.add_argument("--property", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("decide", _cmd_decide, "membership from a paired-listings file")
    p.add_argument("--paired", required=True)
    p.add_argument("--x", type=int, required=True)

    p = add("pattern", _cmd_pattern, "standardized rank sequence of a prefix")
    p.add_argument("source", nargs="+")

    p = add("inversions", _cmd_inversions, "inverted position pairs of a prefix")
    p.add_argument("source", nargs="+")

    p = add("transport", _cmd_transport, "carry h's order onto g_prime's values")
    p.add_argument("sources", nargs="+")

    p = add("stabilize", _cmd_stabilize, "find the least repeat in a chain file")
    p.add_argument("--chain", required=True)

    p = add("lemma8", _cmd_lemma8, "inverse-position clause report for f <=eo g")
    p.add_argument("sources", nargs="+")

    p = add("pred", _cmd_pred, "predecessor of a value via a paired file")
    p.add_argument("--paired", required=True)
    p.add_argument("--a", type=int, required=True)

    p = add("family", _cmd_family, "finite low-element modifications of a sample")
    p.add_argument("--elements", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("enumerate", _cmd_enumerate, "materialize an enumerator prefix")
    p.add_argument("spec")

    p = add("chain-make", _cmd_chain_make, "maximal strictly descending chain")
    p.add_argument("--n", type=int, required=True)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except EnumOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
