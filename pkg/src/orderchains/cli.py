"""Command-line front end.

Outputs are deterministic: identical arguments, files and seeds produce
byte-identical output.  Exit status is 0 on success, 1 when a check ran
and found violations, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import chains, dense, encodings, orders, reductions, trees
from .errors import OrderChainsError, ParseError
from .orders import Tag
from .words import format_bit_word, format_nat_word, parse_nat_word

_TAG_CHOICES = {t.value: t for t in Tag}


def _order_from_args(args) -> orders.Order:
    tag = _TAG_CHOICES[args.tag] if getattr(args, "tag", None) else None
    return orders.make_order(args.order, strict=args.strict, tag=tag)


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as fp:
            return fp.readlines()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc


def _read_elements(path: str, tag: Tag) -> list[orders.Element]:
    out = []
    for lineno, line in enumerate(_read_lines(path), start=1):
        for token in line.split():
            try:
                out.append(orders.parse_element(token, tag))
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
    return out


def _read_sequence(path: str, tag: Tag) -> chains.Sequence:
    return chains.Sequence(tag, tuple(_read_elements(path, tag)))


def _read_tree(path: str, mode: str) -> trees.FiniteTree:
    words = []
    for lineno, line in enumerate(_read_lines(path), start=1):
        token = line.strip()
        if not token:
            continue
        try:
            words.append(parse_nat_word(token))
        except ParseError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from exc
    return trees.validate_tree(words, mode=mode)


def _read_rationals(path: str) -> list[Fraction]:
    return [el.value for el in _read_elements(path, Tag.RATIONAL)]


def cmd_analyze(args) -> int:
    order = _order_from_args(args)
    seq = _read_sequence(args.sequence, order.domain)
    length, witness = chains.longest_chain(seq, order)
    value, count = chains.constant_subsequence(seq)
    print(f"length: {length}")
    print(chains.format_witness(witness))
    print(f"constant value: {orders.format_element(value)}")
    print(f"constant count: {count}")
    return 0


def cmd_reduce(args) -> int:
    tree = _read_tree(args.tree, args.mode)
    pipeline = reductions.make_pipeline(args.target)
    image = pipeline.apply(reductions.reduce_tree(tree, args.horizon))
    lines = [orders.format_element(el) for el in image]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fp:
            fp.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    length, witness = chains.longest_chain(image, pipeline.order)
    print(f"target: {pipeline.name}")
    print(f"horizon: {args.horizon}")
    print(f"chain length: {length}")
    print("chain " + chains.format_witness(witness).replace("\n", "\nchain "))
    return 0


def cmd_encode(args) -> int:
    for token in args.inputs:
        if args.map == "double":
            if not token.isdigit():
                raise ParseError(f"bad natural token {token!r}")
            print(format_bit_word(encodings.double_bits(int(token))))
            continue
        word = parse_nat_word(token)
        if args.map == "binary":
            print(format_bit_word(encodings.word_to_bits(word)))
        else:
            value = encodings.word_to_dyadic(word)
            print(f"{value.numerator}/{value.denominator}")
    return 0


def cmd_fuzz(args) -> int:
    pipeline = reductions.make_pipeline(args.pipeline)
    gen = reductions.TreeGenSpec(
        seed=args.seed,
        depth_cap=args.depth_cap,
        node_cap=args.node_cap,
        mean_children=args.mean_children,
        max_children=args.max_children,
    )
    report = reductions.fuzz_reduction(pipeline, gen, args.trials, args.horizon)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fp:
            report.write_csv(fp)
    else:
        report.write_csv(sys.stdout)
    print(report.summary(), file=sys.stderr)
    return 0 if report.ok else 1


def cmd_classify(args) -> int:
    values = _read_rationals(args.elements)
    print("n depth")
    n = 2
    while n < len(values):
        print(f"{n} {dense.splitting_depth(values[:n])}")
        n *= 2
    print(f"{len(values)} {dense.splitting_depth(values)}")
    return 0


def cmd_cantor(args) -> int:
    if args.set == "cantor3":
        oracle = dense.MiddleThirds()
    else:
        intervals = []
        for lineno, line in enumerate(_read_lines(args.set), start=1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 2:
                raise ParseError(f"{args.set}:{lineno}: expected 'lo hi'")
            try:
                intervals.append((Fraction(parts[0]), Fraction(parts[1])))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"{args.set}:{lineno}: {exc}") from exc
        oracle = dense.FixedStages(intervals)
    scheme = dense.build_scheme(oracle, args.depth, resolution=args.resolution)
    for line in scheme.dump_lines():
        print(line)
    if args.extract:
        if not args.stream:
            raise ParseError("--extract needs --stream FILE")
        values = _read_rationals(args.stream)
        stream = dense.stream_from_values(values, name=args.stream)
        count = args.count if args.count is not None else len(values)
        if args.extract == "P":
            picked = dense.prune_successor_endpoints(stream, scheme, count)
        else:
            picked = dense.gap_selector(stream, scheme, count)
        print(f"extract {args.extract}: {len(picked)} elements")
        for v in picked:
            print(f"{v.numerator}/{v.denominator}")
    return 0


def cmd_decide_up(args) -> int:
    order = _order_from_args(args)
    up = chains.parse_up_sequence(args.input, order.domain)
    witness = chains.cycle_witness(up, order)
    if witness is None:
        print("member: false")
    else:
        print("member: true")
        loop = witness + [witness[0]]
        print("cycle: " + " -> ".join(orders.format_element(e) for e in loop))
    return 0


def cmd_check_axioms(args) -> int:
    order = _order_from_args(args)
    support = _read_elements(args.support, order.domain)
    axioms = tuple(args.axioms.split(",")) if args.axioms else None
    report = orders.check_axioms(order, support, axioms=axioms)
    print(report.describe())
    return 0 if report.ok else 1


def _add_order_flags(sub):
    sub.add_argument("--order", required=True, help="oracle name, e.g. IntLess or RL")
    group = sub.add_mutually_exclusive_group()
    group.add_argument(
        "--strict", dest="strict", action="store_true", default=True,
        help="strict reading (the default)",
    )
    group.add_argument(
        "--non-strict", dest="strict", action="store_false",
        help="reflexive reading: equal values count as related",
    )
    sub.add_argument("--tag", choices=sorted(_TAG_CHOICES), help="domain tag (Delta only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orderchains",
        description="chain detection, tree reductions, order encodings, density diagnostics",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="longest chain and constant-value stats of a sequence")
    p.add_argument("sequence", help="file of whitespace-separated element tokens")
    _add_order_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("reduce", help="reduce a tree file to its image sequence")
    p.add_argument("tree", help="file with one word per line ('e' is the root)")
    p.add_argument("--target", choices=reductions.PIPELINE_NAMES, default="subset")
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--mode", choices=("strict", "closure"), default="strict")
    p.add_argument("--out", help="write the image sequence to this file")
    p.set_defaults(func=cmd_reduce)

    p = subs.add_parser("encode", help="apply a pointwise encoding to words or naturals")
    p.add_argument("--map", choices=sorted(reductions.POINTWISE_MAPS), required=True)
    p.add_argument("inputs", nargs="+", help="word tokens (or naturals for --map double)")
    p.set_defaults(func=cmd_encode)

    p = subs.add_parser("fuzz", help="random trees through a reduction pipeline, CSV report")
    p.add_argument("--pipeline", choices=reductions.PIPELINE_NAMES, default="subset")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--horizon", type=int, default=200)
    p.add_argument("--node-cap", type=int, default=500, dest="node_cap")
    p.add_argument("--depth-cap", type=int, default=12, dest="depth_cap")
    p.add_argument("--mean-children", type=float, default=1.2, dest="mean_children")
    p.add_argument("--max-children", type=int, default=6, dest="max_children")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_fuzz)

    p = subs.add_parser("classify", help="splitting-depth trend table of a rational list")
    p.add_argument("elements", help="file of rational tokens")
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("cantor", help="build an interval scheme; optionally extract P or Y")
    p.add_argument("--set", default="cantor3", help="cantor3 or a stage file of 'lo hi' lines")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--resolution", type=int, help="stage index to split against")
    p.add_argument("--extract", choices=("P", "Y"))
    p.add_argument("--stream", help="file of rational tokens enumerating the countable set")
    p.add_argument("--count", type=int, help="how many stream values to use (default: all)")
    p.set_defaults(func=cmd_cantor)

    p = subs.add_parser("decide-up", help="does an eventually periodic sequence contain an infinite chain")
    p.add_argument("input", help="literal 'prefix | cycle' text of element tokens (quote it)")
    _add_order_flags(p)
    p.set_defaults(func=cmd_decide_up)

    p = subs.add_parser("check-axioms", help="check order axioms on a finite support file")
    p.add_argument("support", help="file of element tokens")
    _add_order_flags(p)
    p.add_argument("--axioms", help="comma-separated subset of: reflexivity,antisymmetry,transitivity,totality")
    p.set_defaults(func=cmd_check_axioms)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrderChainsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
