"""Command-line front end.

Subcommands:

* ``widths``  -- parameter report (n, rpw, rank, hpd, optionally pw)
* ``draw``    -- compute a drawing, print it as JSON
* ``verify``  -- check a drawing JSON against a tree
* ``gen``     -- emit trees from the built-in families
* ``oracle``  -- slow ground-truth cross-checks (rank / nw / equivalence)
* ``render``  -- turn a drawing JSON into ascii art or svg

Trees are accepted as paren text ("(()())"), as tree JSON, as a path to
a file holding either, or as "-" for stdin.  Drawings are JSON only
(inline, file, or stdin).  All JSON output uses sorted keys.

Exit codes: 0 success; 1 a checked property failed (verify said no, or
an oracle run disagreed) ; 2 bad usage or malformed input.

The oracle subcommands refuse sizes beyond a cap (they enumerate whole
tree families).  Set UPTREE_ORACLE_CAP to raise the ceiling when you
have the patience for it.
"""

import argparse
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path

from .layout import (
    draw_ordered,
    draw_unordered,
    drawing_from_json,
    drawing_to_json,
    layout_stats,
    reduce_bends,
)
from .oracle import (
    OracleConfig,
    equivalence_suite,
    min_nodes_for_rank,
    rank_bruteforce,
)
from .rank import rank, rank_witness_to_json
from .render import render_ascii, render_svg
from .tree import (
    ParseError,
    gen_complete_binary,
    gen_hpd_family,
    gen_path,
    gen_quintary_family,
    gen_random_tree,
    parse_tree,
    serialize_tree,
    tree_from_json,
    tree_to_json,
)
from .verify import DrawingMismatch, check_drawing, extract_rank_witness
from .widths import param_report

__all__ = ["main"]

_DEFAULT_ORACLE_CAP = 15


class _UsageError(Exception):
    """Input the CLI could not make sense of; maps to exit code 2."""


def _oracle_cap() -> int:
    raw = os.environ.get("UPTREE_ORACLE_CAP")
    if raw is None:
        return _DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise _UsageError(f"UPTREE_ORACLE_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise _UsageError("UPTREE_ORACLE_CAP must be >= 1")
    return cap


def _read_source(arg: str) -> str:
    """Resolve a tree/drawing argument to raw text.

    "-" reads stdin; text starting with "(" or "{" is taken inline;
    anything else must be a readable file path.
    """
    if arg == "-":
        return sys.stdin.read()
    stripped = arg.strip()
    if stripped.startswith("(") or stripped.startswith("{"):
        return arg
    p = Path(arg)
    try:
        if p.is_file():
            return p.read_text()
    except OSError as e:
        raise _UsageError(f"cannot read {arg!r}: {e}")
    raise _UsageError(f"{arg!r} is neither inline tree/drawing text nor a file")


def _load_tree(arg: str):
    text = _read_source(arg).strip()
    if text.startswith("{"):
        try:
            return tree_from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise _UsageError(f"bad tree JSON: {e}")
    return parse_tree(text)


def _load_drawing(arg: str):
    text = _read_source(arg).strip()
    if not text.startswith("{"):
        raise _UsageError("a drawing must be a JSON object")
    try:
        return drawing_from_json(json.loads(text))
    except json.JSONDecodeError as e:
        raise _UsageError(f"bad drawing JSON: {e}")


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _cmd_widths(args) -> int:
    t = _load_tree(args.tree)
    if args.pw and t.n > args.pw_cap:
        raise _UsageError(
            f"--pw enumerates layouts and is capped at n <= {args.pw_cap}; got n={t.n}"
        )
    report = param_report(t, include_pw=args.pw, pw_cap=args.pw_cap)
    out = report.to_json()
    out["rank"] = rank(t).root_rank()
    _emit(out)
    return 0


def _cmd_draw(args) -> int:
    t = _load_tree(args.tree)
    if args.mode == "unordered":
        d = draw_unordered(t)
    elif args.mode == "ordered3":
        d = draw_ordered(t, prune_collinear=args.prune_collinear)
    else:
        d = reduce_bends(draw_ordered(t), t)
    out = drawing_to_json(d)
    if args.stats:
        s = layout_stats(d)
        out["stats"] = {
            "width": s.width,
            "height": s.height,
            "max_bends_per_edge": s.max_bends_per_edge,
            "root_corner": s.root_corner,
        }
    _emit(out)
    return 0


def _cmd_verify(args) -> int:
    t = _load_tree(args.tree)
    d = _load_drawing(args.drawing)
    require = tuple(s.strip() for s in args.require.split(",") if s.strip())
    if not require:
        raise _UsageError("--require must name at least one property")
    report = check_drawing(t, d, require=require)
    out = asdict(report)
    if args.witness:
        w = extract_rank_witness(t, d)
        out["witness"] = None if w is None else rank_witness_to_json(w)
    _emit(out)
    return 0 if report.ok else 1


def _cmd_gen(args) -> int:
    if args.family == "path":
        t = gen_path(args.k)
    elif args.family == "binary":
        t = gen_complete_binary(args.k)
    elif args.family == "quintary":
        t = gen_quintary_family(args.k)
    elif args.family == "hpd":
        t = gen_hpd_family(args.k)
    else:
        t = gen_random_tree(args.k, seed=args.seed, max_degree=args.max_degree)
    if args.json:
        _emit(tree_to_json(t))
    else:
        print(serialize_tree(t))
    return 0


def _cmd_oracle(args) -> int:
    cap = _oracle_cap()
    if args.what == "rank":
        t = _load_tree(args.tree)
        if args.max_n > cap:
            raise _UsageError(
                f"--max-n {args.max_n} exceeds the oracle cap {cap} "
                "(set UPTREE_ORACLE_CAP to raise it)"
            )
        brute = rank_bruteforce(t, max_n=args.max_n)
        engine = rank(t).root_rank()
        _emit({"n": t.n, "rank_bruteforce": brute, "rank_engine": engine,
               "agree": brute == engine})
        return 0 if brute == engine else 1
    if args.what == "nw":
        if args.n_max > cap:
            raise _UsageError(
                f"--n-max {args.n_max} exceeds the oracle cap {cap} "
                "(set UPTREE_ORACLE_CAP to raise it)"
            )
        _emit(min_nodes_for_rank(args.W, n_max=args.n_max).to_json())
        return 0
    # equivalence
    if args.max_n > cap:
        raise _UsageError(
            f"--max-n {args.max_n} exceeds the oracle cap {cap} "
            "(set UPTREE_ORACLE_CAP to raise it)"
        )
    report = equivalence_suite(OracleConfig(max_n=args.max_n, max_W=args.max_w,
                                            seed=args.seed))
    _emit(report)
    return 0 if report["agree"] else 1


def _cmd_render(args) -> int:
    d = _load_drawing(args.drawing)
    if args.format == "svg":
        text = render_svg(d)
    else:
        text = render_ascii(d)
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="uptree",
        description="Minimum-width upward drawings of rooted trees.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("widths", help="print n, rpw, rank, hpd (and optionally pw)")
    p.add_argument("tree", help="paren text, tree JSON, file path, or - for stdin")
    p.add_argument("--pw", action="store_true",
                   help="also compute unrooted pathwidth (slow, small n only)")
    p.add_argument("--pw-cap", type=int, default=14,
                   help="size limit for --pw (default 14)")
    p.set_defaults(fn=_cmd_widths)

    p = sub.add_parser("draw", help="compute a drawing, print drawing JSON")
    p.add_argument("tree")
    p.add_argument("--mode", choices=["unordered", "ordered3", "ordered1"],
                   default="ordered3",
                   help="unordered: width rpw, straight lines; ordered3: width "
                        "rank, <=3 bends; ordered1: width rank, <=1 bend")
    p.add_argument("--prune-collinear", action="store_true",
                   help="drop bend points that lie on a straight segment")
    p.add_argument("--stats", action="store_true",
                   help="include width/height/bends in the output")
    p.set_defaults(fn=_cmd_draw)

    p = sub.add_parser("verify", help="check a drawing JSON against a tree")
    p.add_argument("tree")
    p.add_argument("drawing")
    p.add_argument("--require", default="planar,upward",
                   help="comma-separated properties that must hold for exit 0 "
                        "(planar, upward, strictly_upward, order_preserving, "
                        "straight_line)")
    p.add_argument("--witness", action="store_true",
                   help="also extract a rank witness from the drawing")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gen", help="emit a tree from a built-in family")
    p.add_argument("family", choices=["path", "binary", "quintary", "hpd", "random"])
    p.add_argument("k", type=int,
                   help="path: node count; binary: height; quintary/hpd: family "
                        "index; random: node count")
    p.add_argument("--seed", type=int, default=0, help="rng seed for random")
    p.add_argument("--max-degree", type=int, default=None,
                   help="degree cap for random")
    p.add_argument("--json", action="store_true", help="emit tree JSON, not parens")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("oracle", help="slow exhaustive cross-checks")
    osub = p.add_subparsers(dest="what", required=True)

    q = osub.add_parser("rank", help="brute-force the rank, compare with the engine")
    q.add_argument("tree")
    q.add_argument("--max-n", type=int, default=11,
                   help="refuse trees larger than this (default 11)")
    q.set_defaults(fn=_cmd_oracle)

    q = osub.add_parser("nw", help="minimal node count reaching a given rank")
    q.add_argument("W", type=int, help="target rank (1..4)")
    q.add_argument("--n-max", type=int, default=12,
                   help="enumerate trees up to this many nodes (default 12)")
    q.set_defaults(fn=_cmd_oracle)

    q = osub.add_parser("equivalence",
                        help="five witness-existence phrasings on all small trees")
    q.add_argument("--max-n", type=int, default=8,
                   help="largest tree size to enumerate (default 8)")
    q.add_argument("--max-w", type=int, default=4,
                   help="largest width to test (default 4)")
    q.add_argument("--seed", type=int, default=0, help="echoed into the report")
    q.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("render", help="drawing JSON -> ascii or svg")
    p.add_argument("drawing")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(fn=_cmd_render)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as e:
        print(f"uptree: {e}", file=sys.stderr)
        return 2
    except (ParseError, DrawingMismatch) as e:
        print(f"uptree: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"uptree: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
