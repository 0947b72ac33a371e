"""Command-line interface.

Window sizes are written ``ROWSxCOLS`` as they appear in the torus: ``3x2``
is a window three stacked strings tall and two symbols wide (w=3, l=2).

Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import DeBruijnError
from .families import budget_from_env, generate_family, verify_family
from .fileio import (
    RenderSpec,
    read_family,
    read_family_strings,
    read_torus,
    read_window,
    render_grid,
    write_family,
    write_torus,
)
from .graphs import build_alternating_graph, generate_debruijn_sequence
from .torus import (
    ConstructionRecord,
    alternating_sequence_for,
    build_torus,
    locate_window,
    solve_parameters,
    verify_torus,
    wrap_check,
)
from .words import Alphabet


class UsageError(Exception):
    pass


def parse_window(text: str) -> tuple[int, int]:
    """``"ROWSxCOLS"`` -> ``(l, w)``: ``parse_window("3x2") == (2, 3)``."""
    parts = text.lower().split("x")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise UsageError(f"window must look like 3x2, got {text!r}")
    rows, cols = int(parts[0]), int(parts[1])
    if rows < 1 or cols < 1:
        raise UsageError("window dimensions must be positive")
    return cols, rows


def format_window(l: int, w: int) -> str:  # noqa: E741
    return f"{w}x{l}"


def _alphabet(text: str) -> Alphabet:
    if not text or any(c.isspace() or not c.isprintable() for c in text):
        raise UsageError("alphabet must be visible single characters, e.g. 01")
    if len(set(text)) != len(text):
        raise UsageError(f"alphabet {text!r} repeats a symbol")
    return Alphabet.from_string(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen_seq(args) -> int:
    s = generate_debruijn_sequence(_alphabet(args.alphabet), args.order)
    _emit(str(s) + "\n", args.out)
    return 0


def cmd_gen_family(args) -> int:
    f = generate_family(
        _alphabet(args.alphabet), args.order, args.num, args.len, budget=budget_from_env()
    )
    _emit(write_family(f), args.out)
    return 0


def cmd_verify_family(args) -> int:
    strings, l, alphabet = read_family_strings(Path(args.file).read_text())  # noqa: E741
    report = verify_family(strings, l, alphabet)
    print("ok" if report else f"not a de Bruijn family: {report.message}")
    return 0 if report else 1


def cmd_gen_alt(args) -> int:
    family = read_family(Path(args.family).read_text())
    seq = alternating_sequence_for(family, args.window_w, args.method)
    index = {s: i for i, s in enumerate(family.strings)}
    payload = {
        "family": [str(s) for s in family.strings],
        "order": seq.order,
        "string_indices": [index[s] for s in seq.a_letters],
        "rotations": [x.amount for x in seq.b_letters],
        "wraps": wrap_check(seq).ok,
    }
    _emit(json.dumps(payload) + "\n", args.out)
    return 0


def _pick_parameters(alphabet: Alphabet, l: int, w: int, r: int | None, m: int | None):  # noqa: E741
    if r is not None and m is not None:
        return r, m
    options = solve_parameters(len(alphabet), l, w)
    if r is not None:
        options = [p for p in options if p.r == r]
    if m is not None:
        options = [p for p in options if p.m == m]
    if not options:
        raise UsageError(f"no admissible (r, m) for |O|={len(alphabet)} and window {format_window(l, w)}")
    return options[0].r, options[0].m


def cmd_build_torus(args) -> int:
    alphabet = _alphabet(args.alphabet)
    l, w = parse_window(args.window)  # noqa: E741
    r, m = _pick_parameters(alphabet, l, w, args.r, args.m)
    torus, rec = build_torus(alphabet, l, w, r, m, budget=budget_from_env(), method=args.method)
    if args.record:
        Path(args.record).write_text(rec.to_json())
    _emit(write_torus(torus.transpose() if args.transpose else torus), args.out)
    return 0


def cmd_verify_torus(args) -> int:
    torus = read_torus(Path(args.file).read_text())
    l, w = parse_window(args.window)  # noqa: E741
    report = verify_torus(torus, l, w)
    print("ok" if report else report.describe())
    return 0 if report else 1


def cmd_locate(args) -> int:
    rec = ConstructionRecord.from_json(Path(args.record).read_text())
    row, col = locate_window(rec, read_window(Path(args.window_file).read_text()))
    print(row, col)
    return 0


def cmd_render(args) -> int:
    torus = read_torus(Path(args.file).read_text())
    data = render_grid(torus, RenderSpec(args.format, transpose=args.transpose))
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return 0


def cmd_solve(args) -> int:
    l, w = parse_window(args.window)  # noqa: E741
    size = args.size if args.size is not None else len(_alphabet(args.alphabet or "01"))
    for p in solve_parameters(size, l, w):
        print(f"r={p.r} m={p.m} v={p.v}")
    return 0


def cmd_dump_graph(args) -> int:
    g = build_alternating_graph(_alphabet(args.a), _alphabet(args.b), args.order)
    _emit(g.dump(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbtorus",
        description="Build and verify de Bruijn tori from de Bruijn families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-seq", help="de Bruijn sequence")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_seq)

    p = sub.add_parser("gen-family", help="de Bruijn family (family file format)")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--order", type=int, required=True, help="substring length l")
    p.add_argument("--num", type=int, required=True, help="number of strings m")
    p.add_argument("--len", type=int, required=True, help="string length r")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_family)

    p = sub.add_parser("verify-family", help="check a family file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_verify_family)

    p = sub.add_parser("gen-alt", help="alternating de Bruijn sequence over a family")
    p.add_argument("--family", required=True, help="family file")
    p.add_argument("--window-w", type=int, required=True, help="window height w; order is 2w-1")
    p.add_argument("--method", choices=("auto", "eulerian", "interlace"), default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_alt)

    p = sub.add_parser("build-torus", help="construct a de Bruijn torus")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--window", required=True, help="ROWSxCOLS, e.g. 3x2")
    p.add_argument("--r", type=int, help="string length (torus width)")
    p.add_argument("--m", type=int, help="family size")
    p.add_argument("--method", choices=("auto", "eulerian", "interlace"), default="auto")
    p.add_argument("--record", help="write the construction record (JSON) here")
    p.add_argument("--transpose", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build_torus)

    p = sub.add_parser("verify-torus", help="check every window occurs once")
    p.add_argument("--file", required=True)
    p.add_argument("--window", required=True, help="ROWSxCOLS")
    p.set_defaults(func=cmd_verify_torus)

    p = sub.add_parser("locate", help="position of a window via its construction record")
    p.add_argument("--record", required=True)
    p.add_argument("--window-file", required=True)
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("render", help="torus file to PBM/PGM/text")
    p.add_argument("--file", required=True)
    p.add_argument("--format", choices=("text", "pgm", "pbm"), default="pbm")
    p.add_argument("--transpose", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("solve", help="admissible (r, m, v) for a window")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--alphabet")
    g.add_argument("--size", type=int, help="alphabet size")
    p.add_argument("--window", required=True, help="ROWSxCOLS")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dump-graph", help="alternating de Bruijn graph as FROM<TAB>TO<TAB>LABEL")
    p.add_argument("--a", required=True, help="first alphabet")
    p.add_argument("--b", required=True, help="second alphabet")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dump_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"dbtorus: error: {exc}", file=sys.stderr)
        return 2
    except (DeBruijnError, OSError) as exc:
        print(f"dbtorus: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    finally:
        sys.stdout.flush()


if __name__ == "__main__":
    sys.exit(main())
