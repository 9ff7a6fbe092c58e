"""``virtcover`` command line.

Exit codes: 0 on success, 1 when a domain precondition fails (not a cut
system, wrong component count...), 2 for malformed input or I/O trouble.
Reports are data: a diagram that is not normal or not a cut system is
still a successful ``check``.
"""

from __future__ import annotations

import argparse
import sys

from . import checks
from .codec import emit_report, parse, report_to_dict, serialize
from .covering import coherent_double_cover
from .errors import CodeSyntaxError, DiagramError, InvalidCode
from .gauss import is_even
from .invariants import compute_report, resolve_cut_system
from .moves import random_walk
from .orientation import is_cut_system, is_normal
from .realize import realize


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    return parse(_read(path))


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _bool(x) -> str:
    return "true" if x else "false"


def cmd_parse(args, out):
    out.write(serialize(_load(args.file)) + "\n")


def cmd_check(args, out):
    code = _load(args.file)
    per, even = is_even(code)
    out.write(f"components: {code.num_components}\n")
    out.write(f"even: {_bool(even)}\n")
    out.write(f"even_components: {' '.join(_bool(e) for e in per)}\n")
    out.write(f"normal: {_bool(is_normal(code))}\n")
    out.write(f"cut_points: {len(code.cut_points)}\n")
    out.write(f"is_cut_system: {_bool(is_cut_system(code))}\n")


def cmd_realize(args, out):
    real = realize(_load(args.file), seed=args.seed)
    out.write(serialize(real.code) + "\n")
    if args.svg:
        from .plotting import draw_realization

        draw_realization(real, args.svg)


def cmd_cover(args, out):
    code, _ = resolve_cut_system(_load(args.file), args.cut)
    text = serialize(coherent_double_cover(code).code) + "\n"
    if args.out:
        _write(args.out, text)
    else:
        out.write(text)


def _text_report(report) -> str:
    d = report_to_dict(report)
    lines = []
    for key in ("components", "even", "normal", "cut_system", "is_cut_system", "writhe", "odd_writhe", "lk_N"):
        v = d[key]
        lines.append(f"{key}: {_bool(v) if isinstance(v, bool) else ('-' if v is None else v)}")
    for pair, v in d["linking"].items():
        lines.append(f"linking({pair}): {v}")
    if d["cover"]:
        c = d["cover"]
        lines.append(f"cover.components: {c['components']}")
        lines.append(f"cover.labels: {' '.join(c['labels'])}")
        lines.append(f"cover.normal: {_bool(c['normal'])}")
        for pair, v in c["linking"].items():
            lines.append(f"cover.linking({pair}): {v}")
    for key in ("lambda_abs", "nu_abs"):
        for pair, v in (d[key] or {}).items():
            lines.append(f"{key}({pair}): {v}")
    for pair, v in (d["q_sets"] or {}).items():
        lines.append(f"q_set({pair}): {{{', '.join(v)}}}")
    for i, v in (d["self_pair_link"] or {}).items():
        lines.append(f"self_pair_link({i}): {v}")
    lines.append(f"f_polynomial: {'-' if d['f_polynomial'] is None else d['f_polynomial']}")
    return "\n".join(lines) + "\n"


def cmd_invariants(args, out):
    code = _load(args.file)
    report = compute_report(code, cut=args.cut)
    out.write(emit_report(report) + "\n" if args.json else _text_report(report))
    if args.figure:
        from .plotting import draw_report_figure

        with_cuts, _ = resolve_cut_system(code, args.cut)
        cover = coherent_double_cover(with_cuts).code if report.is_cut_system else None
        draw_report_figure(with_cuts, cover, args.figure)


def cmd_walk(args, out):
    code = _load(args.file)
    final, trace = random_walk(code, args.moves, args.seed, cut_moves=args.cut_moves)
    out.write(serialize(final) + "\n")
    for move in trace:
        sys.stderr.write(f"{move}\n")


def cmd_selftest(args, out):
    results = checks.run_all(cases=args.cases, seed=args.seed)
    for key, res in sorted(results, key=lambda kv: int(kv[0])):
        out.write(f"[{key}] {res.line()}\n")
        for msg in res.failures[:3]:
            out.write(f"    {msg}\n")
    tally = checks.summary(results)
    out.write(f"passed {tally['pass']}/{len(results)}\n")
    return 0 if not tally["fail"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="virtcover", description="Virtual link diagrams and their double coverings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", help="validate a code file and print it normalized")
    s.add_argument("file")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("check", help="report evenness, normality and cut-system status")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("realize", help="insert virtual crossings to make a planar diagram")
    s.add_argument("file")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--svg", metavar="OUT", help="also draw the routed layout (format from suffix)")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("cover", help="print the coherent double covering")
    s.add_argument("file")
    s.add_argument("--cut", choices=("auto", "canonical", "inline"), default="auto")
    s.add_argument("--out", metavar="FILE")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("invariants", help="compute the invariant report")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--cut", choices=("auto", "canonical", "inline"), default="auto")
    s.add_argument("--figure", metavar="OUT", help="draw Gauss diagrams of the diagram and its covering")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("walk", help="apply random moves; the move list goes to stderr")
    s.add_argument("file")
    s.add_argument("--moves", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--cut-moves", action="store_true", help="use cut point moves instead of Reidemeister moves")
    s.set_defaults(func=cmd_walk)

    s = sub.add_parser("selftest", help="run the seeded property suites")
    s.add_argument("--cases", type=int, default=None, help="cases per suite (default: full counts)")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rc = args.func(args, out)
    except (CodeSyntaxError, InvalidCode) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except DiagramError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
