"""Command-line front end.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage
errors (bad flags, malformed codes, values out of range).
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence
from xml.sax.saxutils import escape

from . import oracle
from .arithmetic import add, compare, decrement, increment, subtract
from .navigation import (
    CentralTile,
    Tiling,
    black_father,
    father,
    neighbors_black,
    neighbors_white,
    path_black,
    path_bottom_up,
    path_top_down,
    path_via_strips,
)
from .numeration import Grade, MetallicCode, decode, encode, random_code, seq_b, seq_M, seq_m
from .trees import TreeKind, classify, level_of, preferred_son, sons_signature_word, successor


class UsageError(Exception):
    pass


def _grade(p: int) -> Grade:
    if p < 5:
        raise UsageError("--p must be at least 5")
    return Grade(p)


def _code(g: Grade, text: str) -> MetallicCode:
    try:
        return MetallicCode.parse(g, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _node(g: Grade, text: str) -> MetallicCode:
    c = _code(g, text)
    if c.is_zero:
        raise UsageError("0 is not a node")
    return c


# ----------------------------------------------------------- commands


def cmd_seq(args) -> int:
    g = _grade(args.p)
    fn = {"m": seq_m, "b": seq_b, "M": seq_M}[args.kind]
    for n in range(args.upto + 1):
        print(fn(g, n))
    return 0


def cmd_encode(args) -> int:
    if args.n < 0:
        raise UsageError("only non-negative integers can be encoded")
    print(encode(_grade(args.p), args.n))
    return 0


def cmd_decode(args) -> int:
    print(decode(_code(_grade(args.p), args.code)))
    return 0


def cmd_binary(args) -> int:
    g = _grade(args.p)
    a, b = _code(g, args.a), _code(g, args.b)
    if args.command == "add":
        print(add(a, b))
    elif args.command == "cmp":
        print(compare(a, b))
    else:
        try:
            print(subtract(a, b))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return 0


def cmd_unary(args) -> int:
    g = _grade(args.p)
    a = _code(g, args.a)
    if args.command == "inc":
        print(increment(a))
    else:
        if a.is_zero:
            raise UsageError("0 has no predecessor")
        print(decrement(a))
    return 0


def cmd_node(args) -> int:
    g = _grade(args.p)
    kind = TreeKind(args.tree)
    c = _node(g, args.code)
    n = decode(c)
    cls = classify(kind, c)
    word = " ".join(f"{t}:{s}" for t, s in sons_signature_word(cls, g))
    print(f"number: {n}")
    print(f"level: {level_of(kind, g, n)}")
    print(f"class: {cls}")
    print(f"status: {cls.status}")
    print(f"signature: {cls.signature}")
    print(f"sons: {word}")
    up = father if kind is TreeKind.WHITE else black_father
    try:
        f = up(c)
        print(f"father: {f} ({decode(f)})")
    except CentralTile:
        print("father: central tile" if kind is TreeKind.WHITE else "father: none (leading tile)")
    if kind is TreeKind.WHITE:
        ps = preferred_son(c)
        print(f"preferred son: {ps.code} ({decode(ps.code)}), son {ps.position} of {ps.sons}")
    else:
        sc = successor(c)
        print(f"successor: {sc.code} ({decode(sc.code)}), son {sc.position} of {sc.father} ({decode(sc.father)})")
    return 0


def cmd_neighbors(args) -> int:
    g = _grade(args.p)
    c = _node(g, args.code)
    tiling = Tiling(args.tiling)
    if args.tree == "white":
        sides = neighbors_white(tiling, c, args.sector)
    else:
        sides = neighbors_black(tiling, c)
    for i, nb in enumerate(sides, 1):
        print(f"{i}: {nb}")
    return 0


_PATHS = {
    "bottomup": path_bottom_up,
    "topdown": path_top_down,
    "black": path_black,
    "strips": path_via_strips,
}


def cmd_path(args) -> int:
    g = _grade(args.p)
    c = _node(g, args.code)
    fn = _PATHS[args.algo]
    trace = fn(c) if fn is path_via_strips else fn(c, resolve=True)
    for level, step in enumerate(trace.steps):
        code = step.code if step.code is not None else encode(g, step.number)
        typ = step.type or "-"
        print(f"{level} {step.number} {code} {typ}")
    print(f"visits: {trace.visits}")
    return 0


def cmd_verify(args) -> int:
    g = _grade(args.p)
    if args.levels < 0:
        raise UsageError("--levels must be >= 0")
    ok = True
    for result in oracle.Verifier(g, args.levels).all():
        print(result.line(), flush=True)
        ok &= result.passed
    return 0 if ok else 1


def cmd_bench(args) -> int:
    g = _grade(args.p)
    if args.len < 1 or args.samples < 1:
        raise UsageError("--len and --samples must be positive")
    rng = random.Random(args.seed)
    totals = {"bottomup": 0, "topdown": 0}
    for _ in range(args.samples):
        c = random_code(g, args.len, rng)
        totals["bottomup"] += path_bottom_up(c).visits
        totals["topdown"] += path_top_down(c).visits
    for name, total in totals.items():
        mean = total / args.samples
        print(f"{name} mean_visits={mean:.2f} per_digit={mean / args.len:.3f}")
    return 0


# ------------------------------------------------------------- render

_FILL = {"black": "#d62728", "wa": "#1f77b4", "w0": "#2ca02c", "w1": "#2ca02c"}


def _tree_nodes(g: Grade, kind: TreeKind, levels: int):
    snap = oracle.build(g, kind, levels)
    codes = oracle.codes_by_chain(snap)
    rows = []
    for v in snap.nodes():
        cls = classify(kind, codes[v])
        fill = _FILL["black"] if cls.status == "black" else _FILL[cls.type]
        # preferred sons (white) and successors (black) end in 0 and are white
        preferred = cls.status == "white" and codes[v].signature == 0 and v > 1
        rows.append((v, snap.level[v], snap.father[v], codes[v], cls, fill, preferred))
    return snap, rows


def render_dot(g: Grade, kind: TreeKind, levels: int) -> str:
    _, rows = _tree_nodes(g, kind, levels)
    out = [f'digraph "{kind}_p{g.p}" {{', "  node [shape=circle, style=filled, fontcolor=white];"]
    for v, _, _, c, cls, fill, preferred in rows:
        border = ', color="#d62728", penwidth=3' if preferred else ""
        out.append(f'  n{v} [label="{v}\\n{c}", tooltip="{cls}", fillcolor="{fill}"{border}];')
    for v, _, f, *_ in rows:
        if f:
            out.append(f"  n{f} -> n{v};")
    out.append("}")
    return "\n".join(out) + "\n"


def render_svg(g: Grade, kind: TreeKind, levels: int) -> str:
    snap, rows = _tree_nodes(g, kind, levels)
    widest = max(snap.level_end[k] - snap.level_start[k] + 1 for k in range(levels + 1))
    step, gap, r = 28, 90, 11
    width, height = max(widest * step, 200) + 40, levels * gap + 60
    pos = {}
    for v, lev, *_ in rows:
        count = snap.level_end[lev] - snap.level_start[lev] + 1
        x = 20 + (v - snap.level_start[lev] + 0.5) * (width - 40) / count
        pos[v] = (x, 30 + lev * gap)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height}" '
           f'viewBox="0 0 {width:.0f} {height}">']
    for v, _, f, *_ in rows:
        if f:
            (x1, y1), (x2, y2) = pos[f], pos[v]
            out.append(f'<line x1="{x1:.1f}" y1="{y1}" x2="{x2:.1f}" y2="{y2}" stroke="#888" />')
    for v, _, _, c, cls, fill, preferred in rows:
        x, y = pos[v]
        stroke = ' stroke="#d62728" stroke-width="3"' if preferred else ""
        out.append(f'<g class="node" id="n{v}"><title>{v} [{escape(str(c))}] {cls}</title>'
                   f'<circle cx="{x:.1f}" cy="{y}" r="{r}" fill="{fill}"{stroke} />'
                   f'<text x="{x:.1f}" y="{y + 4}" font-size="9" text-anchor="middle" fill="white">{v}</text></g>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_render(args) -> int:
    g = _grade(args.p)
    if args.levels < 0:
        raise UsageError("--levels must be >= 0")
    kind = TreeKind(args.tree)
    fn = render_dot if args.format == "dot" else render_svg
    sys.stdout.write(fn(g, kind, args.levels))
    return 0


# -------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metallic", description="Metallic codes and tree navigation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, fn, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--p", type=int, required=True, help="tiling parameter, at least 5")
        sp.set_defaults(func=fn)
        return sp

    sp = command("seq", cmd_seq, "print m_n, b_n or M_n for n = 0..N")
    sp.add_argument("--kind", choices=["m", "b", "M"], default="m")
    sp.add_argument("--upto", type=int, required=True)

    command("encode", cmd_encode, "code of an integer").add_argument("n", type=int)
    command("decode", cmd_decode, "integer of a code").add_argument("code")
    for name in ("add", "sub", "cmp"):
        sp = command(name, cmd_binary, f"{name} two codes")
        sp.add_argument("a")
        sp.add_argument("b")
    for name in ("inc", "dec"):
        command(name, cmd_unary, f"{name} a code").add_argument("a")

    sp = command("node", cmd_node, "describe a tree node")
    sp.add_argument("--tree", choices=["white", "black"], default="white")
    sp.add_argument("code")

    sp = command("neighbors", cmd_neighbors, "sides of a tile")
    sp.add_argument("--tiling", choices=["p4", "p23"], default="p4")
    sp.add_argument("--tree", choices=["white", "black"], default="white")
    sp.add_argument("--sector", type=int, default=1)
    sp.add_argument("code")

    sp = command("path", cmd_path, "path from the leading tile")
    sp.add_argument("--algo", choices=list(_PATHS), default="topdown")
    sp.add_argument("code")

    sp = command("verify", cmd_verify, "run the brute-force checks")
    sp.add_argument("--levels", type=int, required=True)

    sp = command("bench", cmd_bench, "digit visits of the path algorithms")
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)

    sp = command("render", cmd_render, "tree diagram as DOT or SVG")
    sp.add_argument("--tree", choices=["white", "black"], default="white")
    sp.add_argument("--levels", type=int, required=True)
    sp.add_argument("--format", choices=["dot", "svg"], default="dot")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"metallic {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
