"""Command line interface: ``superpat <command> ...``.

Exit status: 0 success, 1 domain error, 2 usage error, 3 indeterminate search.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import geometry, perm, planegraph, search, strahler, superpat
from .majorize import majorize as majorize_sequence, xi
from .perm import Permutation

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3


class DomainError(Exception):
    pass


def _perm_arg(text: str) -> Permutation:
    """Accept "2 5 3 1 4", "2,5,3,1,4" or, for single digits, "25314"."""
    cleaned = text.replace(",", " ").strip()
    if " " not in cleaned and len(cleaned) > 1 and cleaned.isdigit():
        cleaned = " ".join(cleaned)
    try:
        return Permutation.parse(cleaned)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _class_arg(text: str) -> tuple[tuple[int, ...], ...]:
    """Dash separated forbidden patterns, e.g. ``213-3412``."""
    parts = [p for p in text.split("-") if p]
    if not parts:
        raise argparse.ArgumentTypeError("empty class")
    try:
        return tuple(tuple(_perm_arg(p)) for p in parts)
    except argparse.ArgumentTypeError as exc:
        raise argparse.ArgumentTypeError(f"bad class {text!r}: {exc}") from None


def _read_graph(path: str) -> planegraph.PlaneGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"{path}: {exc.strerror}") from None
    try:
        return planegraph.PlaneGraph.from_json(text)
    except planegraph.EmbeddingError as exc:
        raise DomainError(f"{path}: {exc}") from None


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


# -- perm ----------------------------------------------------------------------

def cmd_perm(args) -> int:
    op = args.op
    if op == "inverse":
        r = args.p.inverse()
        _emit(args, {"inverse": list(r)}, str(r))
    elif op == "contains":
        w = perm.contains(args.p, args.q)
        _emit(args, {"positions": None if w is None else list(w)},
              "none" if w is None else " ".join(map(str, w)))
        return EXIT_OK if w is not None else EXIT_DOMAIN
    elif op == "avoids":
        ok = perm.avoids(args.p, args.forbid)
        _emit(args, {"avoids": ok}, str(ok).lower())
    elif op == "chessboard":
        b = perm.chessboard(args.p)
        _emit(args, {"rows": b.rows_top_first()}, b.to_text())
    elif op == "from-board":
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise DomainError(f"{args.file}: {exc.strerror}") from None
        r = perm.from_chessboard(perm.Chessboard.parse(text))
        _emit(args, {"permutation": list(r)}, str(r))
    elif op == "graph":
        g = perm.chessboard_graph(args.p)
        payload = {
            "nodes": [list(n) for n in g.nodes],
            "edges": [[list(a), list(b)] for a, b in g.edges],
            "plane_forest": perm.is_directed_plane_forest(g),
        }
        lines = [f"({a[0]},{a[1]}) -> ({b[0]},{b[1]})" for a, b in g.edges]
        lines.append(f"plane forest: {str(payload['plane_forest']).lower()}")
        _emit(args, payload, "\n".join(lines))
    elif op == "enumerate":
        members = list(perm.enumerate_class(args.n, args.forbid))
        _emit(args, {"members": [list(m) for m in members]}, "\n".join(map(str, members)))
    return EXIT_OK


# -- majorize ------------------------------------------------------------------

def cmd_majorize(args) -> int:
    try:
        alpha = [int(t) for t in args.alpha.split(",") if t.strip()]
    except ValueError:
        raise DomainError(f"majorize expects comma separated integers, got {args.alpha!r}") from None
    idx = majorize_sequence(alpha)
    _emit(args, {"indices": idx, "xi": [xi(j) for j in idx]}, " ".join(map(str, idx)))
    return EXIT_OK


# -- superpat ------------------------------------------------------------------

def _class_members(tag: str, n: int, s: Optional[int]):
    if tag == "strahler":
        for m in range(1, n + 1):
            for p in perm.enumerate_class(m, [(2, 1, 3)]):
                if strahler.is_tree_shaped(p) and strahler.strahler_of_tree(strahler.tree_of_permutation(p)) <= s:
                    yield p
    else:
        yield from perm.enumerate_class(n, superpat.CLASSES[tag])


def cmd_superpat(args) -> int:
    if args.cls == "strahler" and args.s is None:
        raise DomainError("--s is required for --class strahler")
    sp = superpat.build(args.cls, args.n, args.s)
    if args.op == "build":
        _emit(args, {"permutation": list(sp), "length": len(sp)}, str(sp))
        return EXIT_OK
    missing = [p for p in _class_members(args.cls, args.n, args.s) if perm.contains(sp, p) is None]
    checked = sum(1 for _ in _class_members(args.cls, args.n, args.s))
    payload = {"length": len(sp), "checked": checked, "counterexamples": [list(p) for p in missing]}
    text = f"checked {checked} members of length {args.n}; superpattern length {len(sp)}"
    if missing:
        text += "\ncounterexamples:\n" + "\n".join(map(str, missing))
    else:
        text += "\nall embedded"
    _emit(args, payload, text)
    return EXIT_DOMAIN if missing else EXIT_OK


# -- pointset / draw -----------------------------------------------------------

def cmd_pointset(args) -> int:
    pts = geometry.universal_pointset(args.n)
    q = pts[0].y_base
    payload = {"q": q, "points": [{"x": p.x, "y_exp": p.y_exp} for p in pts]}
    if args.expand:
        for d, p in zip(payload["points"], pts):
            d["y"] = str(p.y)
        text = "\n".join(f"{p.x} {p.y}" for p in pts)
    else:
        text = "\n".join(f"{p.x} {p.y_exp}" for p in pts)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_draw(args) -> int:
    g = _read_graph(args.graph)
    d = geometry.draw(g)
    out = json.dumps(d.to_dict(), indent=None if args.json else 2)
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out)
    if args.svg:
        from .svg import drawing_to_svg

        Path(args.svg).write_text(drawing_to_svg(d))
    if not d.crossing_free:
        print("drawing has crossings", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_graph(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "maximal":
        g = planegraph.random_maximal_plane_graph(args.n, rng)
    else:
        g = planegraph.random_connected_plane_graph(args.n, rng)
    text = g.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


# -- strahler ------------------------------------------------------------------

def cmd_strahler(args) -> int:
    aug = strahler.tree_augment(args.perm)
    bound = strahler.strahler_of_tree(aug.tree())
    payload = {
        "upper_bound": bound,
        "augmentation": list(aug.perm),
        "real_mask": list(aug.real_mask),
        "fictitious_leaf_violations": strahler.fictitious_leaf_violations(aug),
    }
    lines = [f"upper bound: {bound}", f"augmentation: {aug.perm}"]
    if payload["fictitious_leaf_violations"]:
        lines.append(f"fictitious leaves without a real parent: {payload['fictitious_leaf_violations']}")
    if args.exact:
        exact = strahler.strahler_exact(args.perm)
        payload["exact"] = exact
        lines.append(f"exact: {exact}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# -- search --------------------------------------------------------------------

def cmd_search(args) -> int:
    budget = search.Budget(args.budget, args.nodes)
    if args.op == "minimal":
        res = search.minimal_superpattern_length(args.cls, args.n, budget)
    else:
        if args.length is None:
            raise DomainError("search staged needs --length")
        res = search.confirm_staged(args.cls, args.n, args.length, budget)
    payload = res.to_dict()
    if res.status != "determined":
        _emit(args, payload, "indeterminate")
        return EXIT_INDETERMINATE
    if args.op == "staged":
        payload["confirmed"] = bool(res.answer)
        text = "confirmed" if res.answer else f"refuted by {res.witness}"
        _emit(args, payload, text)
        return EXIT_OK
    _emit(args, payload, str(res.answer))
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(prog="superpat", description="Superpatterns and universal point sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perm", parents=[common], help="permutation utilities")
    ps = p.add_subparsers(dest="op", required=True)
    for name in ("inverse", "chessboard", "graph"):
        q = ps.add_parser(name, parents=[common])
        q.add_argument("p", type=_perm_arg)
    q = ps.add_parser("contains", parents=[common])
    q.add_argument("p", type=_perm_arg, help="haystack")
    q.add_argument("q", type=_perm_arg, help="pattern")
    q = ps.add_parser("avoids", parents=[common])
    q.add_argument("p", type=_perm_arg)
    q.add_argument("--forbid", type=_class_arg, required=True, help="e.g. 213-3412")
    q = ps.add_parser("from-board", parents=[common])
    q.add_argument("file")
    q = ps.add_parser("enumerate", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--forbid", type=_class_arg, default=())
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("majorize", parents=[common], help="majorize a sequence against xi")
    p.add_argument("alpha", help="comma separated positive integers")
    p.set_defaults(func=cmd_majorize)

    def superpat_flags(p):
        p.add_argument("--class", dest="cls", required=True, choices=list(superpat.CLASSES) + ["strahler"])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--s", type=int)
        p.set_defaults(func=cmd_superpat)

    p = sub.add_parser("superpat", parents=[common], help="build or verify superpatterns")
    p.add_argument("op", choices=["build", "verify"])
    superpat_flags(p)
    # `superpat build ...` and `superpat verify ...` work without the group word
    for op in ("build", "verify"):
        p = sub.add_parser(op, parents=[common], help=f"shorthand for `superpat {op}`")
        superpat_flags(p)
        p.set_defaults(op=op)

    p = sub.add_parser("pointset", parents=[common], help="universal point set for n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expand", action="store_true", help="print full heights instead of exponents")
    p.set_defaults(func=cmd_pointset)

    p = sub.add_parser("draw", parents=[common], help="draw a plane graph on the universal point set")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("graph", parents=[common], help="random plane graph corpora")
    p.add_argument("kind", choices=["maximal", "connected"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("strahler", parents=[common], help="tree augmentation and Strahler bound")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--exact", action="store_true", help="also run the exhaustive search (|p| <= 7)")
    p.set_defaults(func=cmd_strahler)

    p = sub.add_parser("search", parents=[common], help="exhaustive superpattern searches")
    p.add_argument("op", choices=["minimal", "staged"])
    p.add_argument("--class", dest="cls", type=_class_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int)
    p.add_argument("--budget", type=float, help="wall-clock seconds")
    p.add_argument("--nodes", type=int, help="candidate budget")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


dispatch = main

if __name__ == "__main__":
    sys.exit(main())
