"""
Command-line workbench.

    dessinfilt enumerate --edges 3
    dessinfilt compare --window 4 --level 2
    dessinfilt quotients --window 4 --max-level 2 --format csv

Exit status: 0 on success, 1 on usage errors, 2 on bound or validation errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .cache import CacheError, cached_enumerate, load_window
from .checks import run_all
from .dessin import (
    BoundError,
    Dessin,
    DessinError,
    canonical_form,
    components,
    delete_edges,
    genus,
    is_connected,
    monodromy_order,
    passport,
)
from .dot import export_dot
from .filtration import (
    compare_levels,
    expansion,
    level_generators,
    product,
    quotient_table,
    span,
)

MAX_WINDOW = 6
MAX_LEVEL = 4
MAX_PRODUCT_EDGES = 64
MAX_OPTIONAL = 12
MONODROMY_BOUND = 8

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _edge_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated edge indices, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="output format (default json; dot text for export-dot)")
    common.add_argument("--cache-dir", default=None,
                        help="enumeration cache directory (DESSIN_CACHE_DIR overrides)")
    common.add_argument("--no-empty", action="store_true",
                        help="exclude the empty dessin from basis windows")
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes for enumeration and generator production")

    parser = _Parser(prog="dessinfilt", description="Dessin and product filtrations on formal sums of dessins.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("enumerate", parents=[common], help="list isomorphism classes with n edges")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--connected", action="store_true")

    for name, doc in (("canon", "canonical key and representative"),
                      ("invariants", "passport, genus and monodromy"),
                      ("export-dot", "Graphviz rendering")):
        p = sub.add_parser(name, parents=[common], help=doc)
        p.add_argument("dessin")

    p = sub.add_parser("delete", parents=[common], help="remove edges")
    p.add_argument("dessin")
    p.add_argument("--edges", type=_edge_list, required=True)

    p = sub.add_parser("expand", parents=[common], help="expansion with optional edges")
    p.add_argument("dessin")
    p.add_argument("--optional", type=_edge_list, required=True)

    p = sub.add_parser("product", parents=[common], help="product of two dessins")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("filtration", parents=[common], help="rank of one filtration level")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--kind", choices=("dessin", "belyi"), default="dessin")

    p = sub.add_parser("compare", parents=[common], help="compare both filtrations at one level")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--level", type=int, required=True)

    p = sub.add_parser("quotients", parents=[common], help="quotient dimensions of the dessin filtration")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--max-level", type=int, required=True)

    p = sub.add_parser("check", parents=[common], help="randomized invariant checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0, help="multiplier for the number of trials")
    return parser


#####################################################################
# helpers
#####################################################################

def _read_dessin(path: str) -> Dessin:
    try:
        with open(path) as f:
            obj = json.load(f)
    except OSError as e:
        raise DessinError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise DessinError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from None
    if not isinstance(obj, dict):
        raise DessinError(f"{path}: expected a dessin object")
    return Dessin.from_json(obj)


def _check_window(N: int) -> None:
    if N < 0:
        raise UsageError("window must be non-negative")
    if N > MAX_WINDOW:
        raise BoundError(f"window {N} exceeds the bound of {MAX_WINDOW} edges")


def _check_level(d: int, minimum: int = 0) -> None:
    if d < minimum:
        raise UsageError(f"level must be at least {minimum}")
    if d > MAX_LEVEL:
        raise BoundError(f"level {d} exceeds the bound of {MAX_LEVEL}")


def _cache_dir(args):
    return os.environ.get("DESSIN_CACHE_DIR") or args.cache_dir


def _window(args, N):
    return load_window(N, "all", not args.no_empty, _cache_dir(args), workers=args.threads)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([json.dumps(x) if isinstance(x, (list, dict)) else _cell(x) for x in r])
    return buf.getvalue().rstrip("\n")


def _cell(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    return x


def _text(obj, indent="") -> str:
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {_cell(v) if not isinstance(v, list) else ' '.join(map(str, v))}")
    return "\n".join(lines)


def _emit(fmt, obj, csv_rows=None, text=None) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2)
    if fmt == "csv":
        header, rows = csv_rows if csv_rows else (list(obj), [list(obj.values())])
        return _csv(rows, header)
    return text if text is not None else _text(obj)


def _vector_rows(v_json):
    return ["key", "coeff"], [[t["key"], t["coeff"]] for t in v_json["terms"]]


def _vector_text(v_json):
    if not v_json["terms"]:
        return "0"
    return "\n".join(f"{t['coeff']:>8}  [{t['key']}]" for t in v_json["terms"])


#####################################################################
# subcommands
#####################################################################

def cmd_enumerate(args):
    n = args.edges
    if n < 0:
        raise UsageError("--edges must be non-negative")
    if n > MAX_WINDOW:
        raise BoundError(f"enumeration of {n} edges exceeds the bound of {MAX_WINDOW}")
    mode = "connected" if args.connected else "all"
    keys = cached_enumerate(n, mode, _cache_dir(args), workers=args.threads)
    obj = {"edges": n, "mode": mode, "count": len(keys), "keys": keys}
    return _emit(args.format, obj, (["key"], [[k] for k in keys]), "\n".join(keys))


def cmd_canon(args):
    key, C = canonical_form(_read_dessin(args.dessin))
    obj = {"key": key, "dessin": C.to_json()}
    return _emit(args.format, obj, (["key", "edges", "sigma0", "sigma1"],
                                    [[key, C.edges, list(C.sigma0), list(C.sigma1)]]), key)


def cmd_invariants(args):
    D = _read_dessin(args.dessin)
    connected = D.edges > 0 and is_connected(D)
    obj = {
        "edges": D.edges,
        "key": canonical_form(D)[0],
        "passport": passport(D).to_json(),
        "connected": connected,
        "genus": genus(D) if connected else None,
        "monodromy_order": monodromy_order(D, MONODROMY_BOUND) if connected and D.edges <= MONODROMY_BOUND else None,
        "components": [{"edges": orig, "key": canonical_form(C)[0]} for C, orig in components(D)],
    }
    flat = {k: v for k, v in obj.items() if k not in ("passport", "components")}
    flat.update(obj["passport"])
    return _emit(args.format, obj, (list(flat), [list(flat.values())]))


def cmd_delete(args):
    D = _read_dessin(args.dessin)
    R, surv = delete_edges(D, args.edges)
    obj = {"dessin": R.to_json(), "key": canonical_form(R)[0],
           "survivor_map": {str(k): v for k, v in sorted(surv.items())}}
    return _emit(args.format, obj, (["original", "new"], [[k, v] for k, v in sorted(surv.items())]))


def cmd_expand(args):
    D = _read_dessin(args.dessin)
    if len(set(args.optional)) > MAX_OPTIONAL:
        raise BoundError(f"at most {MAX_OPTIONAL} optional edges are allowed")
    v = expansion(D, args.optional).to_json()
    return _emit(args.format, v, _vector_rows(v), _vector_text(v))


def cmd_product(args):
    A, B = _read_dessin(args.a), _read_dessin(args.b)
    if A.edges * B.edges > MAX_PRODUCT_EDGES:
        raise BoundError(f"product would have {A.edges * B.edges} edges, above the bound of {MAX_PRODUCT_EDGES}")
    key, P = canonical_form(product(A, B))
    obj = {"key": key, "dessin": P.to_json()}
    return _emit(args.format, obj, (["key", "edges", "sigma0", "sigma1"],
                                    [[key, P.edges, list(P.sigma0), list(P.sigma1)]]), key)


def cmd_filtration(args):
    _check_window(args.window)
    _check_level(args.level)
    W = _window(args, args.window)
    gens = level_generators(W, args.kind, args.level, args.threads)
    S = span(v for _, v in gens)
    obj = {"window": W.max_edges, "level": args.level, "kind": args.kind, "dim": W.dim,
           "rank": S.rank, "generators": len(gens), "include_empty": W.include_empty}
    return _emit(args.format, obj)


def cmd_compare(args):
    _check_window(args.window)
    _check_level(args.level, 1)
    report = compare_levels(_window(args, args.window), args.level, args.threads)
    obj = report.to_json()
    flat = {k: v for k, v in obj.items() if k != "witnesses"}
    flat["witness_count"] = len(obj["witnesses"])
    return _emit(args.format, obj, (list(flat), [list(flat.values())]), _text(flat))


def cmd_quotients(args):
    _check_window(args.window)
    _check_level(args.max_level)
    W = _window(args, args.window)
    rows = [r.to_json() for r in quotient_table(W, args.max_level, args.threads)]
    obj = {"window": W.max_edges, "dim": W.dim, "include_empty": W.include_empty, "levels": rows}
    header = list(rows[0])
    text = "\n".join(" ".join(f"{k}={_cell(v)}" for k, v in r.items()) for r in rows)
    return _emit(args.format, obj, (header, [list(r.values()) for r in rows]), text)


def cmd_export_dot(args):
    dot = export_dot(_read_dessin(args.dessin))
    if args.format in (None, "text"):
        return dot
    return _emit(args.format, {"dot": dot})


def cmd_check(args):
    obj = {"seed": args.seed, "violations": run_all(args.seed, args.scale)}
    flat = {"seed": args.seed, **obj["violations"]}
    return _emit(args.format, obj, (list(flat), [list(flat.values())]))


COMMANDS = {
    "enumerate": cmd_enumerate,
    "canon": cmd_canon,
    "invariants": cmd_invariants,
    "delete": cmd_delete,
    "expand": cmd_expand,
    "product": cmd_product,
    "filtration": cmd_filtration,
    "compare": cmd_compare,
    "quotients": cmd_quotients,
    "export-dot": cmd_export_dot,
    "check": cmd_check,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command != "export-dot" and args.format is None:
            args.format = "json"
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        out = COMMANDS[args.command](args)
    except UsageError as e:
        print(e, file=stderr)
        return EXIT_USAGE
    except (BoundError, DessinError, CacheError, ValueError) as e:
        print(f"dessinfilt: error: {e}", file=stderr)
        return EXIT_INVALID
    print(out, file=stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
