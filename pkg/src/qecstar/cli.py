"""Command-line front end.

    qecstar qec FILE                     QEC of a graph in edge-list format
    qecstar star FACTOR [FACTOR ...]     edge list of a star product
    qecstar minroot --a 1,2 --d 3,inf    minimal root (optionally all roots, bounds)
    qecstar condmin --a 1,1 --d 2,2      conditional minimum and its cross-check
    qecstar bounds --q -1,-0.6667 --n 2,2
    qecstar paths --max-n 20             QEC(P_n) table
    qecstar seq --terms 16               a_n, b_n and the convolution check
    qecstar verify --suite all           exact identity suites

Every subcommand accepts ``--json``.  Exit codes: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import condmin, graphs, minroot, qec, sequences, star_bounds

__all__ = ["CommandResult", "run", "main"]


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _num(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _float_list(text: str, allow_inf: bool = False) -> list[float]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok.lower() == "inf":
            if not allow_inf:
                raise argparse.ArgumentTypeError("'inf' is only allowed for counts")
            out.append(math.inf)
            continue
        try:
            value = float(tok)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {tok!r}") from None
        if not math.isfinite(value):
            raise argparse.ArgumentTypeError(f"use the token 'inf', not {tok!r}")
        out.append(value)
    return out


def _counts(text: str) -> list[float]:
    return _float_list(text, allow_inf=True)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _kv(pairs: Sequence[tuple[str, str]]) -> str:
    return " ".join(f"{k}={v}" for k, v in pairs) + "\n"


def _vec(values) -> str:
    return "[" + ",".join(_num(float(v)) for v in values) + "]"


def _factor(token: str) -> tuple[graphs.Graph, int]:
    """``PATH@ROOT`` or ``KIND:N@ROOT`` (KIND one of complete, path, cycle, star)."""
    spec, sep, root = token.rpartition("@")
    if not sep:
        spec, root = token, "0"
    kind, colon, size = spec.partition(":")
    if colon and kind in {"complete", "path", "cycle", "star"}:
        g = graphs.named_graph(kind, int(size))
    else:
        g = graphs.read_edge_list(spec)
    return g, int(root)


def _cmd_qec(args) -> str:
    g = graphs.read_edge_list(args.file)
    res = qec.qec_exact(g)
    if args.json:
        return _dump({
            "value": res.value,
            "optimizer": [float(x) for x in res.optimizer],
            "method": res.method,
            "residual": res.residual,
        })
    return _kv([
        ("value", _num(res.value)),
        ("method", res.method),
        ("residual", _num(res.residual)),
        ("optimizer", _vec(res.optimizer)),
    ])


def _cmd_star(args) -> str:
    product, maps = graphs.star_product([_factor(t) for t in args.factors])
    text = graphs.format_edge_list(product)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if args.json:
            return _dump({"vertices": product.vertex_count, "edges": product.edge_count,
                          "vertex_maps": [list(m) for m in maps], "out": args.out})
        return _kv([("vertices", str(product.vertex_count)),
                    ("edges", str(product.edge_count)), ("out", args.out)])
    if args.json:
        return _dump({"vertices": product.vertex_count, "edges": [list(e) for e in product.edges],
                      "vertex_maps": [list(m) for m in maps]})
    return text


def _root_record(sol: minroot.RootSolution) -> dict:
    return {"lambda": sol.lam, "bracket": list(sol.bracket),
            "residual": sol.residual, "method": sol.method}


def _cmd_minroot(args) -> str:
    p = minroot.ParamPair(args.a, args.d)
    sol = minroot.min_root(p, args.tol)
    record = _root_record(sol)
    if args.all_roots:
        record["roots"] = [_root_record(s) for s in minroot.all_roots(p, args.tol)]
    if args.bounds:
        chain = {}
        if p.r >= 2:
            chain["harmonic"], chain["min_a"] = minroot.bounds_basic(p)
        if not p.all_infinite:
            chain.update(minroot.bounds_sharp(p)._asdict())
        record["bounds"] = chain
    if args.json:
        return _dump(record)
    pairs = [
        ("lambda", _num(sol.lam)),
        ("bracket", _vec(sol.bracket)),
        ("residual", _num(sol.residual)),
        ("method", sol.method),
    ]
    if args.all_roots:
        pairs.append(("roots", _vec(s["lambda"] for s in record["roots"])))
    if args.bounds:
        pairs.extend((k, _num(v)) for k, v in record["bounds"].items())
    return _kv(pairs)


def _cmd_condmin(args) -> str:
    if len(args.a) != len(args.d):
        raise ValueError("--a and --d must have the same length")
    if any(x == 0 for x in args.a):
        value = condmin.cond_min_zero_case(args.a, [int(x) for x in args.d])
        record = {"value": value, "argmin": None, "stationarity_residual": None,
                  "min_root": None, "delta": None}
    else:
        if any(math.isinf(x) or x != int(x) for x in args.d):
            raise ValueError("condmin needs finite integer counts")
        inst = condmin.PhiInstance(tuple(args.a), tuple(int(x) for x in args.d))
        value, (x0, xs) = condmin.cond_min(inst)
        lam = minroot.min_root(minroot.ParamPair(args.a, args.d), 1e-15).lam
        record = {
            "value": value,
            "argmin": [x0] + [float(v) for x in xs for v in x],
            "stationarity_residual": condmin.stationarity_residual(inst, x0, xs, value),
            "min_root": lam,
            "delta": value - lam,
        }
    if args.json:
        return _dump(record)
    pairs = [("value", _num(record["value"]))]
    if record["argmin"] is not None:
        pairs += [
            ("stationarity_residual", _num(record["stationarity_residual"])),
            ("min_root", _num(record["min_root"])),
            ("delta", _num(record["delta"])),
            ("argmin", _vec(record["argmin"])),
        ]
    return _kv(pairs)


def _cmd_bounds(args) -> str:
    if len(args.q) != len(args.n):
        raise ValueError("--q and --n must have the same length")
    factors = [star_bounds.FactorSummary(q, n) for q, n in zip(args.q, args.n)]
    rep = star_bounds.star_bound_report(factors)
    fields = {"lower": rep.lower, "lambda": rep.lam, "upper": rep.upper,
              "harmonic": rep.harmonic}
    if rep.q12 is not None:
        fields["q12"] = rep.q12
    if args.json:
        return _dump(fields)
    return _kv([(k, "none" if v is None else _num(v)) for k, v in fields.items()])


def _cmd_paths(args) -> str:
    if args.max_n < 2:
        raise ValueError("--max-n must be >= 2")
    rows = []
    for n in range(2, args.max_n + 1):
        lower, upper = qec.thm56_bounds(n)
        rows.append((n, qec.qec_exact(graphs.named_graph("path", n)).value, lower, upper))
    if args.json:
        return _dump([
            {"n": n, "qec": v, "lower": float(lo), "lower_exact": str(lo), "upper": float(up)}
            for n, v, lo, up in rows
        ])
    lines = ["n qec lower upper"]
    lines += [f"{n} {_num(v)} {_num(float(lo))} {_num(float(up))}" for n, v, lo, up in rows]
    return "\n".join(lines) + "\n"


def _cmd_seq(args) -> str:
    if args.terms < 1:
        raise ValueError("--terms must be >= 1")
    N = args.terms - 1
    series = sequences.a_series(N)
    rows = []
    for n in range(N + 1):
        a = sequences.a_closed(n)
        conv = sequences.convolution_check(n)
        rows.append((n, a, sequences.b_ceil(n), conv == a, series[n] == a))
    if args.json:
        return _dump({
            "a": [str(r[1]) for r in rows],
            "b": [str(r[2]) for r in rows],
            "convolution_ok": all(r[3] for r in rows),
            "series_ok": all(r[4] for r in rows),
        })
    lines = ["n a_n b_n convolution series"]
    lines += [f"{n} {a} {b} {'ok' if c else 'FAIL'} {'ok' if s else 'FAIL'}"
              for n, a, b, c, s in rows]
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> tuple[str, bool]:
    results = sequences.run_suite(args.suite, max_n=args.max_n, seed=args.seed)
    ok = all(r.passed for r in results)
    if args.json:
        return _dump({"passed": ok, "checks": [
            {"name": r.name, "passed": r.passed, "checked": r.checked,
             "counterexample": r.counterexample} for r in results]}), ok
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} cases)"
             + ("" if r.passed else f": {r.counterexample}") for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", ok


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qecstar", description="Quadratic embedding constants of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        return p

    p = add("qec", "QEC of a graph given as an edge-list file")
    p.add_argument("file")

    p = add("star", "star product of factors PATH@ROOT or KIND:N@ROOT")
    p.add_argument("factors", nargs="+")
    p.add_argument("--out")

    p = add("minroot", "minimal root of sum d/(a d + a - lam) = 1/lam")
    p.add_argument("--a", type=_float_list, required=True)
    p.add_argument("--d", type=_counts, required=True)
    p.add_argument("--tol", type=float, default=minroot.DEFAULT_TOL)
    p.add_argument("--all-roots", action="store_true")
    p.add_argument("--bounds", action="store_true")

    p = add("condmin", "conditional minimum of the block quadratic form")
    p.add_argument("--a", type=_float_list, required=True)
    p.add_argument("--d", type=_counts, required=True)

    p = add("bounds", "star-product bounds from factor QECs q and sizes n = |V| - 1")
    p.add_argument("--q", type=_float_list, required=True)
    p.add_argument("--n", type=_counts, required=True)

    p = add("paths", "QEC(P_n) with its exact lower bound and -1/2")
    p.add_argument("--max-n", type=int, default=20)

    p = add("seq", "the integer sequence a_n and its checks")
    p.add_argument("--terms", type=int, default=16)

    p = add("verify", "exact identity suites")
    p.add_argument("--suite", choices=["lemma61", "detA", "series", "all"], default="all")
    p.add_argument("--max-n", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    return parser


_COMMANDS = {
    "qec": _cmd_qec,
    "star": _cmd_star,
    "minroot": _cmd_minroot,
    "condmin": _cmd_condmin,
    "bounds": _cmd_bounds,
    "paths": _cmd_paths,
    "seq": _cmd_seq,
}


_LIST_FLAGS = {"--a", "--d", "--q", "--n"}


def _glue_negative_lists(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1,-0.5" as an option string; glue it to its flag
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _LIST_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt[:1] == "-" and (nxt[1:2].isdigit() or nxt[1:2] == "."):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run(argv: Sequence[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(_glue_negative_lists(argv))
    except UsageError as exc:
        return CommandResult(2, str(exc))
    try:
        if args.command == "verify":
            text, ok = _cmd_verify(args)
            return CommandResult(0 if ok else 1, text)
        return CommandResult(0, _COMMANDS[args.command](args))
    except (ValueError, OSError) as exc:
        return CommandResult(1, f"qecstar {args.command}: error: {exc}\n")


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if result.exit_code == 0 else sys.stderr
    stream.write(result.payload)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
