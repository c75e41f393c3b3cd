"""Command-line entry point.

Every subcommand prints one JSON run report to stdout: the command, its
parameters, the package version, the seed, wall time, and the result
payload.  Numbers that feed a verdict are emitted as exact decimals or
"p/q" rationals.  Exit codes: 0 success, 2 verdict-false, 1 error, 64
usage.  Reports are byte-identical across identical invocations once the
wall-time field is ignored.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .blowup import WeightedPattern, blowup_copies_polynomial
from .constructions import (
    CounterexampleParams,
    PendantPathSizes,
    counterexample_g,
    counterexample_h,
    pendant_path_pattern,
)
from .counting import automorphism_count, labeled_copies, unlabeled_copies
from .errors import BudgetExceededError, Graph6Error, VertexLimitError
from .experiments import (
    PendantProfile,
    _jsonable,
    best_complete_bipartite,
    double_star,
    double_star_degree_count,
    exhaustive_max_copies,
    find_counterexample_threshold,
    muirhead_injective_tuple_bound,
    muirhead_symmetrized_bound,
    verify_counterexample,
)
from .graph6 import graph6_parse, graph6_serialize
from .graphs import MAX_VERTICES, Graph
from .optimizer import density_form, maximize_density, pattern_catalog_search

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERDICT_FALSE = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _fraction(text: str) -> Fraction:
    """Exact rational 'p/q' (or integer); decimal notation is rejected so
    epsilon stays exact at the interface."""
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError(
            f"decimals are not accepted, write a rational like 1/16: {text!r}"
        )
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}")


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}: {exc}")


def _read_graph(value: str) -> Graph:
    if value == "-":
        value = sys.stdin.readline()
    return graph6_parse(value)


def _read_weighted_pattern(value: str) -> WeightedPattern:
    if value == "-":
        value = sys.stdin.readline()
    data = json.loads(value)
    return WeightedPattern(
        graph6_parse(data["pattern"]), tuple(data["weights"])
    )


def _pattern_json(wp: WeightedPattern) -> dict:
    return {
        "pattern": graph6_serialize(wp.pattern),
        "weights": list(wp.weights),
    }


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("TURANLAB_BUDGET")
    return int(env) if env else None


def build_parser() -> _Parser:
    parser = _Parser(prog="turanlab", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed")
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help="cap on worker parallelism (results are thread-count independent)",
    )
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="enumeration node budget (default: TURANLAB_BUDGET env or built-in)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", parents=[common], help="build the named graphs")
    consub = con.add_subparsers(dest="what", required=True)
    h1 = consub.add_parser("h1", parents=[common])
    h1.add_argument("--r", type=int, required=True)
    h1.add_argument("--a", type=int, required=True)
    g1 = consub.add_parser("g1", parents=[common])
    g1.add_argument("--r", type=int, required=True)
    g1.add_argument("--eps", type=_fraction, required=True)
    g1.add_argument("--n", type=int, required=True)
    fig4 = consub.add_parser("fig4", parents=[common])
    fig4.add_argument(
        "--sizes",
        type=_csv_ints,
        required=True,
        help="a2,a9,b1,b4,b7,b10 pendant set sizes",
    )
    for kind in ("path", "cycle", "complete"):
        sp = consub.add_parser(kind, parents=[common])
        sp.add_argument("--r", type=int, required=True)
    consub.add_parser("petersen", parents=[common])
    mp = consub.add_parser("multipartite", parents=[common])
    mp.add_argument("--sizes", type=_csv_ints, required=True)
    tu = consub.add_parser("turan", parents=[common])
    tu.add_argument("--n", type=int, required=True)
    tu.add_argument("--r", type=int, required=True)
    pw = consub.add_parser("power", parents=[common])
    pw.add_argument("--graph", required=True, help="graph6 (or - for stdin)")
    pw.add_argument("--k", type=int, required=True)
    bl = consub.add_parser("blowup", parents=[common])
    bl.add_argument("--graph", required=True, help="graph6 (or - for stdin)")
    bl.add_argument("--sizes", type=_csv_ints, required=True)

    cnt = sub.add_parser("count", parents=[common], help="copy counting")
    cnt.add_argument("--pattern", required=True, help="graph6 (or - for stdin)")
    cnt.add_argument("--host", required=True, help="graph6 (or - for stdin)")
    mode = cnt.add_mutually_exclusive_group()
    mode.add_argument("--labeled", action="store_true", default=True)
    mode.add_argument("--unlabeled", dest="labeled", action="store_false")

    pol = sub.add_parser("poly", parents=[common], help="blow-up copy polynomial")
    pol.add_argument(
        "mode",
        nargs="?",
        choices=["build", "eval"],
        default="build",
        help="build from patterns, or eval a stored polynomial at --sizes",
    )
    pol.add_argument("--pattern-h", default=None, help="graph6 pattern of H")
    pol.add_argument("--weights", type=_csv_ints, default=None)
    pol.add_argument("--pattern-f", default=None, help="graph6 host pattern")
    pol.add_argument("--sizes", type=_csv_ints, default=None)
    pol.add_argument(
        "--json",
        default="-",
        help="polynomial JSON for eval mode (default: stdin; run reports accepted)",
    )

    ver = sub.add_parser(
        "verify-t1", parents=[common], help="blow-up vs multipartite ceiling"
    )
    ver.add_argument("--r", type=int, required=True)
    ver.add_argument("--eps", type=_fraction, required=True)
    ver.add_argument("--a", type=int, default=None)
    ver.add_argument("--n", type=int, default=None, help="omit to search upward")
    ver.add_argument("--exact-bipartite", action="store_true", default=None)
    ver.add_argument("--max-n", type=int, default=None)

    t2 = sub.add_parser(
        "t2", parents=[common], help="pendant-profile pipeline report"
    )
    t2.add_argument("--profile", required=True, help='JSON {"s","t","a","b"}')
    t2.add_argument("--n", type=int, required=True)
    t2.add_argument("--csv", action="store_true")

    orc = sub.add_parser("oracle", parents=[common], help="tiny exact maxima")
    orc.add_argument("--n", type=int, required=True)
    orc.add_argument("--h", required=True, help="graph6 pattern to count")
    orc.add_argument("--f", required=True, help="graph6 forbidden graph")
    orc.add_argument("--max-order", type=int, default=7)
    orc.add_argument("--csv", action="store_true")

    opt = sub.add_parser("optimize", parents=[common], help="density maximization")
    opt.add_argument("--h-pattern", required=True, help="weighted pattern JSON")
    opt.add_argument("--f", required=True, help="graph6 host pattern")
    opt.add_argument("--restarts", type=int, default=50)

    cat = sub.add_parser(
        "catalog-search", parents=[common], help="rank host patterns"
    )
    cat.add_argument("--h-pattern", required=True, help="weighted pattern JSON")
    cat.add_argument("--r", type=int, required=True)
    cat.add_argument("--extra", nargs="*", default=[], help="extra graph6 patterns")
    cat.add_argument("--restarts", type=int, default=50)
    cat.add_argument("--check-n", type=int, default=None)
    return parser


def _run_construct(args) -> dict:
    from .graphs import (
        blowup,
        complete,
        complete_multipartite,
        cycle,
        path,
        petersen,
        power,
        turan,
    )

    if args.what in ("h1", "g1", "fig4"):
        if args.what == "h1":
            wp = counterexample_h(args.r, args.a)
        elif args.what == "g1":
            wp = counterexample_g(args.r, args.eps, args.n)
        else:
            wp = pendant_path_pattern(PendantPathSizes(*args.sizes))
        result = {"weighted_pattern": _pattern_json(wp)}
        if wp.total_weight <= MAX_VERTICES:
            result["explicit_graph6"] = graph6_serialize(wp.materialize())
        return result
    if args.what == "path":
        g = path(args.r)
    elif args.what == "cycle":
        g = cycle(args.r)
    elif args.what == "complete":
        g = complete(args.r)
    elif args.what == "petersen":
        g = petersen()
    elif args.what == "multipartite":
        g = complete_multipartite(args.sizes)
    elif args.what == "turan":
        g = turan(args.n, args.r)
    elif args.what == "power":
        g = power(_read_graph(args.graph), args.k)
    else:
        g = blowup(_read_graph(args.graph), args.sizes)
    return {"graph6": graph6_serialize(g), "order": g.n, "edges": g.edge_count()}


def _run_count(args) -> dict:
    pattern = _read_graph(args.pattern)
    host = _read_graph(args.host)
    if args.labeled:
        return {"count": labeled_copies(pattern, host), "mode": "labeled"}
    return {"count": unlabeled_copies(pattern, host), "mode": "unlabeled"}


def _run_poly(args) -> dict:
    from .blowup import BlowupPolynomial

    if args.mode == "eval":
        if args.sizes is None:
            raise ValueError("poly eval requires --sizes")
        text = sys.stdin.read() if args.json == "-" else args.json
        data = json.loads(text)
        if "result" in data and isinstance(data["result"], dict):
            data = data["result"]
        if "polynomial" in data:
            data = data["polynomial"]
        poly = BlowupPolynomial.from_jsonable(data)
        return {"sizes": list(args.sizes), "value": poly.evaluate(args.sizes)}
    if args.pattern_h is None or args.weights is None or args.pattern_f is None:
        raise ValueError(
            "poly build requires --pattern-h, --weights and --pattern-f"
        )
    wp = WeightedPattern(_read_graph(args.pattern_h), args.weights)
    host = _read_graph(args.pattern_f)
    poly = blowup_copies_polynomial(wp, host, budget=_budget(args))
    result = {"polynomial": poly.to_jsonable()}
    if args.sizes is not None:
        result["sizes"] = list(args.sizes)
        result["value"] = poly.evaluate(args.sizes)
    return result


def _run_verify(args) -> dict:
    if args.n is None:
        verdict = find_counterexample_threshold(
            args.r,
            args.eps,
            a=args.a,
            max_n=args.max_n,
            exact_bipartite=args.exact_bipartite,
            budget=_budget(args),
        )
    else:
        from .constructions import choose_terminal_multiplicity

        a = args.a
        if a is None:
            a = choose_terminal_multiplicity(args.r, args.eps)
        params = CounterexampleParams(args.r, args.eps, a, args.n)
        verdict = verify_counterexample(
            params, exact_bipartite=args.exact_bipartite, budget=_budget(args)
        )
    return verdict.to_jsonable()


def _run_t2(args) -> dict:
    from .experiments import build_pendant_graph
    from .graphs import complete, complete_multipartite

    data = json.loads(args.profile)
    profile = PendantProfile(
        data["s"], data["t"], tuple(data["a"]), tuple(data["b"])
    )
    n = args.n
    h = build_pendant_graph(profile)
    star = double_star(profile)
    m, count = best_complete_bipartite(h, n)
    m_star, count_star = best_complete_bipartite(star, n)
    s, t = profile.s, profile.t
    report: dict = {
        "profile": {
            "s": s,
            "t": t,
            "a": list(profile.a_list),
            "b": list(profile.b_list),
        },
        "h_graph6": graph6_serialize(h),
        "h_order": h.n,
        "double_star_graph6": graph6_serialize(star),
        "double_star_order": star.n,
        "best_bipartite_h": {"m": m, "count": count},
        "best_bipartite_double_star": {"m": m_star, "count": count_star},
    }
    checks = []
    # degree data of the extremal host K_{m, n-m}: an s-subset inside the
    # size-m part has degrees n-m, and its common neighborhood is the
    # whole other part (degrees m)
    if s <= m:
        v = muirhead_symmetrized_bound([n - m] * s, list(profile.a_list))
        checks.append(v.outcome)
        report["muirhead_side_s"] = v.to_jsonable()
    if t <= n - m <= 9:
        v = muirhead_injective_tuple_bound(
            [m] * (n - m), list(profile.b_list), t
        )
        checks.append(v.outcome)
        report["muirhead_side_x"] = v.to_jsonable()
    if n <= 16 and star.n <= n:
        host = complete_multipartite([m, n - m])
        identity_ok = double_star_degree_count(
            profile, host
        ) == labeled_copies(star, host)
        checks.append(identity_ok)
        report["double_star_identity_ok"] = identity_ok
    report["outcome"] = all(checks)
    if args.csv:
        lines = ["m,h_unlabeled_copies"]
        poly = blowup_copies_polynomial(WeightedPattern(h, (1,) * h.n), complete(2))
        aut = automorphism_count(h)
        for mm in range(1, n):
            lines.append(f"{mm},{poly.evaluate((mm, n - mm)) // aut}")
        report["csv"] = "\n".join(lines)
    return report


def _run_oracle(args) -> dict:
    h = _read_graph(args.h)
    f = _read_graph(args.f)
    value, extremal = exhaustive_max_copies(
        args.n, h, f, max_order=args.max_order, budget=_budget(args)
    )
    result = {"n": args.n, "max_count": value, "extremal_graph6": extremal}
    if args.csv:
        result["csv"] = "n,h,f,max_count,extremal\n" + ",".join(
            [
                str(args.n),
                graph6_serialize(h),
                graph6_serialize(f),
                str(value),
                ";".join(extremal),
            ]
        )
    return result


def _run_optimize(args) -> dict:
    wp = _read_weighted_pattern(args.h_pattern)
    host = _read_graph(args.f)
    form = density_form(wp, host, budget=_budget(args))
    x, val = maximize_density(form, restarts=args.restarts, seed=args.seed)
    return {
        "value": val,
        "weights": [float(v) for v in x],
        "note": "" if form.terms else "no homomorphism",
    }


def _run_catalog(args) -> dict:
    wp = _read_weighted_pattern(args.h_pattern)
    extra = [graph6_parse(g) for g in args.extra]
    records = pattern_catalog_search(
        wp,
        args.r,
        extra=extra,
        restarts=args.restarts,
        seed=args.seed,
        check_n=args.check_n,
        budget=_budget(args),
    )
    return {"ranking": records}


_RUNNERS = {
    "construct": _run_construct,
    "count": _run_count,
    "poly": _run_poly,
    "verify-t1": _run_verify,
    "t2": _run_t2,
    "oracle": _run_oracle,
    "optimize": _run_optimize,
    "catalog-search": _run_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        result = _RUNNERS[args.command](args)
    except (
        ValueError,
        ArithmeticError,
        Graph6Error,
        VertexLimitError,
        BudgetExceededError,
        RuntimeError,
        KeyError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("command", "what") and not k.startswith("_")
    }
    if args.command == "construct":
        params["what"] = args.what
    csv_payload = result.pop("csv", None) if isinstance(result, dict) else None
    report = {
        "command": args.command,
        "params": _jsonable(params),
        "version": __version__,
        "seed": getattr(args, "seed", None),
        "wall_time_s": round(time.monotonic() - start, 6),
        "result": _jsonable(result),
    }
    if csv_payload is not None:
        print(csv_payload)
    else:
        print(json.dumps(report, sort_keys=True))
    if isinstance(result, dict) and result.get("outcome") is False:
        return EXIT_VERDICT_FALSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
