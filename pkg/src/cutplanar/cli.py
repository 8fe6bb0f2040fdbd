"""Command-line front end.

Commands: cutwidth, planarize, solve, certify, export.  Every command
prints a JSON run report (schema 1) to stdout; files are written next to
the inputs or to the requested paths.  Exit codes: 0 success, 2 parse
error, 3 precondition violation, 4 resource/oracle limit,
5 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time

from . import io as cio
from .drawing import build_arc_drawing, to_svg
from .errors import (CutplanarError, InvalidLayoutError, OracleLimitError,
                     ParseError, PreconditionError, ResourceLimitError)
from .gadgets import (builtin_gadget, certify_is_gadget, is_gadget_conditions,
                      replace_edges_by_gadget, validate_crossover_shape)
from .graph import Graph, LinearLayout, cut_profile, exact_cutwidth, random_graph
from .planarize import planarize, verify_planarization
from . import solvers

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4
EXIT_VERIFY = 5


def _digest(path: str) -> str:
    with open(path, "rb") as f:
        return hashlib.sha256(f.read()).hexdigest()[:16]


def _report(args, results: dict, t0: float, seed: int | None = None) -> dict:
    rep = {
        "schema": 1,
        "command": " ".join(sys.argv[1:]),
        "inputs": {p: _digest(p) for p in getattr(args, "_input_files", [])},
        "results": results,
        "wall_time_s": round(time.time() - t0, 3),
    }
    if seed is not None:
        rep["seed"] = seed
    return rep


def _load_graph(path: str) -> Graph:
    with open(path) as f:
        return cio.parse_graph(f.read())


def _load_layout(path: str, g: Graph) -> LinearLayout:
    with open(path) as f:
        return cio.parse_layout(f.read(), g)


def cmd_cutwidth(args) -> dict:
    g = _load_graph(args.graph)
    args._input_files = [args.graph]
    if args.layout:
        args._input_files.append(args.layout)
        layout = _load_layout(args.layout, g)
        prof = cut_profile(g, layout)
        return {"mode": "layout", "widths": list(prof.widths),
                "width": prof.max_width}
    if args.exact:
        w, layout = exact_cutwidth(g, limit=args.oracle_limit)
        return {"mode": "exact", "width": w,
                "layout": [v + 1 for v in layout.order]}
    layout = solvers.heuristic_layout(g, seed=args.seed)
    prof = cut_profile(g, layout)
    return {"mode": "heuristic", "width": prof.max_width,
            "layout": [v + 1 for v in layout.order]}


def cmd_planarize(args) -> dict:
    g = _load_graph(args.graph)
    layout = _load_layout(args.layout, g)
    args._input_files = [args.graph, args.layout]
    gadget = builtin_gadget(args.problem)
    res = planarize(g, layout, args.t, gadget)
    prefix = args.out_prefix or args.graph
    graph_out = prefix + ".planarized"
    layout_out = prefix + ".planarized.layout"
    with open(graph_out, "w") as f:
        f.write(cio.write_graph(res.g_prime))
    with open(layout_out, "w") as f:
        f.write(cio.write_layout(res.layout_prime))
    out = {
        "problem": args.problem,
        "crossings_replaced": res.crossings_replaced,
        "t": args.t,
        "t_prime": res.t_prime,
        "width_in": res.width_in,
        "width_out": res.width_out,
        "gadget_width": res.gadget_width,
        "n_prime": res.g_prime.n,
        "m_prime": res.g_prime.m,
        "cut_profile": list(cut_profile(res.g_prime, res.layout_prime).widths),
        "files": {"graph": graph_out, "layout": layout_out},
    }
    if args.verify:
        ok = verify_planarization(g, layout, args.t, res, args.problem)
        out["verified"] = ok
        if not ok:
            raise _VerificationFailed(out)
    return out


class _VerificationFailed(Exception):
    def __init__(self, report):
        self.report = report


def cmd_solve(args) -> dict:
    g = _load_graph(args.graph)
    args._input_files = [args.graph]
    if args.algo == "brute":
        opt = (solvers.brute_is(g) if args.problem == "is"
               else solvers.brute_ds(g))
        return {"problem": args.problem, "algo": "brute", "optimum": opt}
    if args.layout:
        args._input_files.append(args.layout)
        layout = _load_layout(args.layout, g)
    else:
        layout = solvers.heuristic_layout(g, seed=args.seed)
    rep = (solvers.dp_is(g, layout) if args.problem == "is"
           else solvers.dp_ds(g, layout))
    return {
        "problem": args.problem, "algo": "dp", "optimum": rep.optimum,
        "max_live_states": rep.max_live_states,
        "bag_count": rep.bag_count, "width_used": rep.width_used,
    }


def cmd_certify(args) -> dict:
    gadget = cio.load_gadget(args.gadget)
    args._input_files = [args.gadget]
    out: dict = {"problem": gadget.problem, "shift": gadget.shift}
    ok = True
    out["planar_cyclic"] = validate_crossover_shape(gadget)
    ok &= out["planar_cyclic"]
    rng = random.Random(args.seed)
    if gadget.problem == "is":
        conds = is_gadget_conditions(gadget)
        out["conditions"] = conds
        ok &= certify_is_gadget(gadget)
        shifts_ok = _host_shift_checks(gadget, "is", args.hosts, rng)
    else:
        shifts_ok = _host_shift_checks(gadget, "ds", args.hosts, rng)
    out["host_checks"] = shifts_ok
    ok &= shifts_ok["all_exact"]
    out["verdict"] = "PASS" if ok else "FAIL"
    if not ok:
        raise _VerificationFailed(out)
    return out


def _host_shift_checks(gadget, problem: str, hosts: int, rng) -> dict:
    """Random host graphs with two disjoint edges; the optimum must move
    by exactly the gadget shift under replacement."""
    max_n = 9 if problem == "is" else 7
    done = 0
    checked = []
    while done < hosts:
        n = rng.randint(4, max_n)
        g = random_graph(n, 0.35, rng)
        pairs = [(e1, e2) for e1 in g.sorted_edges() for e2 in g.sorted_edges()
                 if e1 < e2 and not set(e1) & set(e2)]
        if not pairs:
            continue
        e1, e2 = pairs[rng.randrange(len(pairs))]
        gp = replace_edges_by_gadget(g, e1, e2, gadget)
        from .gadgets import replacement_layout
        layout = replacement_layout(g, e1, e2, gadget)
        if problem == "is":
            before = solvers.brute_is(g)
            after = solvers.brute_is(gp, limit=36) if gp.n <= 36 else \
                solvers.dp_is(gp, layout).optimum
        else:
            before = solvers.brute_ds(g)
            after = solvers.dp_ds(gp, layout).optimum
        checked.append(after - before)
        done += 1
    return {"hosts": hosts, "shifts": checked,
            "all_exact": all(s == gadget.shift for s in checked)}


def cmd_export(args) -> dict:
    g = _load_graph(args.graph)
    args._input_files = [args.graph]
    if args.format == "dot":
        content = cio.write_dot(g)
        default_out = args.graph + ".dot"
    else:
        if not args.layout:
            raise PreconditionError("svg export needs a layout file")
        args._input_files.append(args.layout)
        layout = _load_layout(args.layout, g)
        content = to_svg(build_arc_drawing(g, layout))
        default_out = args.graph + ".svg"
    out_path = args.out or default_out
    with open(out_path, "w") as f:
        f.write(content)
    return {"format": args.format, "file": out_path, "bytes": len(content)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cutplanar",
        description="Cutwidth-preserving planarization and exact IS/DS solvers")
    sub = p.add_subparsers(dest="cmd", required=True)

    pc = sub.add_parser("cutwidth", help="cut profile / exact / heuristic width")
    pc.add_argument("graph")
    pc.add_argument("layout", nargs="?")
    pc.add_argument("--exact", action="store_true")
    pc.add_argument("--oracle-limit", type=int, default=18)
    pc.add_argument("--seed", type=int, default=0)
    pc.set_defaults(func=cmd_cutwidth)

    pp = sub.add_parser("planarize", help="replace drawing crossings by gadgets")
    pp.add_argument("graph")
    pp.add_argument("layout")
    pp.add_argument("--problem", choices=("is", "ds"), required=True)
    pp.add_argument("--t", type=int, required=True)
    pp.add_argument("--verify", action="store_true")
    pp.add_argument("--out-prefix")
    pp.set_defaults(func=cmd_planarize)

    ps = sub.add_parser("solve", help="exact optimum via brute force or DP")
    ps.add_argument("graph")
    ps.add_argument("layout", nargs="?")
    ps.add_argument("--problem", choices=("is", "ds"), required=True)
    ps.add_argument("--algo", choices=("dp", "brute"), default="dp")
    ps.add_argument("--seed", type=int, default=0)
    ps.set_defaults(func=cmd_solve)

    pg = sub.add_parser("certify", help="certify a gadget JSON file")
    pg.add_argument("gadget")
    pg.add_argument("--hosts", type=int, default=25)
    pg.add_argument("--seed", type=int, default=0)
    pg.set_defaults(func=cmd_certify)

    pe = sub.add_parser("export", help="DOT or SVG arc diagram")
    pe.add_argument("graph")
    pe.add_argument("layout", nargs="?")
    pe.add_argument("--format", choices=("dot", "svg"), required=True)
    pe.add_argument("-o", "--out")
    pe.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.time()
    try:
        results = args.func(args)
        code = 0
    except _VerificationFailed as exc:
        results = exc.report
        code = EXIT_VERIFY
    except ParseError as exc:
        print(json.dumps({"schema": 1, "error": f"parse error: {exc}"}))
        return EXIT_PARSE
    except (PreconditionError, InvalidLayoutError) as exc:
        print(json.dumps({"schema": 1, "error": f"precondition: {exc}"}))
        return EXIT_PRECONDITION
    except (OracleLimitError, ResourceLimitError) as exc:
        print(json.dumps({"schema": 1, "error": f"resource limit: {exc}"}))
        return EXIT_RESOURCE
    except FileNotFoundError as exc:
        print(json.dumps({"schema": 1, "error": f"parse error: {exc}"}))
        return EXIT_PARSE
    except CutplanarError as exc:
        print(json.dumps({"schema": 1, "error": str(exc)}))
        return EXIT_PRECONDITION
    print(json.dumps(_report(args, results, t0,
                             seed=getattr(args, "seed", None)), indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
