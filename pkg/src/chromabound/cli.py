"""Command line front end.

Subcommands: ``gen`` emits instances, ``exact`` runs exhaustive
solvers, ``color`` runs the coloring algorithms, ``chains`` analyzes
ordered chains, ``bounds`` prints the certified bound report, and
``verify`` runs the acceptance criteria.

Primary output is a single JSON document on stdout. A one-line run
manifest goes to stderr: the subcommand, its parameters, the seed, the
package version, a SHA-256 digest of the stdout payload, and wall
time. Keeping the manifest off stdout means pipelines see only the
payload and two runs can be compared byte for byte.

Exit status: 0 on success, 1 when an algorithm ran out of restarts or
budget or a criterion failed, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time

from . import __version__, acceptance, bounds, chains, colorers, core, exact
from .acceptance import DEFAULT_SEED
from .errors import BudgetExceededError, InvalidInstanceError, RestartsExhaustedError


class _UsageError(Exception):
    pass


class _AlgorithmFailure(Exception):
    def __init__(self, message, payload):
        super().__init__(message)
        self.payload = payload


def _resolve_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("CHROMABOUND_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"CHROMABOUND_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _read_instance(args):
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as err:
        raise _UsageError(f"cannot read instance: {err}")
    try:
        return core.Hypergraph.from_json(text)
    except (InvalidInstanceError, ValueError, KeyError, TypeError) as err:
        raise _UsageError(f"bad instance: {err}")


def _dump(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _coloring_payload(coloring):
    return {"colors": list(coloring.colors), "palette": coloring.palette}


def _certificate_payload(cert):
    if cert is None:
        return None
    return {
        "edge_indices": list(cert.edge_indices),
        "junctions": list(cert.junctions),
        "length": cert.length,
    }


def _order_for(args, H, seed):
    if args.order == "natural":
        return core.VertexOrder.natural(H.num_vertices)
    return core.VertexOrder.shuffled(H.num_vertices, random.Random(seed))


def _cmd_gen(args, seed):
    try:
        H = core.generate(
            args.kind,
            n=args.n,
            num_vertices=args.num_vertices,
            num_edges=args.num_edges,
            seed=seed,
        )
    except (InvalidInstanceError, ValueError) as err:
        raise _UsageError(str(err))
    return H.to_json() + "\n"


def _cmd_exact(args, seed):
    H = _read_instance(args)
    budget = None
    if args.max_nodes is not None or args.max_millis is not None:
        budget = exact.SolveBudget(args.max_nodes, args.max_millis)
    if args.r is not None:
        outcome = exact.solve_coloring(H, args.r, budget)
        payload = {
            "r": args.r,
            "status": outcome.status,
            "coloring": _coloring_payload(outcome.coloring)
            if outcome.coloring is not None
            else None,
            "nodes": outcome.nodes,
        }
        if outcome.status == "budget_exceeded":
            raise _AlgorithmFailure("search budget exhausted", payload)
        return _dump(payload)
    try:
        chi = exact.chromatic_number(H, budget=budget, r_max=args.r_max)
    except BudgetExceededError as err:
        raise _AlgorithmFailure(str(err), {"status": "budget_exceeded"})
    except ValueError:
        return _dump({"chromatic_number": None, "exceeds": args.r_max})
    return _dump({"chromatic_number": chi})


def _cmd_color(args, seed):
    H = _read_instance(args)
    config = colorers.RandomizedRunConfig(seed, max_restarts=args.max_restarts)
    if args.algorithm == "exact":
        outcome = exact.solve_coloring(H, args.r)
        if outcome.status != "yes":
            raise _AlgorithmFailure(
                f"instance is not {args.r}-colorable",
                {"algorithm": "exact", "status": outcome.status},
            )
        payload = {
            "algorithm": "exact",
            "coloring": _coloring_payload(outcome.coloring),
        }
        return _dump(payload)
    try:
        if args.algorithm == "alon":
            result = colorers.alon_recolor(H, args.r, config)
            payload = {
                "algorithm": "alon",
                "coloring": _coloring_payload(result.coloring),
                "restarts": result.restarts,
                "repaired": result.repaired,
            }
        elif args.algorithm == "peel":
            result = colorers.peel_color(H, args.r, config)
            payload = {
                "algorithm": "peel",
                "coloring": _coloring_payload(result.coloring),
                "rounds": [
                    {"palette": p, "branch": b, "removed": m}
                    for p, b, m in result.rounds
                ],
            }
        elif args.algorithm == "weighted":
            result = colorers.weighted_independent_set(H, config)
            payload = {
                "algorithm": "weighted",
                "vertices": list(result.vertices),
                "degree_sum": result.degree_sum,
                "restarts": result.restarts,
            }
        else:
            raise _UsageError(f"unknown algorithm {args.algorithm!r}")
    except (ValueError, InvalidInstanceError) as err:
        raise _UsageError(str(err))
    except RestartsExhaustedError as err:
        raise _AlgorithmFailure(
            str(err), {"algorithm": args.algorithm, "attempts": err.attempts}
        )
    return _dump(payload)


def _cmd_chains(args, seed):
    if args.probability is not None:
        n, r = args.probability
        try:
            p = chains.ordered_chain_probability(n, r)
        except ValueError as err:
            raise _UsageError(str(err))
        return _dump(
            {
                "n": n,
                "r": r,
                "probability": f"{p.numerator}/{p.denominator}",
                "probability_float": float(p),
            }
        )
    H = _read_instance(args)
    order = _order_for(args, H, seed)
    length, cert = chains.longest_ordered_chain(H, order)
    payload = {
        "order": list(order.permutation),
        "longest": length,
        "certificate": _certificate_payload(cert),
    }
    if args.palette is not None:
        result = chains.pluhar_color(H, order, args.palette)
        payload["rank_coloring"] = {
            "palette": args.palette,
            "succeeded": result.succeeded,
            "coloring": _coloring_payload(result.coloring)
            if result.coloring is not None
            else None,
            "longest_chain": _certificate_payload(result.certificate),
        }
    return _dump(payload)


def _cmd_bounds(args, seed):
    try:
        payload = bounds.bound_report(args.n, args.n_max, r_max=args.r_max, M=args.m)
    except ValueError as err:
        raise _UsageError(str(err))
    return _dump(payload)


def _cmd_verify(args, seed):
    only_groups = set(args.group) if args.group else None
    only_keys = set(args.key) if args.key else None
    known_groups = set(acceptance.groups())
    known_keys = {key for key, _ in acceptance.registry()}
    if only_groups is not None and not only_groups <= known_groups:
        raise _UsageError(f"unknown group(s): {sorted(only_groups - known_groups)}")
    if only_keys is not None and not only_keys <= known_keys:
        raise _UsageError(f"unknown criteria: {sorted(only_keys - known_keys)}")
    results = acceptance.run_all(seed, only_groups=only_groups, only_keys=only_keys)
    for result in results:
        print(acceptance.gate_line(result), file=sys.stderr)
    payload = acceptance.report(results, strip_elapsed=True)
    payload["seed"] = seed
    text = _dump(payload)
    if any(not r.passed for r in results):
        raise _AlgorithmFailure("acceptance criteria failed", payload)
    return text


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chromabound",
        description="Hypergraph coloring algorithms and certified bounds.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"random seed (default: CHROMABOUND_SEED or {DEFAULT_SEED})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance as JSON")
    p.add_argument("--kind", required=True, choices=("fano", "complete", "random"))
    p.add_argument("--n", type=int, default=3, help="edge size (default 3)")
    p.add_argument("--num-vertices", type=int, default=7)
    p.add_argument("--num-edges", type=int, default=7)

    p = sub.add_parser("exact", help="exhaustive coloring decisions")
    p.add_argument("--input", default="-", help="instance JSON file, - for stdin")
    p.add_argument("--r", type=int, default=None, help="decide r-colorability")
    p.add_argument("--r-max", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--max-millis", type=int, default=None)

    p = sub.add_parser("color", help="run a coloring algorithm")
    p.add_argument("--input", default="-")
    p.add_argument(
        "--algorithm", required=True, choices=("alon", "peel", "weighted", "exact")
    )
    p.add_argument("--r", type=int, default=3, help="palette size (default 3)")
    p.add_argument("--max-restarts", type=int, default=1000)

    p = sub.add_parser("chains", help="ordered-chain analysis")
    p.add_argument("--input", default="-")
    p.add_argument("--order", choices=("natural", "shuffled"), default="natural")
    p.add_argument(
        "--palette",
        type=int,
        default=None,
        help="also attempt the rank coloring with this palette",
    )
    p.add_argument(
        "--probability",
        type=int,
        nargs=2,
        metavar=("N", "R"),
        default=None,
        help="print the ordered-chain probability for edge size N, length R",
    )

    p = sub.add_parser("bounds", help="certified lower-bound report")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10_000, help="table size")
    p.add_argument("--r-max", type=int, default=10)
    p.add_argument("--m", type=int, default=None, help="pin the window start")

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--group", action="append", default=None)
    p.add_argument("--key", action="append", default=None)
    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "exact": _cmd_exact,
    "color": _cmd_color,
    "chains": _cmd_chains,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
}


def _manifest(args, seed, stdout_text, wall_ms):
    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("command", "seed") and v is not None
    }
    return {
        "command": args.command,
        "params": params,
        "seed": seed,
        "version": __version__,
        "stdout_sha256": hashlib.sha256(stdout_text.encode("utf-8")).hexdigest(),
        "wall_ms": wall_ms,
    }


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    exit_code = 0
    stdout_text = ""
    try:
        seed = _resolve_seed(args)
        stdout_text = _HANDLERS[args.command](args, seed)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except _AlgorithmFailure as err:
        stdout_text = _dump(err.payload)
        print(f"failure: {err}", file=sys.stderr)
        exit_code = 1
    sys.stdout.write(stdout_text)
    sys.stdout.flush()
    wall_ms = int((time.perf_counter() - t0) * 1000)
    print(json.dumps(_manifest(args, seed, stdout_text, wall_ms)), file=sys.stderr)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
