"""Command-line entry point.

Subcommands: ``feasibility`` (min-cut test of a target graph state on a
topology), ``contract`` (run a contraction instance), ``code`` (compose /
distance / bounds), ``metrics`` (latency, memory, channel and success
sweeps as CSV).  Structured results are JSON with sorted keys so reruns
are byte-identical; exit codes are 0 for success or an affirmative
verdict, 1 for a negative verdict, 2 for usage or input errors.

File formats are documented in FORMATS.md at the repository root.  The
distance enumeration budget can be overridden with the environment
variable ``STABNET_DISTANCE_BUDGET``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .codes import (
    DEFAULT_ENUMERATION_BUDGET,
    CompositionError,
    EnumerationBudgetError,
    StabilizerCode,
    compose,
    distance,
    singleton_max_distance,
    storage_bound,
)
from .contraction import BellConvention, ContractionInstance, Status, contract
from .graphstate import Bipartition, GraphState
from .metrics import NoiseSpec, RegularTreeSpec, Scheme, channel_count, latency, memory_qubits, success_probability
from .network import DEFAULT_MAX_CLIENTS, NetworkTopology, feasibility

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        Path(out).write_text(text + "\n")


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _load_graph(path: str) -> GraphState:
    text = _read(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        if "bits" in data:
            return GraphState.from_bitstring(int(data["n"]), data["bits"])
        return GraphState.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_json(path: str, loader, what: str):
    text = _read(path)
    try:
        return loader(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"{path}: bad {what}: {exc}") from exc


def cmd_feasibility(args: argparse.Namespace) -> int:
    topology = _load_json(args.topology, NetworkTopology.from_json, "topology")
    target = _load_graph(args.target)
    clients = args.clients.split(",") if args.clients else list(topology.clients)
    parts = None
    if args.bipartitions is not None:
        sides = _load_json(args.bipartitions, json.loads, "bipartition list")
        try:
            parts = [Bipartition.split(len(clients), side) for side in sides]
        except (TypeError, ValueError) as exc:
            raise CliError(f"{args.bipartitions}: bad bipartition list: {exc}") from exc
    verdict = feasibility(
        topology, clients, target, max_clients=args.max_clients, bipartition_list=parts
    )
    _emit(verdict.to_json() if args.compact else _dump(json.loads(verdict.to_json())), args.out)
    return EXIT_OK if verdict.feasible else EXIT_NEGATIVE


def cmd_contract(args: argparse.Namespace) -> int:
    inst = _load_json(args.instance, ContractionInstance.from_json, "contraction instance")
    if args.convention is not None:
        inst = ContractionInstance(
            inst.node_states, inst.pairings, BellConvention(args.convention), inst.offsets
        )
    result = contract(inst)
    _emit(_dump(json.loads(result.to_json())), args.out)
    return EXIT_NEGATIVE if result.status is Status.ANNIHILATED else EXIT_OK


def _budget(args: argparse.Namespace) -> int:
    env = os.environ.get("STABNET_DISTANCE_BUDGET")
    if env is not None:
        return int(env)
    return args.budget


def cmd_code(args: argparse.Namespace) -> int:
    if args.code_command == "distance":
        code = _load_json(args.code, StabilizerCode.from_json, "code")
        d = distance(code, args.weight_cap, budget=_budget(args))
        payload = {"n": code.n, "k": code.k, "weight_cap": args.weight_cap}
        if d is None:
            payload["distance"] = None
            payload["note"] = f"greater than cap {args.weight_cap}"
        else:
            payload["distance"] = d
        _emit(_dump(payload), args.out)
        return EXIT_OK

    if args.code_command == "compose":
        # composition specs are contraction instances whose node states are
        # the codes' generator lists
        inst = _load_json(args.spec, ContractionInstance.from_json, "composition spec")
        convention = BellConvention(args.convention) if args.convention else inst.convention
        codes = [StabilizerCode(group) for group in inst.node_states]
        try:
            composed = compose(codes, inst.pairings, convention)
        except CompositionError as exc:
            _emit(_dump({"error": str(exc), "status": "ANNIHILATED"}), args.out)
            return EXIT_NEGATIVE
        if args.distance:
            composed = composed.with_distance(
                distance(composed, args.weight_cap, budget=_budget(args))
            )
        payload = json.loads(composed.to_json())
        payload["convention"] = convention.value
        _emit(_dump(payload), args.out)
        return EXIT_OK

    if args.code_command == "bounds":
        payload = {
            "singleton_max_distance": singleton_max_distance(args.boundary, args.k * args.m),
            "storage_bound": storage_bound(args.boundary, args.m, args.l, args.k, args.d),
            "parameters": {
                "boundary": args.boundary,
                "m": args.m,
                "l": args.l,
                "k": args.k,
                "d": args.d,
            },
        }
        _emit(_dump(payload), args.out)
        return EXIT_OK

    raise CliError(f"unknown code subcommand {args.code_command!r}")


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


def cmd_metrics(args: argparse.Namespace) -> int:
    rows = []
    header = "n,p,scheme,latency,memory,channels,p_success"
    noise = NoiseSpec(args.noise) if args.noise is not None else None

    if args.topology is not None:
        topology = _load_json(args.topology, NetworkTopology.from_json, "topology")
        for scheme in (Scheme.LQC, Scheme.EPR):
            channels = channel_count(topology, scheme, center=args.center)
            p_success = (
                "" if noise is None else f"{success_probability(noise, channels):.12g}"
            )
            rows.append(f",,{scheme.value},,,{channels},{p_success}")
    elif args.n is not None and args.p is not None:
        for n in _parse_range(args.n):
            for p in _parse_range(args.p):
                spec = RegularTreeSpec(n, p)
                for scheme in (Scheme.LQC, Scheme.EPR):
                    channels = channel_count(spec, scheme)
                    p_success = (
                        ""
                        if noise is None
                        else f"{success_probability(noise, channels):.12g}"
                    )
                    rows.append(
                        f"{n},{p},{scheme.value},{latency(spec, scheme)},"
                        f"{memory_qubits(spec, scheme)},{channels},{p_success}"
                    )
    _emit("\n".join([header] + rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabnet",
        description="Stabilizer-state distribution toolkit: feasibility, "
        "contraction, code composition, and comparison metrics.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        help="seed for randomized operations; the bundled commands are "
        "deterministic, the flag keeps scripted reruns reproducible",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("feasibility", help="min-cut vs entanglement-rank test")
    p.add_argument("--topology", required=True, help="topology JSON file")
    p.add_argument("--target", required=True, help="target graph JSON file")
    p.add_argument("--clients", help="comma-separated client ids (default: all clients in node order)")
    p.add_argument("--max-clients", type=int, default=DEFAULT_MAX_CLIENTS)
    p.add_argument(
        "--bipartitions",
        help="JSON file with explicit A-side index lists; required when the "
        "client count exceeds the exhaustive sweep cap",
    )
    p.add_argument("--compact", action="store_true", help="single-line JSON output")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("contract", help="contract a stabilizer instance")
    p.add_argument("--instance", required=True, help="instance JSON file")
    p.add_argument("--convention", choices=[c.value for c in BellConvention])
    p.add_argument("--out")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("code", help="stabilizer code operations")
    code_sub = p.add_subparsers(dest="code_command", required=True)

    pc = code_sub.add_parser("distance", help="brute-force distance")
    pc.add_argument("code", help="code JSON file")
    pc.add_argument("--weight-cap", type=int, default=5)
    pc.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)
    pc.add_argument("--out")

    pc = code_sub.add_parser("compose", help="compose codes by Bell contraction")
    pc.add_argument("spec", help="composition spec JSON file")
    pc.add_argument("--convention", choices=[c.value for c in BellConvention])
    pc.add_argument("--distance", action="store_true", help="also compute the distance")
    pc.add_argument("--weight-cap", type=int, default=5)
    pc.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)
    pc.add_argument("--out")

    pc = code_sub.add_parser("bounds", help="singleton and storage bounds")
    pc.add_argument("--boundary", "--B", dest="boundary", type=int, required=True)
    pc.add_argument("--m", type=int, required=True, help="number of composed codes")
    pc.add_argument("--l", type=int, required=True, help="physical qubits per code")
    pc.add_argument("--k", type=int, required=True, help="logical qubits per code")
    pc.add_argument("--d", type=int, required=True, help="distance per code")
    pc.add_argument("--out")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("metrics", help="comparison sweeps as CSV")
    p.add_argument("--n", help="connectivity value or range, e.g. 3 or 2..4")
    p.add_argument("--p", help="depth value or range, e.g. 1..6")
    p.add_argument("--noise", type=float, help="per-channel failure probability")
    p.add_argument("--topology", help="channel counts from a topology file instead of a tree spec")
    p.add_argument("--center", help="EPR central node id (default: best relay)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_metrics)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError, EnumerationBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
