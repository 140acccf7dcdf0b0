"""Command-line front end and the stable JSON file formats.

Descriptor files look like::

    {"p": 3, "n": 2, "e": 2,
     "tree": {"vertices": [{"id": "v1", "sign": "+"}, ...],
              "exceptional": "exc",
              "edges": [{"id": "E1", "ends": ["v1", "exc"]}, ...],
              "cyclic_order": {"v1": ["E1"], ...}},
     "W": {"indices": [1]}}

m is always derived from (p, n, e), never read from the file.  Exit codes:
0 success, 1 semantic violation or consistency failure, 2 unreadable or
ill-formed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .brauer_tree import (
    BlockDescriptor,
    Edge,
    sign_alternation_violations,
    validate,
)
from .characters import character_of, exceptional_orbits
from .classification import (
    ClassificationError,
    PathDescriptor,
    enumerate_trivial_source,
    m1_enumerate,
)
from .local_reps import (
    CyclicGroupData,
    EndoPermParams,
    cap_dim,
    char_det1_endoperm,
    morita_correspondent_character,
)
from .oracle import GridSpec, consistency_suite

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2


def descriptor_to_obj(desc: BlockDescriptor) -> dict:
    return {
        "p": desc.p,
        "n": desc.n,
        "e": desc.e,
        "tree": {
            "vertices": [
                {"id": v, "sign": "+" if desc.signs[v] > 0 else "-"}
                for v in desc.vertices
            ],
            "exceptional": desc.exceptional,
            "edges": [
                {"id": edge.id, "ends": list(edge.ends)} for edge in desc.edges
            ],
            "cyclic_order": {v: list(desc.cyclic_order[v]) for v in desc.vertices},
        },
        "W": {"indices": list(desc.w.indices)},
    }


def descriptor_from_obj(obj: dict) -> BlockDescriptor:
    tree = obj["tree"]
    signs = {}
    vertices = []
    for entry in tree["vertices"]:
        vertices.append(entry["id"])
        if entry["sign"] not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {entry['sign']!r}")
        signs[entry["id"]] = 1 if entry["sign"] == "+" else -1
    return BlockDescriptor(
        p=int(obj["p"]),
        n=int(obj["n"]),
        e=int(obj["e"]),
        vertices=tuple(vertices),
        signs=signs,
        edges=tuple(
            Edge(entry["id"], (entry["ends"][0], entry["ends"][1]))
            for entry in tree["edges"]
        ),
        cyclic_order={
            v: tuple(order) for v, order in tree["cyclic_order"].items()
        },
        exceptional=tree.get("exceptional"),
        w=EndoPermParams(tuple(int(a) for a in obj["W"]["indices"])),
    )


def _load_descriptor(path: str) -> BlockDescriptor:
    with open(path, encoding="utf-8") as handle:
        obj = json.load(handle)
    return descriptor_from_obj(obj)


def _character_obj(desc: BlockDescriptor, char) -> dict:
    reps = (
        exceptional_orbits(desc.p, desc.n, desc.e).representatives
        if desc.exceptional is not None
        else ()
    )
    plain = desc.nonexceptional_vertices
    return {
        "nonexceptional": [
            v for v, c in zip(plain, char.nonexceptional) if c
        ],
        "exceptional": [rep for rep, c in zip(reps, char.exceptional) if c],
    }


def _path_obj(desc: BlockDescriptor, i: int, path: PathDescriptor) -> dict:
    return {
        "type": path.type_tag,
        "case": path.case_tag,
        "multiplicity": path.multiplicity,
        "path": {
            "spine_vertices": list(path.spine_vertices),
            "spine_edges": list(path.spine_edges),
            "extra_edges": list(path.extra_edges),
            "direction": list(path.direction),
        },
        "character": _character_obj(desc, character_of(desc, i, path)),
    }


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        desc = _load_descriptor(args.file)
    except (OSError, ValueError, KeyError, TypeError) as err:
        print(f"cannot read descriptor: {err}", file=sys.stderr)
        return EXIT_PARSE
    problems = validate(desc, strict=args.strict)
    for problem in problems:
        print(problem)
    if not args.strict:
        for warning in sign_alternation_violations(desc):
            print(f"warning: {warning}", file=sys.stderr)
    return EXIT_SEMANTIC if problems else EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        desc = _load_descriptor(args.file)
    except (OSError, ValueError, KeyError, TypeError) as err:
        print(f"cannot read descriptor: {err}", file=sys.stderr)
        return EXIT_PARSE
    problems = validate(desc)
    if problems:
        for problem in problems:
            print(problem, file=sys.stderr)
        return EXIT_SEMANTIC

    status = EXIT_OK
    if desc.m == 1:
        result = m1_enumerate(desc)
        payload = {
            "p": desc.p,
            "n": desc.n,
            "e": desc.e,
            "m": 1,
            "pims": [
                {
                    "edge": pim.edge_id,
                    "character": _character_obj(desc, pim.character),
                }
                for pim in result.pims
            ],
            "hooks": [
                {
                    "edge": hook.edge_id,
                    "vertex": hook.vertex,
                    "conditional": True,
                    "character": _character_obj(desc, hook.character),
                }
                for hook in result.hooks
            ],
        }
    else:
        indices = (
            range(1, desc.n + 1) if args.vertex is None else (args.vertex,)
        )
        results = []
        for i in indices:
            entry: dict = {"vertex": i}
            try:
                modules = enumerate_trivial_source(desc, i)
                entry["modules"] = [_path_obj(desc, i, m) for m in modules]
            except ClassificationError as err:
                entry["modules"] = [_path_obj(desc, i, m) for m in err.paths]
                entry["error"] = str(err)
                status = EXIT_SEMANTIC
            results.append(entry)
        payload = {
            "p": desc.p,
            "n": desc.n,
            "e": desc.e,
            "m": desc.m,
            "results": results,
        }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        _print_csv(payload)
    return status


def _print_csv(payload: dict) -> None:
    # flattened view for human inspection; JSON is the canonical format
    if payload.get("m") == 1:
        print("kind,edge,vertex,conditional,nonexceptional,exceptional")
        for pim in payload["pims"]:
            print(
                f"pim,{pim['edge']},,,"
                f"{';'.join(pim['character']['nonexceptional'])},"
                f"{';'.join(str(r) for r in pim['character']['exceptional'])}"
            )
        for hook in payload["hooks"]:
            print(
                f"hook,{hook['edge']},{hook['vertex']},true,"
                f"{';'.join(hook['character']['nonexceptional'])},"
                f"{';'.join(str(r) for r in hook['character']['exceptional'])}"
            )
        return
    print("vertex,type,case,multiplicity,nonexceptional,exceptional")
    for entry in payload["results"]:
        for module in entry["modules"]:
            char = module["character"]
            mult = "" if module["multiplicity"] is None else module["multiplicity"]
            case = "" if module["case"] is None else module["case"]
            print(
                f"{entry['vertex']},{module['type']},{case},{mult},"
                f"{';'.join(char['nonexceptional'])},"
                f"{';'.join(str(r) for r in char['exceptional'])}"
            )


def _parse_w(raw: str) -> EndoPermParams:
    text = raw.strip()
    if not text:
        return EndoPermParams(())
    return EndoPermParams(tuple(int(part) for part in text.split(",")))


def cmd_local(args: argparse.Namespace) -> int:
    try:
        g = CyclicGroupData(args.p, args.n)
        w = _parse_w(args.w)
        if w.indices and w.indices[-1] > args.n - 1:
            raise ValueError(
                f"index {w.indices[-1]} outside 0..{args.n - 1}"
            )
        if args.operation == "det1-char":
            result = list(char_det1_endoperm(w, g).mults)
        else:
            if args.vertex is None:
                raise ValueError(f"{args.operation} needs --vertex")
            if args.operation == "cap-dim":
                result = cap_dim(w, g, args.vertex)
            else:
                result = list(
                    morita_correspondent_character(w, g, args.vertex).mults
                )
    except ValueError as err:
        print(f"invalid parameters: {err}", file=sys.stderr)
        return EXIT_SEMANTIC
    print(json.dumps(result))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    grid = GridSpec(
        primes=tuple(args.primes), n_max=args.nmax, seed=args.seed
    )
    cap_impl = None
    if args.inject_fault:
        cap_impl = lambda w, g, i: cap_dim(w, g, i) + 1  # noqa: E731
    report = consistency_suite(
        grid, corpus_size=args.corpus_size, cap_dim_impl=cap_impl
    )
    print(
        json.dumps(
            {
                "checks_run": report.checks_run,
                "failures": [
                    {
                        "check": f.check,
                        "params": f.params,
                        "expected": f.expected,
                        "actual": f.actual,
                    }
                    for f in report.failures
                ],
            },
            indent=2,
        )
    )
    return EXIT_OK if report.passed else EXIT_SEMANTIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicblocks",
        description=(
            "enumerate trivial source modules of a cyclic-defect block "
            "descriptor and compute their ordinary characters"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="check a descriptor file")
    p_val.add_argument("file")
    p_val.add_argument(
        "--strict",
        action="store_true",
        help="also demand opposite signs across every edge",
    )
    p_val.set_defaults(func=cmd_validate)

    p_enum = sub.add_parser(
        "enumerate", help="list trivial source modules and their characters"
    )
    p_enum.add_argument("file")
    group = p_enum.add_mutually_exclusive_group()
    group.add_argument("--vertex", type=int, help="single vertex index")
    group.add_argument(
        "--all", action="store_true", help="all vertex indices (default)"
    )
    p_enum.add_argument("--format", choices=("json", "csv"), default="json")
    p_enum.set_defaults(func=cmd_enumerate)

    p_local = sub.add_parser(
        "local", help="closed-form data of the local block (no tree needed)"
    )
    p_local.add_argument(
        "operation", choices=("cap-dim", "det1-char", "morita-char")
    )
    p_local.add_argument("--p", type=int, required=True)
    p_local.add_argument("--n", type=int, required=True)
    p_local.add_argument(
        "--w",
        default="",
        help="comma-separated increasing subgroup indices; empty for trivial",
    )
    p_local.add_argument("--vertex", type=int)
    p_local.set_defaults(func=cmd_local)

    p_oracle = sub.add_parser(
        "oracle", help="run the brute-force consistency suite"
    )
    p_oracle.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    p_oracle.add_argument("--nmax", type=int, default=3)
    p_oracle.add_argument("--seed", type=int, default=0)
    p_oracle.add_argument("--corpus-size", type=int, default=30)
    p_oracle.add_argument(
        "--inject-fault", action="store_true", help=argparse.SUPPRESS
    )
    p_oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
