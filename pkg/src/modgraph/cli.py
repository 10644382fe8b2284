"""Command-line front end.

Commands: lattice | graph | invariants | verify | zoo.  All outputs are
deterministic for a given spec file.  Exit codes: 0 success, 1 a
verification check failed, 2 invalid input, 3 a cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .caps import Caps, caps_from_env
from .checks import ALL_CHECKS, render_summary, reports_to_jsonl, run_suite
from .errors import CapExceeded, ModgraphError, SpecError
from .graphs import INF, build_graph
from .lattice import enumerate_submodules
from .specs import build_instance, load_spec_file
from .zoo import FILTERS, InstanceContext, family, named_instances

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_CAP = 3


def _add_caps_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-ring-size", type=int, default=None)
    p.add_argument("--max-submodules", type=int, default=None)
    p.add_argument("--max-exact-vertices", type=int, default=None)


def _caps_of(args) -> Caps:
    return caps_from_env().override(
        max_ring_size=args.max_ring_size,
        max_module_size=args.max_ring_size,
        max_submodules=args.max_submodules,
        max_exact_vertices=args.max_exact_vertices,
    )


def _context(path: str, caps: Caps) -> InstanceContext:
    return InstanceContext(build_instance(load_spec_file(path), caps), caps)


def cmd_lattice(args) -> int:
    caps = _caps_of(args)
    ctx = _context(args.spec, caps)
    lat = ctx.lattice
    out = [f"# {ctx.instance_id}: {len(lat)} submodules"]
    for i, sub in enumerate(lat.subs):
        out.append(f"{i}: size={sub.size} gens={sub.describe()}")
    print("\n".join(out))
    return EXIT_OK


def cmd_graph(args) -> int:
    caps = _caps_of(args)
    ctx = _context(args.spec, caps)
    sys.stdout.write(ctx.graph.export(args.format))
    return EXIT_OK


def cmd_invariants(args) -> int:
    caps = _caps_of(args)
    ctx = _context(args.spec, caps)
    g, lat = ctx.graph, ctx.lattice
    omega, _ = g.clique_number(caps)
    chi, _ = g.chromatic(caps)
    omega_c, _ = g.complement_clique_number(caps)
    chi_c, _ = g.complement_chromatic(caps)
    soc = lat.subs[lat.socle_index()]
    goldie, _ = lat.goldie_dimension()
    payload = {
        "instance": ctx.instance_id,
        "order": g.n,
        "degrees": g.degrees(),
        "omega": omega,
        "chi": chi,
        "omega_c": omega_c,
        "chi_c": chi_c,
        "girth": "inf" if g.girth() == INF else int(g.girth()),
        "diameter": "inf" if g.diameter() == INF else int(g.diameter()),
        "connected": g.is_connected(),
        "shape": g.classify_shape().tag,
        "socle": {"size": soc.size, "generators": [lat.module.label(x) for x in soc.gens]},
        "goldie_dimension": goldie,
        "length": lat.composition_length(),
    }
    print(json.dumps(payload, sort_keys=True, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    caps = _caps_of(args)
    if args.family:
        if args.family == "named":
            contexts = [InstanceContext(inst, caps) for inst in named_instances(caps)]
        elif args.family.startswith("size:"):
            try:
                bound = int(args.family.split(":", 1)[1])
            except ValueError as exc:
                raise SpecError(f"bad family bound in {args.family!r}") from exc
            contexts = list(family(bound, caps, FILTERS[args.filter]))
        else:
            raise SpecError(f"unknown family {args.family!r} (use 'named' or 'size:N')")
    elif args.spec:
        contexts = [_context(args.spec, caps)]
    else:
        raise SpecError("verify needs a spec file or --family")
    check_ids = args.check.split(",") if args.check else None
    if check_ids:
        for cid in check_ids:
            if cid not in ALL_CHECKS:
                raise SpecError(f"unknown check id {cid!r}; known: {', '.join(ALL_CHECKS)}")
    reports, summary = run_suite(contexts, check_ids, caps)
    if args.jsonl:
        with open(args.jsonl, "w", encoding="utf-8") as fh:
            fh.write(reports_to_jsonl(reports))
    sys.stdout.write(render_summary(reports, summary))
    return EXIT_FAIL if summary.failed else EXIT_OK


def cmd_zoo(args) -> int:
    caps = _caps_of(args)
    for inst in named_instances(caps):
        print(f"{inst.instance_id}  ring={inst.ring.size} module={inst.module.size} hash={inst.content_hash}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modgraph",
        description="Exact intersection graphs of submodule lattices over finite rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="list all submodules of an instance")
    p.add_argument("spec", help="instance spec file (JSON)")
    _add_caps_flags(p)
    p.set_defaults(fn=cmd_lattice)

    p = sub.add_parser("graph", help="export the intersection graph")
    p.add_argument("spec")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    _add_caps_flags(p)
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("invariants", help="exact graph and module invariants as JSON")
    p.add_argument("spec")
    _add_caps_flags(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", help="run theorem checks over an instance or family")
    p.add_argument("spec", nargs="?", default=None)
    p.add_argument("--family", default=None, help="'named' or 'size:N'")
    p.add_argument("--filter", default="all", choices=sorted(FILTERS))
    p.add_argument("--check", default=None, help="comma-separated check ids")
    p.add_argument("--jsonl", default=None, help="write line-delimited JSON reports here")
    _add_caps_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("zoo", help="list the named instances")
    _add_caps_flags(p)
    p.set_defaults(fn=cmd_zoo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ModgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
