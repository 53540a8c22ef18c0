"""Command-line interface: ``poeg <subcommand> --group <descriptor>``."""

from __future__ import annotations

import argparse
import sys
import time

from .catalog import GRAMMAR, DescriptorError, parse_group_descriptor
from .graph import build_poeg, classify_component, components, is_degenerate_clique, to_dot
from .groups import InvalidGroupTable, UnsupportedOperation, construct_group
from .polynomial import DEFAULT_MAX_DIM
from .report import RunReport
from .spectra import (
    ADJACENCY,
    LAPLACIAN,
    Partition,
    coarsest_equitable_refinement,
    integrality_verdict,
    is_equitable,
    laplacian_spectrum_abelian,
    order_partition,
    quotient_divides_charpoly,
)
from .structure import clique_closed_form_abelian, is_planar, max_clique, planarity_necessary_condition
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PLANAR_CAP = 4096
DENSE_CLIQUE_CAP = 200


class CapExceeded(ValueError):
    pass


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceeded(f"{what} on {n} vertices exceeds the cap {cap}; raise it with --max-order")


def cmd_graph(G, g, args) -> dict:
    return {
        "order": G.order,
        "vertices": g.n,
        "edges": g.edge_count,
        "edge_list": [list(e) for e in g.edges()],
        "degrees": g.degrees.tolist(),
    }


def cmd_spectrum(G, g, args) -> dict:
    cap = args.max_order or DEFAULT_MAX_DIM
    _check_cap(g.n, cap, "spectrum")
    return integrality_verdict(g, ADJACENCY, max_dim=cap).to_dict()


def cmd_laplacian(G, g, args) -> dict:
    cap = args.max_order or DEFAULT_MAX_DIM
    out = {}
    if G.abelian_shape is not None:
        engine = laplacian_spectrum_abelian(G)
        out["character_engine"] = engine.to_dict()
    if g.n <= cap:
        brute = integrality_verdict(g, LAPLACIAN, max_dim=cap)
        out.update(brute.to_dict())
        if "character_engine" in out:
            out["engine_agrees"] = engine.eigenvalues == brute.eigenvalues
    elif "character_engine" in out:
        out.update(engine.to_dict())
    else:
        _check_cap(g.n, cap, "laplacian")
    return out


def cmd_quotient(G, g, args) -> dict:
    cap = args.max_order or DEFAULT_MAX_DIM
    _check_cap(g.n, cap, "quotient")
    pi = order_partition(G)
    ok, Q = is_equitable(g, pi)
    out = {"partition": [list(b) for b in pi.blocks], "equitable": ok}
    if ok:
        out["quotient_matrix"] = [list(r) for r in Q.b]
        out["quotient_char_poly"] = list(Q.char_poly().coeffs)
        out["divides"] = quotient_divides_charpoly(g, pi, max_dim=cap)
    ref = coarsest_equitable_refinement(g, Partition.trivial(g.n))
    out["coarsest_equitable_blocks"] = len(ref.blocks)
    out["coarsest_equitable_divides"] = quotient_divides_charpoly(g, ref, max_dim=cap)
    return out


def cmd_planar(G, g, args) -> dict:
    _check_cap(g.n, args.max_order or PLANAR_CAP, "planarity")
    res = is_planar(g)
    cond = planarity_necessary_condition(G)
    return {"planar": res.planar, "method": res.method, "clause": cond["clause"]}


def cmd_clique(G, g, args) -> dict:
    dense = g.n > 1 and 2 * g.edge_count > g.n * (g.n - 1) // 2
    _check_cap(g.n, args.max_order or (DENSE_CLIQUE_CAP if dense else PLANAR_CAP), "clique search")
    res = max_clique(g)
    out = {"omega": res.omega, "witness": list(res.witness)}
    try:
        out["closed_form"] = clique_closed_form_abelian(G)
    except ValueError:
        pass
    return out


def cmd_components(G, g, args) -> dict:
    rows = []
    for comp in components(g):
        label = classify_component(g, comp)
        rows.append({
            "vertices": comp,
            "label": str(label),
            "degenerate": comp[0] != 0 and is_degenerate_clique(label),
        })
    census: dict[str, int] = {}
    for r in rows:
        census[r["label"]] = census.get(r["label"], 0) + 1
    return {"components": rows, "census": census}


COMMANDS = {
    "graph": cmd_graph,
    "spectrum": cmd_spectrum,
    "laplacian": cmd_laplacian,
    "quotient": cmd_quotient,
    "planar": cmd_planar,
    "clique": cmd_clique,
    "components": cmd_components,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help=f"group descriptor: {GRAMMAR}")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="structured JSON report")
    fmt.add_argument("--dot", action="store_true", help="emit the graph in DOT format")
    fmt.add_argument("--csv", action="store_true", help="emit spectra as CSV")
    common.add_argument("--max-order", type=int, default=None,
                        help="override the size cap (verify: largest catalogue order)")

    p = argparse.ArgumentParser(prog="poeg", description="Prime order element graphs of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("suite", choices=list(SUITES))
    return p


def _emit_verify(args) -> int:
    only = parse_group_descriptor(args.group) if args.group else None
    t0 = time.perf_counter()
    res = run_suite(args.suite, args.max_order, only)
    checks = [c.to_dict() for c in res.sorted_checks()]
    rep = RunReport(["verify", args.suite], args.group, checks, res.tallies(), time.perf_counter() - t0)
    if args.json:
        print(rep.to_json())
    else:
        for c in res.sorted_checks():
            if c.passed is None:
                mark = "FINDING " + ("holds" if c.detail.get("holds") else "fails")
            else:
                mark = "PASS" if c.passed else "FAIL"
            print(f"{mark}  {c.group}  {c.check}")
        t = res.tallies()
        print(f"suite {res.suite}: {t['passed']} passed, {t['failed']} failed, "
              f"{t['findings']} findings in {rep.wall_time:.2f}s")
    return EXIT_OK if res.ok else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _emit_verify(args)
        if not args.group:
            parser.error(f"{args.command} needs --group")
        spec = parse_group_descriptor(args.group)
        t0 = time.perf_counter()
        G = construct_group(spec)
        g = build_poeg(G)
        if args.dot:
            print(to_dot(g, spec.descriptor()), end="")
            return EXIT_OK
        results = COMMANDS[args.command](G, g, args)
        if args.csv:
            if args.command not in ("spectrum", "laplacian"):
                parser.error("--csv applies to spectrum and laplacian only")
            rows = ["eigenvalue,multiplicity"] + [f"{v},{m}" for v, m in results["eigenvalues"]]
            print("\n".join(rows))
            return EXIT_OK
        rep = RunReport([args.command], spec.descriptor(), results, {}, time.perf_counter() - t0)
        print(rep.to_json() if args.json else rep.to_text(), end="" if not args.json else "\n")
        return EXIT_OK
    except (DescriptorError, InvalidGroupTable, UnsupportedOperation, CapExceeded,
            FileNotFoundError, ValueError) as exc:
        print(f"poeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
