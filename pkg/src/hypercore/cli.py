"""Command-line driver: ingest graphs and set families, run the analyses,
emit versioned JSON reports.

Exit codes: 0 on success, 1 on input errors, 2 when a verified certificate
or structural check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .beamcore import structural_checks, total_beam_core
from .congestion import TrafficDemand, median_vertex, min_core, traffic_load
from .fileio import (
    LabelTable,
    read_edge_list,
    read_family_json,
    read_kappa_family_json,
    read_pairs,
    read_tokens,
    write_edge_list,
)
from .generators import PRNG_ID, GeneratorSpec, generate
from .graphs import ball_members, distance_matrix, set_distance
from .halfint import HalfInt
from .hyperbolicity import four_point_delta, hyperbolicity_report, thin_delta_bound
from .lpkappa import KappaQSet, kappa_hit_pack
from .multicore import CommodityGraph, multicore_construct
from .quasiconvex import (
    QSet,
    QSetFamily,
    geodesic_covering_radius,
    greedy_hit_pack,
    helly_center,
    is_interval_like,
)

SCHEMA = "hypercore-report/1"


class _CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CLIError(message)


def _parse_halfint(text: str) -> HalfInt:
    frac = Fraction(text)
    if frac.denominator not in (1, 2):
        raise ValueError(f"{text!r} is not an integer or half-integer")
    return HalfInt.from_doubled(frac.numerator * (2 // frac.denominator))


def _load_graph(args):
    g, table = read_edge_list(args.edges)
    dm = distance_matrix(g, cap=args.max_n)
    return g, dm, table


def _thin_delta(args, dm) -> tuple[HalfInt, HalfInt | None]:
    """(thin-triangle constant to use, measured four-point constant or None
    when the constant was supplied on the command line)."""
    if args.delta is not None:
        return _parse_halfint(args.delta), None
    fp = four_point_delta(dm, seed=args.seed)
    return thin_delta_bound(fp.delta), fp.delta


def _base_vertex(args, table) -> int:
    return table.id_of(args.base) if args.base is not None else 0


def _halfint_json(h: HalfInt) -> dict:
    return {"value": float(h), "doubled": h.doubled}


def _cmd_generate(args):
    spec = GeneratorSpec(
        kind=args.kind, n=args.n, p=args.p, seed=args.seed, rows=args.rows, cols=args.cols
    )
    g = generate(spec)
    table = LabelTable([str(i) for i in range(g.n)])
    write_edge_list(g, table, args.edges_out)
    return {
        "kind": args.kind,
        "n": g.n,
        "m": g.m,
        "edges_out": str(args.edges_out),
    }, True


def _cmd_hyperbolicity(args):
    g, dm, table = _load_graph(args)
    rep = hyperbolicity_report(dm, exact_cap=args.exact_cap, seed=args.seed)
    print(
        f"delta = {rep.delta} ({'exact' if rep.exact else 'sampled lower bound'}), "
        f"interval thinness = {rep.interval_thinness}, "
        f"diameter = {rep.diameter}, radius = {rep.radius}, "
        f"|center| = {len(rep.center)}",
        file=sys.stderr,
    )
    return {
        "n": g.n,
        "m": g.m,
        "delta": _halfint_json(rep.delta),
        "exact": rep.exact,
        "witness": table.labels_of(rep.witness),
        "interval_thinness": rep.interval_thinness,
        "diameter": rep.diameter,
        "radius": rep.radius,
        "center": table.labels_of(rep.center),
    }, True


def _cmd_core(args):
    g, dm, table = _load_graph(args)
    if args.profile == "all":
        profile = list(range(g.n))
    else:
        profile = table.ids_of(read_tokens(args.profile))
    alpha = Fraction(args.alpha)
    res = min_core(g, dm, profile, alpha)
    frac_of_pairs = Fraction(res.intercepted_pairs, res.total_pairs)
    return {
        "profile_size": len(set(profile)),
        "alpha": str(alpha),
        "center": table.label_of(res.center),
        "radius": res.radius,
        "intercepted_pairs": res.intercepted_pairs,
        "total_pairs": res.total_pairs,
        "pair_fraction": {
            "rational": f"{frac_of_pairs.numerator}/{frac_of_pairs.denominator}",
            "decimal": float(frac_of_pairs),
        },
        "median_vertex": table.label_of(median_vertex(dm, profile)),
    }, True


def _cmd_traffic(args):
    g, dm, table = _load_graph(args)
    if args.demand == "uniform":
        demand = TrafficDemand.uniform(g.n)
    else:
        demand = TrafficDemand(
            tuple((table.id_of(a), table.id_of(b)) for a, b in read_pairs(args.demand))
        )
    subset = table.ids_of(args.set.split(","))
    mu = traffic_load(g, dm, demand, subset)
    return {
        "demand_pairs": len(demand.pairs),
        "set": table.labels_of(sorted(set(subset))),
        "mu": {
            "rational": f"{mu.numerator}/{mu.denominator}",
            "decimal": float(mu),
        },
    }, True


def _cmd_multicore(args):
    g, dm, table = _load_graph(args)
    pairs = [(table.id_of(a), table.id_of(b)) for a, b in read_pairs(args.commodity)]
    commodity = CommodityGraph.from_pairs(pairs)
    delta, delta4 = _thin_delta(args, dm)
    res = multicore_construct(g, dm, commodity, args.radius, delta)
    report = {
        "pairs": len(commodity.demands),
        "radius": res.radius,
        "delta": _halfint_json(delta),
        "centers": table.labels_of(res.centers),
        "size": len(res.centers),
        "covered": res.covered,
    }
    if delta4 is not None:
        report["delta_four_point"] = _halfint_json(delta4)
    return report, res.covered


def _cmd_beamcore(args):
    g, dm, table = _load_graph(args)
    delta, delta4 = _thin_delta(args, dm)
    bc = total_beam_core(g, dm, delta)
    sc = structural_checks(g, dm, delta)
    ok = bc.all_beams_intercepted and sc.diam_rad_holds and sc.close_to_center_holds
    report = {
        "delta": _halfint_json(delta),
        "mutually_distant_pair": table.labels_of(bc.pair),
        "midpoint": table.label_of(bc.midpoint),
        "radius": bc.radius,
        "all_beams_intercepted": bc.all_beams_intercepted,
        "structural": {
            "diameter": sc.diameter,
            "radius": sc.radius,
            "center": table.labels_of(sc.center),
            "diam_rad_holds": sc.diam_rad_holds,
            "max_center_distance": sc.max_center_distance,
            "close_to_center_holds": sc.close_to_center_holds,
        },
    }
    if delta4 is not None:
        report["delta_four_point"] = _halfint_json(delta4)
    return report, ok


def _family_from_json(dm, table, entries) -> QSetFamily:
    return QSetFamily.measure(
        dm,
        [table.ids_of(e["vertices"]) for e in entries],
        names=[e["name"] for e in entries],
    )


def _cmd_helly(args):
    g, dm, table = _load_graph(args)
    family = _family_from_json(dm, table, read_family_json(args.family))
    delta, delta4 = _thin_delta(args, dm)
    z = _base_vertex(args, table)
    ball = helly_center(dm, g, family, args.r, delta, z=z)
    members = ball_members(dm, ball)
    gaps = [set_distance(dm, members, s.members) for s in family.sets]
    all_hit = all(gap == 0 for gap in gaps)
    report = {
        "sets": len(family),
        "epsilon": family.family_epsilon,
        "delta": _halfint_json(delta),
        "r": args.r,
        "ball": {"center": table.label_of(ball.center), "radius": ball.radius},
        "set_gaps": gaps,
        "all_hit": all_hit,
    }
    if all(is_interval_like(dm, s.members) for s in family.sets):
        report["geodesic_case_radius"] = geodesic_covering_radius(args.r, delta).floor()
    if delta4 is not None:
        report["delta_four_point"] = _halfint_json(delta4)
    return report, all_hit


def _cmd_hitpack(args):
    g, dm, table = _load_graph(args)
    family = _family_from_json(dm, table, read_family_json(args.family))
    delta, delta4 = _thin_delta(args, dm)
    z = _base_vertex(args, table)
    hp = greedy_hit_pack(dm, g, family, args.r, delta, z=z)
    d = dm.d
    hit_ok = all(
        min(int(d[t, list(s.members)].min()) for t in hp.hitting_set) <= hp.hit_radius
        for s in family.sets
    )
    pack_ok = all(
        set_distance(dm, family.sets[a].members, family.sets[b].members) > 2 * hp.pack_gap
        for i, a in enumerate(hp.packing)
        for b in hp.packing[i + 1 :]
    )
    ok = hit_ok and pack_ok and len(hp.hitting_set) == len(hp.packing)
    report = {
        "sets": len(family),
        "epsilon": family.family_epsilon,
        "delta": _halfint_json(delta),
        "r": args.r,
        "hitting_set": table.labels_of(hp.hitting_set),
        "packing": [family.name_of(i) for i in hp.packing],
        "hit_radius": hp.hit_radius,
        "pack_gap": hp.pack_gap,
        "certificates": {"hitting": hit_ok, "packing": pack_ok},
    }
    if delta4 is not None:
        report["delta_four_point"] = _halfint_json(delta4)
    return report, ok


def _cmd_kappa(args):
    g, dm, table = _load_graph(args)
    entries = read_kappa_family_json(args.family)
    family = [
        KappaQSet(tuple(QSet.measure(dm, table.ids_of(part)) for part in e["parts"]))
        for e in entries
    ]
    delta, delta4 = _thin_delta(args, dm)
    measured = max(kq.epsilon for kq in family)
    epsilon = measured if args.epsilon is None else args.epsilon
    z = _base_vertex(args, table)
    res = kappa_hit_pack(g, dm, family, args.r, epsilon, delta, z=z)
    ok = res.hitting_ok and res.packing_ok and res.bound_ok
    report = {
        "members": len(family),
        "kappa": res.kappa,
        "epsilon": epsilon,
        "delta": _halfint_json(delta),
        "r": res.r,
        "r_star": res.r_star,
        "r_prime": res.r_prime,
        "hitting_set": table.labels_of(res.hitting_set),
        "packing": [entries[i]["name"] for i in res.packing],
        "lp_optima": {
            "packing": str(res.packing_optimum),
            "hitting": str(res.hitting_optimum),
            "gap_zero": res.packing_optimum == res.hitting_optimum,
        },
        "certificates": {
            "hitting": res.hitting_ok,
            "packing": res.packing_ok,
            "size_bound": res.bound_ok,
        },
    }
    if delta4 is not None:
        report["delta_four_point"] = _halfint_json(delta4)
    return report, ok


def _add_graph_flags(sub):
    sub.add_argument("--edges", required=True, help="edge-list file")


def _add_delta_flag(sub):
    sub.add_argument(
        "--delta",
        default=None,
        help="thin-triangle constant override (integer or half-integer); "
        "default is 4x the measured four-point constant",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="hypercore", description=__doc__)
    parser.add_argument("--seed", type=int, default=0, help="PRNG seed recorded in reports")
    parser.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    parser.add_argument("--max-n", type=int, default=2000, help="all-pairs distance matrix cap")
    subs = parser.add_subparsers(dest="command")

    p = subs.add_parser("generate", help="emit a synthetic graph as an edge list")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--edges-out", required=True, help="output edge-list path")

    p = subs.add_parser("hyperbolicity", help="four-point constant and eccentricity report")
    _add_graph_flags(p)
    p.add_argument(
        "--exact-cap",
        type=int,
        default=400,
        help="largest n for the exhaustive quadruple scan; above it the "
        "constant is a seeded sampled lower bound",
    )

    p = subs.add_parser("core", help="minimum-radius interception core of a profile")
    _add_graph_flags(p)
    p.add_argument("--profile", default="all", help="'all' or a file of vertex labels")
    p.add_argument("--alpha", default="1/2", help="pair fraction the core must intercept")

    p = subs.add_parser("traffic", help="exact traffic load of a vertex set")
    _add_graph_flags(p)
    p.add_argument("--demand", default="uniform", help="'uniform' or a file of labeled pairs")
    p.add_argument("--set", required=True, help="comma-separated vertex labels")

    p = subs.add_parser("multicore", help="total multi-core for a commodity graph")
    _add_graph_flags(p)
    p.add_argument("--commodity", required=True, help="file of labeled demand pairs")
    p.add_argument("--radius", type=int, required=True)
    _add_delta_flag(p)

    p = subs.add_parser("beamcore", help="total beam core and structural checks")
    _add_graph_flags(p)
    _add_delta_flag(p)

    p = subs.add_parser("helly", help="single ball meeting a 2r-close family")
    _add_graph_flags(p)
    p.add_argument("--family", required=True, help="JSON family file")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--base", default=None, help="base vertex label (default: first label)")
    _add_delta_flag(p)

    p = subs.add_parser("hitpack", help="greedy equal-size hitting set and packing")
    _add_graph_flags(p)
    p.add_argument("--family", required=True, help="JSON family file")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--base", default=None, help="base vertex label (default: first label)")
    _add_delta_flag(p)

    p = subs.add_parser("kappa", help="covering/packing for unions of quasiconvex sets")
    _add_graph_flags(p)
    p.add_argument("--family", required=True, help="JSON kappa-family file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--epsilon", type=int, default=None, help="override measured epsilon upward")
    p.add_argument("--base", default=None, help="base vertex label (default: first label)")
    _add_delta_flag(p)

    return parser


_HANDLERS = {
    "generate": _cmd_generate,
    "hyperbolicity": _cmd_hyperbolicity,
    "core": _cmd_core,
    "traffic": _cmd_traffic,
    "multicore": _cmd_multicore,
    "beamcore": _cmd_beamcore,
    "helly": _cmd_helly,
    "hitpack": _cmd_hitpack,
    "kappa": _cmd_kappa,
}


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        payload, ok = _HANDLERS[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "prng": PRNG_ID,
        "seed": args.seed,
        **payload,
    }
    text = json.dumps(report, indent=2, sort_keys=False)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0 if ok else 2


def main() -> None:
    sys.exit(run_cli())
