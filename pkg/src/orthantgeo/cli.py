"""Command-line entry point. Exit codes: 0 success or true verdict, 1 false verdict, 2 bad input."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import geometry as geo
from . import ideals
from .io import (
    InputError,
    circuits_to_json,
    family_from_json,
    family_to_json,
    order_to_json,
    read_json,
    sets_to_json,
    tree_from_json,
)
from .oracles import enumerate_convex_geometries, random_geometry
from .realization import (
    HalfspaceSystem,
    export_point_representation,
    realize_cone,
    realize_ideal,
    realize_lowdim,
    realize_tree,
    verify_shelling,
)
from .sets import SetFamily, SignVector, vc_dimension
from .verifier import verify_bfs, verify_exhaustive, verify_lowdim


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _family(args, name: str = "family") -> SetFamily:
    return family_from_json(read_json(getattr(args, name)))


def _geometry(fam: SetFamily) -> geo.ConvexGeometry:
    try:
        return geo.ConvexGeometry(fam)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _coefficient(text: str | None):
    if text is None:
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficient {text!r}") from exc
    if value <= 0:
        raise InputError("coefficient must be positive")
    return value


def cmd_check(args) -> int:
    fam = _family(args)
    report = geo.check_axioms(fam)
    out = {
        "convex_geometry": report.ok,
        "axioms": {"c1": report.c1, "c2": report.c2, "c3": report.c3},
        "witnesses": {k: sets_to_json(fam.universe, v) for k, v in report.witnesses.items()},
        "bouquet": ideals.check_bouquet(fam),
        "locally_union_closed": ideals.check_locally_union_closed(fam),
        "median": ideals.check_median(fam),
    }
    if report.ok:
        g = geo.ConvexGeometry(fam)
        out["downset_alignment"] = geo.is_downset_alignment(g)
    if fam.members:
        out["vc_dimension"] = vc_dimension(fam)
    _emit(out)
    verdict = out["bouquet"] if args.bouquet else out["convex_geometry"]
    return 0 if verdict else 1


def cmd_circuits(args) -> int:
    g = _geometry(_family(args))
    if args.via_cubes:
        circuits = geo.circuits_via_cubes(g)
    elif args.critical:
        circuits = geo.critical_rooted_circuits(g)
    else:
        circuits = geo.rooted_circuits(g)
    _emit(circuits_to_json(g.universe, circuits))
    return 0


def cmd_cdim(args) -> int:
    g = _geometry(_family(args))
    cps = geo.copoints(g)
    _emit({
        "cdim": geo.convex_dimension(g),
        "copoints": [{"set": g.universe.names(m), "attached_at": g.universe.labels[p]} for m, p in cps],
    })
    return 0


def cmd_orders(args) -> int:
    g = _geometry(_family(args))
    _emit([order_to_json(g.universe, o) for o in geo.generating_orders(g)])
    return 0


def cmd_ideal(args) -> int:
    host = _geometry(_family(args, "host"))
    sub = _family(args)
    if sub.universe != host.universe:
        raise InputError("host and family must share the same universe")
    ok = ideals.check_ideal(host, sub)
    out = {"ideal": ok}
    if ok:
        ideal = ideals.IdealOfGeometry(host, sub)
        pcs = ideals.minimal_positive_circuits(ideal) if args.minimal else ideals.positive_circuits(ideal)
        out["positive_circuits"] = sets_to_json(host.universe, pcs)
    _emit(out)
    return 0 if ok else 1


def cmd_realize(args) -> int:
    mode = "critical" if args.critical else args.circuits
    coefficient = _coefficient(args.coefficient)
    if args.host:
        host = _geometry(_family(args, "host"))
        sub = _family(args)
        if sub.universe != host.universe or not ideals.check_ideal(host, sub):
            raise InputError("family is not an ideal of the host")
        system = realize_ideal(ideals.IdealOfGeometry(host, sub), mode, args.minimal, coefficient)
    else:
        system = realize_cone(_geometry(_family(args)), mode, (), coefficient)
    sys.stdout.write(system.to_json() + "\n")
    return 0


def cmd_realize_lowdim(args) -> int:
    system = realize_lowdim(_geometry(_family(args)))
    sys.stdout.write(system.to_json() + "\n")
    return 0


def cmd_realize_tree(args) -> int:
    adj = tree_from_json(read_json(args.tree))
    root = args.root if args.root is not None else sorted(adj)[0] if adj else None
    try:
        system, signs = realize_tree(adj, root)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    system.meta["vertex_signs"] = {str(v): str(sv) for v, sv in signs.items()}
    if args.family_out:
        fam = SetFamily(system.universe, [sv.positive for sv in signs.values()])
        with open(args.family_out, "w", encoding="utf-8") as fh:
            json.dump(family_to_json(fam), fh, indent=2)
    sys.stdout.write(system.to_json() + "\n")
    return 0


def cmd_shelling(args) -> int:
    g = _geometry(_family(args))
    if g.universe.full not in g:
        raise InputError("geometry must contain the universe")
    rep = export_point_representation(g, realize_cone(g, "critical"))
    ok = verify_shelling(rep, g)
    out = rep.to_dict()
    out["verified"] = ok
    _emit(out)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    try:
        system = HalfspaceSystem.from_dict(read_json(args.system))
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    fam = _family(args)
    try:
        if args.mode == "bfs":
            if args.seed:
                seed = SignVector.parse(args.seed)
            else:
                seed = SignVector.from_set(fam.members[-1], fam.n) if fam.members else None
            if seed is None:
                raise InputError("bfs mode needs a seed or a nonempty family")
            report = verify_bfs(system, fam, seed)
        elif args.mode == "lowdim":
            report = verify_lowdim(system, fam)
        else:
            report = verify_exhaustive(system, fam)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(report.to_dict())
    return 0 if report.verdict else 1


def cmd_embed(args) -> int:
    fam = _family(args)
    try:
        emb = ideals.embed_bouquet(fam)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    u = fam.universe
    _emit({
        "host": family_to_json(emb.host.family),
        "maximal_sets": emb.maximal_count,
        "steps": [
            {"meet": u.names(s.meet), "merged": sets_to_json(u, s.merged), "added": sets_to_json(u, s.added)}
            for s in emb.steps
        ],
        "completion": sets_to_json(u, emb.completion),
        "vc_host": vc_dimension(emb.host.family),
        "vc_bouquet": vc_dimension(fam),
    })
    return 0


def cmd_enumerate(args) -> int:
    try:
        geometries = list(enumerate_convex_geometries(args.n))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        width = len(str(len(geometries)))
        for i, g in enumerate(geometries):
            with open(os.path.join(args.out, f"geometry_{i:0{width}d}.json"), "w", encoding="utf-8") as fh:
                json.dump(family_to_json(g.family), fh)
        _emit({"count": len(geometries), "out": args.out})
    else:
        for g in geometries:
            sys.stdout.write(json.dumps(family_to_json(g.family)) + "\n")
    return 0


def cmd_random(args) -> int:
    try:
        g = random_geometry(args.n, args.orders, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(family_to_json(g.family))
    return 0


def cmd_plot(args) -> int:
    from .plot import plot_system

    try:
        system = HalfspaceSystem.from_dict(read_json(args.system))
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    witnesses = {}
    if args.family:
        fam = _family(args)
        report = verify_exhaustive(system, fam) if fam.n <= 12 else None
        if report is not None:
            witnesses = report.witnesses
    plot_system(system, args.out, witnesses)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orthantgeo", description="Convex geometries, their circuits and exact realizations.")
    sub = p.add_subparsers(dest="command", required=True)

    def family_arg(sp, required=True, default=None):
        sp.add_argument("--family", required=required, default=default, help="family JSON path, '-' for stdin")

    sp = sub.add_parser("check", help="axiom report for a family")
    family_arg(sp)
    sp.add_argument("--bouquet", action="store_true", help="exit status follows the bouquet axioms")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("circuits", help="rooted circuits of a convex geometry")
    family_arg(sp)
    sp.add_argument("--critical", action="store_true")
    sp.add_argument("--via-cubes", action="store_true", help="decode maximal cubes of the complement")
    sp.set_defaults(func=cmd_circuits)

    sp = sub.add_parser("cdim", help="convex dimension and copoints")
    family_arg(sp)
    sp.set_defaults(func=cmd_cdim)

    sp = sub.add_parser("orders", help="generating total orders")
    family_arg(sp)
    sp.set_defaults(func=cmd_orders)

    sp = sub.add_parser("ideal", help="ideal test and positive circuits")
    family_arg(sp)
    sp.add_argument("--host", required=True)
    sp.add_argument("--minimal", action="store_true", help="only inclusion-minimal positive circuits")
    sp.set_defaults(func=cmd_ideal)

    sp = sub.add_parser("realize", help="cone realization in R^n")
    family_arg(sp)
    sp.add_argument("--host", help="host geometry when --family is an ideal")
    sp.add_argument("--circuits", choices=["all", "critical"], default="all")
    sp.add_argument("--critical", action="store_true", help="same as --circuits critical")
    sp.add_argument("--coefficient", help="root coefficient of circuit rows (default n)")
    sp.add_argument("--minimal", action="store_true", help="minimal positive circuits only (experimental)")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("realize-lowdim", help="realization in dimension cdim")
    family_arg(sp)
    sp.set_defaults(func=cmd_realize_lowdim)

    sp = sub.add_parser("realize-tree", help="planar realization of a tree")
    sp.add_argument("--tree", required=True, help="tree JSON path, '-' for stdin")
    sp.add_argument("--root")
    sp.add_argument("--family-out", help="also write the vertex family JSON here")
    sp.set_defaults(func=cmd_realize_tree)

    sp = sub.add_parser("shelling", help="point representation and shelling check")
    family_arg(sp)
    sp.set_defaults(func=cmd_shelling)

    sp = sub.add_parser("verify", help="certify a system against a family")
    sp.add_argument("--system", default="-", help="system JSON path (default stdin)")
    family_arg(sp)
    sp.add_argument("--mode", choices=["exhaustive", "bfs", "lowdim"], default="exhaustive")
    sp.add_argument("--seed", help="bfs seed sign vector, e.g. +,-,-,+")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("embed", help="embed a bouquet of downset alignments")
    family_arg(sp)
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("enumerate", help="all convex geometries for n <= 4")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("random", help="order-generated random geometry")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--orders", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("plot", help="SVG of a 1- or 2-dimensional system")
    sp.add_argument("--system", default="-")
    family_arg(sp, required=False)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "system", None) == "-" and getattr(args, "family", None) == "-":
        sys.stderr.write("error: --system and --family cannot both read stdin\n")
        return 2
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
