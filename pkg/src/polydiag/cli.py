"""Command-line interface.

Subcommands: enumerate, classify, invariants, lattice, orbits, count,
simulate, check.  Exit codes: 0 success, 1 assertion/check failure,
2 input error.  All randomized commands take a --seed, so identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, counting, dynamics, graph, invariance
from .partitions import (
    FILTERS,
    classify,
    enumerate_tagged_partitions,
    parse_typical_element,
    type_label,
    typical_element,
)


class InputError(Exception):
    pass


def _write(text, path=None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_digraph(path):
    try:
        return graph.load_digraph(path)
    except (OSError, ValueError, KeyError) as exc:
        raise InputError("cannot read digraph %r: %s" % (path, exc))


def _pick_matrix(g, which):
    return graph.adjacency_matrix(g) if which == "adjacency" else graph.laplacian_matrix(g)


def cmd_enumerate(args):
    pred = None
    if args.filter:
        if args.filter not in FILTERS:
            raise InputError("unknown filter %r (choose from %s)" % (args.filter, ", ".join(sorted(FILTERS))))
        pred = FILTERS[args.filter]
    stream = enumerate_tagged_partitions(args.n, pred)
    if args.count_only:
        _write("%d\n" % sum(1 for _ in stream), args.output)
        return 0
    lines = [typical_element(p) for p in stream]
    _write("".join(ln + "\n" for ln in lines), args.output)
    return 0


def cmd_classify(args):
    rows = []
    for s in args.typical:
        try:
            p = parse_typical_element(s)
        except ValueError as exc:
            raise InputError(str(exc))
        c = classify(p)
        rows.append(
            {
                "typical": typical_element(p),
                "label": type_label(p, c),
                "synchrony": c.synchrony,
                "anti_synchrony": c.anti_synchrony,
                "minimally_tagged": c.minimally_tagged,
                "fully_tagged": c.fully_tagged,
                "evenly_tagged": c.evenly_tagged,
                "freely_tagged": c.freely_tagged,
            }
        )
    if args.format == "json":
        _write(json.dumps(rows, indent=2) + "\n", args.output)
    else:
        _write("".join("%s: %s\n" % (r["typical"], r["label"]) for r in rows), args.output)
    return 0


def _invariant_set(args):
    g = _load_digraph(args.digraph)
    m = _pick_matrix(g, args.matrix)
    try:
        inv = invariance.invariant_polydiagonals(m, n_cap=args.n_cap)
    except ValueError as exc:
        raise InputError(str(exc))
    return g, inv


def cmd_invariants(args):
    g, inv = _invariant_set(args)
    out = []
    for p, cls in inv.subspaces:
        out.append("%s  %s" % (typical_element(p), type_label(p, cls)))
    text = "\n".join(out) + "\n"
    if args.lattice:
        lat = invariance.build_lattice(inv)
        if args.format == "dot":
            text = invariance.lattice_to_dot(lat)
        else:
            text = json.dumps(invariance.lattice_to_json_dict(lat), indent=2) + "\n"
    if args.orbits:
        autos = graph.automorphisms(g)
        groups = invariance.orbits(inv, autos)
        lines = ["%d subspaces in %d orbits (automorphism group order %d)" % (len(inv.subspaces), len(groups), len(autos))]
        for orb in groups:
            rep = typical_element(inv.subspaces[orb[0]][0])
            lines.append("%s  size %d" % (rep, len(orb)))
        text = "\n".join(lines) + "\n"
    _write(text, args.output)
    return 0


def cmd_lattice(args):
    _, inv = _invariant_set(args)
    lat = invariance.build_lattice(inv)
    if args.format == "dot":
        _write(invariance.lattice_to_dot(lat), args.output)
    else:
        _write(json.dumps(invariance.lattice_to_json_dict(lat), indent=2) + "\n", args.output)
    return 0


def cmd_orbits(args):
    g, inv = _invariant_set(args)
    autos = graph.automorphisms(g)
    groups = invariance.orbits(inv, autos)
    payload = {
        "subspaces": len(inv.subspaces),
        "orbits": [
            {
                "representative": typical_element(inv.subspaces[orb[0]][0]),
                "members": [typical_element(inv.subspaces[i][0]) for i in orb],
            }
            for orb in groups
        ],
    }
    if args.format == "json":
        _write(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = ["%d subspaces in %d orbits" % (len(inv.subspaces), len(groups))]
        lines += ["%s  size %d" % (o["representative"], len(o["members"])) for o in payload["orbits"]]
        _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_count(args):
    table = counting.count_table(args.n)
    if args.format == "csv":
        _write(counting.table_to_csv(table), args.output)
    elif args.format == "json":
        _write(json.dumps({"rows": table.rows, "cross_checked": table.cross_checked}, indent=2) + "\n", args.output)
    else:
        _write(counting.table_to_markdown(table), args.output)
    return 0 if all(table.cross_checked.values()) else 1


_COUPLINGS = {
    "vdp": lambda k: dynamics.VDP_H,
    "lorenz_w": lambda k: dynamics.LORENZ_H_PLUS,
    "lorenz_v": lambda k: dynamics.LORENZ_H_MINUS,
    "identity": lambda k: __import__("numpy").eye(k),
}

_DEFAULT_COUPLING = {"vanderpol": "vdp", "lorenz": "lorenz_w", "singular_osc": "vdp"}


def cmd_simulate(args):
    import numpy as np

    params = {}
    if args.eps is not None:
        params["eps"] = args.eps
    preset = dynamics.preset_f(args.preset, **params)
    g = _load_digraph(args.digraph)
    m = _pick_matrix(g, args.matrix)
    scale = float(Fraction(args.scale))
    m_float = scale * np.array([[float(x) for x in row] for row in m])
    coupling = args.coupling or _DEFAULT_COUPLING.get(args.preset, "identity")
    h = _COUPLINGS[coupling](preset.k)
    sys_ = dynamics.CoupledSystem(g.n, preset.k, preset, h, m_float)
    if args.x0:
        x0 = np.array([float(v) for v in args.x0.split(",")])
        if x0.size != g.n * preset.k:
            raise InputError("--x0 needs %d values" % (g.n * preset.k))
    else:
        x0 = np.random.default_rng(args.seed).uniform(-1, 1, size=g.n * preset.k)
    try:
        traj = dynamics.integrate(sys_, x0, args.dt, args.T)
    except dynamics.BlowupError as exc:
        print(json.dumps({"status": "blowup", "time": exc.time}), file=sys.stderr)
        return 1
    _write(traj.to_csv(), args.output)
    summary = {
        "status": "ok",
        "preset": args.preset,
        "coupling": coupling,
        "steps": len(traj.times) - 1,
        "final_state": [float(v) for v in traj.states[-1].ravel()],
    }
    if args.output:
        print(json.dumps(summary))
    return 0


def cmd_check(args):
    if args.suite == "main-lemma" and args.file:
        g = _load_digraph(args.file)
        m = _pick_matrix(g, args.matrix)
        if args.lam is None:
            raise InputError("main-lemma on a file needs --lambda")
        try:
            report = invariance.check_main_lemma(m, Fraction(args.lam))
        except ValueError as exc:
            raise InputError(str(exc))
        _write(invariance.report_to_json(report) + "\n", args.output)
        return 0 if report.passed else 1
    if args.suite == "column-sums" and args.file:
        g = _load_digraph(args.file)
        m = _pick_matrix(g, args.matrix)
        report = invariance.check_constant_column_sums_theorem(m)
        _write(invariance.report_to_json(report) + "\n", args.output)
        return 0 if report.passed else 1
    if args.suite not in checks.SUITES:
        raise InputError("unknown suite %r (choose from %s)" % (args.suite, ", ".join(sorted(checks.SUITES))))
    kwargs = {}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.n is not None:
        kwargs["n_max"] = args.n
    if args.suite.startswith("dynamics"):
        kwargs.pop("trials", None)
        kwargs.pop("n_max", None)
        if args.dt is not None:
            kwargs["dt"] = args.dt
        if args.suite != "dynamics-attractors":
            if args.T is not None:
                kwargs["T"] = args.T
            if args.tol is not None:
                kwargs["tol"] = args.tol
    try:
        report = checks.SUITES[args.suite](**kwargs)
    except TypeError as exc:
        raise InputError("suite %s: %s" % (args.suite, exc))
    _write(report.summary() + "\n", args.output)
    return 0 if report.passed else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="polydiag", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write to a file instead of stdout")

    p = sub.add_parser("enumerate", help="stream tagged partitions of {1..n}")
    p.add_argument("n", type=int)
    p.add_argument("--filter", help="one of: %s" % ", ".join(sorted(FILTERS)))
    p.add_argument("--count-only", action="store_true")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="classify typical-element strings")
    p.add_argument("typical", nargs="+")
    p.add_argument("--format", choices=("text", "json"), default="text")
    common(p)
    p.set_defaults(func=cmd_classify)

    for name, fn in (("invariants", cmd_invariants), ("lattice", cmd_lattice), ("orbits", cmd_orbits)):
        p = sub.add_parser(name, help="%s of the invariant polydiagonal subspaces" % name)
        p.add_argument("digraph", help="digraph file (.json or edge list)")
        p.add_argument("--matrix", choices=("adjacency", "laplacian"), default="adjacency")
        p.add_argument("--n-cap", type=int, default=invariance.DEFAULT_SCAN_LIMIT)
        p.add_argument("--format", choices=("text", "json", "dot"), default="text" if name != "lattice" else "json")
        if name == "invariants":
            p.add_argument("--lattice", action="store_true")
            p.add_argument("--orbits", action="store_true")
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("count", help="subspace-type counting table")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("simulate", help="integrate a coupled cell system")
    p.add_argument("--preset", required=True, choices=("vanderpol", "lorenz", "singular_osc", "zero", "cubic_odd"))
    p.add_argument("--eps", type=float, help="van der Pol epsilon")
    p.add_argument("--digraph", required=True)
    p.add_argument("--matrix", choices=("adjacency", "laplacian"), default="adjacency")
    p.add_argument("--scale", default="1", help="rational scale for M, e.g. 0.5")
    p.add_argument("--coupling", choices=sorted(_COUPLINGS))
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--T", type=float, default=50.0)
    p.add_argument("--x0", help="comma-separated initial state")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("check", help="run a named property suite")
    p.add_argument("suite")
    p.add_argument("--file", help="digraph file for main-lemma / column-sums")
    p.add_argument("--matrix", choices=("adjacency", "laplacian"), default="adjacency")
    p.add_argument("--lambda", dest="lam", help="eigenvalue for main-lemma on a file")
    p.add_argument("--n", type=int, help="max instance size")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--dt", type=float, help="step size for dynamics suites")
    p.add_argument("--T", type=float, help="horizon for dynamics suites")
    p.add_argument("--tol", type=float, help="tolerance for dynamics suites")
    common(p)
    p.set_defaults(func=cmd_check)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
